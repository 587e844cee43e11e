#include "trajsimp/datagen.hpp"

#include "trajsimp/errors.hpp"

#include <algorithm>
#include <cmath>

namespace trajsimp {

SplitMix64::result_type SplitMix64::operator()()
{
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform()
{
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi)
{
    return lo + (hi - lo) * uniform();
}

std::uint64_t SplitMix64::below(std::uint64_t bound)
{
    // Modulo bias is below 2^-40 for the small bounds used here.
    return (*this)() % bound;
}

void GenSpec::validate() const
{
    if (n < 1)
        throw ConfigError("generator needs n >= 1");
    if (!(step > 0.0) || !std::isfinite(step))
        throw ConfigError("generator step must be positive");
    if (kind == GenKind::StepwiseAdversarial) {
        if (!(zeta > 0.0) || !std::isfinite(zeta))
            throw ConfigError("stepwise generator needs zeta > 0");
        if (n < 2 || n > 100000)
            throw ConfigError("stepwise generator needs 2 <= n <= 100000");
    }
}

GenKind parse_gen_kind(const std::string& name)
{
    if (name == "random_walk" || name == "random-walk")
        return GenKind::RandomWalk;
    if (name == "grid_route" || name == "grid-route")
        return GenKind::GridRoute;
    if (name == "stepwise_adversarial" || name == "stepwise-adversarial" || name == "stepwise")
        return GenKind::StepwiseAdversarial;
    throw ConfigError("unknown generator kind '" + name + "'");
}

std::string to_string(GenKind kind)
{
    switch (kind) {
    case GenKind::RandomWalk:
        return "random_walk";
    case GenKind::GridRoute:
        return "grid_route";
    case GenKind::StepwiseAdversarial:
        return "stepwise_adversarial";
    }
    return "unknown";
}

Trajectory gen_random_walk(std::size_t n, double step, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    Trajectory out;
    out.reserve(n);
    double heading = rng.uniform(0.0, kTwoPi);
    Point p{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            heading += rng.uniform(-kPi / 8.0, kPi / 8.0);
            p.x += step * std::cos(heading);
            p.y += step * std::sin(heading);
            p.t = static_cast<double>(i);
        }
        out.push_back(p);
    }
    return out;
}

Trajectory gen_grid_route(std::size_t n, double step, std::uint64_t seed)
{
    static constexpr long kDx[4] = {1, 0, -1, 0};
    static constexpr long kDy[4] = {0, 1, 0, -1};

    SplitMix64 rng(seed);
    Trajectory out;
    out.reserve(n);
    long gx = 0, gy = 0;
    long tick = 0;
    int dir = static_cast<int>(rng.below(4));
    out.push_back({0.0, 0.0, 0.0});
    while (out.size() < n) {
        const long leg = 5 + static_cast<long>(rng.below(16));
        for (long s = 1; s <= leg && out.size() < n; ++s) {
            gx += kDx[dir];
            gy += kDy[dir];
            ++tick;
            const bool corner = s == leg;
            if (corner && rng.uniform() < 0.5)
                continue;
            out.push_back({step * static_cast<double>(gx), step * static_cast<double>(gy),
                           static_cast<double>(tick)});
        }
        dir = (dir + (rng.uniform() < 0.5 ? 1 : 3)) % 4;
    }
    return out;
}

Trajectory gen_stepwise_adversarial(std::size_t k, double zeta)
{
    if (k < 2 || k > 100000)
        throw PreconditionError("stepwise generator needs 2 <= k <= 100000");
    if (!(zeta > 0.0))
        throw PreconditionError("stepwise generator needs zeta > 0");
    const double half = zeta / 2.0;
    // The deviation sits a relative 1e-9 inside zeta / 2. Exactly zeta / 2
    // would leave the break test to rounding, which at radii of 1e5 steps
    // is off by around 1e-11 of the deviation.
    constexpr double kInside = 1.0 - 1e-9;
    Trajectory out;
    out.reserve(k + 1);
    out.push_back({0.0, 0.0, 0.0});
    out.push_back({half, 0.0, 1.0});
    double theta = 0.0; // heading of the fitted segment after the previous point
    for (std::size_t i = 2; i <= k; ++i) {
        const double di = static_cast<double>(i);
        const double lead = std::asin(kInside / di);
        const double angle = theta + lead;
        out.push_back({di * half * std::cos(angle), di * half * std::sin(angle), di});
        theta += lead / di;
    }
    return out;
}

Trajectory generate(const GenSpec& request)
{
    request.validate();
    switch (request.kind) {
    case GenKind::RandomWalk:
        return gen_random_walk(request.n, request.step, request.seed);
    case GenKind::GridRoute:
        return gen_grid_route(request.n, request.step, request.seed);
    case GenKind::StepwiseAdversarial:
        return gen_stepwise_adversarial(request.n, request.zeta);
    }
    throw ConfigError("unknown generator kind");
}

namespace {

std::size_t draw_length(SplitMix64& rng, std::size_t n_min, std::size_t n_max)
{
    if (n_min < 1 || n_max < n_min)
        throw ConfigError("corpus lengths need 1 <= n_min <= n_max");
    return n_min + static_cast<std::size_t>(rng.below(n_max - n_min + 1));
}

} // namespace

std::vector<Trajectory> gen_mixed_corpus(std::size_t count, std::size_t n_min, std::size_t n_max, double step,
                                         std::uint64_t seed)
{
    SplitMix64 rng(seed);
    std::vector<Trajectory> corpus;
    corpus.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = draw_length(rng, n_min, n_max);
        const std::uint64_t s = rng();
        corpus.push_back(i % 2 == 0 ? gen_random_walk(n, step, s) : gen_grid_route(n, step, s));
    }
    return corpus;
}

std::vector<Trajectory> gen_grid_corpus(std::size_t count, std::size_t n_min, std::size_t n_max, double step,
                                        std::uint64_t seed)
{
    SplitMix64 rng(seed);
    std::vector<Trajectory> corpus;
    corpus.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = draw_length(rng, n_min, n_max);
        corpus.push_back(gen_grid_route(n, step, rng()));
    }
    return corpus;
}

namespace {

Trajectory indexed(std::initializer_list<std::pair<double, double>> xy)
{
    Trajectory out;
    double t = 0.0;
    for (const auto& [x, y] : xy)
        out.push_back({x, y, t++});
    return out;
}

} // namespace

Trajectory figure_overview_fixture()
{
    return indexed({{0, 0},
                    {10, 0},
                    {20, 1},
                    {30, 0},
                    {40, -1},
                    {50, 0},
                    {62, 14},
                    {60, 28},
                    {60, 40},
                    {75, 45},
                    {90, 50},
                    {100, 38},
                    {110, 26},
                    {120, 14},
                    {130, 2}});
}

Trajectory missed_corner_fixture()
{
    return indexed({{0, 0},
                    {20, 0},
                    {40, 0},
                    {60, 0},
                    {70, 15},
                    {70, 35},
                    {70, 55},
                    {70, 75},
                    {85, 85},
                    {105, 85},
                    {125, 85}});
}

Trajectory quadrant_window_fixture()
{
    return indexed({{0, 0}, {10, 2}, {20, -2}, {30, 3}, {40, -1}, {50, 2}, {60, 0}, {70, 30}});
}

std::size_t optimal_segments(const Trajectory& traj, double zeta)
{
    const std::size_t n = traj.size();
    if (n == 0)
        throw PreconditionError("optimal_segments needs at least one point");
    if (n > 2000)
        throw PreconditionError("optimal_segments is limited to 2000 points");
    if (n <= 2)
        return 1;

    // Same slack as the bound verifier, so the count is a floor for every
    // representation that passes verification.
    const double limit = zeta * (1.0 + 1e-9);
    constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);
    std::vector<std::size_t> best(n, kUnreached);
    best[0] = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (best[i] == kUnreached)
            continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (best[i] + 1 >= best[j])
                continue;
            bool fits = true;
            for (std::size_t m = i + 1; m < j && fits; ++m)
                fits = point_line_distance(traj[m], traj[i], traj[j]) <= limit;
            if (fits)
                best[j] = best[i] + 1;
        }
    }
    return best[n - 1];
}

} // namespace trajsimp
