#include "trajsimp/fitting.hpp"

#include "trajsimp/errors.hpp"

#include <algorithm>
#include <cmath>

namespace trajsimp {

Optimizations Optimizations::from_mask(unsigned mask)
{
    return {(mask & 1u) != 0, (mask & 2u) != 0, (mask & 4u) != 0, (mask & 8u) != 0,
            (mask & 16u) != 0};
}

unsigned Optimizations::mask() const
{
    return (far_first_active ? 1u : 0u) | (signed_extremes ? 2u : 0u) |
           (eager_rotation ? 4u : 0u) | (missing_zones ? 8u : 0u) | (absorb ? 16u : 0u);
}

Optimizations Optimizations::parse(const std::string& text)
{
    if (text == "all")
        return all();
    if (text == "none")
        return none();
    if (text.size() != 5 || text.find_first_not_of("01") != std::string::npos)
        throw ConfigError("optimization flags must be 'all', 'none' or five 0/1 digits (O1..O5), got '" +
                          text + "'");
    unsigned m = 0;
    for (std::size_t i = 0; i < 5; ++i)
        if (text[i] == '1')
            m |= 1u << i;
    return from_mask(m);
}

std::string Optimizations::to_string() const
{
    std::string s(5, '0');
    const unsigned m = mask();
    for (std::size_t i = 0; i < 5; ++i)
        if (m & (1u << i))
            s[i] = '1';
    return s;
}

void FitConfig::validate() const
{
    if (!(zeta > 0.0) || !std::isfinite(zeta))
        throw ConfigError("error bound zeta must be a positive finite number");
    if (k_cap < 1 || k_cap > kMaxPointsPerSegment)
        throw ConfigError("k_cap must lie in [1, 400000]");
    if (!(gamma_m >= 0.0 && gamma_m <= kPi))
        throw ConfigError("gamma_m must lie in [0, pi]");
    if (!(parallel_tol > 0.0))
        throw ConfigError("parallel tolerance must be positive");
}

FitState FitState::anchored_at(const Point& anchor)
{
    FitState s;
    s.anchor = anchor;
    s.fitted = {anchor, 0.0, 0.0};
    s.r_active = {anchor, 0.0, 0.0};
    s.last_active = anchor;
    s.last_assigned = anchor;
    return s;
}

long zone_index(double r_len, double zeta)
{
    double x = r_len * 2.0 / zeta - 0.5;
    const double nearest = std::round(x);
    if (std::abs(x - nearest) < 1e-12)
        x = nearest;
    return std::max(0L, static_cast<long>(std::ceil(x)));
}

double first_active_threshold(const FitConfig& cfg)
{
    return cfg.opts.far_first_active ? cfg.zeta : cfg.zeta / 4.0;
}

namespace {

struct Evaluation {
    PointClass kind = PointClass::Break;
    DirectedSegment r;
    double d = 0.0; // distance to the current fitted line
    int sign = 1;
    double d_plus = 0.0;
    double d_minus = 0.0;
};

Evaluation evaluate(const FitState& s, const Point& p, const FitConfig& cfg)
{
    Evaluation e;
    e.r = DirectedSegment::between(s.anchor, p);
    e.d_plus = s.d_plus_max;
    e.d_minus = s.d_minus_max;
    const bool room = s.points_in_segment < cfg.k_cap;

    // Before the first active point every point lies within the threshold
    // (<= zeta) of the anchor, hence within zeta of any line through it, so
    // no distance test applies.
    if (s.fitted.length == 0.0) {
        if (!room)
            e.kind = PointClass::Break;
        else if (e.r.length > first_active_threshold(cfg))
            e.kind = PointClass::Active;
        else
            e.kind = PointClass::Inactive;
        e.d = e.r.length;
        return e;
    }

    e.d = point_line_distance(p, s.fitted);
    e.sign = sign_f(e.r, s.fitted);
    if (e.sign > 0)
        e.d_plus = std::max(e.d_plus, e.d);
    else
        e.d_minus = std::max(e.d_minus, e.d);

    const bool close_enough = cfg.opts.signed_extremes ? (e.d_plus + e.d_minus <= cfg.zeta)
                                                       : (e.d <= cfg.zeta / 2.0);
    const bool inactive = e.r.length - s.fitted.length <= cfg.zeta / 4.0;
    bool ok = close_enough && room;
    if (inactive)
        ok = ok && point_line_distance(p, s.r_active) <= cfg.zeta;

    if (!ok)
        e.kind = PointClass::Break;
    else
        e.kind = inactive ? PointClass::Inactive : PointClass::Active;
    return e;
}

} // namespace

PointClass classify(const FitState& state, const Point& p, const FitConfig& cfg)
{
    return evaluate(state, p, cfg).kind;
}

namespace {

FitState apply(const FitState& state, const Point& p, const FitConfig& cfg, const Evaluation& e)
{
    FitState s = state;
    s.points_in_segment += 1;
    s.last_assigned = p;
    const bool seeded = state.fitted.length > 0.0;
    if (seeded) {
        s.d_plus_max = e.d_plus;
        s.d_minus_max = e.d_minus;
    }

    if (e.kind == PointClass::Inactive) {
        s.last_case = FitCase::Hold;
        return s;
    }

    const double half_step = cfg.zeta / 2.0;
    long j = std::max(1L, zone_index(e.r.length, cfg.zeta));
    if (!seeded) {
        s.fitted = DirectedSegment::from_polar(s.anchor, j * half_step, e.r.theta);
        s.last_case = FitCase::Seed;
    } else {
        j = std::max(j, state.last_zone + 1);
        const double radius = j * half_step;
        double dx = e.d;
        if (cfg.opts.eager_rotation) {
            // Largest d_x whose rotation stays within the full angle to p.
            const double extreme = e.sign > 0 ? e.d_plus : e.d_minus;
            const double full = std::asin(std::min(e.d, radius) / radius);
            const double limit = radius * std::sin(std::min(kPi / 2.0, static_cast<double>(j) * full));
            dx = std::min(extreme, limit);
        }
        const long dj = cfg.opts.missing_zones ? j - state.last_zone : 1;
        const double ratio = std::clamp(dx / radius, 0.0, 1.0);
        const double rotation = std::asin(ratio) * static_cast<double>(dj) / static_cast<double>(j);
        s.fitted = DirectedSegment::from_polar(s.anchor, radius, state.fitted.theta + e.sign * rotation);
        s.last_case = FitCase::Rotate;
    }
    s.r_active = e.r;
    s.last_active = p;
    s.has_active = true;
    s.last_zone = j;
    return s;
}

} // namespace

FitState fit_step(const FitState& state, const Point& p, const FitConfig& cfg)
{
    const Evaluation e = evaluate(state, p, cfg);
    if (e.kind == PointClass::Break)
        throw PreconditionError("fit_step called on a point that breaks the segment");
    return apply(state, p, cfg, e);
}

bool try_fit_step(FitState& state, const Point& p, const FitConfig& cfg)
{
    const Evaluation e = evaluate(state, p, cfg);
    if (e.kind == PointClass::Break)
        return false;
    state = apply(state, p, cfg, e);
    return true;
}

} // namespace trajsimp
