#pragma once

// Independent reference computations shared by the test binaries. None of
// these call into the library's geometry so they can act as oracles.

#include "trajsimp/datagen.hpp"
#include "trajsimp/representation.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace trajsimp::testing {

// Distance from p to the line through a and b via the projection residual
// |p - foot|, with the foot found by a dot-product projection.
inline double residual_distance(const Point& p, const Point& a, const Point& b)
{
    const double ux = b.x - a.x, uy = b.y - a.y;
    const double uu = ux * ux + uy * uy;
    if (uu == 0.0)
        return std::sqrt((p.x - a.x) * (p.x - a.x) + (p.y - a.y) * (p.y - a.y));
    const double s = ((p.x - a.x) * ux + (p.y - a.y) * uy) / uu;
    const double fx = a.x + s * ux, fy = a.y + s * uy;
    return std::sqrt((p.x - fx) * (p.x - fx) + (p.y - fy) * (p.y - fy));
}

// Worst distance of any point to its segment's line, walking the coverage
// counts directly. Returns -1 when the counts do not tile the input.
inline double brute_force_max_error(const Representation& rep, const Trajectory& traj)
{
    std::size_t idx = 0;
    double worst = 0.0;
    for (std::size_t s = 0; s < rep.segments.size(); ++s) {
        const Segment& seg = rep.segments[s];
        std::size_t own = seg.covered;
        if (s > 0 && !seg.patched_start) {
            if (own == 0)
                return -1.0;
            --own;
        }
        for (std::size_t k = 0; k < own; ++k, ++idx) {
            if (idx >= traj.size())
                return -1.0;
            worst = std::max(worst, residual_distance(traj[idx], seg.start, seg.end));
        }
    }
    return idx == traj.size() ? worst : -1.0;
}

inline bool continuous(const Representation& rep)
{
    for (std::size_t i = 1; i < rep.segments.size(); ++i)
        if (!(rep.segments[i - 1].end == rep.segments[i].start))
            return false;
    return true;
}

// Random rigid motion applied to a point.
struct RigidMotion {
    double angle, dx, dy;

    Point apply(const Point& p) const
    {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * p.x - s * p.y + dx, s * p.x + c * p.y + dy, p.t};
    }

    static RigidMotion random(SplitMix64& rng)
    {
        return {rng.uniform(0.0, 2.0 * 3.141592653589793), rng.uniform(-1e4, 1e4), rng.uniform(-1e4, 1e4)};
    }
};

// A small but varied property-test corpus: random walks and grid routes of
// assorted lengths and step sizes.
inline std::vector<Trajectory> property_corpus(std::size_t count, std::uint64_t seed, std::size_t n_max = 400)
{
    SplitMix64 rng(seed);
    std::vector<Trajectory> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.below(n_max));
        const double step = rng.uniform(0.5, 30.0);
        out.push_back(i % 2 == 0 ? gen_random_walk(n, step, rng()) : gen_grid_route(n, step, rng()));
    }
    return out;
}

} // namespace trajsimp::testing
