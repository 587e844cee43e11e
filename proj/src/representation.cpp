#include "trajsimp/representation.hpp"

#include "trajsimp/errors.hpp"

#include <string>

namespace trajsimp {

std::vector<IndexRange> assignment_ranges(std::span<const Segment> segments, std::size_t input_points)
{
    std::vector<IndexRange> ranges;
    ranges.reserve(segments.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const Segment& s = segments[i];
        const bool shares_start = i > 0 && !s.patched_start;
        if (s.covered == 0 || (shares_start && s.covered < 2))
            throw InvariantViolation("segment " + std::to_string(i) + " covers too few points");
        const std::size_t owned = shares_start ? s.covered - 1 : s.covered;
        ranges.push_back({next, next + owned});
        next += owned;
    }
    if (next != input_points)
        throw InvariantViolation("segments cover " + std::to_string(next) + " points, trajectory has " +
                                 std::to_string(input_points));
    return ranges;
}

Representation representation_from_vertices(const Trajectory& traj, std::span<const std::size_t> vertices)
{
    Representation rep;
    if (traj.size() == 1) {
        rep.segments.push_back({traj[0], traj[0], 1, false});
        return rep;
    }
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
        const std::size_t a = vertices[k];
        const std::size_t b = vertices[k + 1];
        rep.segments.push_back({traj[a], traj[b], b - a + 1, false});
        if (b - a + 1 == 2)
            ++rep.anomalous_candidates;
    }
    return rep;
}

} // namespace trajsimp
