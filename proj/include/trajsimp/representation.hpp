#pragma once

#include "trajsimp/geometry.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace trajsimp {

// One output segment. `covered` counts the original points it represents,
// endpoints included; a segment anchored at a patch point does not count
// that point since it was never sampled.
struct Segment {
    Point start;
    Point end;
    std::size_t covered = 1;
    bool patched_start = false;

    bool anomalous() const { return covered == 2; }

    friend bool operator==(const Segment&, const Segment&) = default;
};

// Piecewise line representation of one trajectory.
struct Representation {
    std::vector<Segment> segments;
    // Anomalous segments produced before any patching (N_a) and successful
    // patches (N_p). Baselines report their anomalous output count as N_a.
    std::size_t anomalous_candidates = 0;
    std::size_t patches = 0;
};

// Half-open range [first, last) of input indices assigned to a segment.
struct IndexRange {
    std::size_t first = 0;
    std::size_t last = 0;

    std::size_t size() const { return last - first; }
};

// Recovers which input indices each segment covers. Every input index is
// assigned to exactly one segment: the first segment owns its start point,
// later segments share their start with the predecessor (which owns it)
// unless the start is a patch point. Throws InvariantViolation when the
// counts do not add up to input_points.
std::vector<IndexRange> assignment_ranges(std::span<const Segment> segments, std::size_t input_points);

// Builds a representation whose vertices are the given input indices
// (strictly increasing, first 0, last n-1). Used by the baselines.
Representation representation_from_vertices(const Trajectory& traj, std::span<const std::size_t> vertices);

} // namespace trajsimp
