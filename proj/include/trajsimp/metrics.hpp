#pragma once

#include "trajsimp/representation.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace trajsimp {

// Relative slack allowed by every error-bound check.
inline constexpr double kBoundSlack = 1e-9;

struct CompressionStats {
    std::size_t trajectories = 0;
    std::size_t input_points = 0;
    std::size_t output_segments = 0;
    // Distinct stored vertices (segment endpoints, shared ones counted once).
    std::size_t output_points = 0;
    double ratio = 0.0;
    double avg_error = 0.0;
    double max_error = 0.0;
    std::map<std::size_t, std::size_t> histogram; // covered points -> segment count
    std::size_t anomalous = 0;                    // output segments covering exactly 2 points
    std::size_t anomalous_candidates = 0;         // N_a
    std::size_t patched = 0;                      // N_p
    double patching_ratio = 0.0;
    double wall_time = 0.0; // seconds, compression only
};

struct BoundViolation {
    std::size_t index = 0;
    double distance = 0.0;
};

struct BoundCheck {
    bool ok = true;
    std::vector<BoundViolation> violations;
};

// Total segments over total input points. Throws PreconditionError on empty
// or mismatched inputs.
double compression_ratio(std::span<const Representation> reps, std::span<const Trajectory> trajs);

// Mean distance of every point to the line of the segment it is assigned to.
double average_error(std::span<const Representation> reps, std::span<const Trajectory> trajs);

// Largest such distance.
double max_error(const Representation& rep, const Trajectory& traj);

// Lists every point farther than zeta * (1 + 1e-9) from its segment's line.
BoundCheck verify_error_bound(const Representation& rep, const Trajectory& traj, double zeta);

// Z(k): number of segments covering exactly k points.
std::map<std::size_t, std::size_t> segment_histogram(std::span<const Representation> reps);

// N_p / N_a, zero when N_a is zero.
double patching_ratio(std::size_t patches, std::size_t anomalous_candidates);

// Distinct stored vertices of a representation.
std::size_t stored_points(const Representation& rep);

// Fills every field except wall_time.
CompressionStats summarize(std::span<const Representation> reps, std::span<const Trajectory> trajs);

} // namespace trajsimp
