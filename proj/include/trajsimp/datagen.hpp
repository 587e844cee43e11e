#pragma once

#include "trajsimp/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace trajsimp {

// SplitMix64. Fully specified so corpora are reproducible in any language:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
// uniform() maps the top 53 bits to [0, 1).
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()();

    double uniform();                         // [0, 1)
    double uniform(double lo, double hi);     // [lo, hi)
    std::uint64_t below(std::uint64_t bound); // [0, bound)

private:
    std::uint64_t state_;
};

enum class GenKind { RandomWalk, GridRoute, StepwiseAdversarial };

struct GenSpec {
    GenKind kind = GenKind::RandomWalk;
    std::size_t n = 100;
    std::uint64_t seed = 1;
    double step = 5.0;
    double zeta = 10.0; // stepwise only

    // Throws ConfigError unless n >= 1 and step > 0 (zeta > 0 for stepwise).
    void validate() const;
};

GenKind parse_gen_kind(const std::string& name);
std::string to_string(GenKind kind);

// Fixed step length, heading drifting by uniform(-pi/8, pi/8) per step,
// starting at the origin with a uniform heading; t = 0, 1, 2, ...
Trajectory gen_random_walk(std::size_t n, double step, std::uint64_t seed);

// Axis-aligned legs of 5..20 steps joined by +-pi/2 turns. Each corner
// sample is dropped with probability 1/2; time still advances over it.
Trajectory gen_grid_route(std::size_t n, double step, std::uint64_t seed);

// Points P_0..P_k with |P_0 P_i| = i * zeta / 2, each deviating zeta / 2
// (less a relative 1e-9, so rounding never decides the break test) to the
// same side of the segment the simplified fitting rule (all refinements off)
// holds after the previous point. Requires 2 <= k <= 100000.
Trajectory gen_stepwise_adversarial(std::size_t k, double zeta);

Trajectory generate(const GenSpec& request);

// Mixed corpus of random walks and grid routes with lengths uniform in
// [n_min, n_max]; trajectory i alternates between the two kinds.
std::vector<Trajectory> gen_mixed_corpus(std::size_t count, std::size_t n_min, std::size_t n_max, double step,
                                         std::uint64_t seed);

std::vector<Trajectory> gen_grid_corpus(std::size_t count, std::size_t n_min, std::size_t n_max, double step,
                                        std::uint64_t seed);

// Hand-placed fixtures (zeta = 10, t = index). Also shipped under data/.
Trajectory figure_overview_fixture(); // fifteen points, two turns and a kink
Trajectory missed_corner_fixture();   // road path with two unsampled corners
Trajectory quadrant_window_fixture(); // bounded-quadrant window example
inline constexpr double kFixtureZeta = 10.0;

// Minimum number of segments with endpoints at sampled points such that
// every point between two consecutive endpoints is within zeta of their
// line. Cubic time; throws PreconditionError above 2000 points.
std::size_t optimal_segments(const Trajectory& traj, double zeta);

} // namespace trajsimp
