#pragma once

#include "trajsimp/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace trajsimp {

// The five optional refinements of the basic one-pass fitter.
struct Optimizations {
    bool far_first_active = true; // O1: first active point must be > zeta from the anchor
    bool signed_extremes = true;  // O2: accept while d+max + d-max <= zeta
    bool eager_rotation = true;   // O3: rotate using the larger signed extreme
    bool missing_zones = true;    // O4: scale the rotation by the number of skipped zones
    bool absorb = true;           // O5: extend a closed segment with points within zeta

    static Optimizations all() { return {}; }
    static Optimizations none() { return {false, false, false, false, false}; }

    // Bit i (from the least significant) enables optimization i + 1.
    static Optimizations from_mask(unsigned mask);
    unsigned mask() const;

    // "all", "none", or a five-character 0/1 string ordered O1..O5.
    static Optimizations parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(const Optimizations&, const Optimizations&) = default;
};

struct FitConfig {
    static constexpr std::size_t kMaxPointsPerSegment = 400000;

    double zeta = 0.0;
    std::size_t k_cap = kMaxPointsPerSegment;
    Optimizations opts;
    double gamma_m = kPi / 3.0;
    double parallel_tol = kParallelTolerance;

    // Throws ConfigError unless zeta > 0, 1 <= k_cap <= 400000 and gamma_m in [0, pi].
    void validate() const;
};

enum class PointClass { Inactive, Active, Break };

// Which branch of the fitting function produced the current fitted segment.
enum class FitCase : std::uint8_t { None, Hold, Seed, Rotate };

// Everything one in-flight segment needs. Fixed size: nothing here grows with
// the number of points consumed.
struct FitState {
    Point anchor;
    DirectedSegment fitted;   // start == anchor, length == zone * zeta / 2
    DirectedSegment r_active; // anchor -> last active point
    Point last_active;
    Point last_assigned;
    std::size_t points_in_segment = 0; // points fitted after the anchor
    double d_plus_max = 0.0;
    double d_minus_max = 0.0;
    long last_zone = 0;
    bool has_active = false;
    FitCase last_case = FitCase::None;

    static FitState anchored_at(const Point& anchor);
};

// ceil(r_len * 2 / zeta - 0.5), clamped at 0. Arguments within 1e-12 of an
// integer are snapped to it before taking the ceiling.
long zone_index(double r_len, double zeta);

// zeta with O1 enabled, zeta / 4 otherwise.
double first_active_threshold(const FitConfig& cfg);

PointClass classify(const FitState& state, const Point& p, const FitConfig& cfg);

// Applies the fitting function to p. Throws PreconditionError if p
// classifies as Break.
FitState fit_step(const FitState& state, const Point& p, const FitConfig& cfg);

// classify and fit_step in one evaluation: leaves state untouched and
// returns false when p breaks the segment.
bool try_fit_step(FitState& state, const Point& p, const FitConfig& cfg);

} // namespace trajsimp
