#pragma once

#include "trajsimp/fitting.hpp"
#include "trajsimp/representation.hpp"

#include <array>
#include <cstddef>
#include <optional>

namespace trajsimp {

enum class Mode { Operb, OperbA };

// Segments released by a single push or finish call. Capacity is fixed so the
// encoder never allocates.
class SegmentBatch {
public:
    static constexpr std::size_t kCapacity = 8;

    void push_back(const Segment& s);
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    const Segment& operator[](std::size_t i) const { return items_[i]; }
    const Segment* begin() const { return items_.data(); }
    const Segment* end() const { return items_.data() + count_; }

private:
    std::array<Segment, kCapacity> items_{};
    std::size_t count_ = 0;
};

// Returns the patch point replacing the anomalous segment between prev and
// next, or nothing when the neighbouring lines do not meet the patching
// conditions (forward intersection, length slack of zeta / 2, included
// angle away from a reversal by at least gamma_m).
std::optional<Point> try_patch(const Segment& prev, const Segment& anom, const Segment& next,
                               const FitConfig& cfg);

// Streaming OPERB / OPERB-A compressor. Holds a fixed amount of state: the
// fit of the open segment, one segment being extended by absorption and, in
// OPERB-A mode, at most two closed segments awaiting a patch decision.
class OperbEncoder {
public:
    OperbEncoder(const FitConfig& cfg, Mode mode);
    // Same as constructing and pushing `first`; anything the push would
    // emit is impossible for a first point, so nothing is lost.
    OperbEncoder(const FitConfig& cfg, Mode mode, const Point& first);

    // Throws DataError if p.t does not exceed the previous timestamp and
    // PreconditionError after finish().
    SegmentBatch push(const Point& p);
    // Throws PreconditionError if nothing was pushed or finish() already ran.
    SegmentBatch finish();

    const FitConfig& config() const { return cfg_; }
    Mode mode() const { return mode_; }
    const FitState& fit_state() const { return fit_; }
    std::size_t points_seen() const { return seen_; }
    std::size_t anomalous_candidates() const { return anomalous_candidates_; }
    std::size_t patches() const { return patches_; }
    bool has_pending() const { return prev_.has_value(); }
    bool is_absorbing() const { return absorb_.has_value(); }

private:
    void consume(const Point& p, SegmentBatch& out);
    void close_segment(SegmentBatch& out);
    void release_absorb(SegmentBatch& out);
    void route(const Segment& r, SegmentBatch& out);
    void flush(SegmentBatch& out);

    FitConfig cfg_;
    Mode mode_;
    FitState fit_;
    std::optional<Segment> absorb_;
    std::optional<Segment> prev_;
    std::optional<Segment> anom_;
    Point last_{};
    std::size_t seen_ = 0;
    std::size_t anomalous_candidates_ = 0;
    std::size_t patches_ = 0;
    bool finished_ = false;
};

// Compresses a whole trajectory. Throws PreconditionError on empty input.
Representation simplify(const Trajectory& traj, const FitConfig& cfg, Mode mode);

// Compresses points pulled one at a time from `source`, which must provide
// `std::optional<Point> next()`. Each point is requested exactly once.
template <typename Source>
Representation simplify_stream(Source& source, const FitConfig& cfg, Mode mode)
{
    OperbEncoder enc(cfg, mode);
    Representation rep;
    while (std::optional<Point> p = source.next())
        for (const Segment& s : enc.push(*p))
            rep.segments.push_back(s);
    for (const Segment& s : enc.finish())
        rep.segments.push_back(s);
    rep.anomalous_candidates = enc.anomalous_candidates();
    rep.patches = enc.patches();
    return rep;
}

} // namespace trajsimp
