#include "trajsimp/onepass.hpp"

#include "trajsimp/errors.hpp"

#include <cmath>
#include <string>
#include <type_traits>

namespace trajsimp {

// Copying an encoder copies its whole state; nothing lives on the heap.
static_assert(std::is_trivially_copyable_v<OperbEncoder>);

void SegmentBatch::push_back(const Segment& s)
{
    if (count_ == kCapacity)
        throw InvariantViolation("segment batch overflow");
    items_[count_++] = s;
}

namespace {

bool in_patchable_range(double a, double gamma)
{
    return (a > -kTwoPi && a <= -kPi - gamma) || (a >= gamma - kPi && a <= kPi - gamma) ||
           (a >= kPi + gamma && a < kTwoPi);
}

double dot(double ax, double ay, double bx, double by)
{
    return ax * bx + ay * by;
}

} // namespace

std::optional<Point> try_patch(const Segment& prev, const Segment& anom, const Segment& next,
                               const FitConfig& cfg)
{
    const DirectedSegment lp = DirectedSegment::between(prev.start, prev.end);
    const DirectedSegment ln = DirectedSegment::between(next.start, next.end);
    if (lp.length == 0.0 || ln.length == 0.0)
        return std::nullopt;

    if (!in_patchable_range(included_angle(lp, ln), cfg.gamma_m))
        return std::nullopt;

    std::optional<Point> g = line_intersection(lp, ln, cfg.parallel_tol);
    if (!g)
        return std::nullopt;

    // G must continue prev forward and precede next along its direction, so
    // both replacement segments keep the original headings.
    const double cp = std::cos(lp.theta), sp = std::sin(lp.theta);
    const double cn = std::cos(ln.theta), sn = std::sin(ln.theta);
    if (!(dot(g->x - prev.start.x, g->y - prev.start.y, cp, sp) > 0.0))
        return std::nullopt;
    if (!(dot(next.start.x - g->x, next.start.y - g->y, cn, sn) >= 0.0))
        return std::nullopt;

    if (distance(prev.start, *g) < lp.length - cfg.zeta / 2.0)
        return std::nullopt;

    g->t = 0.5 * (anom.start.t + anom.end.t);
    return g;
}

OperbEncoder::OperbEncoder(const FitConfig& cfg, Mode mode) : cfg_(cfg), mode_(mode)
{
    cfg_.validate();
}

OperbEncoder::OperbEncoder(const FitConfig& cfg, Mode mode, const Point& first) : OperbEncoder(cfg, mode)
{
    push(first);
}

SegmentBatch OperbEncoder::push(const Point& p)
{
    if (finished_)
        throw PreconditionError("push after finish");
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.t))
        throw DataError("point " + std::to_string(seen_) + " has a non-finite coordinate");
    if (seen_ > 0 && !(p.t > last_.t))
        throw DataError("timestamp of point " + std::to_string(seen_) + " does not increase");

    SegmentBatch out;
    if (seen_ == 0)
        fit_ = FitState::anchored_at(p);
    else
        consume(p, out);
    last_ = p;
    ++seen_;
    return out;
}

void OperbEncoder::consume(const Point& p, SegmentBatch& out)
{
    if (absorb_) {
        if (point_line_distance(p, absorb_->start, absorb_->end) <= cfg_.zeta) {
            ++absorb_->covered;
            return;
        }
        release_absorb(out);
    }

    if (try_fit_step(fit_, p, cfg_))
        return;
    close_segment(out);
    if (absorb_) {
        if (point_line_distance(p, absorb_->start, absorb_->end) <= cfg_.zeta) {
            ++absorb_->covered;
            return;
        }
        release_absorb(out);
    }
    // A freshly anchored state accepts any point.
    fit_ = fit_step(fit_, p, cfg_);
}

void OperbEncoder::close_segment(SegmentBatch& out)
{
    const Point end = fit_.has_active ? fit_.last_active : fit_.last_assigned;
    const Segment closed{fit_.anchor, end, fit_.points_in_segment + 1, false};
    fit_ = FitState::anchored_at(end);
    if (cfg_.opts.absorb)
        absorb_ = closed;
    else
        route(closed, out);
}

void OperbEncoder::release_absorb(SegmentBatch& out)
{
    const Segment s = *absorb_;
    absorb_.reset();
    route(s, out);
}

void OperbEncoder::route(const Segment& r, SegmentBatch& out)
{
    if (r.anomalous())
        ++anomalous_candidates_;

    if (mode_ == Mode::Operb) {
        out.push_back(r);
        return;
    }

    if (!prev_) {
        prev_ = r;
        return;
    }
    if (!anom_) {
        if (r.anomalous()) {
            anom_ = r;
        } else {
            out.push_back(*prev_);
            prev_ = r;
        }
        return;
    }

    if (const std::optional<Point> g = try_patch(*prev_, *anom_, r, cfg_)) {
        out.push_back({prev_->start, *g, prev_->covered, prev_->patched_start});
        prev_ = Segment{*g, r.end, r.covered, true};
        ++patches_;
    } else {
        out.push_back(*prev_);
        out.push_back(*anom_);
        prev_ = r;
    }
    anom_.reset();
}

void OperbEncoder::flush(SegmentBatch& out)
{
    if (prev_)
        out.push_back(*prev_);
    if (anom_)
        out.push_back(*anom_);
    prev_.reset();
    anom_.reset();
}

SegmentBatch OperbEncoder::finish()
{
    if (finished_)
        throw PreconditionError("finish called twice");
    if (seen_ == 0)
        throw PreconditionError("finish called before any point was pushed");
    finished_ = true;

    SegmentBatch out;
    if (absorb_) {
        // The last point was absorbed; hand it to a closing segment so the
        // representation ends exactly at it.
        Segment s = *absorb_;
        absorb_.reset();
        --s.covered;
        route(s, out);
        route({s.end, last_, 2, false}, out);
    } else if (fit_.points_in_segment == 0) {
        route({fit_.anchor, fit_.anchor, 1, false}, out);
    } else if (!fit_.has_active || fit_.last_case != FitCase::Hold) {
        route({fit_.anchor, fit_.last_assigned, fit_.points_in_segment + 1, false}, out);
    } else {
        // Trailing inactive points were only checked against the line to the
        // last active point; keep that line and bridge to the final point.
        route({fit_.anchor, fit_.last_active, fit_.points_in_segment, false}, out);
        route({fit_.last_active, last_, 2, false}, out);
    }
    flush(out);
    return out;
}

Representation simplify(const Trajectory& traj, const FitConfig& cfg, Mode mode)
{
    if (traj.empty())
        throw PreconditionError("cannot simplify an empty trajectory");
    struct VectorSource {
        const Trajectory& pts;
        std::size_t i = 0;
        std::optional<Point> next() { return i < pts.size() ? std::optional<Point>(pts[i++]) : std::nullopt; }
    } source{traj};
    return simplify_stream(source, cfg, mode);
}

} // namespace trajsimp
