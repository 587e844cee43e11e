#include "trajsimp/metrics.hpp"

#include "trajsimp/errors.hpp"

#include <algorithm>

namespace trajsimp {

namespace {

void require_matching(std::span<const Representation> reps, std::span<const Trajectory> trajs)
{
    if (reps.empty() || trajs.empty())
        throw PreconditionError("metrics need at least one trajectory");
    if (reps.size() != trajs.size())
        throw PreconditionError("representation and trajectory counts differ");
}

// Calls fn(point_index, distance) for every input point.
template <typename Fn>
void for_each_deviation(const Representation& rep, const Trajectory& traj, Fn&& fn)
{
    const std::vector<IndexRange> ranges = assignment_ranges(rep.segments, traj.size());
    for (std::size_t s = 0; s < ranges.size(); ++s) {
        const Segment& seg = rep.segments[s];
        for (std::size_t i = ranges[s].first; i < ranges[s].last; ++i)
            fn(i, point_line_distance(traj[i], seg.start, seg.end));
    }
}

} // namespace

double compression_ratio(std::span<const Representation> reps, std::span<const Trajectory> trajs)
{
    require_matching(reps, trajs);
    std::size_t segs = 0, pts = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        segs += reps[i].segments.size();
        pts += trajs[i].size();
    }
    if (pts == 0)
        throw PreconditionError("metrics need at least one input point");
    return static_cast<double>(segs) / static_cast<double>(pts);
}

double average_error(std::span<const Representation> reps, std::span<const Trajectory> trajs)
{
    require_matching(reps, trajs);
    double sum = 0.0;
    std::size_t pts = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for_each_deviation(reps[i], trajs[i], [&](std::size_t, double d) { sum += d; });
        pts += trajs[i].size();
    }
    if (pts == 0)
        throw PreconditionError("metrics need at least one input point");
    return sum / static_cast<double>(pts);
}

double max_error(const Representation& rep, const Trajectory& traj)
{
    double worst = 0.0;
    for_each_deviation(rep, traj, [&](std::size_t, double d) { worst = std::max(worst, d); });
    return worst;
}

BoundCheck verify_error_bound(const Representation& rep, const Trajectory& traj, double zeta)
{
    BoundCheck check;
    const double limit = zeta * (1.0 + kBoundSlack);
    for_each_deviation(rep, traj, [&](std::size_t i, double d) {
        if (d > limit)
            check.violations.push_back({i, d});
    });
    check.ok = check.violations.empty();
    return check;
}

std::map<std::size_t, std::size_t> segment_histogram(std::span<const Representation> reps)
{
    std::map<std::size_t, std::size_t> z;
    for (const Representation& rep : reps)
        for (const Segment& s : rep.segments)
            ++z[s.covered];
    return z;
}

double patching_ratio(std::size_t patches, std::size_t anomalous_candidates)
{
    if (anomalous_candidates == 0)
        return 0.0;
    return static_cast<double>(patches) / static_cast<double>(anomalous_candidates);
}

std::size_t stored_points(const Representation& rep)
{
    if (rep.segments.empty())
        return 0;
    std::size_t count = 1;
    for (const Segment& s : rep.segments)
        if (!(s.start == s.end && rep.segments.size() == 1))
            ++count;
    return count;
}

CompressionStats summarize(std::span<const Representation> reps, std::span<const Trajectory> trajs)
{
    require_matching(reps, trajs);
    CompressionStats st;
    st.trajectories = reps.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const Representation& rep = reps[i];
        st.input_points += trajs[i].size();
        st.output_segments += rep.segments.size();
        st.output_points += stored_points(rep);
        st.anomalous_candidates += rep.anomalous_candidates;
        st.patched += rep.patches;
        for (const Segment& s : rep.segments)
            if (s.anomalous())
                ++st.anomalous;
        for_each_deviation(rep, trajs[i], [&](std::size_t, double d) {
            sum += d;
            st.max_error = std::max(st.max_error, d);
        });
    }
    if (st.input_points == 0)
        throw PreconditionError("metrics need at least one input point");
    st.ratio = static_cast<double>(st.output_segments) / static_cast<double>(st.input_points);
    st.avg_error = sum / static_cast<double>(st.input_points);
    st.histogram = segment_histogram(reps);
    st.patching_ratio = patching_ratio(st.patched, st.anomalous_candidates);
    return st;
}

} // namespace trajsimp
