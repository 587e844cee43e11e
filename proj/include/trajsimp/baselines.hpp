#pragma once

#include "trajsimp/representation.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace trajsimp {

// Recursive Douglas-Peucker on the infinite-line distance. Splits where the
// largest deviation exceeds zeta; ties go to the smallest index.
Representation dp_simplify(const Trajectory& traj, double zeta);
// Vertex indices chosen by dp_simplify.
std::vector<std::size_t> dp_vertices(const Trajectory& traj, double zeta);

// Opening window: grows [s, k] while every interior point is within zeta of
// line(P_s, P_k); on failure emits (s, k - 1) and reopens at k - 1.
Representation opw_simplify(const Trajectory& traj, double zeta);

// Distance bounds of the buffered window points to a candidate line.
struct DistanceBounds {
    double lower = 0.0;
    double upper = 0.0;
};

// Bounded-quadrant summary of the points buffered since the window anchor.
// Each quadrant (by angle around the anchor) keeps a bounding box, the two
// angle-extreme points and the four box-extreme points. The box clipped to
// the angular wedge is a convex polygon of at most eight vertices holding
// every buffered point.
class FbqsWindow {
public:
    explicit FbqsWindow(const Point& anchor);

    void add(const Point& p);
    // Upper bound from the clipped polygons, lower bound from the stored
    // real points, both for distances to line(anchor, end).
    DistanceBounds bounds(const Point& end) const;
    // Vertices of the clipped polygon of quadrant q (absolute coordinates).
    std::vector<Point> hull_vertices(int q) const;
    const Point& anchor() const { return anchor_; }
    std::size_t buffered() const { return buffered_; }

private:
    struct Quadrant {
        bool used = false;
        double min_x = 0, max_x = 0, min_y = 0, max_y = 0; // relative to the anchor
        std::array<Point, 4> box_points{};                  // attaining min_x, max_x, min_y, max_y
        Point low{}, high{};                                // smallest / largest angle
        double low_angle = 0, high_angle = 0;
    };

    Point anchor_;
    std::array<Quadrant, 4> quads_{};
    std::size_t buffered_ = 0;
};

// Fast bounded-quadrant simplification: continues while the upper bound is
// within zeta, otherwise emits (s, k - 1) and reopens at k - 1. The
// indeterminate case is treated like a violation.
Representation fbqs_simplify(const Trajectory& traj, double zeta);

} // namespace trajsimp
