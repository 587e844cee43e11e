#pragma once

#include <numbers>
#include <optional>
#include <vector>

namespace trajsimp {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Planar position in meters with a timestamp in seconds.
struct Point {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

using Trajectory = std::vector<Point>;

// A directed segment stored as (start, length, angle). Both the fitted
// segment maintained during one-pass compression and the segments anchored
// at sampled points use this form.
struct DirectedSegment {
    Point start;
    double length = 0.0; // >= 0
    double theta = 0.0;  // [0, 2pi); 0 when length == 0

    static DirectedSegment between(const Point& from, const Point& to);
    static DirectedSegment from_polar(const Point& start, double length, double theta);

    // start + length * (cos theta, sin theta); t is copied from start.
    Point end() const;
};

// Normalizes an angle into [0, 2pi).
double normalize_angle(double a);

// Angle of the ray a->b from the +x axis in [0, 2pi); 0 when a == b.
double angle_of(const Point& a, const Point& b);

double distance(const Point& a, const Point& b);

// Perpendicular distance from p to the infinite line carrying seg. Falls back
// to the distance from p to seg.start when seg has zero length.
double point_line_distance(const Point& p, const DirectedSegment& seg);

// Same measure for the line through a and b, computed from the cross product
// so that no angle round trip is involved.
double point_line_distance(const Point& p, const Point& a, const Point& b);

// l2.theta - l1.theta, deliberately not renormalized: range (-2pi, 2pi).
double included_angle(const DirectedSegment& l1, const DirectedSegment& l2);

// Rotation direction that brings the line of l_prev closer to the end of r:
// +1 when the included angle lies in (-2pi, -3pi/2], [-pi, -pi/2], [0, pi/2]
// or [pi, 3pi/2), -1 otherwise.
int sign_f(const DirectedSegment& r, const DirectedSegment& l_prev);
int sign_of_included_angle(double included);

inline constexpr double kParallelTolerance = 1e-9;

// Intersection of the infinite lines through l1 and l2. Returns nullopt for
// parallel or coincident lines (|sin(theta1 - theta2)| < angular_tol). The
// result's t is left at 0 for the caller to fill in.
// Throws PreconditionError for a zero-length input.
std::optional<Point> line_intersection(const DirectedSegment& l1, const DirectedSegment& l2,
                                       double angular_tol = kParallelTolerance);

// Equirectangular projection of lon/lat degrees about an origin (lon0, lat0).
struct GeoProjection {
    double lon0 = 0.0;
    double lat0 = 0.0;

    static constexpr double kMetersPerDegreeLat = 110540.0;
    static constexpr double kMetersPerDegreeLonAtEquator = 111320.0;

    // x <- lon, y <- lat on input; meters on output.
    Point project(const Point& lonlat) const;
};

} // namespace trajsimp
