#include "trajsimp/geometry.hpp"

#include "trajsimp/errors.hpp"

#include <cmath>

namespace trajsimp {

DirectedSegment DirectedSegment::between(const Point& from, const Point& to)
{
    const double len = distance(from, to);
    return {from, len, len > 0.0 ? angle_of(from, to) : 0.0};
}

DirectedSegment DirectedSegment::from_polar(const Point& start, double length, double theta)
{
    if (length <= 0.0)
        return {start, 0.0, 0.0};
    return {start, length, normalize_angle(theta)};
}

Point DirectedSegment::end() const
{
    return {start.x + length * std::cos(theta), start.y + length * std::sin(theta), start.t};
}

double normalize_angle(double a)
{
    a = std::fmod(a, kTwoPi);
    if (a < 0.0)
        a += kTwoPi;
    // fmod of a tiny negative value can round up to exactly 2pi.
    if (a >= kTwoPi)
        a = 0.0;
    return a;
}

double angle_of(const Point& a, const Point& b)
{
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    if (dx == 0.0 && dy == 0.0)
        return 0.0;
    return normalize_angle(std::atan2(dy, dx));
}

double distance(const Point& a, const Point& b)
{
    return std::hypot(b.x - a.x, b.y - a.y);
}

double point_line_distance(const Point& p, const DirectedSegment& seg)
{
    if (seg.length == 0.0)
        return distance(p, seg.start);
    const double dx = p.x - seg.start.x;
    const double dy = p.y - seg.start.y;
    return std::abs(std::cos(seg.theta) * dy - std::sin(seg.theta) * dx);
}

double point_line_distance(const Point& p, const Point& a, const Point& b)
{
    const double ux = b.x - a.x;
    const double uy = b.y - a.y;
    const double len = std::hypot(ux, uy);
    if (len == 0.0)
        return distance(p, a);
    return std::abs(ux * (p.y - a.y) - uy * (p.x - a.x)) / len;
}

double included_angle(const DirectedSegment& l1, const DirectedSegment& l2)
{
    return l2.theta - l1.theta;
}

int sign_of_included_angle(double a)
{
    constexpr double half = kPi / 2.0;
    const bool positive = (a > -kTwoPi && a <= -3.0 * half) ||
                          (a >= -kPi && a <= -half) ||
                          (a >= 0.0 && a <= half) ||
                          (a >= kPi && a < 3.0 * half);
    return positive ? 1 : -1;
}

int sign_f(const DirectedSegment& r, const DirectedSegment& l_prev)
{
    return sign_of_included_angle(r.theta - l_prev.theta);
}

std::optional<Point> line_intersection(const DirectedSegment& l1, const DirectedSegment& l2,
                                       double angular_tol)
{
    if (l1.length <= 0.0 || l2.length <= 0.0)
        throw PreconditionError("line_intersection: zero-length segment");

    const double c1 = std::cos(l1.theta), s1 = std::sin(l1.theta);
    const double c2 = std::cos(l2.theta), s2 = std::sin(l2.theta);
    // sin(theta2 - theta1)
    const double denom = c1 * s2 - s1 * c2;
    if (std::abs(denom) < angular_tol)
        return std::nullopt;

    // start1 + a * u1 = start2 + b * u2, solved for a by Cramer's rule.
    const double wx = l2.start.x - l1.start.x;
    const double wy = l2.start.y - l1.start.y;
    const double a = (wx * s2 - wy * c2) / denom;
    return Point{l1.start.x + a * c1, l1.start.y + a * s1, 0.0};
}

Point GeoProjection::project(const Point& lonlat) const
{
    const double kx = kMetersPerDegreeLonAtEquator * std::cos(lat0 * kPi / 180.0);
    return {(lonlat.x - lon0) * kx, (lonlat.y - lat0) * kMetersPerDegreeLat, lonlat.t};
}

} // namespace trajsimp
