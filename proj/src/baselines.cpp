#include "trajsimp/baselines.hpp"

#include "trajsimp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace trajsimp {

namespace {

void require_input(const Trajectory& traj, double zeta)
{
    if (traj.empty())
        throw PreconditionError("cannot simplify an empty trajectory");
    if (!(zeta > 0.0) || !std::isfinite(zeta))
        throw ConfigError("error bound zeta must be a positive finite number");
}

} // namespace

std::vector<std::size_t> dp_vertices(const Trajectory& traj, double zeta)
{
    require_input(traj, zeta);
    const std::size_t n = traj.size();
    if (n == 1)
        return {0};

    std::vector<char> keep(n, 0);
    keep[0] = 1;
    keep[n - 1] = 1;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, n - 1}};
    while (!stack.empty()) {
        const auto [a, b] = stack.back();
        stack.pop_back();
        double worst = -1.0;
        std::size_t split = a;
        for (std::size_t i = a + 1; i < b; ++i) {
            // Distances equal up to rounding count as ties so the smallest
            // index wins regardless of how each one rounded.
            const double d = point_line_distance(traj[i], traj[a], traj[b]);
            if (d > worst + 1e-9 * std::max(1.0, worst)) {
                worst = d;
                split = i;
            }
        }
        if (worst > zeta) {
            keep[split] = 1;
            stack.emplace_back(split, b);
            stack.emplace_back(a, split);
        }
    }

    std::vector<std::size_t> vertices;
    for (std::size_t i = 0; i < n; ++i)
        if (keep[i])
            vertices.push_back(i);
    return vertices;
}

Representation dp_simplify(const Trajectory& traj, double zeta)
{
    const std::vector<std::size_t> v = dp_vertices(traj, zeta);
    return representation_from_vertices(traj, v);
}

Representation opw_simplify(const Trajectory& traj, double zeta)
{
    require_input(traj, zeta);
    const std::size_t n = traj.size();
    std::vector<std::size_t> vertices{0};
    std::size_t s = 0;
    for (std::size_t k = 2; k < n; ++k) {
        bool fits = true;
        for (std::size_t i = s + 1; i < k && fits; ++i)
            fits = point_line_distance(traj[i], traj[s], traj[k]) <= zeta;
        if (!fits) {
            s = k - 1;
            vertices.push_back(s);
        }
    }
    if (n > 1)
        vertices.push_back(n - 1);
    return representation_from_vertices(traj, vertices);
}

namespace {

struct Vec {
    double x, y;
};

double cross(Vec a, Vec b)
{
    return a.x * b.y - a.y * b.x;
}

// Keeps the part of `poly` where cross(dir, v) * side >= 0.
std::vector<Vec> clip(const std::vector<Vec>& poly, Vec dir, double side)
{
    std::vector<Vec> out;
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vec cur = poly[i];
        const Vec nxt = poly[(i + 1) % m];
        const double fc = side * cross(dir, cur);
        const double fn = side * cross(dir, nxt);
        if (fc >= 0.0)
            out.push_back(cur);
        if ((fc >= 0.0) != (fn >= 0.0)) {
            const double t = fc / (fc - fn);
            out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
        }
    }
    return out;
}

// The wedge is widened by this much so rounding never clips away a point
// lying on an extreme ray; it only loosens the upper bound.
constexpr double kWedgeSlack = 1e-12;

double relative_distance(Vec v, Vec e, double e_len)
{
    if (e_len == 0.0)
        return std::hypot(v.x, v.y);
    return std::abs(cross(e, v)) / e_len;
}

} // namespace

FbqsWindow::FbqsWindow(const Point& anchor) : anchor_(anchor) {}

void FbqsWindow::add(const Point& p)
{
    ++buffered_;
    const double rx = p.x - anchor_.x;
    const double ry = p.y - anchor_.y;
    if (rx == 0.0 && ry == 0.0)
        return; // on every line through the anchor
    const double angle = angle_of(anchor_, p);
    const int q = std::min(3, static_cast<int>(angle / (kPi / 2.0)));
    Quadrant& quad = quads_[static_cast<std::size_t>(q)];
    if (!quad.used) {
        quad.used = true;
        quad.min_x = quad.max_x = rx;
        quad.min_y = quad.max_y = ry;
        quad.box_points.fill(p);
        quad.low = quad.high = p;
        quad.low_angle = quad.high_angle = angle;
        return;
    }
    if (rx < quad.min_x) {
        quad.min_x = rx;
        quad.box_points[0] = p;
    }
    if (rx > quad.max_x) {
        quad.max_x = rx;
        quad.box_points[1] = p;
    }
    if (ry < quad.min_y) {
        quad.min_y = ry;
        quad.box_points[2] = p;
    }
    if (ry > quad.max_y) {
        quad.max_y = ry;
        quad.box_points[3] = p;
    }
    if (angle < quad.low_angle) {
        quad.low_angle = angle;
        quad.low = p;
    }
    if (angle > quad.high_angle) {
        quad.high_angle = angle;
        quad.high = p;
    }
}

std::vector<Point> FbqsWindow::hull_vertices(int q) const
{
    const Quadrant& quad = quads_.at(static_cast<std::size_t>(q));
    if (!quad.used)
        return {};
    std::vector<Vec> poly{{quad.min_x, quad.min_y}, {quad.max_x, quad.min_y}, {quad.max_x, quad.max_y},
                          {quad.min_x, quad.max_y}};
    const double lo = quad.low_angle - kWedgeSlack;
    const double hi = quad.high_angle + kWedgeSlack;
    poly = clip(poly, {std::cos(lo), std::sin(lo)}, 1.0);
    poly = clip(poly, {std::cos(hi), std::sin(hi)}, -1.0);
    std::vector<Point> out;
    out.reserve(poly.size());
    for (const Vec& v : poly)
        out.push_back({anchor_.x + v.x, anchor_.y + v.y, anchor_.t});
    return out;
}

DistanceBounds FbqsWindow::bounds(const Point& end) const
{
    const Vec e{end.x - anchor_.x, end.y - anchor_.y};
    const double e_len = std::hypot(e.x, e.y);
    DistanceBounds b;
    for (int q = 0; q < 4; ++q) {
        const Quadrant& quad = quads_[static_cast<std::size_t>(q)];
        if (!quad.used)
            continue;
        auto rel = [&](const Point& p) { return Vec{p.x - anchor_.x, p.y - anchor_.y}; };
        for (const Point& p : quad.box_points)
            b.lower = std::max(b.lower, relative_distance(rel(p), e, e_len));
        b.lower = std::max(b.lower, relative_distance(rel(quad.low), e, e_len));
        b.lower = std::max(b.lower, relative_distance(rel(quad.high), e, e_len));
        for (const Point& v : hull_vertices(q))
            b.upper = std::max(b.upper, relative_distance(rel(v), e, e_len));
    }
    b.upper = std::max(b.upper, b.lower);
    return b;
}

Representation fbqs_simplify(const Trajectory& traj, double zeta)
{
    require_input(traj, zeta);
    const std::size_t n = traj.size();
    std::vector<std::size_t> vertices{0};
    FbqsWindow window(traj[0]);
    for (std::size_t k = 1; k < n; ++k) {
        if (window.bounds(traj[k]).upper > zeta) {
            vertices.push_back(k - 1);
            window = FbqsWindow(traj[k - 1]);
        }
        window.add(traj[k]);
    }
    if (n > 1)
        vertices.push_back(n - 1);
    return representation_from_vertices(traj, vertices);
}

} // namespace trajsimp
