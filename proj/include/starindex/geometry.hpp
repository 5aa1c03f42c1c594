#pragma once

// Planar primitives: points, simple polygons, orientation/containment
// predicates, convex hulls. All coordinates are doubles; predicates use the
// fixed absolute tolerance kTolGeom (desk-scale inputs assumed).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "starindex/errors.hpp"

namespace starindex {

inline constexpr double kTolGeom = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }
inline Point2 unit_vector(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline double angle_of(Point2 a) { return std::atan2(a.y, a.x); }

inline bool finite(Point2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

// Twice the signed area of triangle (a,b,c); positive for counterclockwise.
inline double orient(Point2 a, Point2 b, Point2 c) {
    return cross(b - a, c - a);
}

// Signed distance from q to the line through (a,b), positive on the left of a->b.
inline double line_side_distance(Point2 a, Point2 b, Point2 q) {
    const double len = dist(a, b);
    if (len == 0.0) return dist(a, q);
    return cross(b - a, q - a) / len;
}

inline double clamp01(double t) { return std::min(1.0, std::max(0.0, t)); }

// Distance from q to the closed segment [a,b].
inline double point_segment_distance(Point2 a, Point2 b, Point2 q) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(a, q);
    const double t = clamp01(dot(q - a, ab) / len2);
    return dist(a + t * ab, q);
}

// Minimal distance between closed segments [a,b] and [c,d].
inline double segment_segment_distance(Point2 a, Point2 b, Point2 c, Point2 d) {
    const double o1 = orient(a, b, c);
    const double o2 = orient(a, b, d);
    const double o3 = orient(c, d, a);
    const double o4 = orient(c, d, b);
    if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != o2 && o3 != o4)
        return 0.0;  // proper crossing
    return std::min(std::min(point_segment_distance(a, b, c), point_segment_distance(a, b, d)),
                    std::min(point_segment_distance(c, d, a), point_segment_distance(c, d, b)));
}

enum class Containment { Inside, OnBoundary, Outside };

namespace detail {

inline double polygon_signed_area(const std::vector<Point2>& v) {
    double s = 0.0;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % n];
        s += cross(a, b);
    }
    return 0.5 * s;
}

}  // namespace detail

// A normalized simple polygon: counterclockwise, no repeated or collinear
// consecutive vertices, non-self-intersecting boundary, positive area.
// Immutable after construction.
class SimplePolygon {
public:
    // Validates and normalizes; throws GeometryError with codes TooFewVertices,
    // DegenerateArea or SelfIntersecting.
    static SimplePolygon validate_simple(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Point2& vertex(std::size_t i) const { return verts_[i % verts_.size()]; }

    double area() const { return area_; }

    Point2 centroid() const {
        double cx = 0.0, cy = 0.0;
        const std::size_t n = verts_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2& a = verts_[i];
            const Point2& b = verts_[(i + 1) % n];
            const double w = cross(a, b);
            cx += (a.x + b.x) * w;
            cy += (a.y + b.y) * w;
        }
        const double f = 1.0 / (6.0 * area_);
        return {cx * f, cy * f};
    }

    void bounding_box(Point2& lo, Point2& hi) const {
        lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
        hi = {-lo.x, -lo.y};
        for (const Point2& v : verts_) {
            lo.x = std::min(lo.x, v.x); lo.y = std::min(lo.y, v.y);
            hi.x = std::max(hi.x, v.x); hi.y = std::max(hi.y, v.y);
        }
    }

    double diameter_hint() const {
        Point2 lo, hi;
        bounding_box(lo, hi);
        return dist(lo, hi);
    }

    // Exact away from the boundary; OnBoundary within kTolGeom of an edge.
    Containment contains(Point2 q) const;

    bool is_convex(double tol = kTolGeom) const {
        const std::size_t n = verts_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (line_side_distance(verts_[i], verts_[(i + 1) % n], verts_[(i + 2) % n]) < -tol)
                return false;
        }
        return true;
    }

private:
    explicit SimplePolygon(std::vector<Point2> v) : verts_(std::move(v)) {
        area_ = detail::polygon_signed_area(verts_);
    }

    std::vector<Point2> verts_;
    double area_ = 0.0;
};

inline Containment SimplePolygon::contains(Point2 q) const {
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (point_segment_distance(verts_[i], verts_[(i + 1) % n], q) <= kTolGeom)
            return Containment::OnBoundary;
    }
    bool in = false;  // even-odd crossing count, half-open edges
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = verts_[i];
        const Point2& b = verts_[(i + 1) % n];
        if ((a.y > q.y) != (b.y > q.y)) {
            const double xint = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (q.x < xint) in = !in;
        }
    }
    return in ? Containment::Inside : Containment::Outside;
}

inline SimplePolygon SimplePolygon::validate_simple(std::vector<Point2> vertices) {
    if (vertices.size() < 3)
        throw GeometryError("TooFewVertices", "polygon needs at least 3 vertices");
    for (const Point2& v : vertices) {
        if (!finite(v))
            throw GeometryError("DegenerateArea", "polygon vertex is not finite");
    }

    // Drop consecutive duplicates, then collinear midpoints. A near-zero
    // orientation with the middle vertex not between its neighbours is a
    // zero-width spike, which counts as self-intersection.
    std::vector<Point2> v = std::move(vertices);
    auto drop_dups = [&]() {
        std::vector<Point2> out;
        for (const Point2& p : v) {
            if (out.empty() || dist(out.back(), p) > kTolGeom) out.push_back(p);
        }
        while (out.size() > 1 && dist(out.front(), out.back()) <= kTolGeom) out.pop_back();
        v = std::move(out);
    };
    drop_dups();

    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        std::vector<Point2> out;
        const std::size_t n = v.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2& prev = v[(i + n - 1) % n];
            const Point2& cur = v[i];
            const Point2& next = v[(i + 1) % n];
            const double chord = dist(prev, next);
            if (chord <= kTolGeom)
                throw GeometryError("SelfIntersecting", "zero-width spike in boundary");
            const double h = std::abs(cross(next - prev, cur - prev)) / chord;
            if (h <= kTolGeom) {
                const double t = dot(cur - prev, next - prev) / dot(next - prev, next - prev);
                if (t < -kTolGeom || t > 1.0 + kTolGeom)
                    throw GeometryError("SelfIntersecting", "boundary doubles back on itself");
                changed = true;  // collinear midpoint, drop it
                continue;
            }
            out.push_back(cur);
        }
        v = std::move(out);
        if (changed) drop_dups();
    }

    if (v.size() < 3)
        throw GeometryError("DegenerateArea", "polygon collapses to a segment or point");

    // Simplicity first: a figure-eight has cancelling signed area, so the
    // edge-clearance scan must run before the area test to name it right.
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segment_segment_distance(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]) <= kTolGeom)
                throw GeometryError("SelfIntersecting", "boundary edges intersect");
        }
    }

    double area = detail::polygon_signed_area(v);
    if (std::abs(area) <= kTolGeom * kTolGeom)
        throw GeometryError("DegenerateArea", "polygon area is numerically zero");
    if (area < 0.0) std::reverse(v.begin(), v.end());

    return SimplePolygon(std::move(v));
}

// Convex hull of a point set by monotone chain; counterclockwise, minimal
// vertex set (strict turns only).
inline std::vector<Point2> convex_hull_points(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point2 a, Point2 b) { return dist(a, b) <= kTolGeom; }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && line_side_distance(hull[k - 2], hull[k - 1], pts[i]) <= kTolGeom) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && line_side_distance(hull[k - 2], hull[k - 1], pts[i]) <= kTolGeom) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

// The hull of a polygon equals the hull of its vertex set.
inline SimplePolygon convex_hull(const SimplePolygon& poly) {
    return SimplePolygon::validate_simple(convex_hull_points(poly.vertices()));
}

}  // namespace starindex
