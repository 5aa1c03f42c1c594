#pragma once

// Star kernel of a simple polygon: the convex set of admissible star centers,
// computed as the intersection of the inner half-planes of all edges.

#include <optional>
#include <vector>

#include "starindex/geometry.hpp"

namespace starindex {

struct KernelResult {
    // Convex chain, counterclockwise. Empty iff the polygon is not star-shaped.
    std::vector<Point2> kernel_vertices;
    bool degenerate = false;  // nonempty but area < kTolGeom^2 (segment or point)
    bool is_star_shaped = false;

    double area() const { return detail::polygon_signed_area(kernel_vertices); }

    // Only available for a nondegenerate kernel; slivers that fail polygon
    // validation are treated as having no usable interior.
    std::optional<SimplePolygon> kernel_polygon() const {
        if (!is_star_shaped || degenerate) return std::nullopt;
        try {
            return SimplePolygon::validate_simple(kernel_vertices);
        } catch (const Error&) {
            return std::nullopt;
        }
    }
};

namespace detail {

// Clip a convex polygon against the half-plane on the left of a->b.
inline std::vector<Point2> clip_half_plane(const std::vector<Point2>& poly, Point2 a, Point2 b) {
    std::vector<Point2> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& cur = poly[i];
        const Point2& next = poly[(i + 1) % n];
        const double sc = orient(a, b, cur);
        const double sn = orient(a, b, next);
        if (sc >= 0.0) out.push_back(cur);
        if ((sc > 0.0 && sn < 0.0) || (sc < 0.0 && sn > 0.0)) {
            const double t = sc / (sc - sn);
            out.push_back(cur + t * (next - cur));
        }
    }
    return out;
}

inline std::vector<Point2> dedupe_chain(const std::vector<Point2>& v) {
    std::vector<Point2> out;
    for (const Point2& p : v) {
        if (out.empty() || dist(out.back(), p) > kTolGeom) out.push_back(p);
    }
    while (out.size() > 1 && dist(out.front(), out.back()) <= kTolGeom) out.pop_back();
    return out;
}

}  // namespace detail

// Intersection of the n edge half-planes, clipped incrementally from a padded
// bounding box. Empty result <=> not star-shaped.
inline KernelResult kernel(const SimplePolygon& poly) {
    Point2 lo, hi;
    poly.bounding_box(lo, hi);
    const double pad = 0.125 * (dist(lo, hi) + 1.0);
    std::vector<Point2> region = {
        {lo.x - pad, lo.y - pad}, {hi.x + pad, lo.y - pad},
        {hi.x + pad, hi.y + pad}, {lo.x - pad, hi.y + pad}};

    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n && !region.empty(); ++i) {
        region = detail::clip_half_plane(region, v[i], v[(i + 1) % n]);
    }
    region = detail::dedupe_chain(region);

    KernelResult res;
    res.kernel_vertices = std::move(region);
    res.is_star_shaped = !res.kernel_vertices.empty();
    res.degenerate = res.is_star_shaped &&
                     (res.kernel_vertices.size() < 3 || res.area() < kTolGeom * kTolGeom);
    return res;
}

// Smallest signed distance from p to the edge half-plane boundaries; p is an
// admissible star center iff this is >= -kTolGeom, and an interior center
// (usable for radial profiles) iff it is >= kTolGeom.
inline double star_center_margin(const SimplePolygon& poly, Point2 p) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        m = std::min(m, line_side_distance(v[i], v[(i + 1) % n], p));
    }
    return m;
}

inline bool is_star_center(const SimplePolygon& poly, Point2 p) {
    return star_center_margin(poly, p) >= -kTolGeom;
}

inline bool is_interior_star_center(const SimplePolygon& poly, Point2 p) {
    return star_center_margin(poly, p) >= kTolGeom;
}

}  // namespace starindex
