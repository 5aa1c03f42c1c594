#pragma once

// Deterministic random inputs for the property tests. Star polygons are built
// as radial graphs about the origin, so the origin is an interior kernel point
// by construction and every generated instance is star-shaped.

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <vector>

#include "starindex.hpp"

namespace testsupport {

using namespace starindex;
using Rng = std::mt19937;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

struct StarGenOptions {
    int min_vertices = 6;
    int max_vertices = 14;
    double r_min = 1.0;
    double r_max = 5.0;
    double min_margin = 0.05;   // kernel clearance about the origin
    double reflex_depth = 0.0;  // require a vertex this far inside the hull
};

inline double origin_kernel_margin(const std::vector<Point2>& v) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        const Point2 a = v[i], b = v[(i + 1) % n];
        m = std::min(m, cross(a, b) / dist(a, b));
    }
    return m;
}

// Deepest interior clearance of any vertex from the hull boundary; 0 when all
// vertices lie on the hull (convex case).
inline double deepest_reflex_clearance(const std::vector<Point2>& v) {
    const auto hull = convex_hull_points(v);
    double deepest = 0.0;
    for (const Point2& q : v) {
        double side = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0, n = hull.size(); i < n; ++i)
            side = std::min(side, line_side_distance(hull[i], hull[(i + 1) % n], q));
        deepest = std::max(deepest, side);
    }
    return deepest;
}

inline SimplePolygon random_star_polygon(Rng& rng, const StarGenOptions& opt = {}) {
    for (int attempt = 0; attempt < 4000; ++attempt) {
        const int n = uniform_int(rng, opt.min_vertices, opt.max_vertices);
        std::vector<double> ang(n);
        for (double& a : ang) a = uniform(rng, 0.0, 2.0 * kPi);
        std::sort(ang.begin(), ang.end());
        double min_gap = 2.0 * kPi + ang.front() - ang.back();
        for (int i = 1; i < n; ++i) min_gap = std::min(min_gap, ang[i] - ang[i - 1]);
        if (min_gap < 0.25 * (2.0 * kPi / n)) continue;

        std::vector<Point2> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = uniform(rng, opt.r_min, opt.r_max) * unit_vector(ang[i]);

        if (origin_kernel_margin(v) < opt.min_margin) continue;
        if (opt.reflex_depth > 0.0 && deepest_reflex_clearance(v) < opt.reflex_depth)
            continue;
        try {
            SimplePolygon poly = SimplePolygon::validate_simple(v);
            if (poly.size() != v.size()) continue;  // normalization dropped a vertex
            return poly;
        } catch (const Error&) {
            continue;
        }
    }
    throw std::runtime_error("random_star_polygon: no admissible sample");
}

inline SimplePolygon random_convex_polygon(Rng& rng, int cloud = 14, double scale = 3.0) {
    for (int attempt = 0; attempt < 4000; ++attempt) {
        std::vector<Point2> pts(static_cast<std::size_t>(cloud));
        for (Point2& q : pts) q = {uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
        const auto hull = convex_hull_points(pts);
        if (hull.size() < 4) continue;
        try {
            return SimplePolygon::validate_simple(hull);
        } catch (const Error&) {
            continue;
        }
    }
    throw std::runtime_error("random_convex_polygon: no admissible sample");
}

// Uniform direction, radius a fraction of the boundary radius: stays inside S.
inline Point2 random_interior_point(Rng& rng, const StarPolygon& S, double shrink = 0.8) {
    const double theta = uniform(rng, 0.0, 2.0 * kPi);
    const double s = uniform(rng, 0.0, shrink);
    return S.center() + (s * S.profile().radius(theta)) * unit_vector(theta);
}

struct MapGenOptions {
    int max_depth = 3;
    bool allow_constant = true;
    double min_gamma = 1.0;
    double max_gamma = 2.0;
};

inline SelfMapSpec random_map_spec(Rng& rng, const StarPolygon& S, const MapGenOptions& opt = {},
                                   int depth = 0) {
    const int lo = opt.allow_constant ? 0 : 1;
    const int hi = depth < opt.max_depth ? 4 : 3;
    switch (uniform_int(rng, lo, hi)) {
        case 0:
            return SelfMapSpec::constant(random_interior_point(rng, S));
        case 1: {
            const double s = uniform(rng, 0.2, 0.8);
            const double phi = uniform(rng, -kPi, kPi);
            const double shear = uniform(rng, 0.6, 1.0);
            const std::array<double, 4> m{s * std::cos(phi), -s * std::sin(phi) * shear,
                                          s * std::sin(phi), s * std::cos(phi) * shear};
            const Point2 target = random_interior_point(rng, S, 0.6);
            const Point2 b{target.x - m[0] * target.x - m[1] * target.y,
                           target.y - m[2] * target.x - m[3] * target.y};
            return SelfMapSpec::affine(m, b);
        }
        case 2:
            return SelfMapSpec::rotate_about(random_interior_point(rng, S, 0.5),
                                             uniform(rng, -kPi, kPi));
        case 3:
            return SelfMapSpec::radial_distort(uniform(rng, opt.min_gamma, opt.max_gamma));
        default: {
            std::vector<SelfMapSpec> children;
            const int k = uniform_int(rng, 2, 3);
            for (int i = 0; i < k; ++i)
                children.push_back(random_map_spec(rng, S, opt, depth + 1));
            return SelfMapSpec::compose(std::move(children));
        }
    }
}

struct AffineContraction {
    std::array<double, 4> m{};
    Point2 b{};
    Point2 fixed_point{};
};

// f(x) = fixed + M (x - fixed), |M| small enough that f(K) stays well inside K.
inline AffineContraction random_affine_contraction(Rng& rng, const SimplePolygon& K) {
    const Point2 c = K.centroid();
    const double r_in = star_center_margin(K, c);
    double r_out = 0.0;
    for (const Point2& v : K.vertices()) r_out = std::max(r_out, dist(v, c));

    const double off = uniform(rng, 0.0, 0.4 * r_in);
    const Point2 fixed = c + off * unit_vector(uniform(rng, 0.0, 2.0 * kPi));
    // |f(x) - c| <= off + s (r_out + off) <= 0.65 r_in with this cap.
    const double s_cap = 0.25 * r_in / (r_out + r_in);
    const double s = uniform(rng, 0.25 * s_cap, s_cap);
    const double phi = uniform(rng, -kPi, kPi);
    const double stretch = uniform(rng, 0.6, 1.0);

    AffineContraction a;
    a.m = {s * std::cos(phi), -s * std::sin(phi) * stretch, s * std::sin(phi),
           s * std::cos(phi) * stretch};
    a.fixed_point = fixed;
    a.b = {fixed.x - a.m[0] * fixed.x - a.m[1] * fixed.y,
           fixed.y - a.m[2] * fixed.x - a.m[3] * fixed.y};
    return a;
}

}  // namespace testsupport
