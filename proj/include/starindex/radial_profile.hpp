#pragma once

// Radial function of a star-shaped polygon about an interior kernel point p:
// r(theta) is the distance from p to the boundary along direction theta. The
// boundary is a radial graph exactly when p is interior to the kernel, so the
// profile is piecewise of the ray-line form d / <n, u(theta)> with breakpoints
// at vertex directions.

#include <cstddef>
#include <vector>

#include "starindex/geometry.hpp"
#include "starindex/star_kernel.hpp"

namespace starindex {

inline double wrap_angle_from(double theta, double base) {
    double t = std::fmod(theta - base, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    return base + t;
}

class RadialProfile {
public:
    struct EdgeRec {
        Point2 normal;  // unit outward normal of the supporting line, from p's side
        double offset;  // distance from p to the line; > 0 for interior centers
        double c;       // line equation <normal, x> = c in world coordinates
    };

    // Requires p interior to the kernel of poly (margin >= kTolGeom).
    RadialProfile(const SimplePolygon& poly, Point2 p) : center_(p) {
        if (star_center_margin(poly, p) < kTolGeom)
            throw NotStarError("CenterNotInteriorKernel",
                               "center is not interior to the polygon kernel");
        const auto& v = poly.vertices();
        const std::size_t n = v.size();

        std::vector<double> raw(n);
        for (std::size_t i = 0; i < n; ++i) {
            double a = angle_of(v[i] - p);
            if (a < 0.0) a += 2.0 * kPi;  // into [0, 2pi)
            raw[i] = a;
        }
        // CCW boundary seen from an interior kernel point has strictly
        // increasing vertex angles with exactly one wrap.
        std::size_t wraps = 0, start = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (raw[(i + 1) % n] < raw[i]) {
                ++wraps;
                start = (i + 1) % n;
            }
        }
        if (wraps != 1)
            throw NotStarError("CenterNotInteriorKernel",
                               "boundary is not a radial graph about the center");

        breakpoints_.resize(n);
        vertices_.resize(n);
        edges_.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t i = (start + k) % n;
            breakpoints_[k] = raw[i];
            vertices_[k] = v[i];
        }
        for (std::size_t k = 0; k < n; ++k) {
            const Point2& a = vertices_[k];
            const Point2& b = vertices_[(k + 1) % n];
            Point2 nrm = perp(a - b);          // right of a->b: outward for a CCW boundary
            nrm = (1.0 / norm(nrm)) * nrm;
            EdgeRec rec;
            rec.normal = nrm;
            rec.c = dot(nrm, a);
            rec.offset = rec.c - dot(nrm, p);
            if (rec.offset < kTolGeom)
                throw NotStarError("CenterNotInteriorKernel",
                                   "center sits on an edge supporting line");
            edges_[k] = rec;
        }
    }

    Point2 center() const { return center_; }
    std::size_t size() const { return breakpoints_.size(); }

    // Vertex directions, sorted ascending in [0, 2pi).
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<Point2>& boundary_vertices() const { return vertices_; }
    const EdgeRec& edge(std::size_t k) const { return edges_[k]; }

    // Index k of the interval [breakpoints_[k], breakpoints_[k+1]) holding theta.
    std::size_t interval_of(double theta) const {
        const double t = wrap_angle_from(theta, breakpoints_.front());
        std::size_t lo = 0, hi = breakpoints_.size();
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            if (breakpoints_[mid] <= t) lo = mid; else hi = mid;
        }
        return lo;
    }

    double radius_on_edge(std::size_t k, double theta) const {
        const EdgeRec& e = edges_[k];
        return e.offset / dot(e.normal, unit_vector(theta));
    }

    double radius(double theta) const { return radius_on_edge(interval_of(theta), theta); }

    Point2 point_at(double theta) const {
        return center_ + radius(theta) * unit_vector(theta);
    }

    // Minimum of r over all directions: per edge the radius dips to the offset
    // only when the outward normal direction falls inside the edge's angular
    // span; otherwise the interval minimum sits at a vertex.
    double min_radius() const {
        double r = std::numeric_limits<double>::infinity();
        const std::size_t n = edges_.size();
        for (std::size_t k = 0; k < n; ++k) {
            const double b0 = breakpoints_[k];
            const double b1 = k + 1 < n ? breakpoints_[k + 1] : breakpoints_[0] + 2.0 * kPi;
            if (wrap_angle_from(angle_of(edges_[k].normal), b0) <= b1)
                r = std::min(r, edges_[k].offset);
            r = std::min(r, dist(vertices_[k], center_));
        }
        return r;
    }

    double max_radius() const {
        double r = 0.0;
        for (const Point2& v : vertices_) r = std::max(r, dist(v, center_));
        return r;
    }

private:
    Point2 center_;
    std::vector<double> breakpoints_;
    std::vector<Point2> vertices_;  // vertex k sits at angle breakpoints_[k]
    std::vector<EdgeRec> edges_;    // edge k spans [breakpoints_[k], breakpoints_[k+1])
};

// A simple polygon with a designated star center and its cached radial profile.
class StarPolygon {
public:
    StarPolygon(SimplePolygon poly, Point2 center)
        : poly_(std::move(poly)), center_(center), profile_(poly_, center) {}

    const SimplePolygon& polygon() const { return poly_; }
    Point2 center() const { return center_; }
    const RadialProfile& profile() const { return profile_; }

private:
    SimplePolygon poly_;
    Point2 center_;
    RadialProfile profile_;
};

}  // namespace starindex
