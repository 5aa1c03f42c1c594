#pragma once

// Minkowski gauges along rays and the convexity index: the largest shrink
// factor r such that r*(hull - p) fits inside S - p, equal to the infimum of
// the radial ratio r_S / r_hull over directions.

#include <vector>

#include "starindex/geometry.hpp"
#include "starindex/radial_profile.hpp"
#include "starindex/star_kernel.hpp"

namespace starindex {

enum class GaugeKind { Star, Hull };

// Evaluates the gauges of S and of its convex hull about the star center.
// gauge == 0 at the center, 1 on the respective boundary, homogeneous in
// between; finite everywhere since the center is interior.
class GaugeEvaluator {
public:
    explicit GaugeEvaluator(StarPolygon star)
        : star_(std::move(star)),
          hull_(convex_hull(star_.polygon())),
          hull_profile_(hull_, star_.center()) {}

    const StarPolygon& star() const { return star_; }
    const SimplePolygon& hull() const { return hull_; }
    const RadialProfile& star_profile() const { return star_.profile(); }
    const RadialProfile& hull_profile() const { return hull_profile_; }

    double gauge(Point2 x, GaugeKind which) const {
        const Point2 d = x - star_.center();
        const double t = norm(d);
        if (t == 0.0) return 0.0;
        const double theta = angle_of(d);
        const double r = (which == GaugeKind::Star) ? star_.profile().radius(theta)
                                                    : hull_profile_.radius(theta);
        return t / r;
    }

private:
    StarPolygon star_;
    SimplePolygon hull_;
    RadialProfile hull_profile_;
};

struct IndexReport {
    double alpha_p = 0.0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    double witness_angle = 0.0;  // direction achieving the minimum ratio
    Point2 p;
};

inline constexpr double kDefaultIndexTol = 1e-9;
inline constexpr double kDefaultGlobalTol = 1e-6;

namespace detail {

// Classify why p is unusable as an interior center and throw accordingly.
[[noreturn]] inline void throw_center_error(const SimplePolygon& S, Point2 p) {
    const KernelResult k = kernel(S);
    if (k.is_star_shaped && k.degenerate && is_star_center(S, p))
        throw NotStarError("DegenerateKernel", "kernel has no interior points");
    throw NotStarError("CenterNotInteriorKernel", "point is not an interior star center");
}

}  // namespace detail

// Exact piecewise route. On each angular interval between consecutive vertex
// directions both radial functions have the single-edge form d / cos(theta -
// phi), so the ratio's derivative keeps one sign there (it is proportional to
// sin(phi_hull - phi_S)); every interval minimum sits at an endpoint. Hull
// vertices are polygon vertices, so the merged breakpoint set is exactly the
// polygon's vertex directions and the infimum is a minimum over them.
inline IndexReport convexity_index_at(const SimplePolygon& S, Point2 p,
                                      double tol = kDefaultIndexTol) {
    if (tol <= 0.0) throw InputError("InvalidTolerance", "tolerance must be positive");
    if (star_center_margin(S, p) < kTolGeom) detail::throw_center_error(S, p);

    const GaugeEvaluator ev{StarPolygon(S, p)};
    const RadialProfile& ps = ev.star_profile();

    double best = std::numeric_limits<double>::infinity();
    double witness = 0.0;
    for (std::size_t k = 0; k < ps.size(); ++k) {
        const double theta = ps.breakpoints()[k];
        const double rs = dist(ps.boundary_vertices()[k], p);
        const double rc = ev.hull_profile().radius(theta);
        const double ratio = rs / rc;
        if (ratio < best) {
            best = ratio;
            witness = theta;
        }
    }

    IndexReport rep;
    rep.alpha_p = std::min(1.0, std::max(0.0, best));
    const double slack = std::min(0.5 * tol,
                                  64.0 * std::numeric_limits<double>::epsilon() * (1.0 + best));
    rep.lower_bound = std::max(0.0, rep.alpha_p - slack);
    rep.upper_bound = std::min(1.0, rep.alpha_p + slack);
    rep.witness_angle = witness;
    rep.p = p;
    return rep;
}

// Grid scan over the kernel followed by compass pattern search. The result is
// a certified lower bound on the global index: nothing is claimed about
// attainment of the supremum.
inline IndexReport convexity_index_global(const SimplePolygon& S,
                                          double tol = kDefaultGlobalTol) {
    if (tol <= 0.0) throw InputError("InvalidTolerance", "tolerance must be positive");
    const KernelResult kr = kernel(S);
    if (!kr.is_star_shaped) throw NotStarError("NotStarShaped", "polygon has an empty kernel");
    const auto kp = kr.kernel_polygon();
    if (!kp) throw NotStarError("DegenerateKernel", "kernel has no interior points");

    const SimplePolygon& K = *kp;
    Point2 lo, hi;
    K.bounding_box(lo, hi);
    const double diam = S.diameter_hint();

    std::vector<Point2> candidates;
    candidates.push_back(K.centroid());
    for (std::size_t g = 15; g <= 240; g *= 2) {
        candidates.clear();
        candidates.push_back(K.centroid());
        for (std::size_t i = 0; i < g; ++i) {
            for (std::size_t j = 0; j < g; ++j) {
                const Point2 q = {lo.x + (hi.x - lo.x) * (i + 0.5) / g,
                                  lo.y + (hi.y - lo.y) * (j + 0.5) / g};
                if (star_center_margin(S, q) >= kTolGeom) candidates.push_back(q);
            }
        }
        if (candidates.size() >= 225) break;
    }

    IndexReport best;
    best.alpha_p = -1.0;
    for (const Point2& q : candidates) {
        const IndexReport r = convexity_index_at(S, q, kDefaultIndexTol);
        if (r.alpha_p > best.alpha_p) best = r;
    }

    // Compass refinement, step halving down to the requested tolerance.
    const Point2 dirs[8] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1},
                            {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    double step = std::max((hi.x - lo.x), (hi.y - lo.y)) / 15.0;
    const double step_min = tol * std::max(1.0, diam);
    while (step >= step_min && step > 0.0) {
        bool improved = false;
        for (const Point2& d : dirs) {
            const Point2 q = best.p + step * d;
            if (star_center_margin(S, q) < kTolGeom) continue;
            const IndexReport r = convexity_index_at(S, q, kDefaultIndexTol);
            if (r.alpha_p > best.alpha_p) {
                best = r;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

}  // namespace starindex
