#pragma once

// Seminorm-family pseudometrics on polygonal regions and the densification
// operator: S' = S union (t*(hull - p) + p), a nearby star-shaped set with a
// certified positive convexity index.

#include <string>
#include <utility>
#include <vector>

#include "starindex/geometry.hpp"
#include "starindex/radial_profile.hpp"
#include "starindex/star_kernel.hpp"

namespace starindex {

struct Seminorm {
    enum class Kind { Euclidean, Directional };
    Kind kind = Kind::Euclidean;
    Point2 u{1.0, 0.0};  // unit direction, Directional only

    static Seminorm euclidean() { return {}; }
    static Seminorm directional(Point2 dir) {
        const double n = norm(dir);
        if (!(n > 0.0) || !finite(dir))
            throw InputError("InvalidSeminorm", "directional seminorm needs a nonzero direction");
        return {Kind::Directional, (1.0 / n) * dir};
    }

    double value(Point2 v) const {
        return kind == Kind::Euclidean ? norm(v) : std::abs(dot(v, u));
    }
};

struct SeminormFamily {
    std::vector<Seminorm> entries;

    static SeminormFamily of(std::vector<Seminorm> e) {
        if (e.empty()) throw InputError("InvalidSeminorm", "seminorm family is empty");
        return {std::move(e)};
    }
};

namespace detail {

// Distance from x to the closed polygonal region B (0 inside or on boundary).
inline double region_distance(const SimplePolygon& B, Point2 x) {
    if (B.contains(x) != Containment::Outside) return 0.0;
    const auto& v = B.vertices();
    const std::size_t n = v.size();
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        d = std::min(d, point_segment_distance(v[i], v[(i + 1) % n], x));
    }
    return d;
}

// One-sided sup of point-to-region distance over A. The supremum of the
// Euclidean distance field over a polygon is attained at a vertex of A or at
// a point on an edge of A where the closest feature of B switches; those
// switch points lie on feature bisectors, enumerated in closed form below.
inline double directed_hausdorff(const SimplePolygon& A, const SimplePolygon& B) {
    const auto& va = A.vertices();
    const auto& vb = B.vertices();
    const std::size_t na = va.size();
    const std::size_t nb = vb.size();

    double best = 0.0;
    for (const Point2& v : va) best = std::max(best, region_distance(B, v));

    struct Line {
        Point2 n;  // unit normal
        double c;  // <n, x> = c
    };
    std::vector<Line> lines(nb);
    for (std::size_t j = 0; j < nb; ++j) {
        Point2 nrm = perp(vb[j] - vb[(j + 1) % nb]);
        nrm = (1.0 / norm(nrm)) * nrm;
        lines[j] = {nrm, dot(nrm, vb[j])};
    }

    auto probe = [&](Point2 u, Point2 w, double t, double pair_dist) {
        // pair_dist bounds the candidate's value from above: skip losers early.
        if (t <= 0.0 || t >= 1.0 || !(pair_dist > best)) return;
        best = std::max(best, region_distance(B, u + t * w));
    };

    for (std::size_t i = 0; i < na; ++i) {
        const Point2 u = va[i];
        const Point2 w = va[(i + 1) % na] - u;

        // vertex-vertex bisectors
        for (std::size_t j = 0; j < nb; ++j) {
            for (std::size_t k = j + 1; k < nb; ++k) {
                const Point2 d = vb[k] - vb[j];
                const double a = 2.0 * dot(w, d);
                if (a == 0.0) continue;
                const double rhs = dot(vb[k], vb[k]) - dot(vb[j], vb[j]);
                const double t = (rhs - 2.0 * dot(u, d)) / a;
                probe(u, w, t, dist(u + t * w, vb[j]));
            }
        }
        // vertex-line bisectors (parabola / segment-line crossings)
        for (std::size_t j = 0; j < nb; ++j) {
            for (std::size_t k = 0; k < nb; ++k) {
                const Point2 P = vb[j];
                const Line& L = lines[k];
                const double nw = dot(L.n, w);
                const double s0 = dot(L.n, u) - L.c;
                const Point2 up = u - P;
                const double qa = dot(w, w) - nw * nw;
                const double qb = 2.0 * (dot(up, w) - s0 * nw);
                const double qc = dot(up, up) - s0 * s0;
                if (std::abs(qa) < 1e-30) {
                    if (qb != 0.0) {
                        const double t = -qc / qb;
                        probe(u, w, t, dist(u + t * w, P));
                    }
                    continue;
                }
                const double disc = qb * qb - 4.0 * qa * qc;
                if (disc < 0.0) continue;
                const double sq = std::sqrt(disc);
                for (const double t : {(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)}) {
                    probe(u, w, t, dist(u + t * w, P));
                }
            }
        }
        // line-line bisectors
        for (std::size_t j = 0; j < nb; ++j) {
            for (std::size_t k = j + 1; k < nb; ++k) {
                const Line& L1 = lines[j];
                const Line& L2 = lines[k];
                for (const double sign : {1.0, -1.0}) {
                    const double a = dot(L1.n, w) - sign * dot(L2.n, w);
                    if (a == 0.0) continue;
                    const double b = (dot(L1.n, u) - L1.c) - sign * (dot(L2.n, u) - L2.c);
                    const double t = -b / a;
                    const Point2 x = u + t * w;
                    probe(u, w, t, std::abs(dot(L1.n, x) - L1.c));
                }
            }
        }
    }
    return best;
}

// Hausdorff distance between the projections of A and B onto direction u;
// the projection of a polygonal region is the interval spanned by vertices.
inline double directional_distance(const SimplePolygon& A, const SimplePolygon& B, Point2 u) {
    auto span = [&](const SimplePolygon& P, double& lo, double& hi) {
        lo = std::numeric_limits<double>::infinity();
        hi = -lo;
        for (const Point2& v : P.vertices()) {
            const double s = dot(v, u);
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
    };
    double loa, hia, lob, hib;
    span(A, loa, hia);
    span(B, lob, hib);
    return std::max(std::abs(loa - lob), std::abs(hia - hib));
}

}  // namespace detail

// Two-sided sup-inf pseudometric between polygonal regions measured with the
// given seminorm. Exact for the boundary-attained suprema this artifact deals
// in (star-shaped operands); zero for distinct sets is possible by design for
// directional entries.
inline double pseudo_distance(const SimplePolygon& A, const SimplePolygon& B,
                              const Seminorm& sn) {
    if (sn.kind == Seminorm::Kind::Directional)
        return detail::directional_distance(A, B, sn.u);
    return std::max(detail::directed_hausdorff(A, B), detail::directed_hausdorff(B, A));
}

// Union of two polygons that are both star-shaped about the same interior
// center: the region with radial function max(r_A, r_B). Boundary pieces are
// stitched at profile crossings, solved in closed form per angular interval.
inline SimplePolygon star_union(const SimplePolygon& A, const SimplePolygon& B, Point2 p) {
    const RadialProfile pa(A, p);
    const RadialProfile pb(B, p);

    struct Break {
        double angle;
        int ia;  // vertex index in pa, or -1
        int ib;
    };
    std::vector<Break> merged;
    for (std::size_t i = 0; i < pa.size(); ++i) merged.push_back({pa.breakpoints()[i], (int)i, -1});
    for (std::size_t i = 0; i < pb.size(); ++i) merged.push_back({pb.breakpoints()[i], -1, (int)i});
    std::sort(merged.begin(), merged.end(),
              [](const Break& x, const Break& y) { return x.angle < y.angle; });
    std::vector<Break> uniq;
    for (const Break& b : merged) {
        if (!uniq.empty() && b.angle - uniq.back().angle < 1e-14) {
            if (b.ia >= 0) uniq.back().ia = b.ia;
            if (b.ib >= 0) uniq.back().ib = b.ib;
        } else {
            uniq.push_back(b);
        }
    }

    std::vector<Point2> out;
    const std::size_t m = uniq.size();
    for (std::size_t k = 0; k < m; ++k) {
        const Break& cur = uniq[k];
        const double t0 = cur.angle;
        const double t1 = (k + 1 < m) ? uniq[k + 1].angle : uniq.front().angle + 2.0 * kPi;
        const std::size_t ea = pa.interval_of(0.5 * (t0 + t1));
        const std::size_t eb = pb.interval_of(0.5 * (t0 + t1));

        auto emit = [&](double th, bool a_active, const Break* src) {
            Point2 q;
            if (src && a_active && src->ia >= 0) q = pa.boundary_vertices()[src->ia];
            else if (src && !a_active && src->ib >= 0) q = pb.boundary_vertices()[src->ib];
            else {
                const double r = a_active ? pa.radius_on_edge(ea, th) : pb.radius_on_edge(eb, th);
                q = p + r * unit_vector(th);
            }
            if (out.empty() || dist(out.back(), q) > kTolGeom) out.push_back(q);
        };

        // radial crossing of the two supporting lines inside (t0, t1), if any
        const RadialProfile::EdgeRec& ra = pa.edge(ea);
        const RadialProfile::EdgeRec& rb = pb.edge(eb);
        const Point2 wv = ra.offset * rb.normal - rb.offset * ra.normal;
        double tx = -1.0;
        if (norm(wv) > 1e-15 * (ra.offset + rb.offset)) {
            for (const double cand : {angle_of(wv) + 0.5 * kPi, angle_of(wv) - 0.5 * kPi}) {
                const double c = wrap_angle_from(cand, t0);
                if (c > t0 + 1e-13 && c < t1 - 1e-13) tx = c;
            }
        }

        if (tx > 0.0) {
            const bool first_a = pa.radius_on_edge(ea, 0.5 * (t0 + tx)) >=
                                 pb.radius_on_edge(eb, 0.5 * (t0 + tx));
            emit(t0, first_a, &cur);
            emit(tx, first_a, nullptr);
            emit(tx, !first_a, nullptr);
        } else {
            const double mid = 0.5 * (t0 + t1);
            emit(t0, pa.radius_on_edge(ea, mid) >= pb.radius_on_edge(eb, mid), &cur);
        }
    }
    return SimplePolygon::validate_simple(out);
}

struct DensifyResult {
    SimplePolygon s_prime;
    double t_used = 0.0;
    std::vector<double> per_seminorm_distance;
    double alpha_lower = 0.0;  // t / (1 + t), the construction's certificate
};

// Shrink the hull far enough that its seminorm diameters fall below half of
// every requested epsilon, then union it in about p.
inline DensifyResult densify(const SimplePolygon& S, Point2 p,
                             const std::vector<std::pair<Seminorm, double>>& eps) {
    if (eps.empty()) throw InputError("EmptyEpsList", "at least one (seminorm, eps) pair required");
    for (const auto& [sn, e] : eps) {
        (void)sn;
        if (!(e > 0.0)) throw InputError("InvalidEpsilon", "epsilon values must be positive");
    }
    if (star_center_margin(S, p) < kTolGeom)
        throw NotStarError("NotStarCenter", "p is not an interior star center of S");

    const SimplePolygon C = convex_hull(S);
    double t = 1.0;
    for (const auto& [sn, e] : eps) {
        double m = 0.0;
        for (const Point2& c : C.vertices()) m = std::max(m, sn.value(c - p));
        if (m > 0.0) t = std::min(t, e / (2.0 * m));
    }

    std::vector<Point2> shrunk;
    shrunk.reserve(C.size());
    for (const Point2& c : C.vertices()) shrunk.push_back(p + t * (c - p));
    const SimplePolygon Ht = SimplePolygon::validate_simple(shrunk);

    DensifyResult res{star_union(S, Ht, p), t, {}, t / (1.0 + t)};
    res.per_seminorm_distance.reserve(eps.size());
    for (const auto& [sn, e] : eps) {
        (void)e;
        res.per_seminorm_distance.push_back(pseudo_distance(S, res.s_prime, sn));
    }
    return res;
}

}  // namespace starindex
