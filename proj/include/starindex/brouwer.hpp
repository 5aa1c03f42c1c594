#pragma once

// Fixed points of a continuous self-map of a convex polygon, located by
// branch-and-bound over a fan triangulation with a damped-iteration polish.
// The Lipschitz estimate driving the cell bounds is a finite-difference probe,
// so the bound is heuristic; it only orders the queue and prunes against the
// incumbent, never against the target tolerance. A result is certified exactly
// when the recomputed residual meets tol_fp.

#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "starindex/geometry.hpp"

namespace starindex {

using MapFn = std::function<Point2(Point2)>;

struct FixedPointResult {
    Point2 point{};
    double residual = std::numeric_limits<double>::infinity();
    bool certified = false;
    long cells_explored = 0;
};

struct BrouwerOptions {
    long eval_budget = 1'000'000;
    std::vector<Point2> seeds;  // extra warm starts, clamped into the domain
};

namespace detail {

struct BudgetReached {};

struct DomainEdge {
    Point2 normal;  // outward unit
    double c;       // normal . x <= c inside
};

// Largest s in [0,1] with origin + s*(q - origin) inside every half-plane.
inline Point2 clamp_into(const std::vector<DomainEdge>& edges, Point2 origin, Point2 q) {
    double s = 1.0;
    const Point2 d = q - origin;
    for (const auto& e : edges) {
        const double den = dot(e.normal, d);
        if (den > 0.0) {
            const double room = e.c - dot(e.normal, origin);
            if (room < den * s) s = std::max(0.0, room / den);
        }
    }
    if (s >= 1.0) return q;
    return origin + (s * (1.0 - 1e-12)) * d;
}

struct Cell {
    Point2 a, b, c;      // vertices
    double fa, fb, fc;   // residual |g(v) - v| at each vertex
    Point2 cen;
    double fcen;
    double lb;
    double diam;
};

struct CellOrder {
    bool operator()(const Cell& l, const Cell& r) const { return l.lb > r.lb; }
};

}  // namespace detail

inline FixedPointResult brouwer_solve(const MapFn& g, const SimplePolygon& D, double tol_fp,
                                      const BrouwerOptions& opts = {}) {
    if (!(tol_fp > 0.0) || !std::isfinite(tol_fp))
        throw InputError("InvalidTolerance", "tol_fp must be positive");
    if (!D.is_convex())
        throw GeometryError("NonConvexDomain", "fixed point domain must be convex");

    const Point2 cen0 = D.centroid();
    std::vector<detail::DomainEdge> edges;
    {
        const auto& v = D.vertices();
        edges.reserve(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point2 a = v[i], b = v[(i + 1) % v.size()];
            Point2 n = perp(a - b);
            n = (1.0 / norm(n)) * n;
            edges.push_back({n, dot(n, a)});
        }
    }

    FixedPointResult best;
    long evals = 0;

    auto probe = [&](Point2 z) -> Point2 {
        if (evals >= opts.eval_budget) throw detail::BudgetReached{};
        ++evals;
        const Point2 y = g(z);
        if (!finite(y) || D.contains(y) == Containment::Outside)
            throw GeometryError("RangeEscape", "map left the fixed point domain");
        const double res = dist(y, z);
        if (res < best.residual) {
            best.point = z;
            best.residual = res;
        }
        return y;
    };

    // Damped fixed point iteration with the step clamped into D.
    auto polish = [&](Point2 z, int max_steps) {
        Point2 y = probe(z);
        for (int it = 0; it < max_steps && best.residual >= tol_fp; ++it) {
            const double res = dist(y, z);
            bool moved = false;
            for (double beta : {1.0, 0.7, 0.3}) {
                const Point2 cand =
                    detail::clamp_into(edges, z, z + beta * (y - z));
                const Point2 ycand = probe(cand);
                if (dist(ycand, cand) < res) {
                    z = cand;
                    y = ycand;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
    };

    try {
        polish(cen0, 60);
        for (Point2 s : opts.seeds) {
            if (best.residual < tol_fp) break;
            polish(detail::clamp_into(edges, cen0, s), 60);
        }

        if (best.residual >= tol_fp) {
            auto mk_cell = [&](Point2 a, Point2 b, Point2 c, double fa, double fb,
                               double fc) {
                detail::Cell cell{a, b, c, fa, fb, fc, {}, 0.0, 0.0, 0.0};
                cell.cen = (1.0 / 3.0) * (a + b + c);
                cell.fcen = dist(probe(cell.cen), cell.cen);
                cell.diam = std::max({dist(a, b), dist(b, c), dist(c, a)});
                double rad = std::max({dist(cell.cen, a), dist(cell.cen, b), dist(cell.cen, c)});
                // Finite-difference Lipschitz probe of the residual field over
                // the cell's four known values, padded 4x.
                double lip = 0.0;
                auto pair_lip = [&](Point2 p1, double f1, Point2 p2, double f2) {
                    const double d = dist(p1, p2);
                    if (d > 1e-300) lip = std::max(lip, std::fabs(f1 - f2) / d);
                };
                pair_lip(a, fa, b, fb);
                pair_lip(b, fb, c, fc);
                pair_lip(c, fc, a, fa);
                pair_lip(cell.cen, cell.fcen, a, fa);
                pair_lip(cell.cen, cell.fcen, b, fb);
                pair_lip(cell.cen, cell.fcen, c, fc);
                cell.lb = std::max(0.0, cell.fcen - (1.0 + 4.0 * lip) * rad);
                return cell;
            };

            std::priority_queue<detail::Cell, std::vector<detail::Cell>, detail::CellOrder> pq;
            {
                const auto& v = D.vertices();
                const double fcen0 = dist(probe(cen0), cen0);
                std::vector<double> fv(v.size());
                for (std::size_t i = 0; i < v.size(); ++i) fv[i] = dist(probe(v[i]), v[i]);
                for (std::size_t i = 0; i < v.size() && best.residual >= tol_fp; ++i) {
                    const std::size_t j = (i + 1) % v.size();
                    pq.push(mk_cell(cen0, v[i], v[j], fcen0, fv[i], fv[j]));
                }
            }

            while (best.residual >= tol_fp && !pq.empty()) {
                const detail::Cell cell = pq.top();
                pq.pop();
                ++best.cells_explored;
                if (cell.lb >= best.residual) continue;
                if (cell.fcen < 3.0 * best.residual) polish(cell.cen, 12);
                if (best.residual < tol_fp) break;
                if (cell.diam < 1e-13 * (1.0 + norm(cell.cen))) continue;

                const Point2 mab = 0.5 * (cell.a + cell.b);
                const Point2 mbc = 0.5 * (cell.b + cell.c);
                const Point2 mca = 0.5 * (cell.c + cell.a);
                const double fab = dist(probe(mab), mab);
                if (best.residual < tol_fp) break;
                const double fbc = dist(probe(mbc), mbc);
                if (best.residual < tol_fp) break;
                const double fca = dist(probe(mca), mca);
                if (best.residual < tol_fp) break;

                pq.push(mk_cell(cell.a, mab, mca, cell.fa, fab, fca));
                if (best.residual < tol_fp) break;
                pq.push(mk_cell(mab, cell.b, mbc, fab, cell.fb, fbc));
                if (best.residual < tol_fp) break;
                pq.push(mk_cell(mca, mbc, cell.c, fca, fbc, cell.fc));
                if (best.residual < tol_fp) break;
                pq.push(mk_cell(mab, mbc, mca, fab, fbc, fca));
            }
        }
    } catch (const detail::BudgetReached&) {
        // fall through with the incumbent
    }

    // Report the residual recomputed at the returned point.
    const Point2 y = g(best.point);
    if (!finite(y) || D.contains(y) == Containment::Outside)
        throw GeometryError("RangeEscape", "map left the fixed point domain");
    best.residual = dist(y, best.point);
    best.certified = best.residual < tol_fp;
    return best;
}

}  // namespace starindex
