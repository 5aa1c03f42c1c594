#pragma once

// Numerical realization of the fixed-point / eigenvector dichotomy for a
// continuous self-map f of a star polygon S with center p and convexity index
// alpha_p > 0. For each lambda in (0,1] the auxiliary map
//   g(z) = lambda * alpha_p * (f(p + z) - p)
// is a self-map of the convex domain D_lambda = lambda * alpha_p * (C - p)
// (z-coordinates about p, C the convex hull of S); a fixed point z_lambda
// yields x_lambda = p + z_lambda with f(x_lambda) - p = (x_lambda - p) /
// (lambda * alpha_p).

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "starindex/brouwer.hpp"
#include "starindex/gauge_index.hpp"
#include "starindex/selfmap.hpp"

namespace starindex {

struct EigenSample {
    double lambda = 0.0;
    Point2 x{};          // solution in original coordinates
    double residual = 0.0;  // |f(x) - p - (x - p)/(lambda*alpha_p)|
    bool branch_jump = false;
};

struct EigenCurve {
    double alpha_p = 0.0;
    Point2 p{};
    std::vector<EigenSample> samples;  // lambda descending
    bool injectivity_certified = false;
};

enum class DichotomyBranch { FixedAtP, EigenFamily, Both };

struct DichotomyVerdict {
    DichotomyBranch branch = DichotomyBranch::FixedAtP;
    double fp_residual_at_p = 0.0;
    EigenCurve curve;
};

struct EigenOptions {
    double tol_fp = 1e-8;
    long eval_budget = 1'000'000;
};

inline std::vector<double> default_lambda_grid(int n = 20) {
    if (n < 1) throw InputError("InvalidLambda", "lambda grid needs at least one point");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = n; k >= 1; --k) out.push_back(static_cast<double>(k) / n);
    return out;
}

namespace detail {

// Samples are residual-certified by construction; the curve is nontrivial when
// it stays away from p and its points are pairwise distinct.
inline bool curve_nontrivial(const EigenCurve& c, double tol) {
    for (const auto& s : c.samples)
        if (dist(s.x, c.p) <= tol) return false;
    for (std::size_t i = 0; i < c.samples.size(); ++i)
        for (std::size_t j = i + 1; j < c.samples.size(); ++j)
            if (dist(c.samples[i].x, c.samples[j].x) <= 1e-12) return false;
    return true;
}

inline EigenCurve trace_curve(const StarPolygon& S, const SimplePolygon& hull,
                              const SelfMapSpec& f, std::vector<double> lambdas,
                              double tol_eig, double alpha, const EigenOptions& opts) {
    if (lambdas.empty())
        throw InputError("InvalidLambda", "lambda grid needs at least one point");
    for (double l : lambdas)
        if (!(l > 0.0) || !(l <= 1.0) || !std::isfinite(l))
            throw InputError("InvalidLambda", "lambda values must lie in (0, 1]");
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

    const Point2 p = S.center();
    EigenCurve curve;
    curve.alpha_p = alpha;
    curve.p = p;

    bool have_prev = false;
    Point2 z_prev{};
    double lambda_prev = 1.0;

    for (double lambda : lambdas) {
        const double scale = lambda * alpha;
        std::vector<Point2> dv;
        dv.reserve(hull.vertices().size());
        for (Point2 c : hull.vertices()) dv.push_back(scale * (c - p));
        const SimplePolygon D = SimplePolygon::validate_simple(dv);

        auto g = [&](Point2 z) { return scale * (eval(f, S, p + z) - p); };

        BrouwerOptions bopts;
        bopts.eval_budget = opts.eval_budget;
        if (have_prev) {
            bopts.seeds.push_back((lambda / lambda_prev) * z_prev);
            bopts.seeds.push_back(z_prev);
        }
        // The eigen residual divides the fixed point residual by scale, so
        // tighten the solver target accordingly.
        const double tol_fp_lambda = std::min(opts.tol_fp, 0.5 * tol_eig * scale);

        const FixedPointResult fp = brouwer_solve(g, D, tol_fp_lambda, bopts);
        if (!fp.certified)
            throw BudgetError("SolverBudget",
                              "fixed point solver exhausted its budget at lambda=" +
                                  std::to_string(lambda));

        EigenSample s;
        s.lambda = lambda;
        s.x = p + fp.point;
        const Point2 lhs = eval(f, S, s.x) - p;
        const Point2 rhs = (1.0 / scale) * fp.point;
        s.residual = dist(lhs, rhs);
        curve.samples.push_back(s);

        z_prev = fp.point;
        lambda_prev = lambda;
        have_prev = true;
    }

    if (curve.samples.size() >= 3) {
        std::vector<double> steps;
        for (std::size_t i = 1; i < curve.samples.size(); ++i)
            steps.push_back(dist(curve.samples[i].x, curve.samples[i - 1].x));
        std::vector<double> sorted = steps;
        std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
        const double median = sorted[sorted.size() / 2];
        if (median > 0.0)
            for (std::size_t i = 1; i < curve.samples.size(); ++i)
                if (steps[i - 1] > 10.0 * median) curve.samples[i].branch_jump = true;
    }

    const double fp_disp = dist(eval(f, S, p), p);
    curve.injectivity_certified = fp_disp > tol_eig && curve_nontrivial(curve, tol_eig);
    return curve;
}

}  // namespace detail

inline EigenCurve eigencurve(const StarPolygon& S, const SelfMapSpec& f,
                             std::vector<double> lambdas, double tol_eig = 1e-6,
                             const EigenOptions& opts = {}) {
    if (!(tol_eig > 0.0) || !std::isfinite(tol_eig))
        throw InputError("InvalidTolerance", "tol_eig must be positive");
    const IndexReport rep = convexity_index_at(S.polygon(), S.center());
    if (rep.alpha_p <= tol_eig)
        throw DegenerateError("ZeroIndex",
                              "convexity index too small to scale the eigen relation");
    const SimplePolygon hull = convex_hull(S.polygon());
    return detail::trace_curve(S, hull, f, std::move(lambdas), tol_eig, rep.alpha_p, opts);
}

inline DichotomyVerdict check_dichotomy(const StarPolygon& S, const SelfMapSpec& f,
                                        std::vector<double> lambdas, double tol = 1e-6,
                                        const EigenOptions& opts = {}) {
    DichotomyVerdict v;
    v.fp_residual_at_p = dist(eval(f, S, S.center()), S.center());
    v.curve = eigencurve(S, f, std::move(lambdas), tol, opts);
    const bool nontrivial = detail::curve_nontrivial(v.curve, tol);
    if (v.fp_residual_at_p < tol)
        v.branch = nontrivial ? DichotomyBranch::Both : DichotomyBranch::FixedAtP;
    else
        v.branch = DichotomyBranch::EigenFamily;
    return v;
}

inline DichotomyVerdict check_dichotomy(const StarPolygon& S, const SelfMapSpec& f,
                                        int n_lambda = 20, double tol = 1e-6,
                                        const EigenOptions& opts = {}) {
    return check_dichotomy(S, f, default_lambda_grid(n_lambda), tol, opts);
}

// Convex specialization: S = K convex, alpha_p = 1 for every admissible center.
// The center is chosen as the grid point maximizing the displacement |f(q)-q|
// so the traced family is as far from degenerate as the map allows.
inline EigenCurve eigencurve_convex(const SimplePolygon& K, const SelfMapSpec& f,
                                    std::vector<double> lambdas, double tol_eig = 1e-6,
                                    const EigenOptions& opts = {}) {
    if (!(tol_eig > 0.0) || !std::isfinite(tol_eig))
        throw InputError("InvalidTolerance", "tol_eig must be positive");
    if (!K.is_convex())
        throw GeometryError("NonConvexDomain", "domain of the convex corollary");

    Point2 lo{}, hi{};
    K.bounding_box(lo, hi);
    const int n = 33;
    double best_disp = -1.0;
    std::optional<StarPolygon> best_star;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            const Point2 q{lo.x + (hi.x - lo.x) * i / n, lo.y + (hi.y - lo.y) * j / n};
            if (star_center_margin(K, q) < kTolGeom) continue;
            StarPolygon star(K, q);
            const double disp = dist(eval(f, star, q), q);
            if (disp > best_disp) {
                best_disp = disp;
                best_star.emplace(std::move(star));
            }
        }
    }
    if (!best_star || best_disp <= tol_eig)
        throw DegenerateError("NumericallyIdentity",
                              "map displaces no admissible center beyond tolerance");
    return detail::trace_curve(*best_star, K, f, std::move(lambdas), tol_eig, 1.0, opts);
}

}  // namespace starindex
