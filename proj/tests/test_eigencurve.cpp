#include <catch2/catch_amalgamated.hpp>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace starindex;
using namespace testsupport;

namespace {

SelfMapSpec cross_affine_spec(double angle, double scale, Point2 target) {
    const std::array<double, 4> m{scale * std::cos(angle), -scale * std::sin(angle),
                                  scale * std::sin(angle), scale * std::cos(angle)};
    const Point2 b{target.x - m[0] * target.x - m[1] * target.y,
                   target.y - m[2] * target.x - m[3] * target.y};
    return SelfMapSpec::affine(m, b);
}

}  // namespace

TEST_CASE("constant map traces the closed-form ray") {
    const StarPolygon S(cross_polygon(), {0, 0});
    const Point2 q{0.8, 0.4};
    const double alpha = 0.5;
    const EigenCurve c = eigencurve(S, SelfMapSpec::constant(q), default_lambda_grid(20));

    CHECK(c.alpha_p == Catch::Approx(alpha).margin(1e-9));
    CHECK(c.p == Point2{0, 0});
    REQUIRE(c.samples.size() == 20);
    CHECK(c.injectivity_certified);
    for (const EigenSample& s : c.samples) {
        const Point2 want = (s.lambda * alpha) * q;
        CAPTURE(s.lambda);
        CHECK(dist(s.x, want) <= 1e-7);
        CHECK(s.residual <= 1e-9);
        CHECK_FALSE(s.branch_jump);
    }
    // Grid comes out descending and the samples follow it.
    for (std::size_t i = 1; i < c.samples.size(); ++i)
        CHECK(c.samples[i].lambda < c.samples[i - 1].lambda);
}

TEST_CASE("affine map matches the linear-solve oracle along the curve") {
    const StarPolygon S(cross_polygon(), {0, 0});
    const SelfMapSpec spec = cross_affine_spec(0.9, 0.2, {0.5, 0.3});
    const EigenCurve c = eigencurve(S, spec, default_lambda_grid(16));

    REQUIRE(c.samples.size() == 16);
    for (const EigenSample& s : c.samples) {
        const Point2 want = eigen_affine_oracle(spec.m, spec.offset, {0, 0},
                                                s.lambda * c.alpha_p);
        CAPTURE(s.lambda);
        CHECK(dist(s.x, want) <= 1e-6);
        CHECK(s.residual <= 1e-6);
        CHECK_FALSE(s.branch_jump);
    }
    CHECK(c.injectivity_certified);
}

TEST_CASE("dichotomy: maps fixing p report FixedAtP") {
    const StarPolygon S(cross_polygon(), {0, 0});
    for (const double angle : {0.3, kPi / 2, 2.0, -1.1}) {
        const DichotomyVerdict v =
            check_dichotomy(S, SelfMapSpec::rotate_about({0, 0}, angle), 12, 1e-6);
        CAPTURE(angle);
        CHECK(v.branch == DichotomyBranch::FixedAtP);
        CHECK(v.fp_residual_at_p <= 1e-10);
        CHECK_FALSE(v.curve.injectivity_certified);
    }
}

TEST_CASE("dichotomy: maps displacing p report EigenFamily") {
    const StarPolygon S(cross_polygon(), {0, 0});
    const SelfMapSpec specs[] = {
        SelfMapSpec::constant({0.8, 0.4}),
        cross_affine_spec(-0.6, 0.25, {-0.4, 0.6}),
        SelfMapSpec::rotate_about({0.5, 0.0}, 1.2),
    };
    for (const SelfMapSpec& spec : specs) {
        const DichotomyVerdict v = check_dichotomy(S, spec, 12, 1e-6);
        CHECK(v.branch == DichotomyBranch::EigenFamily);
        CHECK(v.fp_residual_at_p > 1e-3);
        CHECK(v.curve.injectivity_certified);
        for (const EigenSample& s : v.curve.samples) CHECK(s.residual <= 1e-6);
        // Samples are pairwise distinct points: an injective family.
        for (std::size_t i = 0; i < v.curve.samples.size(); ++i)
            for (std::size_t j = i + 1; j < v.curve.samples.size(); ++j)
                CHECK(dist(v.curve.samples[i].x, v.curve.samples[j].x) > 1e-12);
    }
}

TEST_CASE("lambda grid validation") {
    const StarPolygon S(cross_polygon(), {0, 0});
    const SelfMapSpec spec = SelfMapSpec::constant({0.5, 0.5});
    CHECK_THROWS_AS(eigencurve(S, spec, {}), InputError);
    CHECK_THROWS_AS(eigencurve(S, spec, {0.5, 0.0}), InputError);
    CHECK_THROWS_AS(eigencurve(S, spec, {0.5, -0.2}), InputError);
    CHECK_THROWS_AS(eigencurve(S, spec, {0.5, 1.2}), InputError);
    CHECK_THROWS_AS(eigencurve(S, spec, {0.5}, 0.0), InputError);
    CHECK_THROWS_AS(default_lambda_grid(0), InputError);

    // Duplicates collapse, order does not matter.
    const EigenCurve c = eigencurve(S, spec, {0.25, 1.0, 0.25, 0.5});
    REQUIRE(c.samples.size() == 3);
    CHECK(c.samples[0].lambda == 1.0);
    CHECK(c.samples[2].lambda == 0.25);
}

TEST_CASE("solver budget exhaustion surfaces as a budget error") {
    const StarPolygon S(cross_polygon(), {0, 0});
    const SelfMapSpec spec = cross_affine_spec(0.0, 0.95, {0.5, 0.3});
    EigenOptions opts;
    opts.eval_budget = 3;
    CHECK_THROWS_AS(eigencurve(S, spec, {1.0}, 1e-6, opts), BudgetError);
    try {
        eigencurve(S, spec, {1.0}, 1e-6, opts);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK(e.code() == "SolverBudget");
        CHECK(e.error_class() == ErrorClass::Budget);
    }
}

TEST_CASE("repeated runs are bit-identical") {
    const StarPolygon S(cross_polygon(), {0, 0});
    const SelfMapSpec spec = cross_affine_spec(0.9, 0.2, {0.5, 0.3});
    const DichotomyVerdict a = check_dichotomy(S, spec, 10, 1e-6);
    const DichotomyVerdict b = check_dichotomy(S, spec, 10, 1e-6);
    REQUIRE(a.curve.samples.size() == b.curve.samples.size());
    CHECK(a.fp_residual_at_p == b.fp_residual_at_p);
    for (std::size_t i = 0; i < a.curve.samples.size(); ++i) {
        CHECK(a.curve.samples[i].x == b.curve.samples[i].x);
        CHECK(a.curve.samples[i].residual == b.curve.samples[i].residual);
    }
}

TEST_CASE("convex pipeline picks its own center and matches the oracle") {
    Rng rng(9104);
    for (int it = 0; it < 5; ++it) {
        const SimplePolygon K = random_convex_polygon(rng);
        const AffineContraction f = random_affine_contraction(rng, K);
        const SelfMapSpec spec = SelfMapSpec::affine(f.m, f.b);
        const EigenCurve c = eigencurve_convex(K, spec, default_lambda_grid(10));

        CHECK(c.alpha_p == 1.0);
        CHECK(is_interior_star_center(K, c.p));
        CHECK(dist(eval(spec, StarPolygon(K, c.p), c.p), c.p) > 1e-6);
        for (const EigenSample& s : c.samples) {
            const Point2 want = eigen_affine_oracle(f.m, f.b, c.p, s.lambda);
            CAPTURE(it, s.lambda);
            REQUIRE(dist(s.x, want) <= 1e-6);
            REQUIRE(s.residual <= 1e-6);
        }
    }
}

TEST_CASE("convex pipeline rejects the identity map as degenerate") {
    Rng rng(9205);
    const SimplePolygon K = random_convex_polygon(rng);
    const SelfMapSpec ident = SelfMapSpec::affine({1, 0, 0, 1}, {0, 0});
    CHECK_THROWS_AS(eigencurve_convex(K, ident, default_lambda_grid(5)), DegenerateError);
    try {
        eigencurve_convex(K, ident, default_lambda_grid(5));
        FAIL("expected DegenerateError");
    } catch (const DegenerateError& e) {
        CHECK(e.code() == "NumericallyIdentity");
    }
    CHECK_THROWS_AS(eigencurve_convex(cross_polygon(), ident, default_lambda_grid(5)),
                    GeometryError);
}
