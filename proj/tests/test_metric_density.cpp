#include <catch2/catch_amalgamated.hpp>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace starindex;
using namespace testsupport;

namespace {

SimplePolygon rotated(const SimplePolygon& poly, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    std::vector<Point2> v;
    v.reserve(poly.size());
    for (const Point2& q : poly.vertices()) v.push_back({c * q.x - s * q.y, s * q.x + c * q.y});
    return SimplePolygon::validate_simple(v);
}

}  // namespace

TEST_CASE("pseudo distance: known values on the cross and its kernel square") {
    const SimplePolygon cross = cross_polygon();
    const SimplePolygon sq = square2();
    const Seminorm euc = Seminorm::euclidean();

    // Arm tips (3,1) etc. sit at distance 2 from the square; the square is
    // inside the cross, so the other direction contributes nothing.
    CHECK(pseudo_distance(cross, sq, euc) == Catch::Approx(2.0).margin(1e-12));
    CHECK(pseudo_distance(cross, cross, euc) == 0.0);

    CHECK(pseudo_distance(cross, sq, Seminorm::directional({1, 0})) ==
          Catch::Approx(2.0).margin(1e-12));
    CHECK(pseudo_distance(cross, sq, Seminorm::directional({1, 1})) ==
          Catch::Approx(2.0 * std::sqrt(2.0) - std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("directional seminorm can vanish on distinct sets") {
    const std::vector<Point2> tall{{-1, -2}, {1, -2}, {1, 2}, {-1, 2}};
    const SimplePolygon rect = SimplePolygon::validate_simple(tall);
    const double d = pseudo_distance(rect, square2(), Seminorm::directional({1, 0}));
    CHECK(d == 0.0);
    CHECK(pseudo_distance(rect, square2(), Seminorm::euclidean()) > 0.5);
}

TEST_CASE("pseudo distance axioms over random star polygons") {
    Rng rng(404);
    const Seminorm sns[] = {Seminorm::euclidean(), Seminorm::directional({0.3, 1.0})};
    for (int it = 0; it < 8; ++it) {
        const SimplePolygon A = random_star_polygon(rng);
        const SimplePolygon B = random_star_polygon(rng);
        const SimplePolygon C = random_star_polygon(rng);
        for (const Seminorm& sn : sns) {
            const double ab = pseudo_distance(A, B, sn);
            const double ba = pseudo_distance(B, A, sn);
            const double bc = pseudo_distance(B, C, sn);
            const double ac = pseudo_distance(A, C, sn);
            CAPTURE(it, (int)sn.kind);
            CHECK(ab == ba);
            CHECK(ab >= 0.0);
            CHECK(ac <= ab + bc + 1e-12);
            CHECK(pseudo_distance(A, A, sn) == 0.0);
        }
    }
}

TEST_CASE("euclidean pseudo distance brackets the sampled Hausdorff oracle") {
    Rng rng(505);
    const Seminorm euc = Seminorm::euclidean();
    for (int it = 0; it < 6; ++it) {
        const SimplePolygon A = random_star_polygon(rng);
        const SimplePolygon B = random_star_polygon(rng);
        const double exact = pseudo_distance(A, B, euc);
        const double sampled = sampled_hausdorff(A, B, 2048);
        // Sampling can only miss the supremum, never exceed it; the gap is
        // bounded by one boundary sample spacing.
        const double spacing =
            std::max(A.diameter_hint(), B.diameter_hint()) * 4.0 / 2048.0;
        CAPTURE(it);
        CHECK(sampled <= exact + 1e-12);
        CHECK(exact <= sampled + spacing);
    }
}

TEST_CASE("star union takes the radial maximum") {
    Rng rng(606);
    const Point2 p{0, 0};
    for (int it = 0; it < 6; ++it) {
        StarGenOptions opt;
        opt.min_margin = 0.3;
        const SimplePolygon A = random_star_polygon(rng, opt);
        const SimplePolygon B = rotated(A, uniform(rng, 0.2, 3.0));
        const SimplePolygon U = star_union(A, B, p);

        REQUIRE(is_star_center(U, p));
        const RadialProfile ru(U, p);
        const RadialProfile ra(A, p);
        const RadialProfile rb(B, p);
        for (int j = 0; j < 800; ++j) {
            const double theta = uniform(rng, 0.0, 2.0 * kPi);
            const double want = std::max(ra.radius(theta), rb.radius(theta));
            CAPTURE(it, theta);
            REQUIRE(ru.radius(theta) == Catch::Approx(want).epsilon(1e-9));
        }
    }
}

TEST_CASE("star union with a subset is the identity") {
    const SimplePolygon U = star_union(cross_polygon(), square2(), {0, 0});
    CHECK(U.area() == Catch::Approx(cross_polygon().area()).margin(1e-9));
    const RadialProfile ru(U, {0, 0});
    const RadialProfile rc(cross_polygon(), {0, 0});
    for (int j = 0; j < 360; ++j) {
        const double theta = 2.0 * kPi * j / 360.0;
        REQUIRE(ru.radius(theta) == Catch::Approx(rc.radius(theta)).margin(1e-9));
    }
}

TEST_CASE("densify on the cross: t from the hull reach, distances under eps") {
    const SimplePolygon cross = cross_polygon();
    const double eps = 0.05;
    const DensifyResult res = densify(cross, {0, 0}, {{Seminorm::euclidean(), eps}});

    CHECK(res.t_used == Catch::Approx(eps / (2.0 * std::sqrt(10.0))).margin(1e-12));
    CHECK(res.alpha_lower == Catch::Approx(res.t_used / (1.0 + res.t_used)).margin(1e-15));
    REQUIRE(res.per_seminorm_distance.size() == 1);
    CHECK(res.per_seminorm_distance[0] < eps);
    CHECK(res.per_seminorm_distance[0] <= res.t_used * std::sqrt(10.0) + 1e-12);

    // S' contains S and keeps p as an interior star center.
    CHECK(is_interior_star_center(res.s_prime, {0, 0}));
    const RadialProfile rs(cross, {0, 0});
    const RadialProfile rp(res.s_prime, {0, 0});
    for (int j = 0; j < 720; ++j) {
        const double theta = 2.0 * kPi * j / 720.0;
        REQUIRE(rp.radius(theta) >= rs.radius(theta) - 1e-9);
    }
    // The certificate is honest: the densified index clears alpha_lower.
    CHECK(convexity_index_at(res.s_prime, {0, 0}).alpha_p >= res.alpha_lower - 1e-12);
}

TEST_CASE("densify is the identity on convex input") {
    Rng rng(707);
    const SimplePolygon K = random_convex_polygon(rng);
    const Point2 p = K.centroid();
    const DensifyResult res = densify(K, p, {{Seminorm::euclidean(), 0.01}});
    CHECK(res.s_prime.area() == Catch::Approx(K.area()).epsilon(1e-9));
    CHECK(res.per_seminorm_distance[0] <= 1e-9);
}

TEST_CASE("densify honors every entry of a mixed seminorm family") {
    Rng rng(808);
    for (int it = 0; it < 6; ++it) {
        const SimplePolygon S = random_star_polygon(rng);
        const std::vector<std::pair<Seminorm, double>> eps{
            {Seminorm::euclidean(), 0.05},
            {Seminorm::directional({1, 0}), 0.02},
            {Seminorm::directional({-1, 2}), 0.08},
        };
        const DensifyResult res = densify(S, {0, 0}, eps);
        REQUIRE(res.per_seminorm_distance.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            CAPTURE(it, i);
            CHECK(res.per_seminorm_distance[i] < eps[i].second);
        }
        CHECK(res.alpha_lower > 0.0);
        CHECK(res.t_used > 0.0);
        CHECK(res.t_used <= 1.0);
    }
}

TEST_CASE("densify input validation") {
    const SimplePolygon cross = cross_polygon();
    CHECK_THROWS_AS(densify(cross, {0, 0}, {}), InputError);
    CHECK_THROWS_AS(densify(cross, {0, 0}, {{Seminorm::euclidean(), 0.0}}), InputError);
    CHECK_THROWS_AS(densify(cross, {0, 0}, {{Seminorm::euclidean(), -1.0}}), InputError);
    CHECK_THROWS_AS(densify(cross, {2, 0}, {{Seminorm::euclidean(), 0.1}}), NotStarError);
    try {
        densify(cross, {0, 0}, {{Seminorm::euclidean(), 0.0}});
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(e.code() == "InvalidEpsilon");
        CHECK(e.error_class() == ErrorClass::Input);
    }
    CHECK_THROWS_AS(Seminorm::directional({0, 0}), InputError);
}
