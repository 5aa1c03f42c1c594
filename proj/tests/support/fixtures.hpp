#pragma once

// Named benchmark shapes used across the suites.

#include <vector>

#include "starindex.hpp"

namespace testsupport {

using namespace starindex;

// Plus-shaped 12-gon, kernel [-1,1]^2, convexity index 1/2 at the origin.
inline std::vector<Point2> cross_vertices(double s = 1.0) {
    return {{3 * s, -s}, {3 * s, s},   {s, s},   {s, 3 * s},   {-s, 3 * s},  {-s, s},
            {-3 * s, s}, {-3 * s, -s}, {-s, -s}, {-s, -3 * s}, {s, -3 * s},  {s, -s}};
}

inline SimplePolygon cross_polygon(double s = 1.0) {
    return SimplePolygon::validate_simple(cross_vertices(s));
}

// Staircase with an empty kernel: the x <= 1 and x >= 3 inner half-planes of
// its two vertical notch edges cannot both hold.
inline std::vector<Point2> zigzag_vertices() {
    return {{0, 0}, {4, 0}, {4, 3}, {1, 3}, {1, 2}, {3, 2}, {3, 1}, {0, 1}};
}

inline SimplePolygon zigzag_polygon() {
    return SimplePolygon::validate_simple(zigzag_vertices());
}

// Self-intersecting quad; polygon validation must reject it.
inline std::vector<Point2> bowtie_vertices() {
    return {{0, 0}, {2, 2}, {2, 0}, {0, 2}};
}

// Five-pointed star: outer vertices on a circle of radius 2, inner vertices at
// the pentagon diagonal intersections.
inline SimplePolygon pentagram() {
    std::vector<Point2> outer(5);
    for (int k = 0; k < 5; ++k)
        outer[k] = 2.0 * unit_vector(kPi / 2.0 + 2.0 * kPi * k / 5.0);
    auto intersect = [](Point2 a, Point2 b, Point2 c, Point2 d) {
        const Point2 r = b - a, s = d - c;
        const double t = cross(c - a, s) / cross(r, s);
        return a + t * r;
    };
    std::vector<Point2> v;
    for (int k = 0; k < 5; ++k) {
        v.push_back(outer[k]);
        // Inner vertex between outer k and k+1: diagonals (k-1,k+1) x (k,k+2).
        v.push_back(intersect(outer[(k + 4) % 5], outer[(k + 1) % 5], outer[k],
                              outer[(k + 2) % 5]));
    }
    return SimplePolygon::validate_simple(v);
}

inline SimplePolygon square2() {  // [-1,1]^2
    return SimplePolygon::validate_simple({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
}

}  // namespace testsupport
