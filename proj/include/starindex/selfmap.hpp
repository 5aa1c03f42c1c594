#pragma once

// A closed algebra of continuous self-maps of a star polygon. Every primitive
// retracts its raw output radially about the star center, which keeps the
// range inside S while preserving continuity; nearest-point projection onto a
// non-convex S would not be continuous.

#include <array>
#include <string>
#include <vector>

#include "starindex/geometry.hpp"
#include "starindex/radial_profile.hpp"

namespace starindex {

// Identity on S; outside, the boundary point on the ray from the center.
inline Point2 project_radial(const StarPolygon& S, Point2 y) {
    const Point2 d = y - S.center();
    const double t = norm(d);
    if (t == 0.0) return S.center();
    const double r = S.profile().radius(angle_of(d));
    if (t <= r) return y;
    return S.center() + (r / t) * d;
}

struct SelfMapSpec {
    enum class Kind { Constant, Affine, Rotate, RadialDistort, Compose };

    Kind kind = Kind::Constant;
    Point2 q{};                                    // Constant target
    std::array<double, 4> m{1.0, 0.0, 0.0, 1.0};   // Affine row-major matrix
    Point2 offset{};                               // Affine offset
    Point2 center{};                               // Rotate center
    double angle = 0.0;                            // Rotate angle, radians
    double gamma = 1.0;                            // RadialDistort exponent
    std::vector<SelfMapSpec> children;             // Compose, left to right

    static SelfMapSpec constant(Point2 target) {
        SelfMapSpec s;
        s.kind = Kind::Constant;
        s.q = target;
        return s;
    }
    static SelfMapSpec affine(std::array<double, 4> matrix, Point2 b) {
        SelfMapSpec s;
        s.kind = Kind::Affine;
        s.m = matrix;
        s.offset = b;
        return s;
    }
    static SelfMapSpec rotate_about(Point2 c, double angle_rad) {
        SelfMapSpec s;
        s.kind = Kind::Rotate;
        s.center = c;
        s.angle = angle_rad;
        return s;
    }
    static SelfMapSpec radial_distort(double exponent) {
        if (!(exponent > 0.0))
            throw InputError("InvalidMapSpec", "radial distort exponent must be positive");
        SelfMapSpec s;
        s.kind = Kind::RadialDistort;
        s.gamma = exponent;
        return s;
    }
    static SelfMapSpec compose(std::vector<SelfMapSpec> list) {
        if (list.empty())
            throw InputError("InvalidMapSpec", "compose needs at least one map");
        SelfMapSpec s;
        s.kind = Kind::Compose;
        s.children = std::move(list);
        return s;
    }
};

struct MapEvalTrace {
    Point2 input;
    Point2 output;
    std::vector<std::pair<std::string, Point2>> steps;  // post-projection, in order
};

namespace detail {

inline Point2 apply_primitive(const SelfMapSpec& s, const StarPolygon& S, Point2 x,
                              MapEvalTrace* trace) {
    switch (s.kind) {
        case SelfMapSpec::Kind::Constant: {
            const Point2 y = project_radial(S, s.q);
            if (trace) trace->steps.emplace_back("constant", y);
            return y;
        }
        case SelfMapSpec::Kind::Affine: {
            const Point2 raw{s.m[0] * x.x + s.m[1] * x.y + s.offset.x,
                             s.m[2] * x.x + s.m[3] * x.y + s.offset.y};
            const Point2 y = project_radial(S, raw);
            if (trace) trace->steps.emplace_back("affine", y);
            return y;
        }
        case SelfMapSpec::Kind::Rotate: {
            const double c = std::cos(s.angle), sn = std::sin(s.angle);
            const Point2 d = x - s.center;
            const Point2 raw = s.center + Point2{c * d.x - sn * d.y, sn * d.x + c * d.y};
            const Point2 y = project_radial(S, raw);
            if (trace) trace->steps.emplace_back("rotate", y);
            return y;
        }
        case SelfMapSpec::Kind::RadialDistort: {
            // In star coordinates (rho, theta) about the center: rho -> rho^gamma.
            const Point2 d = x - S.center();
            const double t = norm(d);
            Point2 y = S.center();
            if (t > 0.0) {
                const double r = S.profile().radius(angle_of(d));
                const double rho = std::min(t / r, 1.0);
                y = S.center() + (std::pow(rho, s.gamma) * r / t) * d;
            }
            y = project_radial(S, y);
            if (trace) trace->steps.emplace_back("radial_distort", y);
            return y;
        }
        case SelfMapSpec::Kind::Compose: {
            Point2 y = x;
            for (const SelfMapSpec& c : s.children) y = apply_primitive(c, S, y, trace);
            return y;
        }
    }
    return x;  // unreachable
}

}  // namespace detail

inline Point2 eval(const SelfMapSpec& spec, const StarPolygon& S, Point2 x) {
    if (S.polygon().contains(x) == Containment::Outside)
        throw GeometryError("InputOutsideS", "map evaluated at a point outside S");
    return detail::apply_primitive(spec, S, x, nullptr);
}

inline MapEvalTrace eval_trace(const SelfMapSpec& spec, const StarPolygon& S, Point2 x) {
    if (S.polygon().contains(x) == Containment::Outside)
        throw GeometryError("InputOutsideS", "map evaluated at a point outside S");
    MapEvalTrace tr;
    tr.input = x;
    tr.output = detail::apply_primitive(spec, S, x, &tr);
    return tr;
}

}  // namespace starindex
