#pragma once

// File formats and report records. Parsing goes through a JSON reader; emission
// uses a hand-rolled writer so records are byte-deterministic: fixed key order,
// reals at 17 significant digits (lossless double round-trip), atomic writes.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "starindex/eigencurve.hpp"
#include "starindex/gauge_index.hpp"
#include "starindex/metric_density.hpp"
#include "starindex/selfmap.hpp"
#include "starindex/star_kernel.hpp"

namespace starindex {

inline std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_point(Point2 p) {
    return "[" + fmt_real(p.x) + ", " + fmt_real(p.y) + "]";
}

// ---- reading ----

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("FileNotFound", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline nlohmann::json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw InputError("ParseError", what + ": " + e.what());
    }
}

namespace detail {

inline double require_number(const nlohmann::json& j, const std::string& what) {
    if (!j.is_number()) throw InputError("ParseError", what + " must be a number");
    return j.get<double>();
}

inline Point2 parse_point(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2)
        throw InputError("ParseError", what + " must be a pair [x, y]");
    return {require_number(j[0], what + "[0]"), require_number(j[1], what + "[1]")};
}

}  // namespace detail

inline SimplePolygon parse_polygon(const nlohmann::json& j) {
    if (!j.is_object() || j.value("kind", "") != "polygon")
        throw InputError("ParseError", "expected a record with kind \"polygon\"");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw InputError("ParseError", "polygon record needs a vertices array");
    std::vector<Point2> verts;
    verts.reserve(j["vertices"].size());
    for (const auto& v : j["vertices"]) verts.push_back(detail::parse_point(v, "vertex"));
    return SimplePolygon::validate_simple(std::move(verts));
}

inline SimplePolygon load_polygon(const std::string& path) {
    return parse_polygon(parse_json_text(read_text_file(path), path));
}

inline SeminormFamily parse_seminorms(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("seminorms") || !j["seminorms"].is_array())
        throw InputError("ParseError", "expected a record with a seminorms array");
    std::vector<Seminorm> list;
    for (const auto& e : j["seminorms"]) {
        const std::string kind = e.value("kind", "");
        if (kind == "euclidean") {
            list.push_back(Seminorm::euclidean());
        } else if (kind == "directional") {
            if (!e.contains("u"))
                throw InputError("ParseError", "directional seminorm needs a direction u");
            list.push_back(Seminorm::directional(detail::parse_point(e["u"], "u")));
        } else {
            throw InputError("ParseError", "unknown seminorm kind \"" + kind + "\"");
        }
    }
    return SeminormFamily::of(std::move(list));
}

inline SeminormFamily load_seminorms(const std::string& path) {
    return parse_seminorms(parse_json_text(read_text_file(path), path));
}

inline SelfMapSpec parse_map(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("ParseError", "map record must be an object");
    const std::string kind = j.value("kind", "");
    if (kind == "constant") {
        if (!j.contains("q")) throw InputError("ParseError", "constant map needs q");
        return SelfMapSpec::constant(detail::parse_point(j["q"], "q"));
    }
    if (kind == "affine") {
        if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != 2)
            throw InputError("ParseError", "affine map needs a 2x2 matrix");
        std::array<double, 4> m{};
        for (int r = 0; r < 2; ++r) {
            const auto& row = j["matrix"][r];
            if (!row.is_array() || row.size() != 2)
                throw InputError("ParseError", "affine matrix rows must have two entries");
            m[2 * r] = detail::require_number(row[0], "matrix");
            m[2 * r + 1] = detail::require_number(row[1], "matrix");
        }
        Point2 b{};
        if (j.contains("offset")) b = detail::parse_point(j["offset"], "offset");
        return SelfMapSpec::affine(m, b);
    }
    if (kind == "rotate") {
        if (!j.contains("center") || !j.contains("angle_deg"))
            throw InputError("ParseError", "rotate map needs center and angle_deg");
        const double deg = detail::require_number(j["angle_deg"], "angle_deg");
        return SelfMapSpec::rotate_about(detail::parse_point(j["center"], "center"),
                                         deg * kPi / 180.0);
    }
    if (kind == "radial_distort") {
        if (!j.contains("gamma")) throw InputError("ParseError", "radial_distort needs gamma");
        return SelfMapSpec::radial_distort(detail::require_number(j["gamma"], "gamma"));
    }
    if (kind == "compose") {
        if (!j.contains("maps") || !j["maps"].is_array())
            throw InputError("ParseError", "compose needs a maps array");
        std::vector<SelfMapSpec> children;
        for (const auto& c : j["maps"]) children.push_back(parse_map(c));
        return SelfMapSpec::compose(std::move(children));
    }
    throw InputError("ParseError", "unknown map kind \"" + kind + "\"");
}

inline SelfMapSpec load_map(const std::string& path) {
    return parse_map(parse_json_text(read_text_file(path), path));
}

// Grid spec: either an integer n (grid {k/n}) or a comma-separated value list.
inline std::vector<double> parse_lambda_grid(const std::string& spec) {
    if (spec.find(',') == std::string::npos &&
        spec.find('.') == std::string::npos) {
        try {
            std::size_t pos = 0;
            const int n = std::stoi(spec, &pos);
            if (pos == spec.size()) return default_lambda_grid(n);
        } catch (const std::exception&) {
            throw InputError("InvalidLambda", "bad lambda grid spec \"" + spec + "\"");
        }
    }
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError("InvalidLambda", "bad lambda value \"" + item + "\"");
        }
    }
    if (out.empty()) throw InputError("InvalidLambda", "empty lambda grid");
    return out;
}

// ---- emission ----

inline std::string polygon_record(const SimplePolygon& poly) {
    std::string s = "{\"kind\": \"polygon\", \"vertices\": [";
    const auto& v = poly.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += fmt_point(v[i]);
    }
    s += "]}";
    return s;
}

inline std::string kernel_report(const KernelResult& k) {
    std::string s = "{\"kind\": \"kernel_report\", \"is_star_shaped\": ";
    s += k.is_star_shaped ? "true" : "false";
    s += ", \"degenerate\": ";
    s += k.degenerate ? "true" : "false";
    s += ", \"area\": " + fmt_real(k.area());
    s += ", \"kernel\": ";
    if (k.kernel_vertices.empty()) {
        s += "null";
    } else {
        s += "{\"kind\": \"polygon\", \"vertices\": [";
        for (std::size_t i = 0; i < k.kernel_vertices.size(); ++i) {
            if (i) s += ", ";
            s += fmt_point(k.kernel_vertices[i]);
        }
        s += "]}";
    }
    s += "}";
    return s;
}

inline std::string index_report(const IndexReport& r, const std::string& scope) {
    std::string s = "{\"kind\": \"index_report\", \"scope\": \"" + scope + "\"";
    s += ", \"alpha\": " + fmt_real(r.alpha_p);
    s += ", \"lower_bound\": " + fmt_real(r.lower_bound);
    s += ", \"upper_bound\": " + fmt_real(r.upper_bound);
    s += ", \"witness_angle\": " + fmt_real(r.witness_angle);
    s += ", \"p\": " + fmt_point(r.p);
    s += "}";
    return s;
}

struct GaugeSample {
    Point2 x;
    double star;
    double hull;
};

inline std::string gauge_report(Point2 p, const std::vector<GaugeSample>& samples) {
    std::string s = "{\"kind\": \"gauge_report\", \"p\": " + fmt_point(p);
    s += ", \"values\": [";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i) s += ", ";
        s += "{\"x\": " + fmt_point(samples[i].x);
        s += ", \"star\": " + fmt_real(samples[i].star);
        s += ", \"hull\": " + fmt_real(samples[i].hull) + "}";
    }
    s += "]}";
    return s;
}

inline std::string densify_report(const DensifyResult& d) {
    std::string s = "{\"kind\": \"densify_report\", \"t_used\": " + fmt_real(d.t_used);
    s += ", \"alpha_lower\": " + fmt_real(d.alpha_lower);
    s += ", \"distances\": [";
    for (std::size_t i = 0; i < d.per_seminorm_distance.size(); ++i) {
        if (i) s += ", ";
        s += fmt_real(d.per_seminorm_distance[i]);
    }
    s += "], \"s_prime\": " + polygon_record(d.s_prime) + "}";
    return s;
}

inline std::string verdict_name(DichotomyBranch b) {
    switch (b) {
        case DichotomyBranch::FixedAtP: return "FixedAtP";
        case DichotomyBranch::EigenFamily: return "EigenFamily";
        case DichotomyBranch::Both: return "Both";
    }
    return "FixedAtP";
}

inline std::string eigencurve_record(const EigenCurve& c, const std::string& verdict) {
    std::string s = "{\"alpha_p\": " + fmt_real(c.alpha_p);
    s += ", \"p\": " + fmt_point(c.p);
    s += ", \"samples\": [";
    for (std::size_t i = 0; i < c.samples.size(); ++i) {
        const EigenSample& e = c.samples[i];
        if (i) s += ", ";
        s += "{\"lambda\": " + fmt_real(e.lambda);
        s += ", \"x\": " + fmt_point(e.x);
        s += ", \"residual\": " + fmt_real(e.residual);
        s += ", \"branch_jump\": ";
        s += e.branch_jump ? "true" : "false";
        s += "}";
    }
    s += "], \"verdict\": \"" + verdict + "\"";
    s += ", \"injectivity_certified\": ";
    s += c.injectivity_certified ? "true" : "false";
    s += "}";
    return s;
}

inline std::string dichotomy_record(const DichotomyVerdict& v) {
    std::string s = "{\"kind\": \"dichotomy_report\", \"verdict\": \"" +
                    verdict_name(v.branch) + "\"";
    s += ", \"fp_residual_at_p\": " + fmt_real(v.fp_residual_at_p);
    s += ", \"curve\": " + eigencurve_record(v.curve, verdict_name(v.branch)) + "}";
    return s;
}

inline void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("WriteFailed", "cannot open " + tmp);
        out << content;
        if (!out.flush()) throw InputError("WriteFailed", "cannot write " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw InputError("WriteFailed", "cannot rename " + tmp + " to " + path);
}

}  // namespace starindex
