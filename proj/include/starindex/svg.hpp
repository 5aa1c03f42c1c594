#pragma once

// Static vector-graphic rendering. World coordinates map to a fixed-width
// canvas with the y axis flipped; every scene is a standalone SVG file.

#include <algorithm>
#include <string>
#include <vector>

#include "starindex/eigencurve.hpp"
#include "starindex/io.hpp"
#include "starindex/metric_density.hpp"

namespace starindex {

class SvgCanvas {
public:
    SvgCanvas(Point2 world_lo, Point2 world_hi, double width_px = 640.0) {
        const double pad_x = 0.05 * std::max(world_hi.x - world_lo.x, 1e-9);
        const double pad_y = 0.05 * std::max(world_hi.y - world_lo.y, 1e-9);
        lo_ = {world_lo.x - pad_x, world_lo.y - pad_y};
        hi_ = {world_hi.x + pad_x, world_hi.y + pad_y};
        scale_ = width_px / (hi_.x - lo_.x);
        w_ = width_px;
        h_ = scale_ * (hi_.y - lo_.y);
    }

    void polygon(const std::vector<Point2>& pts, const std::string& fill,
                 const std::string& stroke, double stroke_width = 1.5,
                 double fill_opacity = 1.0) {
        std::string s = "<polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) s += " ";
            s += coord(pts[i]);
        }
        s += "\" fill=\"" + fill + "\" fill-opacity=\"" + fmt(fill_opacity) +
             "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(stroke_width) +
             "\" stroke-linejoin=\"round\"/>";
        body_.push_back(std::move(s));
    }

    void polyline(const std::vector<Point2>& pts, const std::string& stroke,
                  double stroke_width = 1.5) {
        std::string s = "<polyline points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) s += " ";
            s += coord(pts[i]);
        }
        s += "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
             fmt(stroke_width) + "\"/>";
        body_.push_back(std::move(s));
    }

    void circle(Point2 c, double radius_px, const std::string& fill) {
        body_.push_back("<circle cx=\"" + fmt(sx(c.x)) + "\" cy=\"" + fmt(sy(c.y)) +
                        "\" r=\"" + fmt(radius_px) + "\" fill=\"" + fill + "\"/>");
    }

    void label(Point2 at, const std::string& text, const std::string& fill = "#333333") {
        body_.push_back("<text x=\"" + fmt(sx(at.x) + 6.0) + "\" y=\"" +
                        fmt(sy(at.y) - 6.0) + "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" +
                        fill + "\">" + text + "</text>");
    }

    std::string document() const {
        std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w_) +
                        "\" height=\"" + fmt(h_) + "\" viewBox=\"0 0 " + fmt(w_) + " " +
                        fmt(h_) + "\">\n";
        s += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
        for (const std::string& e : body_) s += e + "\n";
        s += "</svg>\n";
        return s;
    }

    void save(const std::string& path) const { write_text_atomic(path, document()); }

private:
    static std::string fmt(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return buf;
    }
    double sx(double x) const { return (x - lo_.x) * scale_; }
    double sy(double y) const { return h_ - (y - lo_.y) * scale_; }
    std::string coord(Point2 p) const { return fmt(sx(p.x)) + "," + fmt(sy(p.y)); }

    Point2 lo_{}, hi_{};
    double scale_ = 1.0, w_ = 0.0, h_ = 0.0;
    std::vector<std::string> body_;
};

// Blue (lambda near 0) to red (lambda = 1).
inline std::string lambda_color(double lambda) {
    const double t = std::clamp(lambda, 0.0, 1.0);
    const int r = static_cast<int>(40 + 200 * t);
    const int g = 60;
    const int b = static_cast<int>(240 - 200 * t);
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

namespace detail {

inline SvgCanvas canvas_for(const SimplePolygon& poly) {
    Point2 lo{}, hi{};
    poly.bounding_box(lo, hi);
    return SvgCanvas(lo, hi);
}

}  // namespace detail

inline void render_kernel(const SimplePolygon& poly, const KernelResult& k,
                          const std::string& path) {
    SvgCanvas canvas = detail::canvas_for(poly);
    canvas.polygon(poly.vertices(), "#dbe9f6", "#23527c", 2.0, 0.8);
    if (!k.kernel_vertices.empty())
        canvas.polygon(k.kernel_vertices, "#f6d5a2", "#b26a00", 1.5, 0.75);
    canvas.save(path);
}

inline void render_index(const SimplePolygon& poly, Point2 p, double alpha,
                         const std::string& path) {
    SvgCanvas canvas = detail::canvas_for(poly);
    const SimplePolygon hull = convex_hull(poly);
    canvas.polygon(hull.vertices(), "none", "#999999", 1.0, 0.0);
    canvas.polygon(poly.vertices(), "#dbe9f6", "#23527c", 2.0, 0.8);
    std::vector<Point2> shrunk;
    shrunk.reserve(hull.vertices().size());
    for (Point2 c : hull.vertices()) shrunk.push_back(p + alpha * (c - p));
    canvas.polygon(shrunk, "#f3c0c0", "#a02020", 1.5, 0.5);
    canvas.circle(p, 4.0, "#a02020");
    canvas.save(path);
}

inline void render_densify(const SimplePolygon& poly, const SimplePolygon& s_prime,
                           Point2 p, const std::string& path) {
    SvgCanvas canvas = detail::canvas_for(s_prime);
    canvas.polygon(s_prime.vertices(), "#d9f2d9", "#1e7a1e", 2.0, 0.8);
    canvas.polygon(poly.vertices(), "#dbe9f6", "#23527c", 1.5, 0.6);
    canvas.circle(p, 4.0, "#23527c");
    canvas.save(path);
}

inline void render_eigencurve(const SimplePolygon& poly, const EigenCurve& curve,
                              const std::string& path) {
    SvgCanvas canvas = detail::canvas_for(poly);
    canvas.polygon(poly.vertices(), "#dbe9f6", "#23527c", 2.0, 0.8);
    std::vector<Point2> pts;
    pts.reserve(curve.samples.size());
    for (const EigenSample& s : curve.samples) pts.push_back(s.x);
    if (pts.size() > 1) canvas.polyline(pts, "#888888", 1.0);
    for (const EigenSample& s : curve.samples)
        canvas.circle(s.x, 3.5, lambda_color(s.lambda));
    canvas.circle(curve.p, 4.0, "#202020");
    canvas.label(curve.p, "p");
    canvas.save(path);
}

}  // namespace starindex
