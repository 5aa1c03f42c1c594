// starindex: star kernels, convexity indices, densification, and the
// fixed-point / eigenvector dichotomy for polygons, from the command line.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "starindex.hpp"

namespace si = starindex;
namespace fs = std::filesystem;

namespace {

si::Point2 parse_point_flag(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw si::InputError("ParseError", "expected \"x,y\", got \"" + s + "\"");
    try {
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw si::InputError("ParseError", "expected \"x,y\", got \"" + s + "\"");
    }
}

// Default center when none is given: the kernel centroid.
si::Point2 pick_center(const si::SimplePolygon& poly, const std::optional<std::string>& p_flag) {
    if (p_flag) return parse_point_flag(*p_flag);
    const si::KernelResult k = si::kernel(poly);
    if (!k.is_star_shaped)
        throw si::NotStarError("NotStarShaped", "polygon has an empty star kernel");
    const auto kp = k.kernel_polygon();
    if (!kp)
        throw si::NotStarError("DegenerateKernel",
                               "star kernel has no interior; pass an explicit center");
    return kp->centroid();
}

std::string out_path(const std::string& out_dir, const std::string& name) {
    fs::create_directories(out_dir);
    return (fs::path(out_dir) / name).string();
}

void emit(const std::string& record, const std::string& out_dir, const std::string& name) {
    std::cout << record << "\n";
    si::write_text_atomic(out_path(out_dir, name), record + "\n");
}

struct CommonFlags {
    std::string out_dir = ".";
    bool render = false;
    double tol = 0.0;  // 0 = subcommand default
    std::string lambda_grid = "20";
};

int run(int argc, char** argv) {
    CLI::App app{"star-shaped set analysis: kernels, convexity index, densification, eigencurves"};
    app.require_subcommand(1);
    // Common flags may follow the subcommand name; let them reach the parent.
    app.fallthrough();

    CommonFlags flags;
    app.add_option("--tol", flags.tol, "tolerance override (subcommand-specific default)");
    app.add_flag("--render", flags.render, "also write an SVG rendering");
    app.add_option("--out-dir", flags.out_dir, "directory for report and rendering files");
    app.add_option("--lambda-grid", flags.lambda_grid,
                   "lambda grid: integer n for {k/n} or a comma-separated list");

    std::string poly_path, map_path, seminorm_path;
    std::optional<std::string> p_flag;
    bool global_flag = false, convex_flag = false;
    std::vector<std::string> at_flags;
    std::vector<double> eps_flags;

    CLI::App* cmd_kernel = app.add_subcommand("kernel", "star kernel and star-shapedness");
    cmd_kernel->add_option("polygon", poly_path, "polygon file")->required();

    CLI::App* cmd_index = app.add_subcommand("index", "convexity index alpha_p or global alpha");
    cmd_index->add_option("polygon", poly_path, "polygon file")->required();
    cmd_index->add_option("--p", p_flag, "center as \"x,y\" (default: kernel centroid)");
    cmd_index->add_flag("--global", global_flag, "maximize over the kernel");

    CLI::App* cmd_gauge = app.add_subcommand("gauge", "Minkowski gauge values at query points");
    cmd_gauge->add_option("polygon", poly_path, "polygon file")->required();
    cmd_gauge->add_option("--p", p_flag, "center as \"x,y\" (default: kernel centroid)");
    cmd_gauge->add_option("--at", at_flags, "query point \"x,y\" (repeatable)")->required();

    CLI::App* cmd_densify = app.add_subcommand("densify", "nearby star set with positive index");
    cmd_densify->add_option("polygon", poly_path, "polygon file")->required();
    cmd_densify->add_option("seminorms", seminorm_path, "seminorm family file")->required();
    cmd_densify->add_option("--eps", eps_flags, "epsilon per seminorm (single value broadcasts)")
        ->required();
    cmd_densify->add_option("--p", p_flag, "center as \"x,y\" (default: kernel centroid)");

    CLI::App* cmd_dich = app.add_subcommand("dichotomy", "fixed point at p or eigencurve");
    cmd_dich->add_option("polygon", poly_path, "polygon file")->required();
    cmd_dich->add_option("map", map_path, "self-map file")->required();
    cmd_dich->add_option("--p", p_flag, "center as \"x,y\" (default: kernel centroid)");

    CLI::App* cmd_eigen = app.add_subcommand("eigencurve", "trace the eigenpair family");
    cmd_eigen->add_option("polygon", poly_path, "polygon file")->required();
    cmd_eigen->add_option("map", map_path, "self-map file")->required();
    cmd_eigen->add_option("--p", p_flag, "center as \"x,y\" (default: kernel centroid)");
    cmd_eigen->add_flag("--convex", convex_flag,
                        "convex-domain variant: pick the center automatically");

    CLI11_PARSE(app, argc, argv);

    if (cmd_kernel->parsed()) {
        const si::SimplePolygon poly = si::load_polygon(poly_path);
        const si::KernelResult k = si::kernel(poly);
        emit(si::kernel_report(k), flags.out_dir, "kernel_report.json");
        if (flags.render) si::render_kernel(poly, k, out_path(flags.out_dir, "kernel.svg"));
        return 0;
    }

    if (cmd_index->parsed()) {
        const si::SimplePolygon poly = si::load_polygon(poly_path);
        si::IndexReport rep{};
        if (global_flag) {
            rep = si::convexity_index_global(poly,
                                             flags.tol > 0.0 ? flags.tol : si::kDefaultGlobalTol);
        } else {
            const si::Point2 p = pick_center(poly, p_flag);
            rep = si::convexity_index_at(poly, p,
                                         flags.tol > 0.0 ? flags.tol : si::kDefaultIndexTol);
        }
        emit(si::index_report(rep, global_flag ? "global" : "at_p"), flags.out_dir,
             "index_report.json");
        if (flags.render)
            si::render_index(poly, rep.p, rep.alpha_p, out_path(flags.out_dir, "index.svg"));
        return 0;
    }

    if (cmd_gauge->parsed()) {
        const si::SimplePolygon poly = si::load_polygon(poly_path);
        const si::Point2 p = pick_center(poly, p_flag);
        const si::GaugeEvaluator ev(si::StarPolygon(poly, p));
        std::vector<si::GaugeSample> samples;
        samples.reserve(at_flags.size());
        for (const std::string& s : at_flags) {
            const si::Point2 x = parse_point_flag(s);
            samples.push_back({x, ev.gauge(x, si::GaugeKind::Star),
                               ev.gauge(x, si::GaugeKind::Hull)});
        }
        emit(si::gauge_report(p, samples), flags.out_dir, "gauge_report.json");
        if (flags.render) {
            si::SvgCanvas canvas = si::detail::canvas_for(poly);
            canvas.polygon(poly.vertices(), "#dbe9f6", "#23527c", 2.0, 0.8);
            for (const auto& s : samples)
                canvas.circle(s.x, 3.5, s.star <= 1.0 ? "#1e7a1e" : "#a02020");
            canvas.circle(p, 4.0, "#202020");
            canvas.save(out_path(flags.out_dir, "gauge.svg"));
        }
        return 0;
    }

    if (cmd_densify->parsed()) {
        const si::SimplePolygon poly = si::load_polygon(poly_path);
        const si::SeminormFamily family = si::load_seminorms(seminorm_path);
        const si::Point2 p = pick_center(poly, p_flag);
        std::vector<std::pair<si::Seminorm, double>> eps;
        if (eps_flags.size() == 1) eps_flags.assign(family.entries.size(), eps_flags[0]);
        if (eps_flags.size() != family.entries.size())
            throw si::InputError("InvalidEpsilon",
                                 "need one epsilon per seminorm (or a single broadcast value)");
        for (std::size_t i = 0; i < family.entries.size(); ++i)
            eps.emplace_back(family.entries[i], eps_flags[i]);
        const si::DensifyResult d = si::densify(poly, p, eps);
        emit(si::densify_report(d), flags.out_dir, "densify_report.json");
        si::write_text_atomic(out_path(flags.out_dir, "densify_sprime.json"),
                              si::polygon_record(d.s_prime) + "\n");
        if (flags.render)
            si::render_densify(poly, d.s_prime, p, out_path(flags.out_dir, "densify.svg"));
        return 0;
    }

    const double tol_eig = flags.tol > 0.0 ? flags.tol : 1e-6;
    const std::vector<double> grid = si::parse_lambda_grid(flags.lambda_grid);

    if (cmd_dich->parsed()) {
        const si::SimplePolygon poly = si::load_polygon(poly_path);
        const si::SelfMapSpec f = si::load_map(map_path);
        const si::StarPolygon star(poly, pick_center(poly, p_flag));
        const si::DichotomyVerdict v = si::check_dichotomy(star, f, grid, tol_eig);
        emit(si::dichotomy_record(v), flags.out_dir, "dichotomy_report.json");
        if (flags.render)
            si::render_eigencurve(poly, v.curve, out_path(flags.out_dir, "dichotomy.svg"));
        return 0;
    }

    if (cmd_eigen->parsed()) {
        const si::SimplePolygon poly = si::load_polygon(poly_path);
        const si::SelfMapSpec f = si::load_map(map_path);
        si::EigenCurve curve;
        if (convex_flag) {
            curve = si::eigencurve_convex(poly, f, grid, tol_eig);
        } else {
            const si::StarPolygon star(poly, pick_center(poly, p_flag));
            curve = si::eigencurve(star, f, grid, tol_eig);
        }
        emit(si::eigencurve_record(curve, curve.injectivity_certified ? "EigenFamily"
                                                                      : "Uncertified"),
             flags.out_dir, "eigencurve_report.json");
        if (flags.render)
            si::render_eigencurve(poly, curve, out_path(flags.out_dir, "eigencurve.svg"));
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const si::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.error_class());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
