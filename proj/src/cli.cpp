#include "paramplane/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "paramplane/errors.hpp"

namespace paramplane::cli {

const char* to_string(Mode m) {
    switch (m) {
    case Mode::Param: return "param";
    case Mode::Capture: return "capture";
    case Mode::Dyn: return "dyn";
    case Mode::Stability: return "stability";
    }
    return "?";
}

Window default_window(Mode mode, Family family) {
    if (mode == Mode::Dyn) return {-3.0, 3.0, -3.0, 3.0, 1000, 1000};
    switch (family) {
    case Family::Kim4: return {-55.0, 85.0, -70.0, 70.0, 1000, 1000};
    case Family::ChebyshevMultipoint: return {-1.5, 3.9, -4.5, 4.5, 1000, 1000};
    case Family::ErmakovKalitkin: return {-27.0, 13.0, -20.0, 20.0, 1000, 1000};
    case Family::SixthOrder: return {3.4, 4.6, -0.6, 0.6, 1000, 1000};
    }
    return {};
}

namespace {

std::vector<double> parse_numbers(const std::string& flag, const std::string& text, std::size_t count) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (item.empty() || end != item.c_str() + item.size() || !std::isfinite(v)) {
            throw UsageError(flag + ": '" + text + "' is not a list of " + std::to_string(count) + " numbers");
        }
        values.push_back(v);
    }
    if (values.size() != count || (!text.empty() && text.back() == ',')) {
        throw UsageError(flag + ": expected " + std::to_string(count) + " comma-separated numbers, got '" + text +
                         "'");
    }
    return values;
}

std::pair<int, int> parse_resolution(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos) throw UsageError("--res: expected WxH, got '" + text + "'");
    const auto parse_int = [&](const std::string& s) {
        char* end = nullptr;
        const long v = std::strtol(s.c_str(), &end, 10);
        if (s.empty() || end != s.c_str() + s.size() || v <= 0 || v > 100000) {
            throw UsageError("--res: expected positive WxH, got '" + text + "'");
        }
        return static_cast<int>(v);
    };
    return {parse_int(text.substr(0, x)), parse_int(text.substr(x + 1))};
}

void configure(CLI::App& app, std::string& mode, std::string& family, std::string& window, std::string& res,
               int& max_iter, double& esc, std::string& param, bool& shift, std::string& out, std::string& grid_out,
               int& threads, bool& oracle_check) {
    app.set_help_flag();
    app.add_option("--mode", mode, "param | capture | dyn | stability")->required();
    app.add_option("--family", family, "kim | cheby | ermakov | sixth")->required();
    app.add_option("--window", window, "xmin,xmax,ymin,ymax");
    app.add_option("--res", res, "WxH (default 1000x1000)");
    app.add_option("--max-iter", max_iter, "iteration budget (500, or 2000 in dyn mode)");
    app.add_option("--esc", esc, "escape radius; eps is 1/esc (default 1e4)");
    app.add_option("--param", param, "re,im parameter (dyn mode)");
    app.add_flag("--shift", shift, "one orbit short of full convergence uses the gradient");
    app.add_option("--out", out, "output PPM path")->required();
    app.add_option("--grid-out", grid_out, "classification grid CSV path (param/capture)");
    app.add_option("--threads", threads, "worker threads, 0 = auto");
    app.add_flag("--oracle-check", oracle_check, "cross-check closed-form critical points on a 1% sample");
}

} // namespace

std::string usage() {
    CLI::App app{"Parameter and dynamical planes of Newton-like operators", "paramplane"};
    std::string s;
    double d = 0;
    int i = 0;
    bool b = false;
    configure(app, s, s, s, s, i, d, s, b, s, s, i, b);
    return app.help();
}

RenderJob parse_args(const std::vector<std::string>& args) {
    CLI::App app{"paramplane", "paramplane"};
    std::string mode, family, window, res, param, out, grid_out;
    int max_iter = -1;
    double esc = 1e4;
    bool shift = false, oracle_check = false;
    int threads = 0;
    configure(app, mode, family, window, res, max_iter, esc, param, shift, out, grid_out, threads, oracle_check);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RenderJob job;
    if (mode == "param") job.mode = Mode::Param;
    else if (mode == "capture") job.mode = Mode::Capture;
    else if (mode == "dyn") job.mode = Mode::Dyn;
    else if (mode == "stability") job.mode = Mode::Stability;
    else throw UsageError("--mode: unknown mode '" + mode + "'");

    const auto fam = parse_family(family);
    if (!fam) throw UsageError("--family: unknown family '" + family + "'");
    job.family = *fam;

    job.window = default_window(job.mode, job.family);
    if (!window.empty()) {
        const auto w = parse_numbers("--window", window, 4);
        job.window.xmin = w[0];
        job.window.xmax = w[1];
        job.window.ymin = w[2];
        job.window.ymax = w[3];
    }
    if (!res.empty()) std::tie(job.window.width, job.window.height) = parse_resolution(res);
    job.window.validate();

    if (!param.empty()) {
        const auto p = parse_numbers("--param", param, 2);
        job.param = Complex{p[0], p[1]};
    }

    if (max_iter == -1) max_iter = job.mode == Mode::Dyn ? EscapeConfig::kDynMaxIter : EscapeConfig::kParamMaxIter;
    if (max_iter < 1) throw ValidationError("--max-iter must be positive");
    if (!(esc > 1.0)) throw ValidationError("--esc must exceed 1");
    job.cfg = EscapeConfig(esc, max_iter);
    if (threads < 0) throw ValidationError("--threads must be non-negative");
    job.workers = threads;
    job.shift = shift;
    job.oracle_check = oracle_check;
    job.out = out;
    if (!grid_out.empty()) job.grid_out = grid_out;

    if (job.mode == Mode::Dyn && !job.param) throw ValidationError("--mode dyn requires --param re,im");
    if (job.mode != Mode::Dyn && job.param) throw ValidationError("--param is only valid with --mode dyn");
    if (job.mode == Mode::Capture && free_critical_count(job.family) != 2) {
        throw ValidationError("--mode capture needs a family with two representative critical points; '" +
                              family + "' has " + std::to_string(free_critical_count(job.family)));
    }
    if (job.shift && job.mode != Mode::Param) throw ValidationError("--shift is only valid with --mode param");
    const bool grid_mode = job.mode == Mode::Param || job.mode == Mode::Capture;
    if (job.grid_out && !grid_mode) throw ValidationError("--grid-out is only valid with --mode param or capture");
    if (job.oracle_check && !grid_mode) {
        throw ValidationError("--oracle-check is only valid with --mode param or capture");
    }
    return job;
}

std::string encode_ppm(const RasterImage& img) {
    std::string data = "P6\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
    data.append(reinterpret_cast<const char*>(img.bytes().data()), img.bytes().size());
    return data;
}

void write_ppm(const RasterImage& img, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    const std::string data = encode_ppm(img);
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!f) throw IoError("write to '" + path + "' failed");
}

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void write_grid_csv(const ParamGrid& grid, std::ostream& os) {
    os << "re,im,n_free,n_converged,slowest_iters,verdict,degenerate\n";
    for (const ParamCell& c : grid.cells) {
        os << format_double(c.a.real()) << ',' << format_double(c.a.imag()) << ',';
        if (c.degenerate) {
            os << ",,,none,true\n";
            continue;
        }
        const char* verdict = "none";
        if (c.verdict == CycleVerdict::Capture) verdict = "capture";
        if (c.verdict == CycleVerdict::Disjoint) verdict = "disjoint";
        os << c.n_free << ',' << c.n_converged << ',' << c.slowest_iters << ',' << verdict << ",false\n";
    }
}

void write_grid_csv(const ParamGrid& grid, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    write_grid_csv(grid, f);
    if (!f) throw IoError("write to '" + path + "' failed");
}

namespace {

std::string format_complex(Complex z) {
    if (is_infinite(z)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
    return buf;
}

double percent(long part, long whole) { return whole == 0 ? 0.0 : 100.0 * double(part) / double(whole); }

} // namespace

int run(const RenderJob& job, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    const long pixels = static_cast<long>(job.window.width) * job.window.height;
    const SweepOptions sweep{job.workers, job.oracle_check};
    std::string stage = "render";
    try {
        RasterImage image;
        std::optional<ParamGrid> grid;
        long converged = 0;
        std::vector<std::string> details;

        switch (job.mode) {
        case Mode::Param:
        case Mode::Capture: {
            ParamPlane plane = job.mode == Mode::Param
                                   ? render_parameter_plane(job.family, job.window, job.cfg, job.palette, job.shift,
                                                            sweep)
                                   : render_capture_plane(job.family, job.window, job.cfg, job.palette, sweep);
            for (const auto& c : plane.grid.cells) converged += (!c.degenerate && c.n_converged == c.n_free);
            if (job.oracle_check) {
                details.push_back("oracle check: " + std::to_string(plane.oracle_mismatches) + " mismatches in " +
                                  std::to_string(plane.oracle_samples) + " samples");
            }
            image = std::move(plane.image);
            grid = std::move(plane.grid);
            break;
        }
        case Mode::Dyn: {
            stage = "instantiate";
            const FamilyId id{job.family, *job.param};
            const NewtonLikeOperator op = instantiate(id);
            stage = "critical points";
            const CriticalSet crit = closed_form_criticals(id);
            stage = "render";
            const auto targets = default_targets(job.family, job.cfg);
            DynamicalPlane plane = render_dynamical_plane(op, job.window, job.cfg, job.palette, crit, targets, sweep);
            for (const auto& o : plane.outcomes) converged += o.to_root();
            for (const Complex& c : crit.representatives) {
                const OrbitOutcome o = classify_orbit(op, c, job.cfg, targets);
                std::string line = "critical " + format_complex(c) + " -> " + to_string(o.kind);
                if (o.kind == OrbitKind::ToTarget) line += "(" + format_complex(targets[o.target].point) + ")";
                line += " after " + std::to_string(o.iterations) + " iterations";
                details.push_back(std::move(line));
            }
            image = std::move(plane.image);
            break;
        }
        case Mode::Stability: {
            StabilityMap map = render_stability_map(job.family, job.window, job.palette, sweep);
            for (double m : map.abs_multiplier_one) converged += (m < 1.0);
            image = std::move(map.image);
            break;
        }
        }

        stage = "write";
        write_ppm(image, job.out);
        if (grid && job.grid_out) write_grid_csv(*grid, *job.grid_out);

        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char summary[256];
        std::snprintf(summary, sizeof summary, "%s %s: %ld pixels in %.2f s, %.1f%% %s\n", to_string(job.mode),
                      std::string(to_string(job.family)).c_str(), pixels, seconds, percent(converged, pixels),
                      job.mode == Mode::Stability ? "with attracting z=1" : "converged");
        out << summary;
        for (const auto& d : details) out << d << '\n';
        return 0;
    } catch (const ValidationError& e) {
        err << "error [" << stage << "]: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error [" << stage << "]: " << e.what() << '\n';
        return 2;
    }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (std::any_of(args.begin(), args.end(), [](const std::string& a) { return a == "-h" || a == "--help"; })) {
        out << usage();
        return 0;
    }
    RenderJob job;
    try {
        job = parse_args(args);
    } catch (const Error& e) {
        err << "error [arguments]: " << e.what() << '\n';
        return 1;
    }
    return run(job, out, err);
}

} // namespace paramplane::cli
