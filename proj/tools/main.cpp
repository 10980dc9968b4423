// tracgeo: circular tractrices and skew-rotation surfaces in E^4.
//
// Subcommands: tractrix, integrate, surface, curvature, verify.
// Exit codes: 0 success, 1 validation or check failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tracgeo/diffgeo.hpp"
#include "tracgeo/dini.hpp"
#include "tracgeo/tractrix_ode.hpp"
#include "tracgeo/verify.hpp"

namespace {

using nlohmann::json;
using namespace tracgeo;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Missing or malformed command-line inputs; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    double r = std::numeric_limits<double>::quiet_NaN();  // required, flag or config
    double c1 = 1.0, c2 = 0.0, c3 = 0.0;
    double a = 1.0, b = 2.0;
    double s_min = -5.0, s_max = 5.0;
    double phi_min = 0.0, phi_max = 0.0;
    std::string grid = "32x32";
    int samples = 201;
    double step = 1e-3;
    std::string format;
    std::string out;
    std::string config;
    double margin = 1e-3;
    std::vector<double> k;
    std::vector<double> v0;
    int drop_axis = 4;
    std::string suite = "default";
    std::string metric_source = "analytic";
    double jet_step = 1e-3;
};

// Writes either to --out or to stdout. Files are opened in binary mode so the
// emitted bytes are exactly what the writers produce.
class OutputSink {
  public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::pair<int, int> parse_grid(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos)
        throw CLI::ValidationError("--grid", "expected NxM, e.g. 32x32, got '" + text + "'");
    try {
        const int n = std::stoi(text.substr(0, x));
        const int m = std::stoi(text.substr(x + 1));
        return {n, m};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--grid", "expected NxM, e.g. 32x32, got '" + text + "'");
    }
}

// Config-file values fill in only the flags the user did not pass.
void apply_config_file(const Options& opts, CLI::App* cmd,
                       const std::vector<std::pair<std::string, std::function<void(const json&)>>>&
                           setters) {
    if (opts.config.empty()) return;
    std::ifstream in(opts.config);
    if (!in) throw std::runtime_error("cannot open config file: " + opts.config);
    json j;
    in >> j;
    for (const auto& [key, apply] : setters) {
        if (!j.contains(key)) continue;
        std::string flag_name = "--" + key;
        for (auto& c : flag_name)
            if (c == '_') c = '-';
        const CLI::Option* opt = cmd->get_option_no_throw(flag_name);
        if (opt != nullptr && opt->count() > 0) continue;
        apply(j.at(key));
    }
}

CircularTractrixParams tractrix_params_from(const Options& opts) {
    if (std::isnan(opts.r)) throw UsageError("--r is required (as a flag or a config key)");
    return make_circular_tractrix_params(opts.r, opts.c1, opts.c2, opts.c3);
}

DiniParams dini_params_from(const Options& opts) {
    return make_dini_params(tractrix_params_from(opts), opts.a, opts.b);
}

double default_phi_max(const Options& opts) {
    return 2.0 * std::numbers::pi / std::max(std::abs(opts.a), std::abs(opts.b));
}

int run_tractrix(const Options& opts) {
    if (opts.samples < 2) throw std::invalid_argument("--samples must be at least 2");
    if (!(opts.s_min < opts.s_max)) throw std::invalid_argument("need s_min < s_max");
    const CircularTractrixParams params = tractrix_params_from(opts);

    OutputSink sink(opts.out);
    std::ostream& os = sink.stream();
    os << "s,x1,x2,x3,v1,v2,v3,speed,regular\n";
    for (int i = 0; i < opts.samples; ++i) {
        const double s =
            opts.s_min + (opts.s_max - opts.s_min) * i / static_cast<double>(opts.samples - 1);
        const Vec3 f = tractrix_position(params, s);
        const Vec3 v = eval_v(params, s);
        const double speed = std::abs(v[0]);
        os << fmt(s) << ',' << fmt(f[0]) << ',' << fmt(f[1]) << ',' << fmt(f[2]) << ','
           << fmt(v[0]) << ',' << fmt(v[1]) << ',' << fmt(v[2]) << ',' << fmt(speed) << ','
           << (speed > 1e-8 ? 1 : 0) << '\n';
    }
    return 0;
}

int run_integrate(const Options& opts) {
    if (opts.k.empty()) throw UsageError("--k (curvature list) is required");
    if (opts.v0.empty()) throw UsageError("--v0 (initial unit vector) is required");
    const int n = static_cast<int>(opts.v0.size());
    if (n < 2 || n > 6)
        throw std::invalid_argument("integrate supports dimensions 2..6, got v0 of size " +
                                    std::to_string(n));

    DirectrixSpec spec{n, opts.k};
    IntegrationConfig config;
    config.step = opts.step;
    config.s_min = opts.s_min;
    config.s_max = opts.s_max;

    const auto samples = integrate(spec, opts.v0, config);

    OutputSink sink(opts.out);
    std::ostream& os = sink.stream();
    os << "s";
    for (int j = 1; j <= n; ++j) os << ",v" << j;
    os << ",norm_drift,speed\n";
    for (const auto& sample : samples) {
        os << fmt(sample.s);
        for (double vj : sample.state) os << ',' << fmt(vj);
        os << ',' << fmt(sample.norm_drift) << ',' << fmt(sample.speed) << '\n';
    }
    return 0;
}

int run_surface(const Options& opts) {
    const DiniParams params = dini_params_from(opts);
    const auto [n_s, n_phi] = parse_grid(opts.grid);
    if (n_s < 2 || n_phi < 2) throw std::invalid_argument("surface grid must be at least 2x2");
    if (!(opts.s_min < opts.s_max)) throw std::invalid_argument("need s_min < s_max");
    const double phi_max = opts.phi_max;
    if (!(opts.phi_min < phi_max)) throw std::invalid_argument("need phi_min < phi_max");
    OutputSink sink(opts.out);
    std::ostream& os = sink.stream();

    auto point = [&](int i, int j) {
        const double s = opts.s_min + (opts.s_max - opts.s_min) * i / (n_s - 1.0);
        const double phi = opts.phi_min + (phi_max - opts.phi_min) * j / (n_phi - 1.0);
        return embed(params, s, phi);
    };

    if (opts.format == "csv") {
        os << "s,phi,x1,x2,x3,x4\n";
        for (int i = 0; i < n_s; ++i) {
            const double s = opts.s_min + (opts.s_max - opts.s_min) * i / (n_s - 1.0);
            for (int j = 0; j < n_phi; ++j) {
                const double phi = opts.phi_min + (phi_max - opts.phi_min) * j / (n_phi - 1.0);
                const Vec4 f = point(i, j);
                os << fmt(s) << ',' << fmt(phi) << ',' << fmt(f[0]) << ',' << fmt(f[1]) << ','
                   << fmt(f[2]) << ',' << fmt(f[3]) << '\n';
            }
        }
        return 0;
    }

    // OBJ has no 4D vertices; project by dropping one axis.
    for (int i = 0; i < n_s; ++i) {
        for (int j = 0; j < n_phi; ++j) {
            const Vec4 f = point(i, j);
            os << "v";
            for (int c = 0; c < 4; ++c)
                if (c != opts.drop_axis - 1) os << ' ' << fmt(f[c]);
            os << '\n';
        }
    }
    for (int i = 0; i + 1 < n_s; ++i) {
        for (int j = 0; j + 1 < n_phi; ++j) {
            const int base = i * n_phi + j + 1;  // OBJ indices are 1-based
            os << "f " << base << ' ' << base + n_phi << ' ' << base + n_phi + 1 << ' '
               << base + 1 << '\n';
        }
    }
    return 0;
}

int run_curvature(const Options& opts) {
    const DiniParams params = dini_params_from(opts);
    const auto [n_s, n_phi] = parse_grid(opts.grid);

    CurvatureGridSpec grid;
    grid.s_min = opts.s_min;
    grid.s_max = opts.s_max;
    grid.phi_min = opts.phi_min;
    grid.phi_max = opts.phi_max;
    grid.n_s = n_s;
    grid.n_phi = n_phi;
    grid.h = opts.step;
    grid.margin = opts.margin;
    grid.source =
        opts.metric_source == "embed" ? MetricSource::Embedding : MetricSource::Analytic;
    grid.jet_step = opts.jet_step;

    const CurvatureReport report = curvature_grid_report(params, grid);

    json j;
    j["analytic_K"] = report.analytic;
    j["mean_K"] = report.mean;
    j["max_abs_deviation"] = report.max_abs_deviation;
    j["relative_error"] = report.relative_error;
    j["excluded_points"] = report.excluded_points;
    j["included_points"] = static_cast<int>(report.estimates.size());
    j["grid"] = {report.n_s, report.n_phi};
    j["margin"] = grid.margin;
    j["metric_source"] = opts.metric_source;
    j["s_range"] = {grid.s_min, grid.s_max};
    j["phi_range"] = {grid.phi_min, grid.phi_max};
    j["params"] = {{"r", opts.r}, {"c1", opts.c1}, {"c2", opts.c2},
                   {"c3", opts.c3}, {"a", opts.a}, {"b", opts.b}};

    OutputSink sink(opts.out);
    sink.stream() << j.dump(2) << '\n';
    return 0;
}

int run_verify(const Options& opts) {
    if (!is_known_suite(opts.suite)) {
        std::cerr << "error: unknown verification suite '" << opts.suite << "'; known suites:";
        for (const auto& name : known_suites()) std::cerr << ' ' << name;
        std::cerr << '\n';
        return 2;
    }

    const auto results = run_suite(opts.suite);

    json checks = json::array();
    int failed = 0;
    for (const auto& r : results) {
        checks.push_back({{"name", r.name},
                          {"measured", r.measured},
                          {"threshold", r.threshold},
                          {"comparison", r.lower_bound ? ">=" : "<="},
                          {"pass", r.pass}});
        if (!r.pass) ++failed;
    }
    json j;
    j["suite"] = opts.suite;
    j["checks"] = checks;
    j["passed"] = static_cast<int>(results.size()) - failed;
    j["failed"] = failed;
    j["ok"] = failed == 0;

    OutputSink sink(opts.out);
    sink.stream() << j.dump(2) << '\n';
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular tractrices and constant-curvature skew-rotation surfaces in E^4"};
    app.require_subcommand(1);

    Options opts;

    auto add_tractrix_params = [&opts](CLI::App* cmd) {
        cmd->add_option("--r", opts.r, "directrix circle radius (required)");
        cmd->add_option("--c1", opts.c1, "integration constant c1");
        cmd->add_option("--c2", opts.c2, "integration constant c2");
        cmd->add_option("--c3", opts.c3, "integration constant c3 (rotation about x3)");
    };
    auto add_range = [&opts](CLI::App* cmd) {
        cmd->add_option("--s-min", opts.s_min, "arc-length range start");
        cmd->add_option("--s-max", opts.s_max, "arc-length range end");
    };
    auto add_common = [&opts](CLI::App* cmd) {
        cmd->add_option("--out", opts.out, "output path (default: stdout)");
        cmd->add_option("--config", opts.config, "JSON config file; flags override its values");
    };

    CLI::App* tractrix = app.add_subcommand("tractrix", "sample a circular tractrix to CSV");
    add_tractrix_params(tractrix);
    add_range(tractrix);
    add_common(tractrix);
    tractrix->add_option("--samples", opts.samples, "number of samples");
    tractrix->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv"}))
        ->default_val("csv");

    CLI::App* integrate_cmd =
        app.add_subcommand("integrate", "integrate the tractrix system for a "
                                        "constant-curvature directrix to CSV");
    integrate_cmd->add_option("--k", opts.k, "curvatures k1..k(n-1)")->delimiter(',');
    integrate_cmd->add_option("--v0", opts.v0, "initial unit vector v(0)")->delimiter(',');
    integrate_cmd->add_option("--step", opts.step, "integration step");
    add_range(integrate_cmd);
    add_common(integrate_cmd);
    integrate_cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv"}))
        ->default_val("csv");

    CLI::App* surface = app.add_subcommand("surface", "mesh or sample the swept surface");
    add_tractrix_params(surface);
    surface->add_option("--a", opts.a, "rotation speed in the x1x2-plane");
    surface->add_option("--b", opts.b, "rotation speed in the x3x4-plane");
    add_range(surface);
    CLI::Option* surface_phi_max = surface->add_option("--phi-max", opts.phi_max, "phi range end");
    surface->add_option("--phi-min", opts.phi_min, "phi range start");
    surface->add_option("--grid", opts.grid, "grid size NxM");
    surface->add_option("--drop-axis", opts.drop_axis, "axis dropped for the OBJ projection")
        ->check(CLI::Range(1, 4));
    add_common(surface);
    surface->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "obj"}))
        ->default_val("obj");

    CLI::App* curvature =
        app.add_subcommand("curvature", "Gauss-curvature grid report as JSON");
    add_tractrix_params(curvature);
    curvature->add_option("--a", opts.a, "rotation speed in the x1x2-plane");
    curvature->add_option("--b", opts.b, "rotation speed in the x3x4-plane");
    add_range(curvature);
    CLI::Option* curvature_phi_max =
        curvature->add_option("--phi-max", opts.phi_max, "phi range end");
    curvature->add_option("--phi-min", opts.phi_min, "phi range start");
    curvature->add_option("--grid", opts.grid, "grid size NxM");
    curvature->add_option("--step", opts.step, "metric-derivative step");
    curvature->add_option("--margin", opts.margin, "singular-point exclusion margin on |v1|");
    curvature->add_option("--metric-source", opts.metric_source,
                          "metric fed to the curvature estimator")
        ->check(CLI::IsMember({"analytic", "embed"}));
    curvature->add_option("--jet-step", opts.jet_step, "embedding-jet step for --metric-source=embed");
    add_common(curvature);
    curvature->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json"}))
        ->default_val("json");

    CLI::App* verify = app.add_subcommand("verify", "run a built-in verification suite");
    verify->add_option("--suite", opts.suite, "suite name (see README)");
    add_common(verify);
    verify->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json"}))
        ->default_val("json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CLI::App* cmd = app.get_subcommands().front();

    try {
        // Scalar config keys shared across commands.
        const std::vector<std::pair<std::string, std::function<void(const json&)>>> setters = {
            {"r", [&](const json& v) { opts.r = v.get<double>(); }},
            {"c1", [&](const json& v) { opts.c1 = v.get<double>(); }},
            {"c2", [&](const json& v) { opts.c2 = v.get<double>(); }},
            {"c3", [&](const json& v) { opts.c3 = v.get<double>(); }},
            {"a", [&](const json& v) { opts.a = v.get<double>(); }},
            {"b", [&](const json& v) { opts.b = v.get<double>(); }},
            {"s_min", [&](const json& v) { opts.s_min = v.get<double>(); }},
            {"s_max", [&](const json& v) { opts.s_max = v.get<double>(); }},
            {"phi_min", [&](const json& v) { opts.phi_min = v.get<double>(); }},
            {"phi_max", [&](const json& v) { opts.phi_max = v.get<double>(); }},
            {"grid", [&](const json& v) { opts.grid = v.get<std::string>(); }},
            {"samples", [&](const json& v) { opts.samples = v.get<int>(); }},
            {"step", [&](const json& v) { opts.step = v.get<double>(); }},
            {"format", [&](const json& v) { opts.format = v.get<std::string>(); }},
            {"out", [&](const json& v) { opts.out = v.get<std::string>(); }},
            {"margin", [&](const json& v) { opts.margin = v.get<double>(); }},
            {"k", [&](const json& v) { opts.k = v.get<std::vector<double>>(); }},
            {"v0", [&](const json& v) { opts.v0 = v.get<std::vector<double>>(); }},
            {"drop_axis", [&](const json& v) { opts.drop_axis = v.get<int>(); }},
            {"suite", [&](const json& v) { opts.suite = v.get<std::string>(); }},
            {"metric_source", [&](const json& v) { opts.metric_source = v.get<std::string>(); }},
            {"jet_step", [&](const json& v) { opts.jet_step = v.get<double>(); }},
        };
        apply_config_file(opts, cmd, setters);

        // phi range defaults to one short rotation period.
        if (cmd == surface && surface_phi_max->count() == 0 && opts.phi_max == 0.0)
            opts.phi_max = default_phi_max(opts);
        if (cmd == curvature && curvature_phi_max->count() == 0 && opts.phi_max == 0.0)
            opts.phi_max = default_phi_max(opts);

        if (cmd == tractrix) return run_tractrix(opts);
        if (cmd == integrate_cmd) return run_integrate(opts);
        if (cmd == surface) return run_surface(opts);
        if (cmd == curvature) return run_curvature(opts);
        if (cmd == verify) return run_verify(opts);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
