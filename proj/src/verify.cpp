#include "tracgeo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "tracgeo/diffgeo.hpp"
#include "tracgeo/dini.hpp"
#include "tracgeo/tractrix_ode.hpp"

namespace tracgeo {

namespace {

constexpr double kPi = std::numbers::pi;

struct SurfaceWindow {
    DiniParams params;
    double s_min, s_max;
    double phi_min, phi_max;
};

std::vector<CircularTractrixParams> branch_matrix() {
    const double sqrt2 = std::sqrt(2.0);
    const double sqrt5 = std::sqrt(5.0);
    return {
        make_circular_tractrix_params(0.5, sqrt2, 1.0, 0.0),
        make_circular_tractrix_params(0.5, -sqrt5, 2.0, 0.4),
        make_circular_tractrix_params(0.5, 1.0, 0.0, 1.0),
        make_circular_tractrix_params(0.9, sqrt2, -1.0, 0.3),
        make_circular_tractrix_params(1.0, 1.0, 0.0, 0.5),
        make_circular_tractrix_params(1.0, 2.0, 1.0, 0.0),
        make_circular_tractrix_params(1.0, 1.25, -0.5, 1.0),
        make_circular_tractrix_params(1.1, 0.6, 0.8, 0.0),
        make_circular_tractrix_params(1.1, -1.0, 0.0, 0.2),
        make_circular_tractrix_params(2.0, 1.0, 0.0, 0.0),
        make_circular_tractrix_params(2.0, 0.6, 0.8, 0.3),
        make_circular_tractrix_params(2.0, 0.0, 1.0, -0.5),
        make_circular_tractrix_params(5.0, -0.6, 0.8, 0.7),
    };
}

// Reference configurations per regime in windows clear of singular points.
std::vector<SurfaceWindow> surface_windows() {
    return {
        {make_dini_params(make_circular_tractrix_params(2.0, 0.6, 0.8, 0.0), 2.0, 1.0), 0.5, 3.5,
         0.0, kPi},
        {make_dini_params(make_circular_tractrix_params(1.0, 2.0, 1.0, 0.0), 1.0, 3.0), 0.5, 3.5,
         0.0, 2.0 * kPi / 3.0},
        {make_dini_params(make_circular_tractrix_params(0.5, std::sqrt(2.0), 1.0, 0.0), 1.0, 2.0),
         0.3, 1.5, 0.0, kPi},
    };
}

CheckResult upper(std::string name, double measured, double threshold) {
    CheckResult r;
    r.name = std::move(name);
    r.measured = measured;
    r.threshold = threshold;
    r.lower_bound = false;
    r.pass = measured <= threshold;
    return r;
}

CheckResult lower(std::string name, double measured, double threshold) {
    CheckResult r;
    r.name = std::move(name);
    r.measured = measured;
    r.threshold = threshold;
    r.lower_bound = true;
    r.pass = measured >= threshold;
    return r;
}

void branch_checks(std::vector<CheckResult>& out) {
    double max_ode = 0.0;
    double max_norm = 0.0;
    double max_second = 0.0;
    for (const auto& params : branch_matrix()) {
        for (int i = 0; i < 201; ++i) {
            const double s = -5.0 + 10.0 * i / 200.0;
            max_ode = std::max(max_ode, max_abs(ode_residual(params, s)));
            max_norm = std::max(max_norm, std::abs(norm(eval_v(params, s)) - 1.0));
            max_second = std::max(max_second, std::abs(second_order_residual(params, s)));
        }
    }
    out.push_back(upper("branch_ode_residual_max", max_ode, 1e-9));
    out.push_back(upper("branch_unit_norm_error_max", max_norm, 1e-12));
    out.push_back(upper("branch_second_order_residual_max", max_second, 1e-6));
}

double closed_form_match_error(const CircularTractrixParams& params, double step,
                               double half_range) {
    const Vec3 v0 = eval_v(params, 0.0);
    IntegrationConfig config;
    config.step = step;
    config.s_min = -half_range;
    config.s_max = half_range;
    const auto samples = integrate(circle_directrix_spec(params.r), VecN{v0.begin(), v0.end()},
                                   config);
    double max_err = 0.0;
    for (const auto& sample : samples) {
        const Vec3 v = eval_v(params, sample.s);
        for (int c = 0; c < 3; ++c)
            max_err = std::max(max_err, std::abs(sample.state[c] - v[c]));
    }
    return max_err;
}

void integrator_checks(std::vector<CheckResult>& out) {
    const auto refs = std::vector<CircularTractrixParams>{
        make_circular_tractrix_params(2.0, 0.6, 0.8, 0.3),
        make_circular_tractrix_params(1.0, 2.0, 1.0, 0.5),
        make_circular_tractrix_params(0.5, std::sqrt(2.0), 1.0, 0.2),
    };
    double max_err = 0.0;
    for (const auto& params : refs)
        max_err = std::max(max_err, closed_form_match_error(params, 1e-3, 5.0));
    out.push_back(upper("integrator_closed_form_error_max", max_err, 1e-6));

    const auto reference = make_circular_tractrix_params(2.0, 0.6, 0.8, 0.3);
    const double err_h = closed_form_match_error(reference, 0.04, 5.0);
    const double err_h2 = closed_form_match_error(reference, 0.02, 5.0);
    out.push_back(lower("integrator_convergence_order", std::log2(err_h / err_h2), 3.5));

    double max_rhs = 0.0;
    for (const auto& [regime, r] : std::vector<std::pair<Regime, double>>{
             {Regime::SupUnit, 2.0}, {Regime::Unit, 1.0}, {Regime::SubUnit, 0.5}}) {
        for (int sign : {+1, -1}) {
            const Vec3 v = stationary_v(regime, r, sign);
            max_rhs = std::max(max_rhs,
                               norm(ode_rhs(VecN{v.begin(), v.end()}, circle_directrix_spec(r))));
        }
    }
    out.push_back(upper("stationary_ode_rhs_norm_max", max_rhs, 1e-14));

    double max_drift = 0.0;
    for (const auto& params : refs) {
        const Vec3 v0 = eval_v(params, 0.0);
        IntegrationConfig config;
        config.step = 1e-3;
        config.s_min = -10.0;
        config.s_max = 10.0;
        const auto samples = integrate(circle_directrix_spec(params.r),
                                       VecN{v0.begin(), v0.end()}, config);
        for (const auto& sample : samples) max_drift = std::max(max_drift, sample.norm_drift);
    }
    out.push_back(upper("integrator_norm_drift_max", max_drift, 1e-8));
}

void metric_checks(std::vector<CheckResult>& out) {
    std::mt19937 rng(20240817u);
    double max_diff = 0.0;
    double max_phi_dep = 0.0;
    for (const auto& window : surface_windows()) {
        std::uniform_real_distribution<double> s_dist(window.s_min, window.s_max);
        std::uniform_real_distribution<double> phi_dist(window.phi_min, window.phi_max);
        const SurfaceFn surface = [&window](double s, double phi) {
            return embed(window.params, s, phi);
        };
        int accepted = 0;
        while (accepted < 100) {
            const double s = s_dist(rng);
            const double phi = phi_dist(rng);
            if (std::abs(eval_v(window.params.tractrix, s)[0]) <= 1e-3) continue;
            ++accepted;
            const MetricComponents numeric =
                first_fundamental_form(jet(surface, s, phi, 1e-4));
            const MetricComponents closed = analytic_metric(window.params, s);
            max_diff = std::max({max_diff, std::abs(numeric.g11 - closed.g11),
                                 std::abs(numeric.g12 - closed.g12),
                                 std::abs(numeric.g22 - closed.g22)});
        }
        const double s_mid = 0.5 * (window.s_min + window.s_max);
        const MetricComponents base = first_fundamental_form(jet(surface, s_mid, 0.0, 1e-4));
        for (double phi : {0.7, 2.1}) {
            const MetricComponents other =
                first_fundamental_form(jet(surface, s_mid, phi, 1e-4));
            max_phi_dep = std::max({max_phi_dep, std::abs(other.g11 - base.g11),
                                    std::abs(other.g12 - base.g12),
                                    std::abs(other.g22 - base.g22)});
        }
    }
    out.push_back(upper("metric_analytic_vs_numeric_max", max_diff, 1e-8));
    out.push_back(upper("metric_phi_dependence_max", max_phi_dep, 1e-10));
}

void curvature_checks(std::vector<CheckResult>& out) {
    for (const auto& window : surface_windows()) {
        CurvatureGridSpec grid;
        grid.s_min = window.s_min;
        grid.s_max = window.s_max;
        grid.phi_min = window.phi_min;
        grid.phi_max = window.phi_max;
        const CurvatureReport report = curvature_grid_report(window.params, grid);
        const std::string tag = regime_name(window.params.tractrix.regime);
        out.push_back(upper("curvature_relative_error " + tag, report.relative_error, 1e-4));
        out.push_back(upper("curvature_max_deviation " + tag, report.max_abs_deviation,
                            1e-4 * std::max(1.0, std::abs(report.analytic))));
    }

    const auto flats = std::vector<DiniParams>{
        make_dini_params(make_circular_tractrix_params(2.0, 0.6, 0.8, 0.0), 1.5, 1.5),
        make_dini_params(make_circular_tractrix_params(2.0, 1.0, 0.0, 0.0), 2.0, 1.0),
    };
    double max_flat = 0.0;
    for (const auto& params : flats) {
        CurvatureGridSpec grid;
        grid.s_min = 0.5;
        grid.s_max = 3.5;
        grid.phi_min = 0.0;
        grid.phi_max = kPi;
        const CurvatureReport report = curvature_grid_report(params, grid);
        for (double k : report.estimates) max_flat = std::max(max_flat, std::abs(k));
    }
    out.push_back(upper("curvature_flat_cases_max", max_flat, 1e-6));
}

void sweep_checks(std::vector<CheckResult>& out) {
    double max_circle = 0.0;
    double max_tangency = 0.0;
    for (const auto& window : surface_windows()) {
        for (int i = 0; i < 16; ++i) {
            const double s = window.s_min + (window.s_max - window.s_min) * i / 15.0;
            for (int j = 0; j < 16; ++j) {
                const double phi =
                    window.phi_min + (window.phi_max - window.phi_min) * j / 15.0;
                const SweepResidual residual = sweep_check(window.params, s, phi);
                max_circle = std::max(max_circle, residual.circle);
                max_tangency = std::max(max_tangency, residual.tangency);
            }
        }
    }
    out.push_back(upper("sweep_circle_residual_max", max_circle, 1e-10));
    out.push_back(upper("sweep_tangency_residual_max", max_tangency, 1e-8));
}

// The numerator variant as printed for the unit regime; violates |v| = 1 for
// c3 != 0 and is kept only as a regression fixture.
Vec3 unit_branch_printed_variant(double c1, double c2, double c3, double s) {
    const double u = s + c3;
    const double den = c1 + u * u;
    return {-(2.0 * s + c3) / den, 1.0 - 2.0 / den, 2.0 * c2 / den};
}

void unit_printed_checks(std::vector<CheckResult>& out) {
    const double printed_err =
        std::abs(norm(unit_branch_printed_variant(1.0, 0.0, 1.0, 0.0)) - 1.0);
    out.push_back(upper("unit_printed_numerator_norm_error", printed_err, 1e-12));

    const auto corrected = make_circular_tractrix_params(1.0, 1.0, 0.0, 1.0);
    const double corrected_err = std::abs(norm(eval_v(corrected, 0.0)) - 1.0);
    out.push_back(upper("unit_corrected_numerator_norm_error", corrected_err, 1e-12));
}

}  // namespace

std::vector<std::string> known_suites() {
    return {"default", "branches", "integrator", "metric", "curvature", "sweep", "unit-printed"};
}

bool is_known_suite(const std::string& name) {
    const auto suites = known_suites();
    return std::find(suites.begin(), suites.end(), name) != suites.end();
}

std::vector<CheckResult> run_suite(const std::string& name) {
    if (!is_known_suite(name)) throw std::invalid_argument("unknown verification suite: " + name);

    std::vector<CheckResult> out;
    if (name == "branches" || name == "default") branch_checks(out);
    if (name == "integrator" || name == "default") integrator_checks(out);
    if (name == "metric" || name == "default") metric_checks(out);
    if (name == "curvature" || name == "default") curvature_checks(out);
    if (name == "sweep" || name == "default") sweep_checks(out);
    if (name == "unit-printed") unit_printed_checks(out);
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace tracgeo
