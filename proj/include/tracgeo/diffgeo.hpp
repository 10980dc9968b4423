#pragma once

#include <functional>
#include <vector>

#include "tracgeo/dini.hpp"
#include "tracgeo/vec.hpp"

namespace tracgeo {

using SurfaceFn = std::function<Vec4(double s, double phi)>;
using MetricFn = std::function<MetricComponents(double s, double phi)>;

// Finite-difference 2-jet of a parametric surface at one point.
struct EmbeddingJet {
    Vec4 f{};
    Vec4 f_s{}, f_phi{};
    Vec4 f_ss{}, f_sphi{}, f_phiphi{};
};

// Central differences on the 5x5 stencil around (s, phi): 4th order for the
// first partials and for the second partials (the 3-point second-difference
// noise floor at double precision is above the tolerances this jet serves).
EmbeddingJet jet(const SurfaceFn& surface, double s, double phi, double h);

// E = <f_s, f_s>, F = <f_s, f_phi>, G = <f_phi, f_phi>.
MetricComponents first_fundamental_form(const EmbeddingJet& jet);

// Intrinsic Gauss curvature from the metric alone via the Brioschi
// determinant formula, with 4th-order central differences of the metric
// components on a 5x5 stencil of spacing h.
//
// Throws std::runtime_error if det g <= 1e-12 anywhere on the stencil.
double brioschi_curvature(const MetricFn& metric, double s, double phi, double h);

// Which metric field feeds the curvature grid: the closed-form first
// fundamental form, or the one recovered numerically from embed partials.
enum class MetricSource { Analytic, Embedding };

struct CurvatureGridSpec {
    double s_min = 0.5, s_max = 3.5;
    double phi_min = 0.0, phi_max = 3.141592653589793;
    int n_s = 32, n_phi = 32;
    double h = 1e-3;           // metric-derivative step for Brioschi
    double margin = 1e-3;      // exclude points with |v1| <= margin
    MetricSource source = MetricSource::Analytic;
    double jet_step = 1e-3;    // embed-jet step when source == Embedding
};

struct CurvatureReport {
    int n_s = 0, n_phi = 0;
    std::vector<double> estimates;  // included points only
    int excluded_points = 0;
    double mean = 0.0;
    double max_abs_deviation = 0.0;  // from the mean
    double analytic = 0.0;
    double relative_error = 0.0;  // |mean - analytic| / |analytic|, or |mean| if analytic == 0
};

// Evaluates brioschi_curvature on a regular grid, skipping points within the
// singular margin, and aggregates statistics against the closed-form value.
//
// Throws std::runtime_error if every grid point is excluded.
CurvatureReport curvature_grid_report(const DiniParams& params, const CurvatureGridSpec& grid);

}  // namespace tracgeo
