#pragma once

#include "tracgeo/circular_tractrix.hpp"
#include "tracgeo/vec.hpp"

namespace tracgeo {

// Helicoidal surface in E^4 swept from a circular tractrix by a skew rotation
// with angular speeds a and b in the x1x2- and x3x4-planes.
struct DiniParams {
    CircularTractrixParams tractrix;  // general branch only
    double a = 1.0;
    double b = 1.0;
};

// Validates a != 0, b != 0; the tractrix params are general-branch by
// construction.
DiniParams make_dini_params(const CircularTractrixParams& tractrix, double a, double b);

// First fundamental form in (s, phi) coordinates.
struct MetricComponents {
    double g11 = 0.0;
    double g12 = 0.0;
    double g22 = 0.0;

    double det() const { return g11 * g22 - g12 * g12; }
};

// Block-diagonal rotation by a*phi in coordinates (1,2) and b*phi in (3,4).
Mat4 skew_rotation(double a, double b, double phi);

// Surface point: skew rotation applied to the tractrix point promoted to E^4.
Vec4 embed(const DiniParams& params, double s, double phi);

// Closed-form first fundamental form, independent of phi. The cross term is
// g12 = g11 * (r a) for r != 1 and g11 * a in the unit regime.
MetricComponents analytic_metric(const DiniParams& params, double s);

// Constant Gauss curvature of the surface:
//   r > 1:  c2^2 (a^2 - b^2) / (a^2 (r^2 - 1) + b^2 c2^2)
//   r = 1:  c2^2 (a^2 - b^2) / (a^2 + b^2 c2^2)
//   r < 1:  c2^2 (a^2 - b^2) / (a^2 (1 - r^2) + b^2 c2^2)
double analytic_gauss_curvature(const DiniParams& params);

struct SweepResidual {
    double circle = 0.0;    // distance of embed - w to {x1^2 + x2^2 = r^2, x3 = x4 = 0}
    double tangency = 0.0;  // component of d/ds embed orthogonal to w
};

// Transports the unit segment w = rotation * (v promoted to E^4) and checks
// that the segment endpoints land on the directrix circle and that the
// meridian velocity stays parallel to w. The s-derivative is taken by
// 4th-order central differences with the given step.
SweepResidual sweep_check(const DiniParams& params, double s, double phi, double fd_step = 1e-4);

}  // namespace tracgeo
