#pragma once

#include <optional>
#include <vector>

#include "tracgeo/vec.hpp"

namespace tracgeo {

// The solvability of the circular-tractrix system splits on r vs 1.
enum class Regime { SupUnit, Unit, SubUnit };

Regime classify_regime(double r, double tol = 1e-9);

const char* regime_name(Regime regime);

// Parameters of a general (non-stationary) circular tractrix branch.
//
// The integration constants obey one constraint per regime:
//   r > 1:  c1^2 + c2^2 = 1
//   r = 1:  c1 = 1 + c2^2
//   r < 1:  c1^2 - c2^2 = 1
// lambda = sqrt(r^2-1)/r (r > 1) or sqrt(1-r^2)/r (r < 1); unset at r = 1.
struct CircularTractrixParams {
    double r = 2.0;
    Regime regime = Regime::SupUnit;
    double c1 = 1.0;
    double c2 = 0.0;
    double c3 = 0.0;
    std::optional<double> lambda;
};

// Classifies the regime, checks the constraint to constraint_tol and caches
// lambda. Throws std::invalid_argument naming the violated constraint.
CircularTractrixParams make_circular_tractrix_params(double r, double c1, double c2, double c3,
                                                     double constraint_tol = 1e-12,
                                                     double regime_tol = 1e-9);

// Closed-form unit segment field (v1, v2, v3) of the general branch.
//
// In the unit regime the first component is -2(s+c3)/(c1+(s+c3)^2); with the
// constraint c1 = 1 + c2^2 this is the variant that keeps |v| = 1 for all c3.
Vec3 eval_v(const CircularTractrixParams& params, double s);

// Constant solutions: a concentric circle (r > 1) or a single point (r <= 1).
Vec3 stationary_v(Regime regime, double r, int sign = +1);

// Position of the circular tractrix reconstructed from the general branch.
Vec3 tractrix_position(const CircularTractrixParams& params, double s);

// Roots of v1(s) = 0 in [s_min, s_max]; located by sign-change bracketing on a
// dense grid plus bisection to 1e-10 in s.
std::vector<double> singular_points(const CircularTractrixParams& params, double s_min,
                                    double s_max);

// Finite-difference dv/ds minus the circle-system right-hand side; each
// component is near zero for a true branch.
Vec3 ode_residual(const CircularTractrixParams& params, double s);

// Residual of the second-order reduction for v1 alone:
//   v1'' - 3 v1 v1' + v1 (1/r^2 - 1) + v1^3.
double second_order_residual(const CircularTractrixParams& params, double s);

}  // namespace tracgeo
