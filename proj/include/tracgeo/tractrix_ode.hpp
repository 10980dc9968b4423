#pragma once

#include <vector>

#include "tracgeo/frenet.hpp"
#include "tracgeo/vec.hpp"

namespace tracgeo {

// Frenet-frame components v^1..v^n of the unit segment field.
using TractrixState = VecN;

struct IntegrationConfig {
    double step = 1e-3;       // arc length, > 0
    double s_min = -5.0;
    double s_max = 5.0;
    double norm_tolerance = 1e-9;
    bool renormalize = false;
    double regularity_threshold = 1e-8;
};

struct TractrixSample {
    double s = 0.0;
    TractrixState state;   // v^1..v^n
    VecN position;         // ambient point of the tractrix
    double speed = 0.0;    // |v^1|
    bool regular = false;  // speed above the regularity threshold
    double norm_drift = 0.0;  // | |v| - 1 |
};

// Right-hand side of the tractrix system: the tridiagonal skew curvature term
// applied to v, minus the first basis vector, plus v^1 v. Component j gets
//   -k_{j-1} v^{j-1} + k_j v^{j+1} + v^1 v^j    (absent neighbours are zero),
// with an extra -1 on component 1.
VecN ode_rhs(const TractrixState& state, const DirectrixSpec& spec);

// Classical 4th-order fixed-step integration from s = 0 outward to both ends
// of [s_min, s_max]; the sample grid is anchored at s = 0 (s_k = k * step).
//
// Requires | |v0| - 1 | <= norm_tolerance. Norm drift is monitored at every
// step and drift beyond 1e3 * norm_tolerance aborts with std::runtime_error;
// with renormalize set the state is projected back to the unit sphere after
// each step instead.
//
// Positions use the closed-form circle frames when the spec is the n = 3
// circle (k1 > 0, k2 = 0), anchored per the circle convention; any other
// constant-curvature directrix is co-integrated from the canonical data
// frame(0) = identity, position(0) = 0.
std::vector<TractrixSample> integrate(const DirectrixSpec& spec, const TractrixState& v0,
                                      const IntegrationConfig& config);

// Tractrix point from directrix data: frame_position + sum_j v^j xi_j.
VecN tractrix_position(const VecN& frame_position, const FrenetFrame& frame,
                       const TractrixState& state);

// Norm of the component orthogonal to v of the frame-coordinate velocity of
// f = directrix + v, assembled from the system right-hand side plus the
// Frenet transport terms. Along the tractrix flow that velocity is v^1 v, so
// the returned value is the floating-point defect of the tangency identity.
double tangency_residual(const DirectrixSpec& spec, const TractrixState& state);

}  // namespace tracgeo
