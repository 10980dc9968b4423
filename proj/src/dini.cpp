#include "tracgeo/dini.hpp"

#include <cmath>
#include <stdexcept>

#include "tracgeo/frenet.hpp"

namespace tracgeo {

DiniParams make_dini_params(const CircularTractrixParams& tractrix, double a, double b) {
    if (a == 0.0 || b == 0.0)
        throw std::invalid_argument("skew-rotation speeds a and b must both be non-zero");
    return DiniParams{tractrix, a, b};
}

Mat4 skew_rotation(double a, double b, double phi) {
    const double ca = std::cos(a * phi), sa = std::sin(a * phi);
    const double cb = std::cos(b * phi), sb = std::sin(b * phi);
    return Mat4{{{ca, -sa, 0.0, 0.0},
                 {sa, ca, 0.0, 0.0},
                 {0.0, 0.0, cb, -sb},
                 {0.0, 0.0, sb, cb}}};
}

Vec4 embed(const DiniParams& params, double s, double phi) {
    const Vec3 point = tractrix_position(params.tractrix, s);
    return mat_vec(skew_rotation(params.a, params.b, phi), promote(point));
}

MetricComponents analytic_metric(const DiniParams& params, double s) {
    const CircularTractrixParams& p = params.tractrix;
    const double a = params.a;
    const double b = params.b;

    double a_sq = 0.0;   // meridian speed squared
    double b_sq = 0.0;   // pure-rotation term
    double cross = 0.0;  // coefficient of dphi inside (ds + cross dphi)^2
    switch (p.regime) {
        case Regime::SupUnit: {
            const double lam = *p.lambda;
            const double theta = lam * s + p.c3;
            const double den = p.c1 / p.r + std::cosh(theta);
            const double sh = std::sinh(theta);
            a_sq = lam * lam * sh * sh / (den * den);
            b_sq = lam * lam * (a * a * (p.r * p.r - 1.0) + b * b * p.c2 * p.c2) / (den * den);
            cross = p.r * a;
            break;
        }
        case Regime::Unit: {
            const double u = s + p.c3;
            const double den = p.c1 + u * u;
            a_sq = 4.0 * u * u / (den * den);
            b_sq = 4.0 * (a * a + b * b * p.c2 * p.c2) / (den * den);
            cross = a;
            break;
        }
        case Regime::SubUnit: {
            const double lam = *p.lambda;
            const double theta = lam * s + p.c3;
            const double den = p.c1 / p.r + std::cos(theta);
            const double sn = std::sin(theta);
            a_sq = lam * lam * sn * sn / (den * den);
            b_sq = lam * lam * (a * a * (1.0 - p.r * p.r) + b * b * p.c2 * p.c2) / (den * den);
            cross = p.r * a;
            break;
        }
    }
    return MetricComponents{a_sq, a_sq * cross, a_sq * cross * cross + b_sq};
}

double analytic_gauss_curvature(const DiniParams& params) {
    const CircularTractrixParams& p = params.tractrix;
    const double a = params.a;
    const double b = params.b;
    const double c2_sq = p.c2 * p.c2;
    double den = 0.0;
    switch (p.regime) {
        case Regime::SupUnit:
            den = a * a * (p.r * p.r - 1.0) + b * b * c2_sq;
            break;
        case Regime::Unit:
            den = a * a + b * b * c2_sq;
            break;
        case Regime::SubUnit:
            den = a * a * (1.0 - p.r * p.r) + b * b * c2_sq;
            break;
    }
    return c2_sq * (a * a - b * b) / den;
}

SweepResidual sweep_check(const DiniParams& params, double s, double phi, double fd_step) {
    const CircularTractrixParams& p = params.tractrix;

    // Segment direction in ambient E^3 coordinates, then rotated to E^4.
    const Vec3 v = eval_v(p, s);
    const FrenetFrame frame = circle_frenet(p.r, s);
    Vec3 v_amb{};
    for (int j = 0; j < 3; ++j)
        for (int c = 0; c < 3; ++c) v_amb[c] += v[j] * frame.xi[j][c];
    const Mat4 rot = skew_rotation(params.a, params.b, phi);
    const Vec4 w = mat_vec(rot, promote(v_amb));

    const Vec4 f = embed(params, s, phi);
    const Vec4 q{f[0] - w[0], f[1] - w[1], f[2] - w[2], f[3] - w[3]};
    const double radial = std::sqrt(q[0] * q[0] + q[1] * q[1]) - p.r;
    const double circle = std::sqrt(radial * radial + q[2] * q[2] + q[3] * q[3]);

    const double h = fd_step;
    const Vec4 fm2 = embed(params, s - 2.0 * h, phi);
    const Vec4 fm1 = embed(params, s - h, phi);
    const Vec4 fp1 = embed(params, s + h, phi);
    const Vec4 fp2 = embed(params, s + 2.0 * h, phi);
    Vec4 df{};
    for (int c = 0; c < 4; ++c)
        df[c] = (fm2[c] - 8.0 * fm1[c] + 8.0 * fp1[c] - fp2[c]) / (12.0 * h);

    return SweepResidual{circle, norm(reject(df, w))};
}

}  // namespace tracgeo
