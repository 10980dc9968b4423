#include "tracgeo/circular_tractrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tracgeo/tractrix_ode.hpp"

namespace tracgeo {

namespace {

constexpr double kDenominatorFloor = 1e-14;

std::string compact(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double branch_denominator(const CircularTractrixParams& p, double s) {
    switch (p.regime) {
        case Regime::SupUnit:
            return p.c1 / p.r + std::cosh(*p.lambda * s + p.c3);
        case Regime::Unit: {
            const double u = s + p.c3;
            return p.c1 + u * u;
        }
        case Regime::SubUnit:
            return p.c1 / p.r + std::cos(*p.lambda * s + p.c3);
    }
    return 0.0;
}

// v1 alone, for root finding and regularity filters.
double v1_component(const CircularTractrixParams& p, double s) { return eval_v(p, s)[0]; }

double bisect_root(const CircularTractrixParams& p, double lo, double hi, double flo) {
    // flo carries the sign of v1 at lo; the bracket [lo, hi] contains a sign change.
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = v1_component(p, mid);
        if (fmid == 0.0) return mid;
        if ((flo < 0.0) == (fmid < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

Regime classify_regime(double r, double tol) {
    if (!(r > 0.0))
        throw std::invalid_argument("tractrix radius must be positive, got " + std::to_string(r));
    if (std::abs(r - 1.0) <= tol) return Regime::Unit;
    return r > 1.0 ? Regime::SupUnit : Regime::SubUnit;
}

const char* regime_name(Regime regime) {
    switch (regime) {
        case Regime::SupUnit: return "sup-unit (r > 1)";
        case Regime::Unit: return "unit (r = 1)";
        case Regime::SubUnit: return "sub-unit (r < 1)";
    }
    return "?";
}

CircularTractrixParams make_circular_tractrix_params(double r, double c1, double c2, double c3,
                                                     double constraint_tol, double regime_tol) {
    CircularTractrixParams p;
    p.r = r;
    p.regime = classify_regime(r, regime_tol);
    p.c1 = c1;
    p.c2 = c2;
    p.c3 = c3;
    switch (p.regime) {
        case Regime::SupUnit: {
            const double defect = c1 * c1 + c2 * c2 - 1.0;
            if (std::abs(defect) > constraint_tol)
                throw std::invalid_argument(
                    "sup-unit regime requires c1^2 + c2^2 = 1; got defect " + compact(defect));
            p.lambda = std::sqrt(r * r - 1.0) / r;
            break;
        }
        case Regime::Unit: {
            const double defect = c1 - 1.0 - c2 * c2;
            if (std::abs(defect) > constraint_tol)
                throw std::invalid_argument("unit regime requires c1 = 1 + c2^2; got defect " + compact(defect));
            p.lambda.reset();
            break;
        }
        case Regime::SubUnit: {
            const double defect = c1 * c1 - c2 * c2 - 1.0;
            if (std::abs(defect) > constraint_tol)
                throw std::invalid_argument(
                    "sub-unit regime requires c1^2 - c2^2 = 1; got defect " + compact(defect));
            p.lambda = std::sqrt(1.0 - r * r) / r;
            break;
        }
    }
    return p;
}

Vec3 eval_v(const CircularTractrixParams& p, double s) {
    const double den = branch_denominator(p, s);
    if (std::abs(den) < kDenominatorFloor)
        throw std::runtime_error("circular tractrix branch denominator vanished at s = " +
                                 std::to_string(s));
    switch (p.regime) {
        case Regime::SupUnit: {
            const double lam = *p.lambda;
            const double theta = lam * s + p.c3;
            return {-lam * std::sinh(theta) / den, (p.c1 + std::cosh(theta) / p.r) / den,
                    lam * p.c2 / den};
        }
        case Regime::Unit: {
            const double u = s + p.c3;
            return {-2.0 * u / den, 1.0 - 2.0 / den, 2.0 * p.c2 / den};
        }
        case Regime::SubUnit: {
            const double lam = *p.lambda;
            const double theta = lam * s + p.c3;
            return {lam * std::sin(theta) / den, (p.c1 + std::cos(theta) / p.r) / den,
                    lam * p.c2 / den};
        }
    }
    return {};
}

Vec3 stationary_v(Regime regime, double r, int sign) {
    if (classify_regime(r) != regime)
        throw std::invalid_argument(std::string("radius ") + std::to_string(r) +
                                    " does not lie in the " + regime_name(regime) + " regime");
    const double sgn = sign < 0 ? -1.0 : 1.0;
    switch (regime) {
        case Regime::SupUnit:
            return {sgn * std::sqrt(r * r - 1.0) / r, 1.0 / r, 0.0};
        case Regime::Unit:
            return {0.0, 1.0, 0.0};
        case Regime::SubUnit:
            return {0.0, r, sgn * std::sqrt(1.0 - r * r)};
    }
    return {};
}

Vec3 tractrix_position(const CircularTractrixParams& p, double s) {
    const Vec3 v = eval_v(p, s);
    const double c = std::cos(s / p.r);
    const double sn = std::sin(s / p.r);
    return {p.r * c - v[0] * sn - v[1] * c, p.r * sn + v[0] * c - v[1] * sn, v[2]};
}

std::vector<double> singular_points(const CircularTractrixParams& p, double s_min, double s_max) {
    if (!(s_min < s_max)) throw std::invalid_argument("singular_points needs s_min < s_max");

    double step = 0.01;
    if (p.regime == Regime::SubUnit) {
        const double period = 2.0 * std::numbers::pi / *p.lambda;
        step = std::min(step, period / 100.0);
    }

    std::vector<double> roots;
    auto push_root = [&](double s) {
        s = std::clamp(s, s_min, s_max);
        if (roots.empty() || std::abs(s - roots.back()) > 1e-8) roots.push_back(s);
    };

    // Pad the sweep by the root tolerance so zeros sitting on the interval
    // ends (where the branch value may round to the wrong sign) are caught.
    const double lo = s_min - 1e-10;
    const double hi = s_max + 1e-10;
    double prev_s = lo;
    double prev_f = v1_component(p, prev_s);
    if (prev_f == 0.0) push_root(prev_s);
    while (prev_s < hi) {
        const double cur_s = std::min(prev_s + step, hi);
        const double cur_f = v1_component(p, cur_s);
        if (cur_f == 0.0) {
            push_root(cur_s);
        } else if (prev_f != 0.0 && (prev_f < 0.0) != (cur_f < 0.0)) {
            push_root(bisect_root(p, prev_s, cur_s, prev_f));
        }
        prev_s = cur_s;
        prev_f = cur_f;
    }
    return roots;
}

Vec3 ode_residual(const CircularTractrixParams& p, double s) {
    const double h = 1e-5;
    // 4th-order central difference of each component of v.
    Vec3 dv{};
    const Vec3 vm2 = eval_v(p, s - 2.0 * h);
    const Vec3 vm1 = eval_v(p, s - h);
    const Vec3 vp1 = eval_v(p, s + h);
    const Vec3 vp2 = eval_v(p, s + 2.0 * h);
    for (int i = 0; i < 3; ++i)
        dv[i] = (vm2[i] - 8.0 * vm1[i] + 8.0 * vp1[i] - vp2[i]) / (12.0 * h);

    const Vec3 v = eval_v(p, s);
    const VecN rhs = ode_rhs(VecN{v.begin(), v.end()}, circle_directrix_spec(p.r));
    return {dv[0] - rhs[0], dv[1] - rhs[1], dv[2] - rhs[2]};
}

double second_order_residual(const CircularTractrixParams& p, double s) {
    const double h = 1e-4;
    const double m2 = eval_v(p, s - 2.0 * h)[0];
    const double m1 = eval_v(p, s - h)[0];
    const double v1 = eval_v(p, s)[0];
    const double p1 = eval_v(p, s + h)[0];
    const double p2 = eval_v(p, s + 2.0 * h)[0];

    const double d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    const double d2 = (-m2 + 16.0 * m1 - 30.0 * v1 + 16.0 * p1 - p2) / (12.0 * h * h);

    return d2 - 3.0 * v1 * d1 + v1 * (1.0 / (p.r * p.r) - 1.0) + v1 * v1 * v1;
}

}  // namespace tracgeo
