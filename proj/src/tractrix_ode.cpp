#include "tracgeo/tractrix_ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tracgeo {

namespace {

std::string compact(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

void require_dimension_match(const TractrixState& state, const DirectrixSpec& spec) {
    validate(spec);
    if (state.size() != static_cast<std::size_t>(spec.dimension))
        throw std::invalid_argument("state has " + std::to_string(state.size()) +
                                    " components, directrix dimension is " +
                                    std::to_string(spec.dimension));
}

// Augmented unknown for the general case: v (n), frame rows (n*n), directrix
// position (n). The frame rows obey the Frenet-Serret equations, which share
// the tridiagonal skew matrix of the v-system.
struct AugmentedSystem {
    const DirectrixSpec& spec;
    bool with_frame;

    std::size_t size() const {
        const std::size_t n = spec.dimension;
        return with_frame ? n + n * n + n : n;
    }

    void rhs(const VecN& y, VecN& dy) const {
        const int n = spec.dimension;
        const auto& k = spec.curvatures;

        // v' = K v + v^1 v - e1
        const double v1 = y[0];
        for (int j = 0; j < n; ++j) {
            double acc = v1 * y[j];
            if (j > 0) acc -= k[j - 1] * y[j - 1];
            if (j + 1 < n) acc += k[j] * y[j + 1];
            dy[j] = acc;
        }
        dy[0] -= 1.0;

        if (!with_frame) return;

        // xi_j' = -k_{j-1} xi_{j-1} + k_j xi_{j+1}
        const double* xi = y.data() + n;
        double* dxi = dy.data() + n;
        for (int j = 0; j < n; ++j) {
            for (int c = 0; c < n; ++c) {
                double acc = 0.0;
                if (j > 0) acc -= k[j - 1] * xi[(j - 1) * n + c];
                if (j + 1 < n) acc += k[j] * xi[(j + 1) * n + c];
                dxi[j * n + c] = acc;
            }
        }

        // directrix' = xi_1
        for (int c = 0; c < n; ++c) dy[n + n * n + c] = xi[c];
    }
};

void rk4_step(const AugmentedSystem& sys, VecN& y, double h, VecN& k1, VecN& k2, VecN& k3,
              VecN& k4, VecN& tmp) {
    const std::size_t m = y.size();
    sys.rhs(y, k1);
    for (std::size_t i = 0; i < m; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    sys.rhs(tmp, k2);
    for (std::size_t i = 0; i < m; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    sys.rhs(tmp, k3);
    for (std::size_t i = 0; i < m; ++i) tmp[i] = y[i] + h * k3[i];
    sys.rhs(tmp, k4);
    for (std::size_t i = 0; i < m; ++i)
        y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

bool is_circle_spec(const DirectrixSpec& spec) {
    return spec.dimension == 3 && spec.curvatures[0] > 0.0 && spec.curvatures[1] == 0.0;
}

}  // namespace

VecN ode_rhs(const TractrixState& state, const DirectrixSpec& spec) {
    require_dimension_match(state, spec);
    AugmentedSystem sys{spec, false};
    VecN dy(state.size());
    sys.rhs(state, dy);
    return dy;
}

VecN tractrix_position(const VecN& frame_position, const FrenetFrame& frame,
                       const TractrixState& state) {
    const std::size_t n = frame_position.size();
    if (frame.dimension() != n || state.size() != n)
        throw std::invalid_argument("tractrix_position: dimension mismatch");
    VecN f = frame_position;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c < n; ++c) f[c] += state[j] * frame.xi[j][c];
    return f;
}

double tangency_residual(const DirectrixSpec& spec, const TractrixState& state) {
    require_dimension_match(state, spec);
    const int n = spec.dimension;
    const auto& k = spec.curvatures;

    VecN df = ode_rhs(state, spec);
    // Frenet transport of v plus the directrix tangent, in frame coordinates.
    for (int j = 0; j < n; ++j) {
        if (j > 0) df[j] += k[j - 1] * state[j - 1];
        if (j + 1 < n) df[j] -= k[j] * state[j + 1];
    }
    df[0] += 1.0;

    return norm(reject(df, state));
}

std::vector<TractrixSample> integrate(const DirectrixSpec& spec, const TractrixState& v0,
                                      const IntegrationConfig& config) {
    require_dimension_match(v0, spec);
    if (!(config.step > 0.0)) throw std::invalid_argument("integration step must be positive");
    if (!(config.s_min < config.s_max))
        throw std::invalid_argument("integration range needs s_min < s_max");
    if (!(config.step < config.s_max - config.s_min))
        throw std::invalid_argument("integration step exceeds the requested range");

    const double initial_drift = std::abs(norm(v0) - 1.0);
    if (initial_drift > config.norm_tolerance)
        throw std::invalid_argument("initial data must be a unit vector; | |v0| - 1 | = " +
                                    std::to_string(initial_drift));

    const int n = spec.dimension;
    const bool circle = is_circle_spec(spec);
    const double r = circle ? 1.0 / spec.curvatures[0] : 0.0;
    const double drift_limit = 1e3 * config.norm_tolerance;

    AugmentedSystem sys{spec, !circle};
    const std::size_t m = sys.size();

    VecN y0(m, 0.0);
    std::copy(v0.begin(), v0.end(), y0.begin());
    if (!circle) {
        for (int j = 0; j < n; ++j) y0[n + j * n + j] = 1.0;  // identity frame, origin anchor
    }

    const double h = config.step;
    const auto k_lo = static_cast<long long>(std::ceil(config.s_min / h - 1e-9));
    const auto k_hi = static_cast<long long>(std::floor(config.s_max / h + 1e-9));

    auto make_sample = [&](long long k, const VecN& y) {
        TractrixSample sample;
        sample.s = static_cast<double>(k) * h;
        sample.state.assign(y.begin(), y.begin() + n);
        sample.norm_drift = std::abs(norm(sample.state) - 1.0);
        sample.speed = std::abs(sample.state[0]);
        sample.regular = sample.speed > config.regularity_threshold;
        if (circle) {
            const Vec3 base = circle_position(r, sample.s);
            sample.position = tractrix_position(VecN{base.begin(), base.end()},
                                                circle_frenet(r, sample.s), sample.state);
        } else {
            FrenetFrame frame;
            frame.xi.resize(n);
            for (int j = 0; j < n; ++j)
                frame.xi[j].assign(y.begin() + n + j * n, y.begin() + n + (j + 1) * n);
            sample.position = tractrix_position(VecN(y.begin() + n + n * n, y.end()), frame,
                                                sample.state);
        }
        return sample;
    };

    VecN k1(m), k2(m), k3(m), k4(m), tmp(m);

    auto sweep = [&](long long k_end, double direction) {
        std::vector<TractrixSample> out;
        VecN y = y0;
        const long long count = direction > 0 ? k_end : -k_end;
        for (long long i = 1; i <= count; ++i) {
            rk4_step(sys, y, direction * h, k1, k2, k3, k4, tmp);
            double sq = 0.0;
            for (int j = 0; j < n; ++j) sq += y[j] * y[j];
            const double state_norm = std::sqrt(sq);
            if (config.renormalize) {
                const double scale = 1.0 / state_norm;
                for (int j = 0; j < n; ++j) y[j] *= scale;
            } else if (std::abs(state_norm - 1.0) > drift_limit) {
                throw std::runtime_error(
                    "norm drift " + compact(std::abs(state_norm - 1.0)) + " exceeded " +
                    compact(drift_limit) + " at s = " +
                    compact(static_cast<double>(i) * direction * h) +
                    "; reduce the step or enable renormalization");
            }
            const long long k = direction > 0 ? i : -i;
            if (k >= k_lo && k <= k_hi) out.push_back(make_sample(k, y));
        }
        return out;
    };

    std::vector<TractrixSample> backward = sweep(k_lo, -1.0);
    std::vector<TractrixSample> forward = sweep(k_hi, +1.0);

    std::vector<TractrixSample> samples;
    samples.reserve(backward.size() + forward.size() + 1);
    for (auto it = backward.rbegin(); it != backward.rend(); ++it) samples.push_back(std::move(*it));
    if (k_lo <= 0 && 0 <= k_hi) samples.push_back(make_sample(0, y0));
    for (auto& s : forward) samples.push_back(std::move(s));
    return samples;
}

}  // namespace tracgeo
