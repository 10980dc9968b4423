#include "tracgeo/diffgeo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tracgeo {

namespace {

// 4th-order central differences over offsets -2..2, written as differences of
// symmetric pairs so constant inputs cancel exactly.
double diff1(const double y[5], double h) {
    return (8.0 * (y[3] - y[1]) + (y[0] - y[4])) / (12.0 * h);
}

double diff2(const double y[5], double h) {
    return (16.0 * ((y[1] - y[2]) + (y[3] - y[2])) - ((y[0] - y[2]) + (y[4] - y[2]))) /
           (12.0 * h * h);
}

struct MetricStencil {
    // g[i][j] holds the metric at (s + (i-2) h, phi + (j-2) h).
    MetricComponents g[5][5];

    void row_s(double MetricComponents::*c, double y[5]) const {
        for (int i = 0; i < 5; ++i) y[i] = g[i][2].*c;
    }
    void row_phi(double MetricComponents::*c, double y[5]) const {
        for (int j = 0; j < 5; ++j) y[j] = g[2][j].*c;
    }

    double d_s(double MetricComponents::*c, double h) const {
        double y[5];
        row_s(c, y);
        return diff1(y, h);
    }
    double d_phi(double MetricComponents::*c, double h) const {
        double y[5];
        row_phi(c, y);
        return diff1(y, h);
    }
    double d_ss(double MetricComponents::*c, double h) const {
        double y[5];
        row_s(c, y);
        return diff2(y, h);
    }
    double d_phiphi(double MetricComponents::*c, double h) const {
        double y[5];
        row_phi(c, y);
        return diff2(y, h);
    }
    double d_sphi(double MetricComponents::*c, double h) const {
        double inner[5];
        for (int i = 0; i < 5; ++i) {
            double y[5];
            for (int j = 0; j < 5; ++j) y[j] = g[i][j].*c;
            inner[i] = diff1(y, h);
        }
        return diff1(inner, h);
    }
};

double det3(const double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

EmbeddingJet jet(const SurfaceFn& surface, double s, double phi, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("jet step must be positive");

    Vec4 fs[5][5];
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) fs[i][j] = surface(s + (i - 2) * h, phi + (j - 2) * h);

    EmbeddingJet out;
    out.f = fs[2][2];
    for (int c = 0; c < 4; ++c) {
        double ys[5], yp[5], inner[5];
        for (int i = 0; i < 5; ++i) {
            ys[i] = fs[i][2][c];
            yp[i] = fs[2][i][c];
            double row[5];
            for (int j = 0; j < 5; ++j) row[j] = fs[i][j][c];
            inner[i] = diff1(row, h);
        }
        out.f_s[c] = diff1(ys, h);
        out.f_phi[c] = diff1(yp, h);
        out.f_ss[c] = diff2(ys, h);
        out.f_phiphi[c] = diff2(yp, h);
        out.f_sphi[c] = diff1(inner, h);
    }
    return out;
}

MetricComponents first_fundamental_form(const EmbeddingJet& jet) {
    return MetricComponents{dot(jet.f_s, jet.f_s), dot(jet.f_s, jet.f_phi),
                            dot(jet.f_phi, jet.f_phi)};
}

double brioschi_curvature(const MetricFn& metric, double s, double phi, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("brioschi step must be positive");

    MetricStencil st;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            st.g[i][j] = metric(s + (i - 2) * h, phi + (j - 2) * h);
            if (st.g[i][j].det() <= 1e-12)
                throw std::runtime_error("metric is degenerate near (s, phi) = (" +
                                         std::to_string(s) + ", " + std::to_string(phi) +
                                         "); Gauss curvature is undefined there");
        }
    }

    const MetricComponents& g = st.g[2][2];
    const double E = g.g11, F = g.g12, G = g.g22;

    const double E_u = st.d_s(&MetricComponents::g11, h);
    const double E_v = st.d_phi(&MetricComponents::g11, h);
    const double E_vv = st.d_phiphi(&MetricComponents::g11, h);
    const double F_u = st.d_s(&MetricComponents::g12, h);
    const double F_v = st.d_phi(&MetricComponents::g12, h);
    const double F_uv = st.d_sphi(&MetricComponents::g12, h);
    const double G_u = st.d_s(&MetricComponents::g22, h);
    const double G_v = st.d_phi(&MetricComponents::g22, h);
    const double G_uu = st.d_ss(&MetricComponents::g22, h);

    const double m1[3][3] = {
        {-0.5 * E_vv + F_uv - 0.5 * G_uu, 0.5 * E_u, F_u - 0.5 * E_v},
        {F_v - 0.5 * G_u, E, F},
        {0.5 * G_v, F, G},
    };
    const double m2[3][3] = {
        {0.0, 0.5 * E_v, 0.5 * G_u},
        {0.5 * E_v, E, F},
        {0.5 * G_u, F, G},
    };

    const double det_g = E * G - F * F;
    return (det3(m1) - det3(m2)) / (det_g * det_g);
}

CurvatureReport curvature_grid_report(const DiniParams& params, const CurvatureGridSpec& grid) {
    if (grid.n_s < 8 || grid.n_phi < 8)
        throw std::invalid_argument("curvature grid must be at least 8x8");
    if (!(grid.s_min < grid.s_max) || !(grid.phi_min < grid.phi_max))
        throw std::invalid_argument("curvature grid needs s_min < s_max and phi_min < phi_max");

    MetricFn metric;
    if (grid.source == MetricSource::Analytic) {
        metric = [&params](double s, double) { return analytic_metric(params, s); };
    } else {
        metric = [&params, &grid](double s, double phi) {
            return first_fundamental_form(
                jet([&params](double ss, double pp) { return embed(params, ss, pp); }, s, phi,
                    grid.jet_step));
        };
    }

    CurvatureReport report;
    report.n_s = grid.n_s;
    report.n_phi = grid.n_phi;
    report.analytic = analytic_gauss_curvature(params);

    const double ds = (grid.s_max - grid.s_min) / (grid.n_s - 1);
    const double dphi = (grid.phi_max - grid.phi_min) / (grid.n_phi - 1);

    double sum = 0.0;
    for (int i = 0; i < grid.n_s; ++i) {
        const double s = grid.s_min + i * ds;
        const bool regular = std::abs(eval_v(params.tractrix, s)[0]) > grid.margin;
        for (int j = 0; j < grid.n_phi; ++j) {
            if (!regular) {
                ++report.excluded_points;
                continue;
            }
            const double phi = grid.phi_min + j * dphi;
            const double k = brioschi_curvature(metric, s, phi, grid.h);
            report.estimates.push_back(k);
            sum += k;
        }
    }

    if (report.estimates.empty())
        throw std::runtime_error("all grid points fall within the singular margin " +
                                 std::to_string(grid.margin) + "; nothing to estimate");

    report.mean = sum / static_cast<double>(report.estimates.size());
    for (double k : report.estimates)
        report.max_abs_deviation = std::max(report.max_abs_deviation, std::abs(k - report.mean));
    const double diff = std::abs(report.mean - report.analytic);
    report.relative_error = report.analytic != 0.0 ? diff / std::abs(report.analytic) : diff;
    return report;
}

}  // namespace tracgeo
