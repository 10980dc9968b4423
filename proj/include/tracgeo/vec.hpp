#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace tracgeo {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;
using VecN = std::vector<double>;
using Mat4 = std::array<Vec4, 4>;

template <typename V>
double dot(const V& a, const V& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <typename V>
double norm(const V& a) {
    return std::sqrt(dot(a, a));
}

template <typename V>
double max_abs(const V& a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

inline Vec4 mat_vec(const Mat4& m, const Vec4& x) {
    Vec4 y{};
    for (int i = 0; i < 4; ++i)
        y[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2] + m[i][3] * x[3];
    return y;
}

inline Vec4 promote(const Vec3& x) { return {x[0], x[1], x[2], 0.0}; }

// Component of a orthogonal to the direction of b (b need not be unit).
template <typename V>
V reject(const V& a, const V& b) {
    const double scale = dot(a, b) / dot(b, b);
    V out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - scale * b[i];
    return out;
}

}  // namespace tracgeo
