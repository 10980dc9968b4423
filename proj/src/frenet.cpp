#include "tracgeo/frenet.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tracgeo {

namespace {

void require_positive_radius(double r) {
    if (!(r > 0.0))
        throw std::invalid_argument("circle radius must be positive, got " + std::to_string(r));
}

}  // namespace

void validate(const DirectrixSpec& spec) {
    if (spec.dimension < 2)
        throw std::invalid_argument("directrix dimension must be >= 2");
    if (spec.curvatures.size() != static_cast<std::size_t>(spec.dimension - 1))
        throw std::invalid_argument("directrix in dimension " + std::to_string(spec.dimension) +
                                    " needs exactly " + std::to_string(spec.dimension - 1) +
                                    " curvatures, got " + std::to_string(spec.curvatures.size()));
}

bool is_orthonormal(const FrenetFrame& frame, double tol) {
    const std::size_t n = frame.dimension();
    for (std::size_t i = 0; i < n; ++i) {
        if (frame.xi[i].size() != n) return false;
        for (std::size_t j = i; j < n; ++j) {
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(dot(frame.xi[i], frame.xi[j]) - expected) > tol) return false;
        }
    }
    return true;
}

Vec3 circle_position(double r, double s) {
    require_positive_radius(r);
    return {r * std::cos(s / r), r * std::sin(s / r), 0.0};
}

FrenetFrame circle_frenet(double r, double s) {
    require_positive_radius(r);
    const double c = std::cos(s / r);
    const double sn = std::sin(s / r);
    FrenetFrame frame;
    frame.xi = {{-sn, c, 0.0}, {-c, -sn, 0.0}, {0.0, 0.0, 1.0}};
    return frame;
}

DirectrixSpec circle_directrix_spec(double r) {
    require_positive_radius(r);
    return DirectrixSpec{3, {1.0 / r, 0.0}};
}

}  // namespace tracgeo
