#pragma once

#include <vector>

#include "tracgeo/vec.hpp"

namespace tracgeo {

// Orthonormal moving frame xi_1..xi_n along a directrix; xi_1 is the unit
// tangent. Stored as rows of length n.
struct FrenetFrame {
    std::vector<VecN> xi;

    std::size_t dimension() const { return xi.size(); }
};

// A directrix described by its constant curvatures k_1..k_{n-1}.
struct DirectrixSpec {
    int dimension = 3;
    std::vector<double> curvatures;  // exactly dimension-1 entries, units 1/length
};

// Throws std::invalid_argument if the curvature count does not match.
void validate(const DirectrixSpec& spec);

// true when every row is unit and pairwise orthogonal within tol.
bool is_orthonormal(const FrenetFrame& frame, double tol = 1e-12);

// Circle of radius r in the x1x2-plane, arc-length parametrized:
//   (r cos(s/r), r sin(s/r), 0).
Vec3 circle_position(double r, double s);

// Frame of the circle: tangent, inward normal, vertical binormal.
FrenetFrame circle_frenet(double r, double s);

// Curvature data of the circle: n=3, k1 = 1/r, k2 = 0.
DirectrixSpec circle_directrix_spec(double r);

}  // namespace tracgeo
