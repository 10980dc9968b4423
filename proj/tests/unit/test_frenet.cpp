#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "tracgeo/frenet.hpp"

using namespace tracgeo;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("circle position at reference points") {
    const Vec3 p0 = circle_position(2.0, 0.0);
    CHECK(p0[0] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(p0[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(p0[2] == 0.0);

    const Vec3 p1 = circle_position(1.0, kPi / 2.0);
    CHECK(std::abs(p1[0]) < 1e-12);
    CHECK(p1[1] == doctest::Approx(1.0).epsilon(1e-15));

    // Independent trig evaluation: (2 cos(pi/2), 2 sin(pi/2), 0).
    const Vec3 p2 = circle_position(2.0, kPi);
    CHECK(std::abs(p2[0] - 2.0 * std::cos(kPi / 2.0)) < 1e-15);
    CHECK(std::abs(p2[1] - 2.0 * std::sin(kPi / 2.0)) < 1e-15);
    CHECK(std::abs(p2[0]) < 1e-12);
    CHECK(std::abs(p2[1] - 2.0) < 1e-12);
}

TEST_CASE("circle frame at reference points") {
    const FrenetFrame f = circle_frenet(2.0, 0.0);
    CHECK(f.xi[0][0] == 0.0);
    CHECK(f.xi[0][1] == 1.0);
    CHECK(f.xi[1][0] == -1.0);
    CHECK(f.xi[1][1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(f.xi[2][2] == 1.0);

    const FrenetFrame g = circle_frenet(1.0, kPi);
    CHECK(std::abs(g.xi[0][0]) < 1e-12);        // -sin(pi)
    CHECK(std::abs(g.xi[0][1] + 1.0) < 1e-12);  // cos(pi)
}

TEST_CASE("circle frame is orthonormal for random radius and arc length") {
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> radius(0.05, 20.0);
    std::uniform_real_distribution<double> arc(-50.0, 50.0);
    for (int i = 0; i < 200; ++i) {
        CHECK(is_orthonormal(circle_frenet(radius(rng), arc(rng)), 1e-12));
    }
}

TEST_CASE("circle curvature data") {
    const DirectrixSpec one = circle_directrix_spec(1.0);
    CHECK(one.dimension == 3);
    CHECK(one.curvatures[0] == 1.0);
    CHECK(one.curvatures[1] == 0.0);
    CHECK(circle_directrix_spec(2.0).curvatures[0] == 0.5);
    CHECK(circle_directrix_spec(0.5).curvatures[0] == 2.0);
}

TEST_CASE("non-positive radius is rejected") {
    CHECK_THROWS_AS(circle_position(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(circle_frenet(-1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(circle_directrix_spec(-2.0), std::invalid_argument);
}

TEST_CASE("finite differences reproduce the frame equations") {
    std::mt19937 rng(11u);
    std::uniform_real_distribution<double> radius(0.3, 5.0);
    std::uniform_real_distribution<double> arc(-10.0, 10.0);
    for (int i = 0; i < 50; ++i) {
        const double r = radius(rng);
        const double s = arc(rng);
        const double h = 1e-6;

        // d/ds position = xi_1
        const Vec3 fp = circle_position(r, s + h);
        const Vec3 fm = circle_position(r, s - h);
        const FrenetFrame frame = circle_frenet(r, s);
        for (int c = 0; c < 3; ++c)
            CHECK(std::abs((fp[c] - fm[c]) / (2.0 * h) - frame.xi[0][c]) < 1e-8);

        // d/ds xi_1 = k1 xi_2
        const FrenetFrame frame_p = circle_frenet(r, s + h);
        const FrenetFrame frame_m = circle_frenet(r, s - h);
        for (int c = 0; c < 3; ++c) {
            const double d = (frame_p.xi[0][c] - frame_m.xi[0][c]) / (2.0 * h);
            CHECK(std::abs(d - frame.xi[1][c] / r) < 1e-6);
        }
    }
}

TEST_CASE("directrix spec validation") {
    CHECK_THROWS_AS(validate(DirectrixSpec{3, {1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(DirectrixSpec{1, {}}), std::invalid_argument);
    CHECK_NOTHROW(validate(DirectrixSpec{4, {1.0, 0.5, 0.25}}));
}
