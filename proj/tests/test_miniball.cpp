#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include <betti_thermo/miniball.hpp>

#include "oracles.hpp"

using namespace bthermo;

TEST_CASE("miniball closed-form cases")
{
    CHECK(min_enclosing_ball_radius({{0.0, 0.0}, {1.0, 0.0}}) == Catch::Approx(0.5).epsilon(1e-12));
    CHECK(min_enclosing_ball_radius({{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}}) ==
          Catch::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(min_enclosing_ball_radius({{0.0}, {0.3}, {1.0}}) == Catch::Approx(0.5).epsilon(1e-12));
    CHECK(min_enclosing_ball_radius({{2.0, 3.0}}) == 0.0);
    // right triangle: hypotenuse midpoint
    CHECK(min_enclosing_ball_radius({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}) ==
          Catch::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
    // obtuse triangle: longest side dominates
    CHECK(min_enclosing_ball_radius({{0.0, 0.0}, {2.0, 0.0}, {1.0, 0.1}}) == Catch::Approx(1.0).epsilon(1e-12));
    // regular tetrahedron with edge sqrt(2)
    CHECK(min_enclosing_ball_radius({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}) ==
          Catch::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
    CHECK_THROWS_AS(min_enclosing_ball_radius(std::vector<std::vector<double>>{}), std::invalid_argument);
}

TEST_CASE("degenerate inputs")
{
    // repeated and cospherical points
    CHECK(min_enclosing_ball_radius({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}) == Catch::Approx(0.5).epsilon(1e-12));
    CHECK(min_enclosing_ball_radius({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}) == Catch::Approx(1.0).epsilon(1e-12));
    // collinear points in 3-d
    CHECK(min_enclosing_ball_radius({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {0.5, 0.5, 0.5}}) ==
          Catch::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("miniball matches the exhaustive oracle on random sets")
{
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int d = 1; d <= 4; ++d) {
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 1 + static_cast<int>(gen() % static_cast<unsigned>(d + 2));
            std::vector<std::vector<double>> pts(n, std::vector<double>(d));
            for (auto& p : pts)
                for (auto& x : p)
                    x = u(gen);
            std::vector<double> flat;
            for (const auto& p : pts)
                flat.insert(flat.end(), p.begin(), p.end());
            const Ball b = min_enclosing_ball(flat, d);
            for (const auto& p : pts)
                REQUIRE(std::sqrt(oracle::dist2(p, b.center)) <= b.radius + 1e-9);
            const double expect = oracle::miniball_radius(pts);
            REQUIRE(b.radius == Catch::Approx(expect).epsilon(1e-9).margin(1e-12));
        }
    }
}

TEST_CASE("miniball is invariant under point order")
{
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::vector<double>> pts(5, std::vector<double>(3));
        for (auto& p : pts)
            for (auto& x : p)
                x = u(gen);
        const double r0 = min_enclosing_ball_radius(pts);
        std::shuffle(pts.begin(), pts.end(), gen);
        REQUIRE(min_enclosing_ball_radius(pts) == Catch::Approx(r0).epsilon(1e-12));
    }
}
