#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include <betti_thermo/cech.hpp>
#include <betti_thermo/homology.hpp>

#include "complex_util.hpp"

using namespace bthermo;

namespace {
std::vector<std::vector<int>> dense(const BoundaryMatrix& m)
{
    std::vector<std::vector<int>> d(m.rows, std::vector<int>(m.cols, 0));
    for (std::size_t c = 0; c < m.cols; ++c)
        for (auto r : m.columns[c])
            d[r][c] ^= 1;
    return d;
}

BoundaryMatrix from_dense(const std::vector<std::vector<int>>& d)
{
    BoundaryMatrix m;
    m.rows = d.size();
    m.cols = d.empty() ? 0 : d[0].size();
    m.columns.resize(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c)
        for (std::size_t r = 0; r < m.rows; ++r)
            if (d[r][c])
                m.columns[c].push_back(static_cast<std::uint32_t>(r));
    return m;
}

std::vector<long long> as_ll(const BettiVector& b)
{
    return {b.values.begin(), b.values.end()};
}

SimplicialComplex torus7()
{
    std::vector<std::vector<Vertex>> tri;
    for (Vertex i = 0; i < 7; ++i) {
        tri.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tri.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_simplices(7, 3, tri);
}

SimplicialComplex projective_plane6()
{
    return SimplicialComplex::from_simplices(6, 3,
                                             {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                              {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}
}  // namespace

TEST_CASE("boundary matrices of triangles")
{
    const auto h = boundary_matrix(testutil::hollow_triangle(), 1);
    CHECK(h.rows == 3);
    CHECK(h.cols == 3);
    for (const auto& col : h.columns)
        CHECK(col.size() == 2);
    const auto f = boundary_matrix(testutil::filled_triangle(), 2);
    CHECK(f.rows == 3);
    CHECK(f.cols == 1);
    CHECK(f.columns[0].size() == 3);
    CHECK_THROWS_AS(boundary_matrix(testutil::filled_triangle(), 0), std::invalid_argument);
    CHECK_THROWS_AS(boundary_matrix(testutil::filled_triangle(), 3), std::invalid_argument);
}

TEST_CASE("boundary of a boundary vanishes")
{
    std::mt19937_64 gen(1);
    for (int trial = 0; trial < 30; ++trial) {
        const auto cloud = testutil::random_cloud(gen, 12, 3);
        const auto cx = build_cech(cloud, 0.7, 3);
        for (int j = 1; j + 1 <= 3; ++j) {
            const auto a = dense(boundary_matrix(cx, j));
            const auto b = dense(boundary_matrix(cx, j + 1));
            for (int c = 0; c < static_cast<int>(cx.count(j + 1)); ++c)
                for (std::size_t r = 0; r < a.size(); ++r) {
                    int s = 0;
                    for (std::size_t m = 0; m < b.size(); ++m)
                        s ^= a[r][m] & b[m][c];
                    REQUIRE(s == 0);
                }
            for (const auto& col : boundary_matrix(cx, j).columns)
                REQUIRE(col.size() == static_cast<std::size_t>(j + 1));
        }
    }
}

TEST_CASE("rank over GF(2)")
{
    CHECK(rank_gf2(from_dense({{0, 0}, {0, 0}})) == 0);
    CHECK(rank_gf2(from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank_gf2(from_dense({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}})) == 2);
    CHECK(rank_gf2(BoundaryMatrix{}) == 0);
    std::mt19937_64 gen(2);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t rows = 1 + gen() % (trial < 1000 ? 8 : 64);
        const std::size_t cols = 1 + gen() % (trial < 1000 ? 8 : 64);
        const double p = 0.05 + 0.5 * static_cast<double>(gen() % 100) / 100.0;
        std::bernoulli_distribution bit(p);
        std::vector<std::vector<int>> d(rows, std::vector<int>(cols));
        for (auto& row : d)
            for (auto& x : row)
                x = bit(gen);
        REQUIRE(rank_gf2(from_dense(d)) == oracle::dense_rank(d));
    }
}

TEST_CASE("Betti numbers of known spaces")
{
    CHECK(as_ll(betti_numbers(testutil::hollow_triangle(), 1)) == std::vector<long long>{1, 1});
    CHECK(as_ll(betti_numbers(testutil::filled_triangle(), 1)) == std::vector<long long>{1, 0});
    const auto sphere = SimplicialComplex::from_simplices(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(as_ll(betti_numbers(sphere, 2)) == std::vector<long long>{1, 0, 1});
    CHECK(as_ll(betti_numbers(torus7(), 2)) == std::vector<long long>{1, 2, 1});
    CHECK(as_ll(betti_numbers(projective_plane6(), 2)) == std::vector<long long>{1, 1, 1});
    const auto square = PointCloud::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 2);
    CHECK(as_ll(betti_numbers(build_cech(square, 1.05, 2), 1)) == std::vector<long long>{1, 1});
    CHECK(as_ll(betti_numbers(SimplicialComplex(2, 1, 0), 0)) == std::vector<long long>{0});
}

TEST_CASE("insufficient max_dim is rejected")
{
    CHECK_THROWS_AS(betti_numbers(testutil::filled_triangle(1), 1), std::invalid_argument);
    CHECK_NOTHROW(betti_numbers(testutil::filled_triangle(2), 1));
    CHECK_THROWS_AS(betti_numbers(testutil::filled_triangle(2), -1), std::invalid_argument);
}

TEST_CASE("Betti numbers match the dense oracle on random complexes")
{
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 120; ++trial) {
        const int d = 2 + trial % 2;
        const std::size_t n = 5 + gen() % 6;
        const auto cloud = testutil::random_cloud(gen, n, d);
        const double r = 0.3 + 0.6 * std::uniform_real_distribution<double>(0.0, 1.0)(gen);
        const auto pts = testutil::points_of(cloud);
        for (bool rips : {false, true}) {
            const auto cx = rips ? build_rips(cloud, r, 3) : build_cech(cloud, r, 3);
            REQUIRE(as_ll(betti_numbers(cx, 2)) == oracle::dense_betti(oracle::brute_complex(pts, r, 3, rips), 2));
        }
    }
}

TEST_CASE("Betti numbers are invariant under relabelling")
{
    std::mt19937_64 gen(4);
    for (int trial = 0; trial < 40; ++trial) {
        auto pts = testutil::points_of(testutil::random_cloud(gen, 30, 2, 2.5));
        const auto a = betti_numbers(build_cech(PointCloud::from_points(pts, 2), 0.6, 2), 1);
        std::shuffle(pts.begin(), pts.end(), gen);
        const auto b = betti_numbers(build_cech(PointCloud::from_points(pts, 2), 0.6, 2), 1);
        REQUIRE(a == b);
    }
}

TEST_CASE("connected components")
{
    const auto spread = PointCloud::from_points({{0, 0}, {2, 0}, {0, 2}, {5, 5}}, 2);
    CHECK(connected_components(spread, 1.0) == 4);
    std::vector<std::vector<double>> chain;
    for (int i = 0; i < 10; ++i)
        chain.push_back({0.9 * i});
    CHECK(connected_components(PointCloud::from_points(chain, 1), 1.0) == 1);
    CHECK_THROWS_AS(connected_components(spread, 0.0), std::invalid_argument);
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 1 + trial % 3;
        const auto cloud = testutil::random_cloud(gen, 1 + gen() % 50, d, 3.0);
        const double r = 0.1 + 0.01 * trial;
        const auto cc = connected_components(cloud, r);
        REQUIRE(cc == oracle::brute_components(testutil::points_of(cloud), r));
        REQUIRE(cc == betti_numbers(build_cech(cloud, r, 1), 0)[0]);
    }
}

TEST_CASE("Euler-Poincare identity")
{
    CHECK(euler_check(testutil::hollow_triangle(), betti_numbers(testutil::hollow_triangle(), 1)));
    CHECK(euler_check(testutil::filled_triangle(3), betti_numbers(testutil::filled_triangle(3), 2)));
    CHECK_THROWS_AS(euler_check(testutil::filled_triangle(2), betti_numbers(testutil::filled_triangle(2), 1)),
                    std::invalid_argument);
    std::mt19937_64 gen(6);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 2 + trial % 2;
        const std::size_t n = 3 + gen() % 10;
        const auto cloud = testutil::random_cloud(gen, n, d);
        const int full = static_cast<int>(cloud.size());
        const auto cx = build_cech(cloud, 0.3 + 0.01 * trial, full);
        REQUIRE(euler_check(cx, betti_numbers(cx, full - 1)));
    }
}

TEST_CASE("Betti-difference bound")
{
    const auto filled = testutil::filled_triangle();
    CHECK(betti_diff_bound_check(filled, filled, 1));
    const auto b = betti_diff_bound(testutil::hollow_triangle(), filled, 1);
    CHECK(b.lhs() == 1);
    CHECK(b.rhs() == 1);
    CHECK(b.holds());
    CHECK_THROWS_AS(betti_diff_bound_check(filled, testutil::hollow_triangle(), 1), std::invalid_argument);
    CHECK_THROWS_AS(betti_diff_bound_check(filled, filled, 0), std::invalid_argument);

    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 60; ++trial) {
        const auto cloud = testutil::random_cloud(gen, 25, 2, 2.0);
        const double r1 = 0.4 + 0.01 * trial;
        const auto k1 = build_cech(cloud, r1, 3);
        const auto k2 = build_cech(cloud, r1 * 1.25, 3);
        // oracle: count the set difference directly
        const auto s1 = testutil::simplex_sets(k1), s2 = testutil::simplex_sets(k2);
        for (int k = 1; k <= 2; ++k) {
            std::size_t diff = 0;
            for (int j = k; j <= k + 1; ++j)
                for (const auto& s : s2[j])
                    diff += s1[j].count(s) ? 0 : 1;
            const auto bound = betti_diff_bound(k1, k2, k);
            REQUIRE(bound.rhs() == diff);
            REQUIRE(bound.holds());
        }
    }
}
