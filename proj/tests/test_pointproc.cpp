#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include <betti_thermo/pointproc.hpp>

#include "stats.hpp"

using namespace bthermo;

namespace {
const Window kUnit = Window::unit_cube(2);

std::size_t count_in(const PointCloud& c, const Window& w)
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        n += w.contains(c.point(i)) ? 1 : 0;
    return n;
}
}  // namespace

TEST_CASE("binomial sampler returns exactly n points in the support")
{
    const auto d = DensityGrid::uniform(kUnit);
    const auto c = sample_binomial(d, 100, RngStream(1));
    CHECK(c.size() == 100);
    CHECK(count_in(c, kUnit) == 100);
    CHECK(sample_binomial(d, 0, RngStream(1)).empty());
}

TEST_CASE("binomial sampler follows a two-level density")
{
    const DensityGrid d(CellGrid(kUnit, {2, 1}), {1.5, 0.5});
    const std::size_t n = 100000;
    const auto c = sample_binomial(d, n, RngStream(2));
    const double frac = static_cast<double>(count_in(c, Window({0.0, 0.0}, {0.5, 1.0}))) / n;
    CHECK(std::abs(frac - 0.75) <= 3.0 * std::sqrt(0.75 * 0.25 / n));
}

TEST_CASE("binomial cell counts pass a chi-square test")
{
    const DensityGrid d = DensityGrid::normalized(CellGrid(kUnit, {3, 3}), {1, 2, 3, 4, 5, 6, 7, 8, 9});
    const auto c = sample_binomial(d, 45000, RngStream(3));
    std::vector<double> obs(9, 0.0), probs(9);
    for (std::size_t i = 0; i < c.size(); ++i)
        obs[d.grid().locate(c.point(i))] += 1.0;
    for (std::size_t i = 0; i < 9; ++i)
        probs[i] = (i + 1) / 45.0;
    CHECK(stats::multinomial_gof_pvalue(obs, probs) > 0.01);
}

TEST_CASE("homogeneous Poisson process")
{
    CHECK(sample_poisson_homogeneous(0.0, kUnit, RngStream(1)).empty());
    CHECK_THROWS_AS(sample_poisson_homogeneous(-1.0, kUnit, RngStream(1)), std::invalid_argument);

    const std::size_t reps = 10000;
    std::vector<std::uint64_t> counts;
    double sum = 0.0;
    const RngStream root(4);
    for (std::size_t i = 0; i < reps; ++i) {
        const auto c = sample_poisson_homogeneous(2.0, kUnit, root.derive(i));
        REQUIRE(count_in(c, kUnit) == c.size());
        counts.push_back(c.size());
        sum += static_cast<double>(c.size());
    }
    CHECK(std::abs(sum / reps - 2.0) <= 3.0 * std::sqrt(2.0 / reps));
    CHECK(stats::poisson_gof_pvalue(counts, 2.0) > 0.01);
}

TEST_CASE("counts in disjoint boxes are uncorrelated")
{
    const Window w = Window::centered_cube(2, 100.0);
    const Window left({-5.0, -5.0}, {0.0, 5.0}), right({0.0, -5.0}, {5.0, 5.0});
    const std::size_t reps = 2000;
    std::vector<double> a, b;
    const RngStream root(5);
    for (std::size_t i = 0; i < reps; ++i) {
        const auto c = sample_poisson_homogeneous(1.0, w, root.derive(i));
        a.push_back(static_cast<double>(count_in(c, left)));
        b.push_back(static_cast<double>(count_in(c, right)));
    }
    CHECK(std::abs(stats::correlation(a, b)) < 3.0 / std::sqrt(static_cast<double>(reps)));
}

TEST_CASE("poissonized process has Poisson(n) counts")
{
    const auto d = DensityGrid::uniform(kUnit);
    const std::size_t reps = 2000, n = 1000;
    std::vector<double> counts;
    double sum = 0.0, sq = 0.0;
    const RngStream root(6);
    for (std::size_t i = 0; i < reps; ++i) {
        const auto c = poissonize(d, n, root.derive(i));
        REQUIRE(count_in(c, kUnit) == c.size());
        const double x = static_cast<double>(c.size());
        counts.push_back(x);
        sum += x;
        sq += x * x;
    }
    const double mean = sum / reps;
    const double var = (sq - reps * mean * mean) / (reps - 1);
    CHECK(std::abs(mean - 1000.0) <= 3.0 * std::sqrt(1000.0 / reps));
    CHECK(std::abs(var - 1000.0) <= 100.0);
    CHECK_THROWS_AS(poissonize(d, 0, RngStream(1)), std::invalid_argument);
}

TEST_CASE("poissonized counts in disjoint cells are independent")
{
    const auto d = DensityGrid::uniform(kUnit);
    const Window A({0.0, 0.0}, {0.5, 1.0}), B({0.5, 0.0}, {1.0, 1.0});
    const std::size_t reps = 2000;
    std::vector<double> a, b;
    const RngStream root(7);
    for (std::size_t i = 0; i < reps; ++i) {
        const auto c = poissonize(d, 200, root.derive(i));
        a.push_back(static_cast<double>(count_in(c, A)));
        b.push_back(static_cast<double>(count_in(c, B)));
    }
    CHECK(std::abs(stats::correlation(a, b)) < 3.0 / std::sqrt(static_cast<double>(reps)));
}

TEST_CASE("poissonized cloud shares its prefix with the binomial cloud")
{
    const DensityGrid d(CellGrid(kUnit, {2, 1}), {1.5, 0.5});
    const RngStream s(8);
    const auto bin = sample_binomial(d, 300, s);
    const auto poi = poissonize(d, 300, s);
    const std::size_t m = std::min(bin.size(), poi.size());
    for (std::size_t i = 0; i < m; ++i)
        for (int a = 0; a < 2; ++a)
            REQUIRE(bin.coord(i, a) == poi.coord(i, a));
}

TEST_CASE("superposition of P(1) and P(2) is P(3)")
{
    const std::size_t reps = 5000;
    std::vector<std::uint64_t> counts;
    const RngStream root(9);
    for (std::size_t i = 0; i < reps; ++i) {
        const auto s = root.derive(i);
        const auto c = superpose(sample_poisson_homogeneous(1.0, kUnit, s.derive(0)),
                                 sample_poisson_homogeneous(2.0, kUnit, s.derive(1)));
        counts.push_back(c.size());
    }
    CHECK(stats::poisson_gof_pvalue(counts, 3.0) > 0.01);
}

TEST_CASE("scaling P(4) by 2 gives P(1) on the scaled window")
{
    const std::size_t reps = 5000;
    const Window big({0.0, 0.0}, {2.0, 2.0}), quarter({0.0, 0.0}, {1.0, 1.0});
    std::vector<std::uint64_t> total, sub;
    const RngStream root(10);
    for (std::size_t i = 0; i < reps; ++i) {
        const auto c = scale_points(sample_poisson_homogeneous(4.0, kUnit, root.derive(i)), 2.0);
        REQUIRE(count_in(c, big) == c.size());
        total.push_back(c.size());
        sub.push_back(count_in(c, quarter));
    }
    CHECK(stats::poisson_gof_pvalue(total, 4.0) > 0.01);
    CHECK(stats::poisson_gof_pvalue(sub, 1.0) > 0.01);
}

TEST_CASE("samplers are reproducible")
{
    const auto d = DensityGrid::uniform(kUnit);
    CHECK(sample_binomial(d, 50, RngStream(3, 2)).coords() == sample_binomial(d, 50, RngStream(3, 2)).coords());
    CHECK(poissonize(d, 50, RngStream(3, 2)).coords() == poissonize(d, 50, RngStream(3, 2)).coords());
    const auto w = Window::centered_cube(2, 30.0);
    CHECK(sample_poisson_homogeneous(1.0, w, RngStream(4)).coords() ==
          sample_poisson_homogeneous(1.0, w, RngStream(4)).coords());
    CHECK(sample_binomial(d, 50, RngStream(3, 2)).coords() != sample_binomial(d, 50, RngStream(3, 3)).coords());
}

TEST_CASE("intensity sampler draws per-cell Poisson counts")
{
    const IntensityGrid g(CellGrid(kUnit, {2, 1}), {6.0, 2.0});
    const std::size_t reps = 4000;
    std::vector<std::uint64_t> left, total;
    const RngStream root(12);
    for (std::size_t i = 0; i < reps; ++i) {
        const auto c = sample_poisson_intensity(g, root.derive(i));
        total.push_back(c.size());
        left.push_back(count_in(c, Window({0.0, 0.0}, {0.5, 1.0})));
    }
    CHECK(stats::poisson_gof_pvalue(total, 4.0) > 0.01);
    CHECK(stats::poisson_gof_pvalue(left, 3.0) > 0.01);
}
