/**
 * Result types of the Monte Carlo estimators.
 */
#ifndef BETTI_THERMO_RECORDS_HPP
#define BETTI_THERMO_RECORDS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "metric.hpp"

namespace bthermo {

enum class Quantity { betti_rate, simplex_rate, expectation_per_n, gap };

inline const char* to_string(Quantity q) noexcept
{
    switch (q) {
    case Quantity::betti_rate: return "betti_rate";
    case Quantity::simplex_rate: return "simplex_rate";
    case Quantity::expectation_per_n: return "expectation_per_n";
    case Quantity::gap: return "gap";
    }
    return "?";
}

struct EstimateRecord
{
    Quantity quantity = Quantity::betti_rate;
    int k_or_j = 0;
    double lambda = 0.0;
    double r = 0.0;
    double L_or_n = 0.0;
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t reps = 0;
    std::uint64_t master_seed = 0;
    BoundaryMode boundary_mode = BoundaryMode::plain;

    /// Identifier used in curve provenance lists.
    std::string id() const
    {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s:k=%d:lambda=%.12g:r=%.12g:L=%.12g:reps=%zu:seed=%llu:%s",
                      to_string(quantity), k_or_j, lambda, r, L_or_n, reps,
                      static_cast<unsigned long long>(master_seed), to_string(boundary_mode));
        return buf;
    }
};

/**
 * Sampled s -> beta_k(1, s) with linear interpolation between grid points.
 *
 * Everything else follows from the scaling identity
 * beta_k(lambda, r) = lambda * beta_k(1, lambda^{1/d} r).
 */
struct LimitCurve
{
    int dim = 2;
    int k = 1;
    double L = 0.0;
    std::size_t reps = 0;
    std::uint64_t master_seed = 0;
    BoundaryMode boundary_mode = BoundaryMode::torus;
    std::vector<double> s_grid;
    std::vector<double> values;
    std::vector<double> stderrs;
    std::vector<std::string> provenance;

    double s_max() const { return s_grid.empty() ? 0.0 : s_grid.back(); }

    void validate() const
    {
        if (s_grid.empty() || values.size() != s_grid.size() || stderrs.size() != s_grid.size())
            throw std::invalid_argument("LimitCurve: grid, values and stderrs must be non-empty and aligned");
        for (std::size_t i = 1; i < s_grid.size(); ++i)
            if (!(s_grid[i] > s_grid[i - 1]))
                throw std::invalid_argument("LimitCurve: s_grid must be strictly increasing");
        if (s_grid.front() < 0.0)
            throw std::invalid_argument("LimitCurve: s_grid must be non-negative");
    }

    /// Interpolation weights: value(s) = (1-t) * values[i] + t * values[i+1].
    std::pair<std::size_t, double> locate(double s) const
    {
        if (s < 0.0)
            throw std::invalid_argument("LimitCurve: negative argument");
        if (s == 0.0 && (s_grid.empty() || s_grid.front() > 0.0))
            return {static_cast<std::size_t>(-1), 0.0};
        if (s_grid.empty() || s < s_grid.front() || s > s_grid.back()) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "LimitCurve: s=%.12g outside the sampled range [%.12g, %.12g]", s,
                          s_grid.empty() ? 0.0 : s_grid.front(), s_max());
            throw std::out_of_range(buf);
        }
        auto it = std::upper_bound(s_grid.begin(), s_grid.end(), s);
        std::size_t i = static_cast<std::size_t>(it - s_grid.begin());
        if (i == s_grid.size())
            return {s_grid.size() - 1, 0.0};
        --i;
        const double t = (s - s_grid[i]) / (s_grid[i + 1] - s_grid[i]);
        return {i, t};
    }

    /// beta_k(1, s); zero at s = 0 where no points interact.
    double operator()(double s) const
    {
        const auto [i, t] = locate(s);
        if (i == static_cast<std::size_t>(-1))
            return 0.0;
        if (t == 0.0)
            return values[i];
        return (1.0 - t) * values[i] + t * values[i + 1];
    }

    /// beta_k(lambda, r) via the scaling identity.
    double rate(double lambda, double r) const
    {
        if (lambda == 0.0)
            return 0.0;
        return lambda * (*this)(std::pow(lambda, 1.0 / dim) * r);
    }
};

struct ConvergenceRow
{
    std::size_t n = 0;
    double mean = 0.0;
    double std_error = 0.0;
    double gap = 0.0;  // |mean - target|
};

struct ConvergenceTable
{
    int k = 1;
    double r = 0.0;
    double target = 0.0;
    double target_stderr = 0.0;
    std::string process;  // "binomial" or "poissonized"
    std::vector<ConvergenceRow> rows;
};

struct GapRow
{
    std::size_t n = 0;
    double binomial_mean = 0.0;
    double binomial_stderr = 0.0;
    double poissonized_mean = 0.0;
    double poissonized_stderr = 0.0;
    double gap = 0.0;         // |binomial mean - Poissonized mean|
    double gap_stderr = 0.0;  // paired standard error of the difference
    double abs_gap = 0.0;     // mean |beta(Pbar_n) - beta(X_n)| / n
    double abs_gap_stderr = 0.0;

    double scaled_gap() const noexcept { return gap * std::sqrt(static_cast<double>(n)); }
    double scaled_abs_gap() const noexcept { return abs_gap * std::sqrt(static_cast<double>(n)); }
};

struct GapTable
{
    int k = 1;
    double r = 0.0;
    std::vector<GapRow> rows;
};

}  // namespace bthermo

#endif
