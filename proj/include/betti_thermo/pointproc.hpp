/**
 * Binomial, homogeneous Poisson and Poissonized point processes.
 *
 * Every sampler is a pure function of its RngStream argument.  Coordinates
 * are drawn in a fixed order (point by point, axis by axis), which is what
 * makes clouds bit-reproducible.
 */
#ifndef BETTI_THERMO_POINTPROC_HPP
#define BETTI_THERMO_POINTPROC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "density.hpp"
#include "point_cloud.hpp"
#include "rng.hpp"

namespace bthermo {

namespace detail {

inline void append_uniform_in(const Window& w, RngStream& rng, std::vector<double>& out)
{
    for (int a = 0; a < w.dim(); ++a)
        out.push_back(rng.uniform(w.lower(a), w.upper(a)));
}

/// Cumulative cell masses, normalized so the last entry is exactly 1.
inline std::vector<double> cumulative_masses(const std::vector<double>& values)
{
    std::vector<double> cum(values.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        acc += values[i];
        cum[i] = acc;
    }
    for (double& c : cum)
        c /= acc;
    cum.back() = 1.0;
    return cum;
}

inline std::size_t pick_cell(const std::vector<double>& cum, double u)
{
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    auto idx = static_cast<std::size_t>(it - cum.begin());
    // upper_bound skips zero-mass cells whose cumulative equals u.
    return std::min(idx, cum.size() - 1);
}

inline void append_binomial(const IntensityGrid& grid, std::size_t n, RngStream& rng, std::vector<double>& out)
{
    if (n == 0)
        return;
    const auto cum = cumulative_masses(grid.values());
    const CellGrid& cells = grid.grid();
    const int d = cells.dim();
    out.reserve(out.size() + n * d);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t c = pick_cell(cum, rng.uniform());
        append_uniform_in(cells.cell(c), rng, out);
    }
}

}  // namespace detail

/// n i.i.d. draws from the density: cell by mass, then uniform in the cell.
inline PointCloud sample_binomial(const DensityGrid& density, std::size_t n, RngStream rng)
{
    density.validate();
    std::vector<double> coords;
    detail::append_binomial(density.scaled(1.0), n, rng, coords);
    return PointCloud(density.dim(), std::move(coords), rng.master_seed());
}

/// Homogeneous Poisson process of intensity lambda restricted to the window.
inline PointCloud sample_poisson_homogeneous(double lambda, const Window& window, RngStream rng)
{
    if (!(lambda >= 0.0))
        throw std::invalid_argument("sample_poisson_homogeneous: lambda must be >= 0");
    std::vector<double> coords;
    if (lambda > 0.0) {
        const auto count = rng.poisson(lambda * window.volume());
        coords.reserve(count * window.dim());
        for (std::uint64_t i = 0; i < count; ++i)
            detail::append_uniform_in(window, rng, coords);
    }
    return PointCloud(window.dim(), std::move(coords), rng.master_seed());
}

/**
 * Poissonized binomial process: N ~ Poisson(n), then X_1..X_N.
 *
 * N comes from the child stream `rng.derive(0)` while the points come from
 * `rng` itself, so with equal streams the result shares its first min(n, N)
 * points with sample_binomial(density, n, rng).
 */
inline PointCloud poissonize(const DensityGrid& density, std::size_t n, RngStream rng)
{
    if (n < 1)
        throw std::invalid_argument("poissonize: n must be >= 1");
    density.validate();
    RngStream count_stream = rng.derive(0);
    const auto count = count_stream.poisson(static_cast<double>(n));
    std::vector<double> coords;
    detail::append_binomial(density.scaled(1.0), count, rng, coords);
    return PointCloud(density.dim(), std::move(coords), rng.master_seed());
}

/// Poisson process with piecewise-constant intensity: independent
/// Poisson(value * cell_volume) counts per cell, uniform within cells.
inline PointCloud sample_poisson_intensity(const IntensityGrid& intensity, RngStream rng)
{
    const CellGrid& cells = intensity.grid();
    const double vol = cells.cell_volume();
    std::vector<double> coords;
    for (std::size_t c = 0; c < cells.cell_count(); ++c) {
        const double v = intensity.value(c);
        if (v <= 0.0)
            continue;
        const auto count = rng.poisson(v * vol);
        if (count == 0)
            continue;
        const Window w = cells.cell(c);
        for (std::uint64_t i = 0; i < count; ++i)
            detail::append_uniform_in(w, rng, coords);
    }
    return PointCloud(cells.dim(), std::move(coords), rng.master_seed());
}

}  // namespace bthermo

#endif
