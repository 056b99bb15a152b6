/**
 * Piecewise-constant densities and intensities on a rectangular grid.
 *
 * Cell values are stored row-major: the last axis varies fastest.
 */
#ifndef BETTI_THERMO_DENSITY_HPP
#define BETTI_THERMO_DENSITY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "point_cloud.hpp"

namespace bthermo {

/// Regular partition of a box into cells.
class CellGrid
{
  public:
    CellGrid() = default;

    CellGrid(Window box, std::vector<int> cells_per_axis)
        : box_(std::move(box)), cells_per_axis_(std::move(cells_per_axis))
    {
        if (static_cast<int>(cells_per_axis_.size()) != box_.dim())
            throw std::invalid_argument("CellGrid: cells_per_axis must have one entry per axis");
        for (int c : cells_per_axis_)
            if (c < 1)
                throw std::invalid_argument("CellGrid: cells_per_axis entries must be positive");
    }

    const Window& box() const noexcept { return box_; }
    int dim() const noexcept { return box_.dim(); }
    const std::vector<int>& cells_per_axis() const noexcept { return cells_per_axis_; }

    std::size_t cell_count() const noexcept
    {
        std::size_t n = 1;
        for (int c : cells_per_axis_)
            n *= static_cast<std::size_t>(c);
        return n;
    }

    double cell_width(int axis) const { return box_.side(axis) / cells_per_axis_[axis]; }

    double cell_volume() const noexcept
    {
        double v = 1.0;
        for (int a = 0; a < dim(); ++a)
            v *= cell_width(a);
        return v;
    }

    /// Multi-index of a flat cell index (row-major).
    std::vector<int> cell_index(std::size_t flat) const
    {
        std::vector<int> idx(dim());
        for (int a = dim() - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(flat % cells_per_axis_[a]);
            flat /= cells_per_axis_[a];
        }
        return idx;
    }

    Window cell(std::size_t flat) const
    {
        const auto idx = cell_index(flat);
        std::vector<double> lo(dim()), hi(dim());
        for (int a = 0; a < dim(); ++a) {
            const double w = cell_width(a);
            lo[a] = box_.lower(a) + w * idx[a];
            hi[a] = idx[a] + 1 == cells_per_axis_[a] ? box_.upper(a) : box_.lower(a) + w * (idx[a] + 1);
        }
        return Window(std::move(lo), std::move(hi));
    }

    /// Flat index of the cell holding x, or cell_count() when outside the box.
    std::size_t locate(std::span<const double> x) const noexcept
    {
        if (!box_.contains(x))
            return cell_count();
        std::size_t flat = 0;
        for (int a = 0; a < dim(); ++a) {
            int i = static_cast<int>(std::floor((x[a] - box_.lower(a)) / cell_width(a)));
            i = std::clamp(i, 0, cells_per_axis_[a] - 1);
            flat = flat * cells_per_axis_[a] + static_cast<std::size_t>(i);
        }
        return flat;
    }

    friend bool operator==(const CellGrid&, const CellGrid&) = default;

  private:
    Window box_;
    std::vector<int> cells_per_axis_;
};

/// Non-negative piecewise-constant intensity (points per unit volume).
class IntensityGrid
{
  public:
    IntensityGrid() = default;

    IntensityGrid(CellGrid grid, std::vector<double> values) : grid_(std::move(grid)), values_(std::move(values))
    {
        if (values_.size() != grid_.cell_count())
            throw std::invalid_argument("IntensityGrid: expected " + std::to_string(grid_.cell_count()) +
                                        " values, got " + std::to_string(values_.size()));
        for (double v : values_)
            if (!(v >= 0.0) || !std::isfinite(v))
                throw std::invalid_argument("IntensityGrid: values must be finite and >= 0");
    }

    const CellGrid& grid() const noexcept { return grid_; }
    const std::vector<double>& values() const noexcept { return values_; }
    double value(std::size_t cell) const { return values_[cell]; }
    int dim() const noexcept { return grid_.dim(); }

    double sup_value() const noexcept
    {
        return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
    }

    double total_mass() const noexcept
    {
        double m = 0.0;
        for (double v : values_)
            m += v;
        return m * grid_.cell_volume();
    }

    double at(std::span<const double> x) const noexcept
    {
        const std::size_t c = grid_.locate(x);
        return c < values_.size() ? values_[c] : 0.0;
    }

    /// Integral of |f - g| over the common grid.
    friend double l1_distance(const IntensityGrid& f, const IntensityGrid& g)
    {
        if (!(f.grid_ == g.grid_))
            throw std::invalid_argument("l1_distance: intensities live on different grids");
        double s = 0.0;
        for (std::size_t c = 0; c < f.values_.size(); ++c)
            s += std::abs(f.values_[c] - g.values_[c]);
        return s * f.grid_.cell_volume();
    }

  private:
    CellGrid grid_;
    std::vector<double> values_;
};

/**
 * Probability density constant on each grid cell.
 *
 * Invariant: values >= 0 and sum(values) * cell_volume == 1 within 1e-12.
 * `normalized` rescales arbitrary non-negative weights; the plain
 * constructor validates instead.
 */
class DensityGrid
{
  public:
    static constexpr double kMassTolerance = 1e-12;

    DensityGrid() = default;

    DensityGrid(CellGrid grid, std::vector<double> values) : intensity_(std::move(grid), std::move(values))
    {
        const double mass = intensity_.total_mass();
        if (!(std::abs(mass - 1.0) <= kMassTolerance))
            throw std::invalid_argument("DensityGrid: total mass " + std::to_string(mass) + " deviates from 1");
    }

    static DensityGrid normalized(CellGrid grid, std::vector<double> values)
    {
        IntensityGrid raw(grid, values);
        const double mass = raw.total_mass();
        if (!(mass > 0.0))
            throw std::invalid_argument("DensityGrid: density has zero mass");
        for (double& v : values)
            v /= mass;
        DensityGrid d;
        d.intensity_ = IntensityGrid(std::move(grid), std::move(values));
        // Renormalizing can leave a last-ulp residue; fold it into the check.
        if (!(std::abs(d.intensity_.total_mass() - 1.0) <= kMassTolerance))
            throw std::invalid_argument("DensityGrid: normalization failed");
        return d;
    }

    static DensityGrid uniform(const Window& box)
    {
        return normalized(CellGrid(box, std::vector<int>(box.dim(), 1)), {1.0});
    }

    const CellGrid& grid() const noexcept { return intensity_.grid(); }
    const Window& box() const noexcept { return intensity_.grid().box(); }
    const std::vector<int>& cells_per_axis() const noexcept { return grid().cells_per_axis(); }
    const std::vector<double>& values() const noexcept { return intensity_.values(); }
    double sup_value() const noexcept { return intensity_.sup_value(); }
    double cell_volume() const noexcept { return grid().cell_volume(); }
    int dim() const noexcept { return intensity_.dim(); }
    double at(std::span<const double> x) const noexcept { return intensity_.at(x); }
    double mass() const noexcept { return intensity_.total_mass(); }

    /// Intensity n * f of the Poissonized process.
    IntensityGrid scaled(double n) const
    {
        std::vector<double> v = values();
        for (double& x : v)
            x *= n;
        return IntensityGrid(grid(), std::move(v));
    }

    void validate() const
    {
        const double m = mass();
        if (!(std::abs(m - 1.0) <= kMassTolerance))
            throw std::invalid_argument("DensityGrid: total mass " + std::to_string(m) + " deviates from 1");
    }

  private:
    IntensityGrid intensity_;
};

/// Parses {dim, lower[], upper[], cells_per_axis[], values[]}; mass is
/// normalized to 1.
inline DensityGrid density_from_json(const nlohmann::json& j)
{
    try {
        const int dim = j.at("dim").get<int>();
        auto lower = j.at("lower").get<std::vector<double>>();
        auto upper = j.at("upper").get<std::vector<double>>();
        auto cells = j.at("cells_per_axis").get<std::vector<int>>();
        auto values = j.at("values").get<std::vector<double>>();
        if (static_cast<int>(lower.size()) != dim)
            throw std::invalid_argument("density file: lower[] length differs from dim");
        return DensityGrid::normalized(CellGrid(Window(std::move(lower), std::move(upper)), std::move(cells)),
                                       std::move(values));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("density file: ") + e.what());
    }
}

inline nlohmann::json density_to_json(const DensityGrid& d)
{
    return {{"dim", d.dim()},
            {"lower", d.box().lower()},
            {"upper", d.box().upper()},
            {"cells_per_axis", d.cells_per_axis()},
            {"values", d.values()}};
}

inline DensityGrid load_density(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open density file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("density file '" + path + "': " + e.what());
    }
    return density_from_json(j);
}

}  // namespace bthermo

#endif
