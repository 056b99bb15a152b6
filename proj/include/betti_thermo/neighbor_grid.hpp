/**
 * Fixed-radius neighbour search by bucketing points into cubic cells of side
 * >= r.  All pairs at distance <= r are found by scanning the 3^d block of
 * cells around each point.
 */
#ifndef BETTI_THERMO_NEIGHBOR_GRID_HPP
#define BETTI_THERMO_NEIGHBOR_GRID_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "metric.hpp"
#include "point_cloud.hpp"

namespace bthermo {

/// Undirected graph in compressed form; each vertex lists only its
/// neighbours with a larger index, in increasing order.
struct NeighborGraph
{
    std::vector<std::size_t> offsets;  // size vertex_count + 1
    std::vector<std::uint32_t> upper;

    std::size_t vertex_count() const noexcept { return offsets.empty() ? 0 : offsets.size() - 1; }
    std::size_t edge_count() const noexcept { return upper.size(); }

    std::span<const std::uint32_t> upper_neighbors(std::size_t v) const noexcept
    {
        return {upper.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
};

class NeighborGrid
{
  public:
    NeighborGrid(const PointCloud& cloud, double r, const EuclideanSpace&) : dim_(cloud.dim())
    {
        if (!(r > 0.0))
            throw std::invalid_argument("NeighborGrid: cell size must be > 0");
        cell_size_.assign(dim_, padded(r));
        origin_.assign(dim_, 0.0);
        build(cloud);
    }

    NeighborGrid(const PointCloud& cloud, double r, const FlatTorus& torus) : dim_(cloud.dim())
    {
        if (!(r > 0.0))
            throw std::invalid_argument("NeighborGrid: cell size must be > 0");
        const Window& box = torus.box();
        if (box.dim() != dim_)
            throw std::invalid_argument("NeighborGrid: torus dimension differs from cloud dimension");
        for (int a = 0; a < dim_; ++a) {
            const auto m = static_cast<std::int64_t>(std::floor(box.side(a) / padded(r)));
            if (m < 3)
                throw std::invalid_argument("NeighborGrid: torus side must be at least 3r");
            wrap_.push_back(m);
            cell_size_.push_back(box.side(a) / static_cast<double>(m));
            origin_.push_back(box.lower(a));
        }
        build(cloud);
    }

    double cell_size(int axis) const noexcept { return cell_size_[axis]; }

    /// Calls fn(j) for every point j in the 3^d block around point i
    /// (including i itself).
    template <typename Fn>
    void for_each_candidate(std::size_t i, Fn&& fn) const
    {
        std::vector<std::int64_t> probe(dim_);
        std::vector<int> offset(dim_, -1);
        while (true) {
            for (int a = 0; a < dim_; ++a) {
                std::int64_t c = cell_[i * dim_ + a] + offset[a];
                if (!wrap_.empty())
                    c = ((c % wrap_[a]) + wrap_[a]) % wrap_[a];
                probe[a] = c;
            }
            auto [lo, hi] = bucket(probe);
            for (std::size_t k = lo; k < hi; ++k)
                fn(static_cast<std::size_t>(order_[k]));
            int a = 0;
            while (a < dim_ && offset[a] == 1)
                offset[a++] = -1;
            if (a == dim_)
                break;
            ++offset[a];
        }
    }

  private:
    // Cells slightly wider than r so pairs within the edge slack never skip a cell.
    static double padded(double r) noexcept { return r * (1.0 + 1e-9) + 1e-12; }

    void build(const PointCloud& cloud)
    {
        const std::size_t n = cloud.size();
        cell_.resize(n * dim_);
        for (std::size_t i = 0; i < n; ++i)
            for (int a = 0; a < dim_; ++a) {
                auto c = static_cast<std::int64_t>(std::floor((cloud.coord(i, a) - origin_[a]) / cell_size_[a]));
                if (!wrap_.empty())
                    c = std::clamp<std::int64_t>(c, 0, wrap_[a] - 1);
                cell_[i * dim_ + a] = c;
            }
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), std::uint32_t{0});
        std::sort(order_.begin(), order_.end(), [&](std::uint32_t x, std::uint32_t y) {
            const auto* cx = &cell_[std::size_t{x} * dim_];
            const auto* cy = &cell_[std::size_t{y} * dim_];
            if (std::lexicographical_compare(cx, cx + dim_, cy, cy + dim_))
                return true;
            if (std::equal(cx, cx + dim_, cy))
                return x < y;
            return false;
        });
    }

    std::pair<std::size_t, std::size_t> bucket(const std::vector<std::int64_t>& probe) const
    {
        auto key_less = [&](std::uint32_t p, const std::vector<std::int64_t>& key) {
            const auto* c = &cell_[std::size_t{p} * dim_];
            return std::lexicographical_compare(c, c + dim_, key.begin(), key.end());
        };
        auto key_greater = [&](const std::vector<std::int64_t>& key, std::uint32_t p) {
            const auto* c = &cell_[std::size_t{p} * dim_];
            return std::lexicographical_compare(key.begin(), key.end(), c, c + dim_);
        };
        auto lo = std::lower_bound(order_.begin(), order_.end(), probe, key_less);
        auto hi = std::upper_bound(lo, order_.end(), probe, key_greater);
        return {static_cast<std::size_t>(lo - order_.begin()), static_cast<std::size_t>(hi - order_.begin())};
    }

    int dim_;
    std::vector<double> cell_size_;
    std::vector<double> origin_;
    std::vector<std::int64_t> wrap_;  // cells per axis on the torus, empty in R^d
    std::vector<std::int64_t> cell_;  // integer cell coordinates per point
    std::vector<std::uint32_t> order_;
};

/// Edges {u, v} with distance <= r (plus a 1e-12 absolute slack, matching the
/// simplex test).
template <AmbientSpace Space>
NeighborGraph neighbor_graph(const PointCloud& cloud, double r, const Space& space)
{
    NeighborGraph g;
    const std::size_t n = cloud.size();
    g.offsets.assign(n + 1, 0);
    if (n == 0)
        return g;
    const NeighborGrid grid(cloud, r, space);
    const double reach = r + 1e-12;
    const double reach2 = reach * reach;
    std::vector<std::uint32_t> nbrs;
    for (std::size_t i = 0; i < n; ++i) {
        nbrs.clear();
        grid.for_each_candidate(i, [&](std::size_t j) {
            if (j > i && space.squared_distance(cloud.point(i), cloud.point(j)) <= reach2)
                nbrs.push_back(static_cast<std::uint32_t>(j));
        });
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.upper.insert(g.upper.end(), nbrs.begin(), nbrs.end());
        g.offsets[i + 1] = g.upper.size();
    }
    return g;
}

}  // namespace bthermo

#endif
