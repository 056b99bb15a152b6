/**
 * Axis-aligned windows and finite point clouds in R^d.
 */
#ifndef BETTI_THERMO_POINT_CLOUD_HPP
#define BETTI_THERMO_POINT_CLOUD_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bthermo {

/// Box [lower, upper) in R^d.
class Window
{
  public:
    Window() = default;

    Window(std::vector<double> lower, std::vector<double> upper)
        : lower_(std::move(lower)), upper_(std::move(upper))
    {
        if (lower_.empty() || lower_.size() != upper_.size())
            throw std::invalid_argument("Window: lower/upper must be non-empty and of equal length");
        for (std::size_t i = 0; i < lower_.size(); ++i)
            if (!(lower_[i] < upper_[i]))
                throw std::invalid_argument("Window: lower[" + std::to_string(i) + "] must be < upper");
    }

    /// W_L = [-L^{1/d}/2, L^{1/d}/2)^d, the centred cube of volume L.
    static Window centered_cube(int dim, double volume)
    {
        if (dim < 1 || !(volume > 0.0))
            throw std::invalid_argument("Window::centered_cube: need dim >= 1 and volume > 0");
        const double half = 0.5 * std::pow(volume, 1.0 / dim);
        return Window(std::vector<double>(dim, -half), std::vector<double>(dim, half));
    }

    static Window unit_cube(int dim)
    {
        return Window(std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0));
    }

    int dim() const noexcept { return static_cast<int>(lower_.size()); }
    const std::vector<double>& lower() const noexcept { return lower_; }
    const std::vector<double>& upper() const noexcept { return upper_; }
    double lower(int i) const { return lower_[i]; }
    double upper(int i) const { return upper_[i]; }
    double side(int i) const { return upper_[i] - lower_[i]; }

    double volume() const noexcept
    {
        double v = 1.0;
        for (std::size_t i = 0; i < lower_.size(); ++i)
            v *= upper_[i] - lower_[i];
        return v;
    }

    bool contains(std::span<const double> x) const noexcept
    {
        for (std::size_t i = 0; i < lower_.size(); ++i)
            if (x[i] < lower_[i] || x[i] >= upper_[i])
                return false;
        return true;
    }

    bool contains_closed(std::span<const double> x) const noexcept
    {
        for (std::size_t i = 0; i < lower_.size(); ++i)
            if (x[i] < lower_[i] || x[i] > upper_[i])
                return false;
        return true;
    }

    friend bool operator==(const Window&, const Window&) = default;

  private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/**
 * Finite point set, stored as a flat row-major coordinate array.
 *
 * Exact coordinate duplicates are removed at construction (first occurrence
 * wins, order otherwise preserved) so every point has multiplicity one.
 */
class PointCloud
{
  public:
    PointCloud() = default;

    explicit PointCloud(int dim, std::optional<std::uint64_t> seed = std::nullopt)
        : dim_(dim), seed_(seed)
    {
        if (dim < 1)
            throw std::invalid_argument("PointCloud: dim must be >= 1");
    }

    PointCloud(int dim, std::vector<double> coords, std::optional<std::uint64_t> seed = std::nullopt)
        : dim_(dim), coords_(std::move(coords)), seed_(seed)
    {
        if (dim < 1)
            throw std::invalid_argument("PointCloud: dim must be >= 1");
        if (coords_.size() % static_cast<std::size_t>(dim) != 0)
            throw std::invalid_argument("PointCloud: coordinate count is not a multiple of dim");
        remove_duplicates();
    }

    static PointCloud from_points(const std::vector<std::vector<double>>& pts, int dim)
    {
        std::vector<double> flat;
        flat.reserve(pts.size() * static_cast<std::size_t>(dim));
        for (const auto& p : pts) {
            if (static_cast<int>(p.size()) != dim)
                throw std::invalid_argument("PointCloud: point with wrong number of coordinates");
            flat.insert(flat.end(), p.begin(), p.end());
        }
        return PointCloud(dim, std::move(flat));
    }

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return dim_ > 0 ? coords_.size() / dim_ : 0; }
    bool empty() const noexcept { return coords_.empty(); }

    std::span<const double> point(std::size_t i) const noexcept
    {
        return {coords_.data() + i * dim_, static_cast<std::size_t>(dim_)};
    }
    double coord(std::size_t i, int axis) const noexcept { return coords_[i * dim_ + axis]; }

    const std::vector<double>& coords() const noexcept { return coords_; }
    const std::optional<std::uint64_t>& seed() const noexcept { return seed_; }
    void set_seed(std::optional<std::uint64_t> s) noexcept { seed_ = s; }

    /// Points lying in the half-open window, in their original order.
    PointCloud restricted_to(const Window& w) const
    {
        PointCloud out(dim_, seed_);
        for (std::size_t i = 0; i < size(); ++i)
            if (w.contains(point(i)))
                out.coords_.insert(out.coords_.end(), coords_.begin() + i * dim_,
                                   coords_.begin() + (i + 1) * dim_);
        return out;
    }

  private:
    friend PointCloud superpose(const PointCloud&, const PointCloud&);
    friend PointCloud scale_points(const PointCloud&, double);

    void remove_duplicates()
    {
        const std::size_t n = size();
        if (n < 2)
            return;
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        auto less = [&](std::size_t a, std::size_t b) {
            const auto pa = point(a), pb = point(b);
            if (std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end()))
                return true;
            if (std::equal(pa.begin(), pa.end(), pb.begin()))
                return a < b;
            return false;
        };
        std::sort(order.begin(), order.end(), less);
        std::vector<char> drop(n, 0);
        bool any = false;
        for (std::size_t i = 1; i < n; ++i) {
            const auto prev = point(order[i - 1]), cur = point(order[i]);
            if (std::equal(prev.begin(), prev.end(), cur.begin())) {
                drop[order[i]] = 1;
                any = true;
            }
        }
        if (!any)
            return;
        std::vector<double> kept;
        kept.reserve(coords_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (!drop[i])
                kept.insert(kept.end(), coords_.begin() + i * dim_, coords_.begin() + (i + 1) * dim_);
        coords_ = std::move(kept);
    }

    int dim_ = 0;
    std::vector<double> coords_;
    std::optional<std::uint64_t> seed_;
};

/// Union of two clouds; points of `a` keep their indices.
inline PointCloud superpose(const PointCloud& a, const PointCloud& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("superpose: dimension mismatch");
    std::vector<double> coords;
    coords.reserve(a.coords().size() + b.coords().size());
    coords.insert(coords.end(), a.coords().begin(), a.coords().end());
    coords.insert(coords.end(), b.coords().begin(), b.coords().end());
    return PointCloud(a.dim(), std::move(coords), a.seed());
}

/// x -> theta * x.
inline PointCloud scale_points(const PointCloud& cloud, double theta)
{
    if (!(theta > 0.0))
        throw std::invalid_argument("scale_points: theta must be > 0");
    PointCloud out(cloud.dim(), cloud.seed());
    out.coords_ = cloud.coords_;
    for (double& x : out.coords_)
        x *= theta;
    return out;
}

}  // namespace bthermo

#endif
