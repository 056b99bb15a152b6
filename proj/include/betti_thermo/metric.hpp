/**
 * Ambient spaces for complex construction: plain Euclidean space and the
 * flat torus obtained by identifying opposite faces of a window.
 *
 * A space supplies the squared distance and `unwrap`, which copies a point
 * into the chart centred at a reference point (the identity in R^d; the
 * minimum-image copy on the torus).
 */
#ifndef BETTI_THERMO_METRIC_HPP
#define BETTI_THERMO_METRIC_HPP

#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include "point_cloud.hpp"

namespace bthermo {

enum class BoundaryMode { plain, torus };

inline const char* to_string(BoundaryMode m) noexcept { return m == BoundaryMode::torus ? "torus" : "plain"; }

inline BoundaryMode boundary_mode_from_string(const std::string& s)
{
    if (s == "plain")
        return BoundaryMode::plain;
    if (s == "torus")
        return BoundaryMode::torus;
    throw std::invalid_argument("unknown boundary mode '" + s + "' (expected plain or torus)");
}

template <typename S>
concept AmbientSpace = requires(const S& s, std::span<const double> a, std::span<const double> b, double* out) {
    { s.squared_distance(a, b) } -> std::convertible_to<double>;
    s.unwrap(a, b, out);
};

struct EuclideanSpace
{
    double squared_distance(std::span<const double> a, std::span<const double> b) const noexcept
    {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double t = a[i] - b[i];
            s += t * t;
        }
        return s;
    }

    void unwrap(std::span<const double> /*reference*/, std::span<const double> p, double* out) const noexcept
    {
        for (std::size_t i = 0; i < p.size(); ++i)
            out[i] = p[i];
    }
};

class FlatTorus
{
  public:
    explicit FlatTorus(Window box) : box_(std::move(box)) {}

    const Window& box() const noexcept { return box_; }

    double squared_distance(std::span<const double> a, std::span<const double> b) const noexcept
    {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double t = wrap_delta(a[i] - b[i], static_cast<int>(i));
            s += t * t;
        }
        return s;
    }

    void unwrap(std::span<const double> reference, std::span<const double> p, double* out) const noexcept
    {
        for (std::size_t i = 0; i < p.size(); ++i)
            out[i] = reference[i] + wrap_delta(p[i] - reference[i], static_cast<int>(i));
    }

  private:
    double wrap_delta(double t, int axis) const noexcept
    {
        const double side = box_.side(axis);
        if (t > 0.5 * side)
            t -= side;
        else if (t < -0.5 * side)
            t += side;
        return t;
    }

    Window box_;
};

static_assert(AmbientSpace<EuclideanSpace>);
static_assert(AmbientSpace<FlatTorus>);

}  // namespace bthermo

#endif
