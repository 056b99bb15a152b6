/**
 * Smallest enclosing ball of a small point set (Welzl's algorithm with the
 * move-to-front heuristic).
 *
 * Intended for the handful of vertices of one simplex.  The support set is
 * solved through its Gram system in the affine hull, so points may live in
 * any dimension.
 */
#ifndef BETTI_THERMO_MINIBALL_HPP
#define BETTI_THERMO_MINIBALL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace bthermo {

struct Ball
{
    std::vector<double> center;
    double radius = -1.0;  // negative: empty ball
};

namespace detail {

inline double squared_distance(std::span<const double> a, std::span<const double> b) noexcept
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double t = a[i] - b[i];
        s += t * t;
    }
    return s;
}

/// Ball with all support points on its boundary and centre in their affine
/// hull.  Empty optional when the support is affinely dependent.
inline std::optional<Ball> circumball(std::span<const double> pts, int dim, std::span<const int> support)
{
    Ball ball;
    const std::size_t m = support.size();
    if (m == 0)
        return ball;
    auto pt = [&](int i) { return pts.subspan(static_cast<std::size_t>(i) * dim, dim); };
    const auto q0 = pt(support[0]);
    ball.center.assign(q0.begin(), q0.end());
    ball.radius = 0.0;
    if (m == 1)
        return ball;

    const std::size_t k = m - 1;
    std::vector<double> v(k * dim);
    for (std::size_t i = 0; i < k; ++i) {
        const auto qi = pt(support[i + 1]);
        for (int a = 0; a < dim; ++a)
            v[i * dim + a] = qi[a] - q0[a];
    }
    // Gram system G lambda = b with G_ij = v_i.v_j, b_i = |v_i|^2 / 2.
    std::vector<double> g(k * (k + 1));
    double scale = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            double s = 0.0;
            for (int a = 0; a < dim; ++a)
                s += v[i * dim + a] * v[j * dim + a];
            g[i * (k + 1) + j] = s;
        }
        g[i * (k + 1) + k] = 0.5 * g[i * (k + 1) + i];
        scale = std::max(scale, g[i * (k + 1) + i]);
    }
    const double tiny = 1e-14 * scale;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < k; ++r)
            if (std::abs(g[r * (k + 1) + c]) > std::abs(g[piv * (k + 1) + c]))
                piv = r;
        if (!(std::abs(g[piv * (k + 1) + c]) > tiny))
            return std::nullopt;
        if (piv != c)
            for (std::size_t j = 0; j <= k; ++j)
                std::swap(g[c * (k + 1) + j], g[piv * (k + 1) + j]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c)
                continue;
            const double f = g[r * (k + 1) + c] / g[c * (k + 1) + c];
            if (f == 0.0)
                continue;
            for (std::size_t j = c; j <= k; ++j)
                g[r * (k + 1) + j] -= f * g[c * (k + 1) + j];
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        const double lambda = g[i * (k + 1) + k] / g[i * (k + 1) + i];
        for (int a = 0; a < dim; ++a)
            ball.center[a] += lambda * v[i * dim + a];
    }
    double r2 = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        r2 = std::max(r2, squared_distance(ball.center, pt(support[i])));
    ball.radius = std::sqrt(r2);
    return ball;
}

inline bool ball_contains(const Ball& b, std::span<const double> p) noexcept
{
    if (b.radius < 0.0)
        return false;
    const double tol = b.radius * (1.0 + 1e-12) + 1e-15;
    return squared_distance(b.center, p) <= tol * tol;
}

/// Exhaustive search over supports of size <= dim+1.  Used only when the
/// recursive solver meets an affinely dependent support (round-off on
/// degenerate input).
inline Ball exhaustive_ball(std::span<const double> pts, int dim, std::size_t n)
{
    Ball best;
    best.radius = std::numeric_limits<double>::infinity();
    const std::size_t max_support = std::min<std::size_t>(n, static_cast<std::size_t>(dim) + 1);
    std::vector<int> subset;
    auto consider = [&] {
        auto b = circumball(pts, dim, subset);
        if (!b || b->radius >= best.radius)
            return;
        for (std::size_t i = 0; i < n; ++i)
            if (!ball_contains(*b, pts.subspan(i * dim, dim)))
                return;
        best = std::move(*b);
    };
    // Enumerate index subsets in increasing size.
    for (std::size_t size = 1; size <= max_support; ++size) {
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            subset = idx;
            consider();
            int pos = static_cast<int>(size) - 1;
            while (pos >= 0 && idx[pos] == static_cast<int>(n - size + pos))
                --pos;
            if (pos < 0)
                break;
            ++idx[pos];
            for (std::size_t j = pos + 1; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return best;
}

class WelzlSolver
{
  public:
    WelzlSolver(std::span<const double> pts, int dim)
        : pts_(pts), dim_(dim), order_(pts.size() / dim)
    {
        std::iota(order_.begin(), order_.end(), 0);
    }

    std::optional<Ball> solve()
    {
        move_to_front(order_.size());
        if (degenerate_)
            return std::nullopt;
        return ball_;
    }

  private:
    void move_to_front(std::size_t end)
    {
        auto b = circumball(pts_, dim_, support_);
        if (!b) {
            degenerate_ = true;
            return;
        }
        ball_ = std::move(*b);
        if (support_.size() == static_cast<std::size_t>(dim_) + 1)
            return;
        for (std::size_t i = 0; i < end && !degenerate_; ++i) {
            const int p = order_[i];
            if (ball_contains(ball_, pts_.subspan(static_cast<std::size_t>(p) * dim_, dim_)))
                continue;
            support_.push_back(p);
            move_to_front(i);
            support_.pop_back();
            std::rotate(order_.begin(), order_.begin() + i, order_.begin() + i + 1);
        }
    }

    std::span<const double> pts_;
    int dim_;
    std::vector<int> order_;
    std::vector<int> support_;
    Ball ball_;
    bool degenerate_ = false;
};

}  // namespace detail

/// Smallest ball containing the row-major points `pts` (pts.size() / dim of them).
inline Ball min_enclosing_ball(std::span<const double> pts, int dim)
{
    if (dim < 1 || pts.empty() || pts.size() % dim != 0)
        throw std::invalid_argument("min_enclosing_ball: need at least one point of the given dimension");
    if (auto b = detail::WelzlSolver(pts, dim).solve())
        return *b;
    return detail::exhaustive_ball(pts, dim, pts.size() / dim);
}

inline double min_enclosing_ball_radius(std::span<const double> pts, int dim)
{
    return min_enclosing_ball(pts, dim).radius;
}

inline double min_enclosing_ball_radius(const std::vector<std::vector<double>>& points)
{
    if (points.empty())
        throw std::invalid_argument("min_enclosing_ball_radius: empty point set");
    const int dim = static_cast<int>(points.front().size());
    std::vector<double> flat;
    flat.reserve(points.size() * dim);
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("min_enclosing_ball_radius: inconsistent point dimensions");
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return min_enclosing_ball_radius(flat, dim);
}

}  // namespace bthermo

#endif
