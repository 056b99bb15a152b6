/**
 * Čech and Vietoris-Rips complexes of point clouds.
 *
 * Both builders enumerate the r-neighbour graph and expand cliques
 * depth-first, always appending a vertex larger than the current last one.
 * The Rips complex keeps every clique.  The Čech complex keeps a clique only
 * when the smallest ball enclosing its vertices has radius <= r/2 (the balls
 * of radius r/2 then share the centre of that ball); since that radius only
 * grows with the vertex set, the result is downward closed.
 */
#ifndef BETTI_THERMO_CECH_HPP
#define BETTI_THERMO_CECH_HPP

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <span>
#include <stdexcept>
#include <vector>

#include "complex.hpp"
#include "metric.hpp"
#include "miniball.hpp"
#include "neighbor_grid.hpp"
#include "point_cloud.hpp"

namespace bthermo {

enum class ComplexKind { cech, rips };

/// Absolute slack on the miniball comparison; keeps nesting in r exact.
inline constexpr double kCechTolerance = 1e-12;

template <typename Space>
class ComplexBuilder
{
  public:
    ComplexBuilder(const PointCloud& cloud, double r, int max_dim, ComplexKind kind, const Space& space)
        : cloud_(cloud), r_(r), max_dim_(max_dim), kind_(kind), space_(space)
    {
        if (!(r > 0.0))
            throw std::invalid_argument("build complex: r must be > 0");
        if (max_dim < 0)
            throw std::invalid_argument("build complex: max_dim must be >= 0");
    }

    SimplicialComplex build()
    {
        const std::size_t n = cloud_.size();
        SimplicialComplex c(cloud_.dim(), max_dim_, n);
        if (max_dim_ == 0 || n == 0)
            return c;
        graph_ = neighbor_graph(cloud_, r_, space_);
        out_ = &c;
        simplex_.clear();
        buffer_.resize((static_cast<std::size_t>(max_dim_) + 1) * cloud_.dim());
        for (std::size_t v = 0; v < n; ++v) {
            simplex_.assign(1, static_cast<Vertex>(v));
            const auto up = graph_.upper_neighbors(v);
            expand(std::vector<Vertex>(up.begin(), up.end()));
        }
        out_ = nullptr;
        return c;
    }

  private:
    void expand(const std::vector<Vertex>& candidates)
    {
        const int next_dim = static_cast<int>(simplex_.size());
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const Vertex w = candidates[i];
            simplex_.push_back(w);
            if (next_dim < 2 || kind_ == ComplexKind::rips || passes_ball_test()) {
                auto& dst = out_->simplices_[next_dim];
                dst.insert(dst.end(), simplex_.begin(), simplex_.end());
                if (next_dim < max_dim_ && i + 1 < candidates.size()) {
                    const auto up = graph_.upper_neighbors(w);
                    std::vector<Vertex> next;
                    std::set_intersection(candidates.begin() + i + 1, candidates.end(), up.begin(), up.end(),
                                          std::back_inserter(next));
                    if (!next.empty())
                        expand(next);
                }
            }
            simplex_.pop_back();
        }
    }

    bool passes_ball_test()
    {
        const int d = cloud_.dim();
        const auto base = cloud_.point(simplex_.front());
        for (std::size_t t = 0; t < simplex_.size(); ++t)
            space_.unwrap(base, cloud_.point(simplex_[t]), buffer_.data() + t * d);
        const std::span<const double> pts(buffer_.data(), simplex_.size() * d);
        return min_enclosing_ball_radius(pts, d) <= 0.5 * r_ + kCechTolerance;
    }

    const PointCloud& cloud_;
    double r_;
    int max_dim_;
    ComplexKind kind_;
    const Space& space_;
    NeighborGraph graph_;
    SimplicialComplex* out_ = nullptr;
    std::vector<Vertex> simplex_;
    std::vector<double> buffer_;
};

template <AmbientSpace Space>
SimplicialComplex build_cech(const PointCloud& cloud, double r, int max_dim, const Space& space)
{
    return ComplexBuilder<Space>(cloud, r, max_dim, ComplexKind::cech, space).build();
}

inline SimplicialComplex build_cech(const PointCloud& cloud, double r, int max_dim)
{
    return build_cech(cloud, r, max_dim, EuclideanSpace{});
}

template <AmbientSpace Space>
SimplicialComplex build_rips(const PointCloud& cloud, double r, int max_dim, const Space& space)
{
    return ComplexBuilder<Space>(cloud, r, max_dim, ComplexKind::rips, space).build();
}

inline SimplicialComplex build_rips(const PointCloud& cloud, double r, int max_dim)
{
    return build_rips(cloud, r, max_dim, EuclideanSpace{});
}

template <AmbientSpace Space>
SimplicialComplex build_complex(ComplexKind kind, const PointCloud& cloud, double r, int max_dim,
                                const Space& space)
{
    return ComplexBuilder<Space>(cloud, r, max_dim, kind, space).build();
}

/// S_j, the number of j-simplices.
inline std::size_t simplex_count(const SimplicialComplex& complex, int j)
{
    if (j < 0 || j > complex.max_dim())
        throw std::invalid_argument("simplex_count: j outside [0, max_dim]");
    return complex.count(j);
}

/// xi(v): number of j-simplices having v as a vertex.
inline std::size_t vertex_simplex_count(const SimplicialComplex& complex, Vertex v, int j)
{
    if (v >= complex.vertex_count())
        throw std::invalid_argument("vertex_simplex_count: vertex index out of range");
    if (j < 0 || j > complex.max_dim())
        return 0;
    const auto& flat = complex.flat(j);
    return static_cast<std::size_t>(std::count(flat.begin(), flat.end(), v));
}

/// xi(v) for all vertices at once.
inline std::vector<std::size_t> vertex_simplex_counts(const SimplicialComplex& complex, int j)
{
    std::vector<std::size_t> xi(complex.vertex_count(), 0);
    if (j >= 0 && j <= complex.max_dim())
        for (Vertex v : complex.flat(j))
            ++xi[v];
    return xi;
}

/// Number of j-simplices with at least one vertex in the (closed) union of
/// the region windows.
inline std::size_t simplices_touching(const SimplicialComplex& complex, const PointCloud& cloud,
                                      std::span<const Window> region, int j)
{
    if (complex.vertex_count() != cloud.size())
        throw std::invalid_argument("simplices_touching: complex and cloud disagree on vertex count");
    for (const auto& w : region)
        if (w.dim() != cloud.dim())
            throw std::invalid_argument("simplices_touching: region dimension differs from cloud");
    if (j < 0 || j > complex.max_dim() || region.empty())
        return 0;
    std::vector<char> inside(cloud.size(), 0);
    for (std::size_t v = 0; v < cloud.size(); ++v)
        for (const auto& w : region)
            if (w.contains_closed(cloud.point(v))) {
                inside[v] = 1;
                break;
            }
    std::size_t total = 0;
    for (std::size_t i = 0; i < complex.count(j); ++i) {
        const auto s = complex.simplex(j, i);
        if (std::any_of(s.begin(), s.end(), [&](Vertex v) { return inside[v] != 0; }))
            ++total;
    }
    return total;
}

}  // namespace bthermo

#endif
