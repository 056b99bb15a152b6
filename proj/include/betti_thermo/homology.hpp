/**
 * Betti numbers over GF(2) by sparse boundary-matrix reduction.
 *
 * beta_k = S_k - rank d_k - rank d_{k+1}.  Ranks are computed by the usual
 * left-to-right column reduction with low-entry pivots; reduction of d_j
 * skips the columns of simplices that already appeared as pivots of
 * d_{j+1} (those columns reduce to zero anyway).
 *
 * Over GF(2) the Betti numbers of unions of balls agree with the integral
 * ones in ambient dimension <= 3; in higher dimension torsion could make
 * them differ.
 */
#ifndef BETTI_THERMO_HOMOLOGY_HPP
#define BETTI_THERMO_HOMOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cech.hpp"
#include "complex.hpp"
#include "metric.hpp"
#include "neighbor_grid.hpp"
#include "point_cloud.hpp"

namespace bthermo {

using Column = std::vector<std::uint32_t>;

struct BoundaryMatrix
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Column> columns;  // sorted row indices with coefficient 1
};

/// Matrix of d_j : C_j -> C_{j-1}; column c holds the facets of the c-th j-simplex.
inline BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int j)
{
    if (j < 1 || j > complex.max_dim())
        throw std::invalid_argument("boundary_matrix: j=" + std::to_string(j) + " outside [1, max_dim]");
    BoundaryMatrix m;
    m.rows = complex.count(j - 1);
    m.cols = complex.count(j);
    m.columns.resize(m.cols);
    std::vector<Vertex> facet(static_cast<std::size_t>(j));
    for (std::size_t c = 0; c < m.cols; ++c) {
        const auto s = complex.simplex(j, c);
        auto& col = m.columns[c];
        col.reserve(s.size());
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::size_t t = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop)
                    facet[t++] = s[i];
            const auto idx = complex.index_of(facet);
            if (!idx)
                throw std::logic_error("boundary_matrix: complex is not closed under faces");
            col.push_back(static_cast<std::uint32_t>(*idx));
        }
        std::sort(col.begin(), col.end());
    }
    return m;
}

namespace detail {

/// Symmetric difference of two sorted columns, written into `a`.
inline void add_column(Column& a, const Column& b, Column& scratch)
{
    scratch.clear();
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(scratch));
    a.swap(scratch);
}

struct Reduction
{
    std::size_t rank = 0;
    std::vector<char> pivot_rows;  // rows that are the low entry of a reduced column
};

/// Reduces the columns in place.  Columns flagged in `skip` are left alone.
inline Reduction reduce(std::vector<Column>& columns, std::size_t rows, const std::vector<char>* skip = nullptr)
{
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(rows, none);
    Reduction out;
    out.pivot_rows.assign(rows, 0);
    Column scratch;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (skip && (*skip)[c])
            continue;
        Column& col = columns[c];
        while (!col.empty() && owner[col.back()] != none)
            add_column(col, columns[owner[col.back()]], scratch);
        if (!col.empty()) {
            owner[col.back()] = c;
            out.pivot_rows[col.back()] = 1;
            ++out.rank;
        }
    }
    return out;
}

}  // namespace detail

/// Rank over GF(2).
inline std::size_t rank_gf2(const BoundaryMatrix& matrix)
{
    auto cols = matrix.columns;
    for (const auto& c : cols)
        for (auto r : c)
            if (r >= matrix.rows)
                throw std::invalid_argument("rank_gf2: row index out of range");
    for (auto& c : cols)
        std::sort(c.begin(), c.end());
    return detail::reduce(cols, matrix.rows).rank;
}

struct BettiVector
{
    std::vector<std::size_t> values;  // beta_0 .. beta_max_k

    int max_k() const noexcept { return static_cast<int>(values.size()) - 1; }
    std::size_t operator[](int k) const { return values.at(static_cast<std::size_t>(k)); }
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// beta_0..beta_max_k.  Needs simplices one dimension above max_k.
inline BettiVector betti_numbers(const SimplicialComplex& complex, int max_k)
{
    if (max_k < 0)
        throw std::invalid_argument("betti_numbers: max_k must be >= 0");
    if (complex.max_dim() < max_k + 1)
        throw std::invalid_argument("betti_numbers: complex enumerated only up to dimension " +
                                    std::to_string(complex.max_dim()) + ", beta_" + std::to_string(max_k) +
                                    " needs dimension " + std::to_string(max_k + 1));
    const int top = max_k + 1;
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    std::vector<char> cleared;
    for (int j = top; j >= 1; --j) {
        BoundaryMatrix m = boundary_matrix(complex, j);
        const bool use_clear = !cleared.empty() && cleared.size() == m.cols;
        auto red = detail::reduce(m.columns, m.rows, use_clear ? &cleared : nullptr);
        rank[j] = red.rank;
        cleared = std::move(red.pivot_rows);
    }
    BettiVector b;
    b.values.resize(static_cast<std::size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k)
        b.values[k] = complex.count(k) - rank[k] - rank[k + 1];
    return b;
}

inline std::size_t betti_number(const SimplicialComplex& complex, int k) { return betti_numbers(complex, k)[k]; }

namespace detail {

class DisjointSets
{
  public:
    explicit DisjointSets(std::size_t n) : parent_(n), sets_(n)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) noexcept
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) noexcept
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (a < b)
            std::swap(a, b);
        parent_[a] = b;
        --sets_;
    }

    std::size_t sets() const noexcept { return sets_; }

  private:
    std::vector<std::size_t> parent_;
    std::size_t sets_;
};

}  // namespace detail

/// Components of the graph joining points at distance <= r.
template <AmbientSpace Space>
std::size_t connected_components(const PointCloud& cloud, double r, const Space& space)
{
    if (!(r > 0.0))
        throw std::invalid_argument("connected_components: r must be > 0");
    const NeighborGraph g = neighbor_graph(cloud, r, space);
    detail::DisjointSets ds(cloud.size());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (auto w : g.upper_neighbors(v))
            ds.unite(v, w);
    return ds.sets();
}

inline std::size_t connected_components(const PointCloud& cloud, double r)
{
    return connected_components(cloud, r, EuclideanSpace{});
}

/// Euler-Poincare: sum (-1)^j S_j == sum (-1)^k beta_k.  The complex must be
/// complete (its top enumerated dimension empty) and `betti` must reach
/// max_dim - 1.
inline bool euler_check(const SimplicialComplex& complex, const BettiVector& betti)
{
    if (complex.max_dim() > 0 && complex.count(complex.max_dim()) != 0)
        throw std::invalid_argument("euler_check: complex may be truncated (top dimension is non-empty)");
    if (betti.max_k() + 1 < complex.max_dim())
        throw std::invalid_argument("euler_check: Betti vector does not cover every dimension");
    long long simplices = 0, bettis = 0;
    for (int j = 0; j <= complex.max_dim(); ++j)
        simplices += (j % 2 ? -1LL : 1LL) * static_cast<long long>(complex.count(j));
    for (int k = 0; k <= betti.max_k(); ++k)
        bettis += (k % 2 ? -1LL : 1LL) * static_cast<long long>(betti[k]);
    return simplices == bettis;
}

struct BettiDiffBound
{
    long long betti_small = 0;
    long long betti_large = 0;
    std::size_t added_k = 0;         // k-simplices in K2 \ K1
    std::size_t added_k_plus_1 = 0;  // (k+1)-simplices in K2 \ K1

    long long lhs() const noexcept { return betti_small > betti_large ? betti_small - betti_large : betti_large - betti_small; }
    std::size_t rhs() const noexcept { return added_k + added_k_plus_1; }
    bool holds() const noexcept { return static_cast<std::size_t>(lhs()) <= rhs(); }
};

/// Both sides of |beta_k(K1) - beta_k(K2)| <= #k- plus #(k+1)-simplices of K2 \ K1.
inline BettiDiffBound betti_diff_bound(const SimplicialComplex& k1, const SimplicialComplex& k2, int k)
{
    if (k < 1)
        throw std::invalid_argument("betti_diff_bound_check: k must be >= 1");
    if (!k1.is_subcomplex_of(k2))
        throw std::invalid_argument("betti_diff_bound_check: first complex is not a subcomplex of the second");
    BettiDiffBound b;
    b.betti_small = static_cast<long long>(betti_number(k1, k));
    b.betti_large = static_cast<long long>(betti_number(k2, k));
    // nested, so the set difference is a difference of counts
    b.added_k = k2.count(k) - k1.count(k);
    b.added_k_plus_1 = k2.count(k + 1) - k1.count(k + 1);
    return b;
}

inline bool betti_diff_bound_check(const SimplicialComplex& k1, const SimplicialComplex& k2, int k)
{
    return betti_diff_bound(k1, k2, k).holds();
}

}  // namespace bthermo

#endif
