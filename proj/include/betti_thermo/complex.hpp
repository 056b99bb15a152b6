/**
 * Finite abstract simplicial complex with simplices grouped by dimension.
 *
 * Each dimension j holds a flat array of (j+1)-tuples of vertex indices,
 * strictly increasing within a tuple and sorted lexicographically across
 * tuples, so facet lookup is a binary search.
 */
#ifndef BETTI_THERMO_COMPLEX_HPP
#define BETTI_THERMO_COMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bthermo {

using Vertex = std::uint32_t;

class SimplicialComplex
{
  public:
    SimplicialComplex() = default;

    SimplicialComplex(int dim_ambient, int max_dim, std::size_t vertex_count)
        : dim_ambient_(dim_ambient), max_dim_(max_dim), vertex_count_(vertex_count),
          simplices_(static_cast<std::size_t>(max_dim) + 1)
    {
        if (max_dim < 0)
            throw std::invalid_argument("SimplicialComplex: max_dim must be >= 0");
        auto& verts = simplices_[0];
        verts.resize(vertex_count);
        for (std::size_t v = 0; v < vertex_count; ++v)
            verts[v] = static_cast<Vertex>(v);
    }

    /**
     * Downward closure of the given simplices (each a list of vertex
     * indices, any order) truncated at max_dim.  Every vertex below
     * vertex_count is present as a 0-simplex.
     */
    static SimplicialComplex from_simplices(std::size_t vertex_count, int max_dim,
                                            const std::vector<std::vector<Vertex>>& generators,
                                            int dim_ambient = 0)
    {
        SimplicialComplex c(dim_ambient, max_dim, vertex_count);
        std::vector<std::set<std::vector<Vertex>>> sets(static_cast<std::size_t>(max_dim) + 1);
        for (auto s : generators) {
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw std::invalid_argument("from_simplices: repeated vertex in simplex");
            if (!s.empty() && s.back() >= vertex_count)
                throw std::invalid_argument("from_simplices: vertex index out of range");
            const std::size_t n = s.size();
            // every non-empty subset of dimension <= max_dim
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                const int bits = __builtin_popcountll(mask);
                if (bits - 1 > max_dim)
                    continue;
                std::vector<Vertex> face;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (std::uint64_t{1} << i))
                        face.push_back(s[i]);
                sets[bits - 1].insert(std::move(face));
            }
        }
        for (int j = 1; j <= max_dim; ++j)
            for (const auto& s : sets[j])
                c.simplices_[j].insert(c.simplices_[j].end(), s.begin(), s.end());
        return c;
    }

    int dim_ambient() const noexcept { return dim_ambient_; }
    int max_dim() const noexcept { return max_dim_; }
    std::size_t vertex_count() const noexcept { return vertex_count_; }

    /// S_j; zero for j above max_dim.
    std::size_t count(int j) const noexcept
    {
        if (j < 0 || j > max_dim_)
            return 0;
        return simplices_[j].size() / static_cast<std::size_t>(j + 1);
    }

    /// Highest dimension holding a simplex, -1 for the empty complex.
    int top_dim() const noexcept
    {
        for (int j = max_dim_; j >= 0; --j)
            if (count(j) > 0)
                return j;
        return -1;
    }

    std::span<const Vertex> simplex(int j, std::size_t idx) const noexcept
    {
        const std::size_t w = static_cast<std::size_t>(j) + 1;
        return {simplices_[j].data() + idx * w, w};
    }

    const std::vector<Vertex>& flat(int j) const { return simplices_.at(j); }

    /// Index of the tuple (sorted) within dimension tuple.size()-1.
    std::optional<std::size_t> index_of(std::span<const Vertex> tuple) const noexcept
    {
        if (tuple.empty() || tuple.size() > simplices_.size())
            return std::nullopt;
        const int j = static_cast<int>(tuple.size()) - 1;
        std::size_t lo = 0, hi = count(j);
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            const auto s = simplex(j, mid);
            if (std::lexicographical_compare(s.begin(), s.end(), tuple.begin(), tuple.end()))
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo < count(j)) {
            const auto s = simplex(j, lo);
            if (std::equal(s.begin(), s.end(), tuple.begin()))
                return lo;
        }
        return std::nullopt;
    }

    bool contains(std::span<const Vertex> tuple) const noexcept { return index_of(tuple).has_value(); }

    /// True when every simplex of this complex is a simplex of `other`.
    bool is_subcomplex_of(const SimplicialComplex& other) const noexcept
    {
        if (vertex_count_ > other.vertex_count_)
            return false;
        for (int j = 1; j <= max_dim_; ++j) {
            if (count(j) > 0 && j > other.max_dim_)
                return false;
            for (std::size_t i = 0; i < count(j); ++i)
                if (!other.contains(simplex(j, i)))
                    return false;
        }
        return true;
    }

    /// Disjoint union; vertices of `b` are shifted by a.vertex_count().
    friend SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        if (a.max_dim_ != b.max_dim_)
            throw std::invalid_argument("disjoint_union: complexes must share max_dim");
        SimplicialComplex c(a.dim_ambient_, a.max_dim_, a.vertex_count_ + b.vertex_count_);
        const auto shift = static_cast<Vertex>(a.vertex_count_);
        for (int j = 1; j <= a.max_dim_; ++j) {
            c.simplices_[j] = a.simplices_[j];
            for (Vertex v : b.simplices_[j])
                c.simplices_[j].push_back(v + shift);
        }
        return c;
    }

    /// One simplex per line, vertex indices separated by spaces, by dimension.
    void dump(std::ostream& out) const
    {
        for (int j = 0; j <= max_dim_; ++j)
            for (std::size_t i = 0; i < count(j); ++i) {
                const auto s = simplex(j, i);
                for (std::size_t t = 0; t < s.size(); ++t)
                    out << (t ? " " : "") << s[t];
                out << '\n';
            }
    }

  private:
    template <typename>
    friend class ComplexBuilder;

    int dim_ambient_ = 0;
    int max_dim_ = 0;
    std::size_t vertex_count_ = 0;
    std::vector<std::vector<Vertex>> simplices_{1};
};

}  // namespace bthermo

#endif
