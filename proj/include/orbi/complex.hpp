#ifndef ORBI_COMPLEX_HPP
#define ORBI_COMPLEX_HPP

/**
 * Finite simplicial complexes described by facet lists.
 *
 * A simplex of dimension d >= 1 lists its d+1 facets by id; position i is the
 * face opposite vertex i, and the boundary operator uses the sign (-1)^i for
 * that position. No global vertex order is needed, so the same type also
 * stores Delta-complexes such as orbit quotients and sector cell complexes.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace orbi {

struct Simplex
{
    int id = 0;
    int dim = 0;
    std::vector<int> facets;

    friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Disjoint-set forest over 0..n-1.
class UnionFind
{
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

class SimplicialComplex
{
public:
    SimplicialComplex() = default;

    const std::map<int, Simplex>& simplices() const { return simplices_; }
    const Simplex& at(int id) const
    {
        auto it = simplices_.find(id);
        if (it == simplices_.end())
            throw NotClosed("no simplex with id " + std::to_string(id));
        return it->second;
    }
    bool contains(int id) const { return simplices_.count(id) != 0; }
    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }
    /// -1 for the empty complex.
    int dim() const { return dim_; }

    std::vector<int> ids_of_dim(int d) const
    {
        std::vector<int> out;
        for (const auto& [id, s] : simplices_)
            if (s.dim == d)
                out.push_back(id);
        return out;
    }

    std::vector<std::size_t> counts_by_dim() const
    {
        std::vector<std::size_t> c(static_cast<std::size_t>(dim_ + 1), 0);
        for (const auto& [id, s] : simplices_)
            ++c[s.dim];
        return c;
    }

    /**
     * Ordered vertex ids of a simplex: facet d omits the last vertex and
     * facet 0 omits the first. For Delta-complexes entries may repeat.
     */
    std::vector<int> vertices(int id) const
    {
        const Simplex& s = at(id);
        if (s.dim == 0)
            return {id};
        if (s.dim == 1)
            return {s.facets[1], s.facets[0]};
        std::vector<int> v = vertices(s.facets[s.dim]);
        v.push_back(vertices(s.facets[0]).back());
        return v;
    }

    /// Ids of all faces of `id` (including itself).
    std::set<int> closure(int id) const
    {
        std::set<int> out;
        std::vector<int> stack{id};
        while (!stack.empty())
        {
            int x = stack.back();
            stack.pop_back();
            if (!out.insert(x).second)
                continue;
            for (int f : at(x).facets)
                stack.push_back(f);
        }
        return out;
    }

    /// Boundary matrix of dimension d: rows index (d-1)-simplices, columns d-simplices.
    IntMatrix<std::int64_t> boundary_matrix(int d) const
    {
        auto rows = ids_of_dim(d - 1);
        auto cols = ids_of_dim(d);
        std::map<int, std::size_t> row_of;
        for (std::size_t i = 0; i < rows.size(); ++i)
            row_of[rows[i]] = i;
        IntMatrix<std::int64_t> m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
        for (std::size_t j = 0; j < cols.size(); ++j)
        {
            const Simplex& s = at(cols[j]);
            for (std::size_t i = 0; i < s.facets.size(); ++i)
                m[row_of.at(s.facets[i])][j] += (i % 2 == 0) ? 1 : -1;
        }
        return m;
    }

    int connected_components() const
    {
        std::map<int, std::size_t> idx;
        for (const auto& [id, s] : simplices_)
            idx.emplace(id, idx.size());
        UnionFind uf(idx.size());
        for (const auto& [id, s] : simplices_)
            for (int f : s.facets)
                uf.unite(idx[id], idx[f]);
        std::set<std::size_t> roots;
        for (const auto& [id, i] : idx)
            roots.insert(uf.find(i));
        return static_cast<int>(roots.size());
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.simplices_ == b.simplices_;
    }

    friend SimplicialComplex complex_from_simplices(const std::vector<Simplex>& entries);

private:
    std::map<int, Simplex> simplices_;
    int dim_ = -1;
};

/// Validates and assembles a complex; checks face closure, dimensions and ∂∂ = 0.
inline SimplicialComplex complex_from_simplices(const std::vector<Simplex>& entries)
{
    SimplicialComplex k;
    for (const auto& s : entries)
    {
        if (s.dim < 0)
            throw BadDimension("simplex " + std::to_string(s.id) + " has negative dimension");
        const std::size_t want = s.dim == 0 ? 0 : static_cast<std::size_t>(s.dim + 1);
        if (s.facets.size() != want)
            throw BadDimension("simplex " + std::to_string(s.id) + " of dim " +
                               std::to_string(s.dim) + " lists " +
                               std::to_string(s.facets.size()) + " facets");
        if (!k.simplices_.emplace(s.id, s).second)
            throw DuplicateId("simplex id " + std::to_string(s.id) + " repeated");
        k.dim_ = std::max(k.dim_, s.dim);
    }
    for (const auto& [id, s] : k.simplices_)
        for (int f : s.facets)
        {
            auto it = k.simplices_.find(f);
            if (it == k.simplices_.end())
                throw NotClosed("simplex " + std::to_string(id) + " references missing face " +
                                std::to_string(f));
            if (it->second.dim != s.dim - 1)
                throw BadDimension("facet " + std::to_string(f) + " of simplex " +
                                   std::to_string(id) + " has dim " +
                                   std::to_string(it->second.dim));
        }
    for (const auto& [id, s] : k.simplices_)
    {
        if (s.dim < 2)
            continue;
        std::map<int, int> coeff;
        for (std::size_t i = 0; i < s.facets.size(); ++i)
        {
            const Simplex& t = k.simplices_.at(s.facets[i]);
            for (std::size_t j = 0; j < t.facets.size(); ++j)
                coeff[t.facets[j]] += ((i + j) % 2 == 0) ? 1 : -1;
        }
        for (const auto& [f, c] : coeff)
            if (c != 0)
                throw BadBoundary("boundary of boundary of simplex " + std::to_string(id) +
                                  " is nonzero at " + std::to_string(f));
    }
    return k;
}

inline long long euler_characteristic(const SimplicialComplex& k)
{
    long long chi = 0;
    for (const auto& [id, s] : k.simplices())
        chi += (s.dim % 2 == 0) ? 1 : -1;
    return chi;
}

/// Rational Betti numbers b_0..b_dim.
inline std::vector<long long> betti_numbers(const SimplicialComplex& k)
{
    if (k.empty())
        return {};
    const int top = k.dim();
    auto counts = k.counts_by_dim();
    std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
    for (int d = 1; d <= top; ++d)
        rank[d] = exact_rank(k.boundary_matrix(d));
    std::vector<long long> b(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d)
        b[d] = static_cast<long long>(counts[d]) - static_cast<long long>(rank[d]) -
               static_cast<long long>(rank[d + 1]);
    return b;
}

/// Restriction to a face-closed id set; ids are kept.
inline SimplicialComplex subcomplex(const SimplicialComplex& k, const std::set<int>& ids)
{
    std::vector<Simplex> entries;
    for (int id : ids)
    {
        if (!k.contains(id))
            throw NotClosed("id " + std::to_string(id) + " is not in the complex");
        const Simplex& s = k.at(id);
        for (int f : s.facets)
            if (!ids.count(f))
                throw NotClosed("face " + std::to_string(f) + " of " + std::to_string(id) +
                                " is missing from the id set");
        entries.push_back(s);
    }
    return complex_from_simplices(entries);
}

/// A complex built from vertex sets, with the correspondence kept.
struct VertexComplex
{
    SimplicialComplex complex;
    std::map<std::vector<int>, int> id_of;  ///< sorted vertex labels -> simplex id
    std::map<int, std::vector<int>> labels_of;
};

/**
 * Builds the abstract simplicial complex generated by `maximal` (vertex labels
 * are arbitrary ints). Ids are assigned by (dimension, sorted label list) and
 * vertices within each simplex are ordered by label.
 */
inline VertexComplex complex_from_vertex_sets(const std::vector<std::vector<int>>& maximal)
{
    std::set<std::vector<int>> all;
    for (auto top : maximal)
    {
        std::sort(top.begin(), top.end());
        if (std::adjacent_find(top.begin(), top.end()) != top.end())
            throw BadDimension("vertex set with repeated vertex");
        const std::size_t n = top.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        {
            std::vector<int> face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint64_t{1} << i))
                    face.push_back(top[i]);
            all.insert(std::move(face));
        }
    }
    std::vector<std::vector<int>> ordered(all.begin(), all.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    VertexComplex out;
    int next = 0;
    for (const auto& f : ordered)
    {
        out.id_of[f] = next;
        out.labels_of[next] = f;
        ++next;
    }
    std::vector<Simplex> entries;
    for (const auto& f : ordered)
    {
        Simplex s;
        s.id = out.id_of[f];
        s.dim = static_cast<int>(f.size()) - 1;
        if (s.dim > 0)
            for (std::size_t i = 0; i < f.size(); ++i)
            {
                std::vector<int> face = f;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                s.facets.push_back(out.id_of.at(face));
            }
        entries.push_back(std::move(s));
    }
    out.complex = complex_from_simplices(entries);
    return out;
}

} // namespace orbi

#endif // ORBI_COMPLEX_HPP
