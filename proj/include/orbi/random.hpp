#ifndef ORBI_RANDOM_HPP
#define ORBI_RANDOM_HPP

/**
 * Seeded random labeled complexes for property tests.
 *
 * A random graph is coned or suspended once or twice. Every local group is a
 * subgroup of one ambient group, contained in the groups of all its faces, and
 * face monomorphisms are the inclusions. Local groups are re-indexed by a
 * random permutation so that maps are not identities.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "complex.hpp"
#include "group.hpp"
#include "labeled.hpp"

namespace orbi {

struct RandomComplexOptions
{
    int min_vertices = 3;
    int max_vertices = 6;
    double edge_probability = 0.5;
    bool with_boundary = false;  ///< declare the base graph as boundary
};

namespace detail {

inline FiniteGroup random_ambient_group(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pick(0, 8);
    const int r = pick(rng);
    return r < 6 ? cyclic(r + 1) : dihedral(r - 4);
}

/// A local copy of a subgroup with shuffled non-identity indices.
struct LocalGroup
{
    std::string id;
    FiniteGroup group;
    std::vector<Element> to_ambient;
    std::map<Element, Element> from_ambient;
};

inline LocalGroup make_local_group(const FiniteGroup& ambient, std::vector<Element> elems,
                                   const std::string& id, std::mt19937_64& rng)
{
    std::sort(elems.begin(), elems.end());
    std::shuffle(elems.begin() + 1, elems.end(), rng);
    LocalGroup lg;
    lg.id = id;
    lg.to_ambient = elems;
    for (std::size_t i = 0; i < elems.size(); ++i)
        lg.from_ambient[elems[i]] = static_cast<Element>(i);
    const int n = static_cast<int>(elems.size());
    CayleyTable t(n, std::vector<Element>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = lg.from_ambient.at(ambient.mul(elems[a], elems[b]));
    lg.group = n == 1 ? FiniteGroup() : group_from_table(std::move(t), id);
    return lg;
}

} // namespace detail

inline LabeledComplex random_labeled_complex(std::uint64_t seed, const RandomComplexOptions& opt = {})
{
    std::mt19937_64 rng(seed);
    auto coin = [&rng](double p) { return std::bernoulli_distribution(p)(rng); };

    const int n = std::uniform_int_distribution<int>(opt.min_vertices, opt.max_vertices)(rng);
    std::vector<std::vector<int>> top;
    std::vector<bool> used(n, false);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(opt.edge_probability))
            {
                top.push_back({a, b});
                used[a] = used[b] = true;
            }
    for (int a = 0; a < n; ++a)
        if (!used[a])
            top.push_back({a});

    int next_label = n;
    const int ops = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int op = 0; op < ops; ++op)
    {
        std::vector<std::vector<int>> grown;
        const bool suspend = coin(0.5);
        for (int apex = 0; apex < (suspend ? 2 : 1); ++apex)
            for (auto s : top)
            {
                s.push_back(next_label + apex);
                grown.push_back(std::move(s));
            }
        next_label += suspend ? 2 : 1;
        top = std::move(grown);
    }
    const auto vc = complex_from_vertex_sets(top);

    const FiniteGroup ambient = detail::random_ambient_group(rng);
    std::map<std::vector<Element>, detail::LocalGroup> locals;
    std::map<int, std::vector<Element>> elems_of;

    LabeledComplex l;
    l.name = "random_" + std::to_string(seed);
    l.complex = vc.complex;
    for (const auto& [id, s] : l.complex.simplices())
    {
        std::vector<Element> allowed;
        if (s.dim == 0)
        {
            allowed.resize(ambient.order());
            for (int g = 0; g < ambient.order(); ++g)
                allowed[g] = g;
        }
        else
        {
            allowed = elems_of.at(s.facets[0]);
            for (int f : s.facets)
            {
                std::vector<Element> keep;
                const auto& other = elems_of.at(f);
                std::set_intersection(allowed.begin(), allowed.end(), other.begin(), other.end(),
                                      std::back_inserter(keep));
                allowed = std::move(keep);
            }
        }
        std::vector<Element> gens;
        if (coin(0.5))
            gens = allowed;
        else
        {
            std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
            const int count = std::uniform_int_distribution<int>(0, 2)(rng);
            for (int i = 0; i < count; ++i)
                gens.push_back(allowed[pick(rng)]);
        }
        auto elems = generated_subgroup(ambient, gens);
        std::sort(elems.begin(), elems.end());
        elems_of[id] = elems;
        if (elems.size() == 1)
            continue;
        auto it = locals.find(elems);
        if (it == locals.end())
        {
            const std::string gid = "H" + std::to_string(locals.size());
            it = locals.emplace(elems, detail::make_local_group(ambient, elems, gid, rng)).first;
            l.groups.emplace(gid, it->second.group);
        }
        l.set_group(id, it->second.id);
    }

    auto local_of = [&](int id) -> const detail::LocalGroup* {
        auto it = locals.find(elems_of.at(id));
        return it == locals.end() ? nullptr : &it->second;
    };
    for (const auto& [id, s] : l.complex.simplices())
    {
        const auto* src = local_of(id);
        if (!src)
            continue;
        for (std::size_t i = 0; i < s.facets.size(); ++i)
        {
            const auto* dst = local_of(s.facets[i]);
            std::vector<Element> map;
            for (Element x : src->to_ambient)
                map.push_back(dst->from_ambient.at(x));
            l.face_mono.emplace(std::make_pair(id, static_cast<int>(i)),
                                Monomorphism(src->group, dst->group, std::move(map)));
        }
    }
    l.fill_trivial_monos();

    if (opt.with_boundary)
        for (const auto& [id, labels] : vc.labels_of)
            if (labels.back() < n)
                l.boundary.insert(id);
    require_valid(l);
    return l;
}

} // namespace orbi

#endif // ORBI_RANDOM_HPP
