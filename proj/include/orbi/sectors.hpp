#ifndef ORBI_SECTORS_HPP
#define ORBI_SECTORS_HPP

/**
 * Twisted-sector decomposition of a labeled complex.
 *
 * An atom is a pair (simplex, conjugacy class of its group). Atoms are
 * identified along every facet monomorphism, (s, c) ~ (facet_i s, f_i(c)), and
 * all identity-class atoms form one class, the nontwisted sector. Each class
 * is itself a cell complex whose cells are its atoms; the boundary of
 * (s, c) is sum_i (-1)^i (facet_i s, f_i(c)).
 */

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "labeled.hpp"
#include "rational.hpp"

namespace orbi {

struct SectorAtom
{
    int simplex = 0;
    int class_index = 0;  ///< into group_of(simplex).classes()

    friend auto operator<=>(const SectorAtom&, const SectorAtom&) = default;
};

struct AtomInfo
{
    SectorAtom atom;
    int dim = 0;
    int centralizer_order = 1;
    int class_size = 1;
    bool on_boundary = false;
};

struct SectorDecomposition
{
    std::vector<AtomInfo> atoms;
    std::map<SectorAtom, int> atom_index;
    std::vector<int> class_of_atom;
    /// Atom indices per class; class 0 is the nontwisted sector.
    std::vector<std::vector<int>> classes;
    /// Cell complex of each class; simplex ids are atom indices.
    std::vector<SimplicialComplex> sector_complexes;
    int dimension = -1;

    int class_count() const { return static_cast<int>(classes.size()); }
    int nontwisted() const { return 0; }

    std::set<SectorAtom> boundary_atoms() const
    {
        std::set<SectorAtom> out;
        for (const auto& a : atoms)
            if (a.on_boundary)
                out.insert(a.atom);
        return out;
    }
};

inline SectorDecomposition decompose(const LabeledComplex& l)
{
    require_valid(l);
    SectorDecomposition dec;
    dec.dimension = l.dimension();
    const auto& k = l.complex;

    for (const auto& [id, s] : k.simplices())
    {
        const FiniteGroup& g = l.group_of(id);
        for (int c = 0; c < g.class_count(); ++c)
        {
            AtomInfo a;
            a.atom = {id, c};
            a.dim = s.dim;
            a.class_size = static_cast<int>(g.classes()[c].size());
            a.centralizer_order = g.order() / a.class_size;
            a.on_boundary = l.boundary.count(id) != 0;
            dec.atom_index.emplace(a.atom, static_cast<int>(dec.atoms.size()));
            dec.atoms.push_back(a);
        }
    }

    UnionFind uf(dec.atoms.size());
    int first_identity = -1;
    for (const auto& [id, s] : k.simplices())
    {
        const int here = dec.atom_index.at({id, 0});
        if (first_identity < 0)
            first_identity = here;
        uf.unite(first_identity, here);
        for (std::size_t i = 0; i < s.facets.size(); ++i)
        {
            const auto& cm = l.mono(id, static_cast<int>(i)).class_map();
            for (std::size_t c = 0; c < cm.size(); ++c)
                uf.unite(dec.atom_index.at({id, static_cast<int>(c)}),
                         dec.atom_index.at({s.facets[i], cm[c]}));
        }
    }

    // Roots are least members, so the nontwisted class (which holds atom 0)
    // comes first and the rest follow by least atom.
    std::map<std::size_t, int> class_of_root;
    dec.class_of_atom.resize(dec.atoms.size());
    for (std::size_t a = 0; a < dec.atoms.size(); ++a)
    {
        auto [it, fresh] = class_of_root.emplace(uf.find(a), static_cast<int>(dec.classes.size()));
        if (fresh)
            dec.classes.emplace_back();
        dec.classes[it->second].push_back(static_cast<int>(a));
        dec.class_of_atom[a] = it->second;
    }

    for (const auto& members : dec.classes)
    {
        std::vector<Simplex> cells;
        for (int a : members)
        {
            const auto& atom = dec.atoms[a].atom;
            const auto& s = k.at(atom.simplex);
            Simplex cell{a, s.dim, {}};
            for (std::size_t i = 0; i < s.facets.size(); ++i)
            {
                const int fc = l.mono(atom.simplex, static_cast<int>(i)).class_map()[atom.class_index];
                cell.facets.push_back(dec.atom_index.at({s.facets[i], fc}));
            }
            cells.push_back(std::move(cell));
        }
        dec.sector_complexes.push_back(complex_from_simplices(cells));
    }
    return dec;
}

enum class SectorEulerMode
{
    underlying,        ///< sum (-1)^dim
    orbifold,          ///< sum (-1)^dim / |C(h)|
    inner_orbifold,    ///< orbifold sum over atoms off the boundary
    boundary_orbifold  ///< orbifold sum over boundary atoms
};

inline Rational sector_euler(const SectorDecomposition& dec, int t, SectorEulerMode mode)
{
    Rational sum = 0;
    for (int a : dec.classes.at(t))
    {
        const auto& info = dec.atoms[a];
        const int sign = info.dim % 2 == 0 ? 1 : -1;
        switch (mode)
        {
            case SectorEulerMode::underlying:
                sum += sign;
                break;
            case SectorEulerMode::orbifold:
                sum += make_rational(sign, info.centralizer_order);
                break;
            case SectorEulerMode::inner_orbifold:
                if (!info.on_boundary)
                    sum += make_rational(sign, info.centralizer_order);
                break;
            case SectorEulerMode::boundary_orbifold:
                if (info.on_boundary)
                    sum += make_rational(sign, info.centralizer_order);
                break;
        }
    }
    return sum;
}

inline std::vector<long long> sector_betti(const SectorDecomposition& dec, int t)
{
    return betti_numbers(dec.sector_complexes.at(t));
}

inline int sector_components(const SectorDecomposition& dec, int t)
{
    return dec.sector_complexes.at(t).connected_components();
}

/// Codimension of the sector inside the complex.
inline int sector_codimension(const SectorDecomposition& dec, int t)
{
    return dec.dimension - dec.sector_complexes.at(t).dim();
}

/// sum m_i / m for one element.
inline Rational shift_of(const ExponentPairs& pairs)
{
    Rational sum = 0;
    for (const auto& [mi, m] : pairs)
        sum += make_rational(mi, m);
    return sum;
}

/**
 * Degree-shifting number of class t. Every atom of t whose class has shift
 * data must agree; identity atoms contribute 0. Throws MissingShiftData when
 * a twisted class has no data and InconsistentShift on disagreement.
 */
inline Rational degree_shift(const LabeledComplex& l, const SectorDecomposition& dec,
                             const ShiftData& shifts, int t)
{
    std::optional<Rational> value;
    std::string first_where;
    auto offer = [&](const Rational& v, const std::string& where) {
        if (!value)
        {
            value = v;
            first_where = where;
        }
        else if (*value != v)
            throw InconsistentShift("class " + std::to_string(t) + ": " + first_where + " gives " +
                                    to_string(*value) + " but " + where + " gives " + to_string(v));
    };

    for (int a : dec.classes.at(t))
    {
        const auto& atom = dec.atoms[a].atom;
        const std::string where = "simplex " + std::to_string(atom.simplex);
        if (atom.class_index == 0)
        {
            offer(Rational(0), where);
            continue;
        }
        auto gid = l.group_id_of(atom.simplex);
        auto git = shifts.find(gid);
        if (git == shifts.end())
            continue;
        const FiniteGroup& g = l.group_of(atom.simplex);
        for (Element x : g.classes()[atom.class_index].members)
        {
            auto e = git->second.find(x);
            if (e != git->second.end())
                offer(shift_of(e->second), where + " element " + std::to_string(x));
        }
    }
    if (!value)
        throw MissingShiftData("no shift data covers class " + std::to_string(t));
    return *value;
}

} // namespace orbi

#endif // ORBI_SECTORS_HPP
