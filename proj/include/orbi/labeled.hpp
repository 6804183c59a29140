#ifndef ORBI_LABELED_HPP
#define ORBI_LABELED_HPP

/**
 * Orbifolds presented combinatorially.
 *
 * A LabeledComplex attaches a finite group to every simplex (the isotropy on
 * its interior) and a monomorphism from each simplex's group into the group
 * of each of its facets. Groups live in a registry keyed by id; a simplex
 * without an id carries the trivial group. An optional boundary subcomplex is
 * declared, never inferred.
 */

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "group.hpp"

namespace orbi {

/// (m_i, m) pairs, one per complex coordinate, meaning eigenvalue exp(2 pi i m_i / m).
using ExponentPairs = std::vector<std::pair<int, int>>;

/// group id -> element index -> exponent pairs.
using ShiftData = std::map<std::string, std::map<Element, ExponentPairs>>;

struct LabeledComplex
{
    std::string name;
    SimplicialComplex complex;
    std::map<std::string, FiniteGroup> groups;
    std::map<int, std::string> group_id;                   ///< absent: trivial
    std::map<std::pair<int, int>, Monomorphism> face_mono; ///< (simplex, facet position)
    std::set<int> boundary;
    std::optional<ShiftData> shift_data;

    int dimension() const { return complex.dim(); }

    const FiniteGroup& group_of(int simplex) const
    {
        static const FiniteGroup trivial;
        auto it = group_id.find(simplex);
        if (it == group_id.end())
            return trivial;
        auto g = groups.find(it->second);
        if (g == groups.end())
            throw InvalidLabeling("simplex " + std::to_string(simplex) +
                                  " uses unknown group '" + it->second + "'");
        return g->second;
    }

    /// Empty string for the default trivial label.
    std::string group_id_of(int simplex) const
    {
        auto it = group_id.find(simplex);
        return it == group_id.end() ? std::string() : it->second;
    }

    const Monomorphism& mono(int simplex, int position) const
    {
        auto it = face_mono.find({simplex, position});
        if (it == face_mono.end())
            throw InvalidLabeling("missing face_mono for simplex " + std::to_string(simplex) +
                                  " facet " + std::to_string(position));
        return it->second;
    }

    void set_group(int simplex, const std::string& id)
    {
        if (id.empty())
            group_id.erase(simplex);
        else
            group_id[simplex] = id;
    }

    /// Fills in every missing face monomorphism whose source is trivial.
    void fill_trivial_monos()
    {
        for (const auto& [id, s] : complex.simplices())
            for (std::size_t i = 0; i < s.facets.size(); ++i)
            {
                auto key = std::make_pair(id, static_cast<int>(i));
                if (face_mono.count(key) || group_of(id).order() != 1)
                    continue;
                face_mono.emplace(key, Monomorphism::from_trivial(group_of(s.facets[i])));
            }
    }

    friend bool operator==(const LabeledComplex& a, const LabeledComplex& b)
    {
        if (a.name != b.name || !(a.complex == b.complex) || a.group_id != b.group_id ||
            a.boundary != b.boundary || a.shift_data != b.shift_data ||
            a.groups.size() != b.groups.size() || !(a.face_mono == b.face_mono))
            return false;
        for (const auto& [id, g] : a.groups)
        {
            auto it = b.groups.find(id);
            if (it == b.groups.end() || !g.same_law(it->second) || g.kind() != it->second.kind())
                return false;
        }
        return true;
    }
};

/// Every violated invariant of a labeled complex, as readable lines.
inline std::vector<std::string> validate(const LabeledComplex& l)
{
    std::vector<std::string> out;
    auto say = [&out](const std::string& s) { out.push_back(s); };
    const auto& k = l.complex;

    for (const auto& [sid, gid] : l.group_id)
    {
        if (!k.contains(sid))
            say("group label on unknown simplex " + std::to_string(sid));
        if (!l.groups.count(gid))
            say("simplex " + std::to_string(sid) + " uses unknown group '" + gid + "'");
    }
    if (!out.empty())
        return out;

    for (const auto& [key, m] : l.face_mono)
    {
        if (!k.contains(key.first) ||
            key.second < 0 ||
            key.second >= static_cast<int>(k.at(key.first).facets.size()))
            say("face_mono for nonexistent facet (" + std::to_string(key.first) + "," +
                std::to_string(key.second) + ")");
    }

    bool monos_ok = true;
    for (const auto& [id, s] : k.simplices())
        for (std::size_t i = 0; i < s.facets.size(); ++i)
        {
            const int f = s.facets[i];
            const FiniteGroup& gs = l.group_of(id);
            const FiniteGroup& gf = l.group_of(f);
            if (gf.order() % gs.order() != 0)
                say("order of group on simplex " + std::to_string(id) + " (" +
                    std::to_string(gs.order()) + ") does not divide order on facet " +
                    std::to_string(f) + " (" + std::to_string(gf.order()) + ")");
            auto it = l.face_mono.find({id, static_cast<int>(i)});
            if (it == l.face_mono.end())
            {
                say("missing face_mono for simplex " + std::to_string(id) + " facet position " +
                    std::to_string(i));
                monos_ok = false;
                continue;
            }
            if (!it->second.source().same_law(gs) || !it->second.target().same_law(gf))
            {
                say("face_mono (" + std::to_string(id) + "," + std::to_string(i) +
                    ") does not map group_of(simplex) into group_of(facet)");
                monos_ok = false;
            }
        }

    for (int b : l.boundary)
    {
        if (!k.contains(b))
        {
            say("boundary id " + std::to_string(b) + " is not a simplex");
            continue;
        }
        if (k.at(b).dim == k.dim())
            say("boundary contains top-dimensional simplex " + std::to_string(b));
        for (int f : k.at(b).facets)
            if (!l.boundary.count(f))
                say("boundary is not face-closed: " + std::to_string(b) + " has face " +
                    std::to_string(f) + " outside it");
    }

    // Two face paths d_i d_j = d_{j-1} d_i (i < j) must induce the same class map.
    if (monos_ok)
        for (const auto& [id, s] : k.simplices())
        {
            if (s.dim < 2)
                continue;
            for (int j = 1; j <= s.dim; ++j)
                for (int i = 0; i < j; ++i)
                {
                    const int a = s.facets[j], b = s.facets[i];
                    const int ra = k.at(a).facets[i], rb = k.at(b).facets[j - 1];
                    if (ra != rb)
                        continue;
                    const auto& ma1 = l.mono(id, j).class_map();
                    const auto& ma2 = l.mono(a, i).class_map();
                    const auto& mb1 = l.mono(id, i).class_map();
                    const auto& mb2 = l.mono(b, j - 1).class_map();
                    for (std::size_t c = 0; c < ma1.size(); ++c)
                        if (ma2[ma1[c]] != mb2[mb1[c]])
                        {
                            say("face monomorphisms of simplex " + std::to_string(id) +
                                " induce different class maps into face " +
                                std::to_string(ra));
                            goto next_simplex;
                        }
                }
        next_simplex:;
        }

    if (l.shift_data)
    {
        const int dim = k.dim();
        for (const auto& [gid, entries] : *l.shift_data)
        {
            auto g = l.groups.find(gid);
            if (g == l.groups.end())
            {
                say("shift_data references unknown group '" + gid + "'");
                continue;
            }
            for (const auto& [elem, pairs] : entries)
            {
                const std::string where = "shift_data[" + gid + "][" + std::to_string(elem) + "]";
                if (elem < 0 || elem >= g->second.order())
                    say(where + ": element out of range");
                if (dim % 2 == 0 && static_cast<int>(pairs.size()) != dim / 2)
                    say(where + ": expected " + std::to_string(dim / 2) + " exponent pairs");
                if (dim % 2 != 0 && !pairs.empty())
                    say(where + ": odd-dimensional complex has no complex coordinates");
                for (const auto& [mi, m] : pairs)
                    if (m < 1 || mi < 0 || mi >= m)
                        say(where + ": exponent pair (" + std::to_string(mi) + "," +
                            std::to_string(m) + ") violates 0 <= m_i < m");
            }
        }
    }
    return out;
}

/// Throws InvalidLabeling listing all violations.
inline void require_valid(const LabeledComplex& l)
{
    auto v = validate(l);
    if (v.empty())
        return;
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "; " : "") << v[i];
    throw InvalidLabeling(os.str());
}

/// Restriction of labels and monomorphisms to a face-closed id set.
inline LabeledComplex restrict_to(const LabeledComplex& l, const std::set<int>& ids,
                                  const std::string& name)
{
    LabeledComplex out;
    out.name = name;
    out.complex = subcomplex(l.complex, ids);
    for (int id : ids)
    {
        auto gid = l.group_id_of(id);
        if (!gid.empty())
        {
            out.group_id[id] = gid;
            out.groups.emplace(gid, l.groups.at(gid));
        }
        const auto& s = l.complex.at(id);
        for (std::size_t i = 0; i < s.facets.size(); ++i)
        {
            auto it = l.face_mono.find({id, static_cast<int>(i)});
            if (it != l.face_mono.end())
                out.face_mono.emplace(it->first, it->second);
        }
    }
    return out;
}

inline LabeledComplex boundary_restriction(const LabeledComplex& l)
{
    return restrict_to(l, l.boundary, l.name + ".boundary");
}

// ---------------------------------------------------------------------------
// Global quotients
// ---------------------------------------------------------------------------

/**
 * A finite group acting simplicially on a genuine simplicial complex (distinct
 * simplices have distinct vertex sets) through permutations of vertex ids.
 */
struct GroupAction
{
    FiniteGroup group;
    SimplicialComplex complex;
    std::vector<std::map<int, int>> vertex_perm;  ///< indexed by group element
    std::set<int> boundary;                       ///< invariant, face-closed; may be empty
};

namespace detail {

struct ActionTables
{
    std::map<std::vector<int>, int> id_of_vertex_set;
    std::map<int, std::vector<int>> ordered_vertices;
    /// image[g][simplex id] = id of g . simplex
    std::vector<std::map<int, int>> image;
};

inline ActionTables action_tables(const GroupAction& a)
{
    const auto& k = a.complex;
    ActionTables t;
    if (static_cast<int>(a.vertex_perm.size()) != a.group.order())
        throw BadAction("need one vertex permutation per group element");

    for (const auto& [id, s] : k.simplices())
    {
        auto v = k.vertices(id);
        t.ordered_vertices[id] = v;
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw BadAction("simplex " + std::to_string(id) + " has a repeated vertex");
        if (!t.id_of_vertex_set.emplace(v, id).second)
            throw BadAction("simplices " + std::to_string(id) + " and " +
                            std::to_string(t.id_of_vertex_set[v]) + " share a vertex set");
    }

    const auto verts = k.ids_of_dim(0);
    for (int g = 0; g < a.group.order(); ++g)
    {
        const auto& p = a.vertex_perm[g];
        std::set<int> img;
        for (int v : verts)
        {
            auto it = p.find(v);
            if (it == p.end() || !k.contains(it->second) || k.at(it->second).dim != 0)
                throw BadAction("element " + std::to_string(g) + " does not permute vertex " +
                                std::to_string(v));
            img.insert(it->second);
        }
        if (img.size() != verts.size() || p.size() != verts.size())
            throw BadAction("element " + std::to_string(g) + " is not a bijection on vertices");
    }
    for (int g = 0; g < a.group.order(); ++g)
        for (int h = 0; h < a.group.order(); ++h)
        {
            const int gh = a.group.mul(g, h);
            for (int v : verts)
                if (a.vertex_perm[gh].at(v) != a.vertex_perm[g].at(a.vertex_perm[h].at(v)))
                    throw BadAction("vertex permutations are not a homomorphism at (" +
                                    std::to_string(g) + "," + std::to_string(h) + ")");
        }

    t.image.resize(a.group.order());
    for (int g = 0; g < a.group.order(); ++g)
        for (const auto& [id, ov] : t.ordered_vertices)
        {
            std::vector<int> v;
            for (int x : ov)
                v.push_back(a.vertex_perm[g].at(x));
            std::sort(v.begin(), v.end());
            auto it = t.id_of_vertex_set.find(v);
            if (it == t.id_of_vertex_set.end())
                throw BadAction("element " + std::to_string(g) + " maps simplex " +
                                std::to_string(id) + " to a non-simplex");
            t.image[g][id] = it->second;
        }
    for (int b : a.boundary)
    {
        if (!k.contains(b))
            throw BadAction("boundary id " + std::to_string(b) + " is not a simplex");
        for (int g = 0; g < a.group.order(); ++g)
            if (!a.boundary.count(t.image[g][b]))
                throw BadAction("boundary is not invariant under element " + std::to_string(g));
    }
    return t;
}

} // namespace detail

/// Throws NotRegular if some element fixes a simplex setwise but moves a vertex of it.
inline void check_regular(const GroupAction& a)
{
    auto t = detail::action_tables(a);
    for (int g = 0; g < a.group.order(); ++g)
        for (const auto& [id, ov] : t.ordered_vertices)
        {
            if (t.image[g][id] != id)
                continue;
            for (int v : ov)
                if (a.vertex_perm[g].at(v) != v)
                    throw NotRegular("element " + std::to_string(g) + " fixes simplex " +
                                     std::to_string(id) + " but moves vertex " +
                                     std::to_string(v));
        }
}

inline bool is_regular(const GroupAction& a)
{
    try
    {
        check_regular(a);
        return true;
    }
    catch (const NotRegular&)
    {
        return false;
    }
}

/// Throws NotOrderPreserving unless every element maps ordered vertex lists to ordered vertex lists.
inline void check_order_preserving(const GroupAction& a)
{
    auto t = detail::action_tables(a);
    for (int g = 0; g < a.group.order(); ++g)
        for (const auto& [id, ov] : t.ordered_vertices)
        {
            std::vector<int> mapped;
            for (int v : ov)
                mapped.push_back(a.vertex_perm[g].at(v));
            if (mapped != t.ordered_vertices.at(t.image[g][id]))
                throw NotOrderPreserving("element " + std::to_string(g) + " does not carry the " +
                                         "vertex order of simplex " + std::to_string(id) +
                                         " to that of its image; subdivide first");
        }
}

/// Ids of simplices fixed by g (pointwise, for a regular action).
inline std::set<int> fixed_simplices(const GroupAction& a, Element g)
{
    auto t = detail::action_tables(a);
    std::set<int> out;
    for (const auto& [id, img] : t.image[g])
        if (img == id)
            out.insert(id);
    return out;
}

/**
 * Orbit complex of an order-preserving action. Each orbit is represented by
 * its least simplex id, labeled with that simplex's stabilizer; face
 * monomorphisms are stabilizer inclusions conjugated onto the representative
 * of the facet's orbit.
 */
inline LabeledComplex global_quotient(const GroupAction& a, const std::string& name = "quotient")
{
    check_regular(a);
    check_order_preserving(a);
    const auto t = detail::action_tables(a);
    const auto& k = a.complex;
    const FiniteGroup& grp = a.group;

    std::map<int, int> rep;  // simplex -> orbit representative
    for (const auto& [id, s] : k.simplices())
    {
        if (rep.count(id))
            continue;
        for (int g = 0; g < grp.order(); ++g)
            rep.emplace(t.image[g].at(id), id);
    }

    LabeledComplex out;
    out.name = name;
    std::vector<Simplex> entries;
    std::map<int, std::vector<Element>> embedding;
    std::map<std::vector<Element>, std::string> stab_ids;
    std::map<int, FiniteGroup> stab_group;
    for (const auto& [id, s] : k.simplices())
    {
        if (rep.at(id) != id)
            continue;
        Simplex q{id, s.dim, {}};
        for (int f : s.facets)
            q.facets.push_back(rep.at(f));
        entries.push_back(q);

        std::vector<Element> stab;
        for (int g = 0; g < grp.order(); ++g)
            if (t.image[g].at(id) == id)
                stab.push_back(g);
        std::vector<Element> emb;
        FiniteGroup sg = subgroup(grp, stab, emb);
        embedding[id] = emb;
        stab_group[id] = sg;
        if (sg.order() == 1)
            continue;
        auto [it, fresh] = stab_ids.emplace(stab, "stab" + std::to_string(id));
        if (fresh)
            out.groups.emplace(it->second, FiniteGroup::from_validated(
                                               sg.table(), it->second, GroupKind::table, sg.order()));
        out.group_id[id] = it->second;
    }
    out.complex = complex_from_simplices(entries);

    for (const auto& q : entries)
    {
        const auto& s = k.at(q.id);
        for (std::size_t i = 0; i < s.facets.size(); ++i)
        {
            const int face = s.facets[i];
            const int r = rep.at(face);
            Element mover = -1;  // a . face = r
            for (int g = 0; g < grp.order() && mover < 0; ++g)
                if (t.image[g].at(face) == r)
                    mover = g;
            const auto& src = embedding.at(q.id);
            const auto& dst = embedding.at(r);
            std::vector<Element> map;
            for (Element h : src)
            {
                Element c = grp.conjugate(mover, h);
                auto pos = std::lower_bound(dst.begin(), dst.end(), c);
                map.push_back(static_cast<Element>(pos - dst.begin()));
            }
            out.face_mono.emplace(std::make_pair(q.id, static_cast<int>(i)),
                                  Monomorphism(out.group_of(q.id), out.group_of(r), map));
        }
    }
    for (int b : a.boundary)
        out.boundary.insert(rep.at(b));
    return out;
}

/**
 * Barycentric subdivision with the induced action. New vertices are the old
 * simplices, ordered by dimension inside every new simplex, so the result is
 * regular and order-preserving.
 */
inline GroupAction subdivide(const GroupAction& a)
{
    const auto t = detail::action_tables(a);
    const auto& k = a.complex;
    const int stride = k.simplices().rbegin()->first + 1;
    auto label = [&](int id) { return k.at(id).dim * stride + id; };

    std::set<int> has_coface;
    for (const auto& [id, s] : k.simplices())
        for (int f : s.facets)
            has_coface.insert(f);

    std::vector<std::vector<int>> flags;
    std::vector<int> chain;
    auto descend = [&](auto&& self, int id) -> void {
        chain.push_back(label(id));
        const auto& s = k.at(id);
        if (s.facets.empty())
            flags.push_back(chain);
        for (int f : s.facets)
            self(self, f);
        chain.pop_back();
    };
    for (const auto& [id, s] : k.simplices())
        if (!has_coface.count(id))
            descend(descend, id);

    VertexComplex sd = complex_from_vertex_sets(flags);
    std::map<int, int> old_of_label;
    for (const auto& [id, s] : k.simplices())
        old_of_label[label(id)] = id;

    GroupAction out;
    out.group = a.group;
    out.complex = sd.complex;
    out.vertex_perm.resize(a.group.order());
    for (int g = 0; g < a.group.order(); ++g)
        for (int v : sd.complex.ids_of_dim(0))
        {
            const int old = old_of_label.at(sd.labels_of.at(v)[0]);
            out.vertex_perm[g][v] = sd.id_of.at({label(t.image[g].at(old))});
        }
    for (const auto& [id, labels] : sd.labels_of)
    {
        bool inside = true;
        for (int lab : labels)
            inside = inside && a.boundary.count(old_of_label.at(lab));
        if (inside)
            out.boundary.insert(id);
    }
    return out;
}

/// Trivial-group labeling of a plain complex (every monomorphism is the trivial one).
inline LabeledComplex trivially_labeled(const SimplicialComplex& k, const std::string& name,
                                        std::set<int> boundary = {})
{
    LabeledComplex l;
    l.name = name;
    l.complex = k;
    l.boundary = std::move(boundary);
    l.fill_trivial_monos();
    return l;
}

} // namespace orbi

#endif // ORBI_LABELED_HPP
