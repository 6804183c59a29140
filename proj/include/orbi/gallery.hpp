#ifndef ORBI_GALLERY_HPP
#define ORBI_GALLERY_HPP

/**
 * Small triangulated orbifolds and group actions used throughout the tests
 * and exposed by `orbi example`.
 *
 * Spheres are octahedra on the labels +x=0, -x=1, +y=2, -y=3, +z=4, -z=5, so
 * sorting labels sorts by axis and the antipodal map preserves vertex order.
 * Any triangulation with the right isotropy labels would do; every quantity
 * computed from these is triangulation-independent.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "labeled.hpp"

namespace orbi::gallery {

namespace detail {

inline constexpr int px = 0, mx = 1, py = 2, my = 3, pz = 4, mz = 5;

/// The eight triangles of the octahedron, shifted by `offset`.
inline std::vector<std::vector<int>> octahedron_triangles(int offset = 0)
{
    std::vector<std::vector<int>> t;
    for (int a : {px, mx})
        for (int b : {py, my})
            for (int c : {pz, mz})
                t.push_back({a + offset, b + offset, c + offset});
    return t;
}

/// Staircase prism triangulation of triangle x inner/outer (outer labels = inner + shift).
inline std::vector<std::vector<int>> collar_tets(const std::vector<std::vector<int>>& triangles,
                                                 int shift)
{
    std::vector<std::vector<int>> out;
    for (auto t : triangles)
    {
        std::sort(t.begin(), t.end());
        const int a = t[0], b = t[1], c = t[2];
        out.push_back({a, b, c, c + shift});
        out.push_back({a, b, b + shift, c + shift});
        out.push_back({a, a + shift, b + shift, c + shift});
    }
    return out;
}

inline std::vector<std::vector<int>> cone(const std::vector<std::vector<int>>& base, int apex)
{
    auto out = base;
    for (auto& s : out)
        s.push_back(apex);
    return out;
}

inline std::set<int> ids_within(const VertexComplex& vc, const std::set<int>& labels)
{
    std::set<int> out;
    for (const auto& [id, labs] : vc.labels_of)
    {
        bool inside = true;
        for (int x : labs)
            inside = inside && labels.count(x);
        if (inside)
            out.insert(id);
    }
    return out;
}

inline void label(LabeledComplex& l, const VertexComplex& vc, std::vector<int> labels,
                  const std::string& gid)
{
    std::sort(labels.begin(), labels.end());
    l.set_group(vc.id_of.at(labels), gid);
}

/// Identity monomorphisms between equal labels; trivial ones elsewhere.
inline void fill_identity_monos(LabeledComplex& l)
{
    for (const auto& [id, s] : l.complex.simplices())
        for (std::size_t i = 0; i < s.facets.size(); ++i)
        {
            auto key = std::make_pair(id, static_cast<int>(i));
            if (l.face_mono.count(key))
                continue;
            const auto& src = l.group_of(id);
            const auto& dst = l.group_of(s.facets[i]);
            if (src.order() == 1)
                l.face_mono.emplace(key, Monomorphism::from_trivial(dst));
            else if (l.group_id_of(id) == l.group_id_of(s.facets[i]))
            {
                std::vector<Element> idmap(src.order());
                std::iota(idmap.begin(), idmap.end(), 0);
                l.face_mono.emplace(key, Monomorphism(src, dst, idmap));
            }
        }
}

inline std::string cyclic_id(int k) { return "Z" + std::to_string(k); }

inline void add_cyclic(LabeledComplex& l, int k)
{
    if (k > 1)
        l.groups.emplace(cyclic_id(k), cyclic(k));
}

/// Rotation shift data for a cyclic group acting on one complex coordinate.
inline void add_rotation_shifts(ShiftData& sd, int k)
{
    if (k <= 1)
        return;
    auto& e = sd[cyclic_id(k)];
    for (int i = 1; i < k; ++i)
        e[i] = {{i, k}};
}

inline std::string cyclic_label(int k) { return k > 1 ? cyclic_id(k) : std::string(); }

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw BadParams(what);
}

} // namespace detail

/// A point carrying the trivial action of G.
inline LabeledComplex point_with_group(const FiniteGroup& g)
{
    LabeledComplex l;
    l.name = "point_with_group(" + g.name() + ")";
    l.complex = complex_from_simplices({Simplex{0, 0, {}}});
    if (g.order() > 1)
    {
        l.groups.emplace(g.name(), g);
        l.set_group(0, g.name());
        // dim 0: no complex coordinates, every element shifts by 0.
        ShiftData sd;
        for (int x = 1; x < g.order(); ++x)
            sd[g.name()][x] = {};
        l.shift_data = sd;
    }
    require_valid(l);
    return l;
}

/// Octahedral S^2 with +z labeled Z_k and -z labeled Z_l.
inline LabeledComplex football(int k, int l_order)
{
    detail::require(k >= 1 && l_order >= 1, "football orders must be >= 1");
    auto vc = complex_from_vertex_sets(detail::octahedron_triangles());
    LabeledComplex l;
    l.name = "football(" + std::to_string(k) + "," + std::to_string(l_order) + ")";
    l.complex = vc.complex;
    detail::add_cyclic(l, k);
    detail::add_cyclic(l, l_order);
    detail::label(l, vc, {detail::pz}, detail::cyclic_label(k));
    detail::label(l, vc, {detail::mz}, detail::cyclic_label(l_order));
    l.fill_trivial_monos();
    ShiftData sd;
    detail::add_rotation_shifts(sd, k);
    detail::add_rotation_shifts(sd, l_order);
    l.shift_data = sd;
    require_valid(l);
    return l;
}

/// S^2 with a single cone point of order k.
inline LabeledComplex teardrop(int k)
{
    detail::require(k >= 1, "teardrop order must be >= 1");
    auto l = football(k, 1);
    l.name = "teardrop(" + std::to_string(k) + ")";
    return l;
}

/// Cone over the octahedron; the axis through the poles and the apex carries Z_k.
inline LabeledComplex solid_football(int k)
{
    detail::require(k >= 1, "solid_football order must be >= 1");
    constexpr int apex = 6;
    auto tris = detail::octahedron_triangles();
    auto vc = complex_from_vertex_sets(detail::cone(tris, apex));
    LabeledComplex l;
    l.name = "solid_football(" + std::to_string(k) + ")";
    l.complex = vc.complex;
    detail::add_cyclic(l, k);
    const auto gid = detail::cyclic_label(k);
    for (std::vector<int> s : {std::vector<int>{apex}, {detail::pz}, {detail::mz},
                               {detail::pz, apex}, {detail::mz, apex}})
        detail::label(l, vc, s, gid);
    l.boundary = detail::ids_within(vc, {0, 1, 2, 3, 4, 5});
    detail::fill_identity_monos(l);
    require_valid(l);
    return l;
}

/**
 * S^2 x [1,2] (inner octahedron on labels 0..5, outer on 10..15) with the
 * radial arc over +z labeled Z_k and the arc over -z labeled Z_l. Both
 * boundary spheres are (k,l)-footballs.
 */
inline LabeledComplex solid_hollow_football(int k, int l_order)
{
    detail::require(k >= 1 && l_order >= 1, "solid_hollow_football orders must be >= 1");
    constexpr int shift = 10;
    auto vc = complex_from_vertex_sets(detail::collar_tets(detail::octahedron_triangles(), shift));
    LabeledComplex l;
    l.name = "solid_hollow_football(" + std::to_string(k) + "," + std::to_string(l_order) + ")";
    l.complex = vc.complex;
    detail::add_cyclic(l, k);
    detail::add_cyclic(l, l_order);
    const int n = detail::pz, s = detail::mz;
    for (std::vector<int> x : {std::vector<int>{n}, {n + shift}, {n, n + shift}})
        detail::label(l, vc, x, detail::cyclic_label(k));
    for (std::vector<int> x : {std::vector<int>{s}, {s + shift}, {s, s + shift}})
        detail::label(l, vc, x, detail::cyclic_label(l_order));
    l.boundary = detail::ids_within(vc, {0, 1, 2, 3, 4, 5});
    auto outer = detail::ids_within(vc, {10, 11, 12, 13, 14, 15});
    l.boundary.insert(outer.begin(), outer.end());
    detail::fill_identity_monos(l);
    require_valid(l);
    return l;
}

/**
 * 3-ball = cone (apex 20) over a middle octahedron plus a collar out to the
 * boundary octahedron (labels 10..15). The singular set is two interior
 * triangles of edges through the apex: apex,+x,+y labeled Z_2 and
 * apex,-x,-y labeled Z_3; the apex carries dihedral(3). Z_2 enters as the
 * reflection s (element 3) and Z_3 as the rotation r (element 1).
 */
inline LabeledComplex figure8_disk()
{
    constexpr int apex = 20, shift = 10;
    using namespace detail;
    auto tris = octahedron_triangles();
    auto tops = cone(tris, apex);
    auto collar = collar_tets(tris, shift);
    tops.insert(tops.end(), collar.begin(), collar.end());
    auto vc = complex_from_vertex_sets(tops);

    LabeledComplex l;
    l.name = "figure8_disk";
    l.complex = vc.complex;
    const FiniteGroup d6 = dihedral(3);
    l.groups.emplace("D6", d6);
    l.groups.emplace("Z2", cyclic(2));
    l.groups.emplace("Z3", cyclic(3));
    label(l, vc, {apex}, "D6");
    for (std::vector<int> x : {std::vector<int>{px}, {py}, {px, py}, {px, apex}, {py, apex}})
        label(l, vc, x, "Z2");
    for (std::vector<int> x : {std::vector<int>{mx}, {my}, {mx, my}, {mx, apex}, {my, apex}})
        label(l, vc, x, "Z3");

    const int hub = vc.id_of.at({apex});
    for (const auto& [id, s] : l.complex.simplices())
        for (std::size_t i = 0; i < s.facets.size(); ++i)
        {
            if (s.facets[i] != hub)
                continue;
            const auto gid = l.group_id_of(id);
            if (gid == "Z2")
                l.face_mono.emplace(std::make_pair(id, static_cast<int>(i)),
                                    Monomorphism(l.groups.at("Z2"), d6, {0, 3}));
            else if (gid == "Z3")
                l.face_mono.emplace(std::make_pair(id, static_cast<int>(i)),
                                    Monomorphism(l.groups.at("Z3"), d6, {0, 1, 2}));
        }
    fill_identity_monos(l);
    l.boundary = ids_within(vc, {10, 11, 12, 13, 14, 15});
    require_valid(l);
    return l;
}

// ---------------------------------------------------------------------------
// Group actions
// ---------------------------------------------------------------------------

/// Z_2 acting on the octahedron (optionally coned off at a fixed apex 6) by v -> -v.
inline GroupAction antipodal_octahedron_action(bool with_cone = false)
{
    auto tris = detail::octahedron_triangles();
    auto vc = complex_from_vertex_sets(with_cone ? detail::cone(tris, 6) : tris);
    GroupAction a;
    a.group = cyclic(2);
    a.complex = vc.complex;
    a.vertex_perm.resize(2);
    for (int lab = 0; lab < (with_cone ? 7 : 6); ++lab)
    {
        const int anti = lab == 6 ? 6 : (lab ^ 1);
        const int v = vc.id_of.at({lab});
        a.vertex_perm[0][v] = v;
        a.vertex_perm[1][v] = vc.id_of.at({anti});
    }
    if (with_cone)
        a.boundary = detail::ids_within(vc, {0, 1, 2, 3, 4, 5});
    return a;
}

/**
 * Suspension of a k-gon (k >= 3) with Z_k rotating the equator and fixing the
 * poles. Equator edges are oriented i -> i+1, so the rotation preserves
 * every vertex order and the quotient exists without subdivision.
 * Vertex ids: equator 0..k-1, north k, south k+1.
 */
inline GroupAction rotation_football_action(int k)
{
    detail::require(k >= 3, "rotation_football_action needs k >= 3");
    const int north = k, south = k + 1;
    std::vector<Simplex> s;
    for (int v = 0; v < k + 2; ++v)
        s.push_back({v, 0, {}});
    auto eq = [&](int i) { return 100 + i; };      // (i, i+1)
    auto pol = [&](int p, int i) { return (p == north ? 200 : 300) + i; };  // (p, i)
    auto tri = [&](int p, int i) { return (p == north ? 400 : 500) + i; };  // (p, i, i+1)
    for (int i = 0; i < k; ++i)
    {
        s.push_back({eq(i), 1, {(i + 1) % k, i}});
        for (int p : {north, south})
            s.push_back({pol(p, i), 1, {i, p}});
    }
    for (int i = 0; i < k; ++i)
        for (int p : {north, south})
            s.push_back({tri(p, i), 2, {eq(i), pol(p, (i + 1) % k), pol(p, i)}});

    GroupAction a;
    a.group = cyclic(k);
    a.complex = complex_from_simplices(s);
    a.vertex_perm.resize(k);
    for (int g = 0; g < k; ++g)
    {
        for (int i = 0; i < k; ++i)
            a.vertex_perm[g][i] = (i + g) % k;
        a.vertex_perm[g][north] = north;
        a.vertex_perm[g][south] = south;
    }
    return a;
}

/**
 * dihedral(k) acting on the suspension of a k-gon: r rotates, s reflects
 * i -> -i. Reflections flip equator edges, so this action is not regular
 * until subdivided.
 */
inline GroupAction dihedral_suspension_action(int k)
{
    detail::require(k >= 3, "dihedral_suspension_action needs k >= 3");
    std::vector<std::vector<int>> tris;
    for (int i = 0; i < k; ++i)
        for (int p : {k, k + 1})
            tris.push_back({i, (i + 1) % k, p});
    auto vc = complex_from_vertex_sets(tris);
    GroupAction a;
    a.group = dihedral(k);
    a.complex = vc.complex;
    a.vertex_perm.resize(2 * k);
    for (int g = 0; g < 2 * k; ++g)
    {
        const int rot = g % k;
        const bool refl = g >= k;
        for (int i = 0; i < k; ++i)
        {
            // r^rot s^refl : i -> rot + (refl ? -i : i)
            const int img = ((rot + (refl ? -i : i)) % k + k) % k;
            a.vertex_perm[g][vc.id_of.at({i})] = vc.id_of.at({img});
        }
        for (int p : {k, k + 1})
            a.vertex_perm[g][vc.id_of.at({p})] = vc.id_of.at({p});
    }
    return a;
}

/// Z_2 swapping the endpoints of a single edge.
inline GroupAction edge_swap_action()
{
    auto vc = complex_from_vertex_sets({{0, 1}});
    GroupAction a;
    a.group = cyclic(2);
    a.complex = vc.complex;
    const int u = vc.id_of.at({0}), v = vc.id_of.at({1});
    a.vertex_perm = {{{u, u}, {v, v}}, {{u, v}, {v, u}}};
    return a;
}

/// Closed 3-ball quotient B^3 / (x -> -x): cone point of order 2 over RP^2.
inline LabeledComplex antipodal_ball()
{
    auto l = global_quotient(antipodal_octahedron_action(true), "antipodal_ball");
    // The only nontrivial stabilizer is the whole Z_2; store it under its usual name.
    for (auto& [sid, gid] : l.group_id)
        gid = "Z2";
    l.groups.clear();
    l.groups.emplace("Z2", cyclic(2));
    require_valid(l);
    return l;
}

/// Trivially labeled octahedral S^2.
inline LabeledComplex octahedron()
{
    return trivially_labeled(complex_from_vertex_sets(detail::octahedron_triangles()).complex,
                             "octahedron");
}

/// RP^2 as the quotient of the octahedron by x -> -x.
inline LabeledComplex antipodal_quotient()
{
    return global_quotient(antipodal_octahedron_action(false), "antipodal_quotient");
}

/// Gallery lookup used by the CLI. `params` holds k, l and the group spec.
struct ExampleParams
{
    int k = 3;
    int l = 2;
    std::string group = "dihedral:3";  ///< "cyclic:n" | "dihedral:n" for point_with_group
};

inline FiniteGroup parse_group_spec(const std::string& spec)
{
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw BadParams("group spec must look like cyclic:n or dihedral:n");
    const auto kind = spec.substr(0, colon);
    int n = 0;
    try
    {
        n = std::stoi(spec.substr(colon + 1));
    }
    catch (const std::exception&)
    {
        throw BadParams("bad group order in '" + spec + "'");
    }
    if (n < 1)
        throw BadParams("group order must be >= 1");
    if (kind == "cyclic")
        return cyclic(n);
    if (kind == "dihedral")
        return dihedral(n);
    throw BadParams("unknown group kind '" + kind + "'");
}

inline const std::vector<std::string>& example_names()
{
    static const std::vector<std::string> names{
        "point_with_group", "teardrop", "football", "solid_football",
        "solid_hollow_football", "figure8_disk", "antipodal_ball", "octahedron",
        "antipodal_quotient"};
    return names;
}

inline LabeledComplex example(const std::string& name, const ExampleParams& p = {})
{
    if (name == "point_with_group")
        return point_with_group(parse_group_spec(p.group));
    if (name == "teardrop")
        return teardrop(p.k);
    if (name == "football")
        return football(p.k, p.l);
    if (name == "solid_football")
        return solid_football(p.k);
    if (name == "solid_hollow_football")
        return solid_hollow_football(p.k, p.l);
    if (name == "figure8_disk")
        return figure8_disk();
    if (name == "antipodal_ball")
        return antipodal_ball();
    if (name == "octahedron")
        return octahedron();
    if (name == "antipodal_quotient")
        return antipodal_quotient();
    throw BadParams("unknown example '" + name + "'");
}

} // namespace orbi::gallery

#endif // ORBI_GALLERY_HPP
