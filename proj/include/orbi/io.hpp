#ifndef ORBI_IO_HPP
#define ORBI_IO_HPP

/**
 * JSON files for labeled complexes, and JSON renderings of reports.
 *
 * File layout:
 *   {"name", "dimension", "groups": [{"id", "kind", "order" | "table"}],
 *    "simplices": [{"id", "dim", "facets", "group"?}],
 *    "face_monos": [{"simplex", "facet_position", "map"}],
 *    "boundary": [int], "shift_data"?: {gid: {"elem": [[m_i, m]]}}}
 *
 * "order" is the group order for both cyclic and dihedral groups. Monos whose
 * source is trivial may be omitted and are filled in on load. Rationals are
 * written as "p/q" strings.
 */

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "invariants.hpp"
#include "labeled.hpp"
#include "rational.hpp"
#include "sectors.hpp"

namespace orbi {

using Json = nlohmann::json;

namespace detail {

inline void only_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where)
{
    if (!j.is_object())
        throw SchemaError(where + " must be an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key))
            throw SchemaError("unknown key '" + key + "' in " + where);
}

inline const Json& need(const Json& j, const std::string& key, const std::string& where)
{
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(where + " is missing '" + key + "'");
    return *it;
}

template <class T>
T get_as(const Json& j, const std::string& what)
{
    try
    {
        return j.get<T>();
    }
    catch (const nlohmann::json::exception&)
    {
        throw SchemaError(what + " has the wrong type");
    }
}

inline FiniteGroup group_from_json(const Json& g, const std::string& where)
{
    only_keys(g, {"id", "kind", "order", "table"}, where);
    const auto kind = get_as<std::string>(need(g, "kind", where), where + ".kind");
    if (kind == "table")
    {
        if (g.contains("order") &&
            get_as<int>(g["order"], where + ".order") !=
                static_cast<int>(need(g, "table", where).size()))
            throw SchemaError(where + ".order disagrees with the table");
        return group_from_table(get_as<CayleyTable>(need(g, "table", where), where + ".table"));
    }
    if (g.contains("table"))
        throw SchemaError(where + ": 'table' is only allowed for kind 'table'");
    const int order = get_as<int>(need(g, "order", where), where + ".order");
    if (order < 1)
        throw SchemaError(where + ".order must be positive");
    if (kind == "cyclic")
        return cyclic(order);
    if (kind == "dihedral")
    {
        if (order % 2 != 0)
            throw SchemaError(where + ": dihedral order must be even");
        return dihedral(order / 2);
    }
    throw SchemaError(where + ": unknown group kind '" + kind + "'");
}

inline Json group_to_json(const std::string& id, const FiniteGroup& g)
{
    Json j{{"id", id}};
    switch (g.kind())
    {
        case GroupKind::cyclic:
            j["kind"] = "cyclic";
            j["order"] = g.order();
            break;
        case GroupKind::dihedral:
            j["kind"] = "dihedral";
            j["order"] = g.order();
            break;
        case GroupKind::table:
            j["kind"] = "table";
            j["table"] = g.table();
            break;
    }
    return j;
}

} // namespace detail

inline ShiftData shift_data_from_json(const Json& j)
{
    if (!j.is_object())
        throw SchemaError("shift_data must be an object");
    ShiftData sd;
    for (const auto& [gid, elems] : j.items())
    {
        if (!elems.is_object())
            throw SchemaError("shift_data." + gid + " must be an object");
        auto& per = sd[gid];
        for (const auto& [key, pairs] : elems.items())
        {
            Element e = 0;
            std::size_t used = 0;
            try
            {
                e = std::stoi(key, &used);
            }
            catch (const std::exception&)
            {
                used = 0;
            }
            if (used != key.size() || key.empty())
                throw SchemaError("shift_data." + gid + ": element key '" + key + "' is not an integer");
            ExponentPairs ep;
            for (const auto& p : detail::get_as<std::vector<std::vector<int>>>(
                     pairs, "shift_data." + gid + "." + key))
            {
                if (p.size() != 2)
                    throw SchemaError("shift_data." + gid + "." + key + ": pairs must be [m_i, m]");
                ep.emplace_back(p[0], p[1]);
            }
            per[e] = std::move(ep);
        }
    }
    return sd;
}

inline Json shift_data_to_json(const ShiftData& sd)
{
    Json j = Json::object();
    for (const auto& [gid, per] : sd)
    {
        Json g = Json::object();
        for (const auto& [e, pairs] : per)
        {
            Json list = Json::array();
            for (const auto& [mi, m] : pairs)
                list.push_back({mi, m});
            g[std::to_string(e)] = list;
        }
        j[gid] = g;
    }
    return j;
}

/// Builds the labeled complex without checking labeling invariants.
inline LabeledComplex labeled_from_json_unchecked(const Json& j)
{
    detail::only_keys(j, {"name", "dimension", "groups", "simplices", "face_monos", "boundary",
                          "shift_data"},
                      "document");
    LabeledComplex l;
    l.name = detail::get_as<std::string>(detail::need(j, "name", "document"), "name");

    for (const auto& g : detail::get_as<std::vector<Json>>(detail::need(j, "groups", "document"), "groups"))
    {
        const auto id = detail::get_as<std::string>(detail::need(g, "id", "group"), "group id");
        if (id.empty())
            throw SchemaError("group id must be non-empty");
        if (!l.groups.emplace(id, detail::group_from_json(g, "group '" + id + "'")).second)
            throw SchemaError("duplicate group id '" + id + "'");
    }

    std::vector<Simplex> cells;
    for (const auto& s :
         detail::get_as<std::vector<Json>>(detail::need(j, "simplices", "document"), "simplices"))
    {
        detail::only_keys(s, {"id", "dim", "facets", "group"}, "simplex");
        Simplex cell;
        cell.id = detail::get_as<int>(detail::need(s, "id", "simplex"), "simplex id");
        const std::string where = "simplex " + std::to_string(cell.id);
        cell.dim = detail::get_as<int>(detail::need(s, "dim", where), where + ".dim");
        cell.facets = detail::get_as<std::vector<int>>(detail::need(s, "facets", where), where + ".facets");
        if (s.contains("group"))
            l.set_group(cell.id, detail::get_as<std::string>(s["group"], where + ".group"));
        cells.push_back(std::move(cell));
    }
    l.complex = complex_from_simplices(cells);

    const int dim = detail::get_as<int>(detail::need(j, "dimension", "document"), "dimension");
    if (dim != l.complex.dim())
        throw SchemaError("dimension " + std::to_string(dim) + " but simplices reach dimension " +
                          std::to_string(l.complex.dim()));

    for (const auto& [sid, gid] : l.group_id)
        if (!l.groups.count(gid))
            throw SchemaError("simplex " + std::to_string(sid) + " uses unknown group '" + gid + "'");

    if (j.contains("face_monos"))
        for (const auto& m : detail::get_as<std::vector<Json>>(j["face_monos"], "face_monos"))
        {
            detail::only_keys(m, {"simplex", "facet_position", "map"}, "face_mono");
            const int sid = detail::get_as<int>(detail::need(m, "simplex", "face_mono"), "face_mono.simplex");
            const int pos = detail::get_as<int>(detail::need(m, "facet_position", "face_mono"),
                                                "face_mono.facet_position");
            if (!l.complex.contains(sid))
                throw SchemaError("face_mono on unknown simplex " + std::to_string(sid));
            const auto& s = l.complex.at(sid);
            if (pos < 0 || pos >= static_cast<int>(s.facets.size()))
                throw SchemaError("face_mono facet_position out of range on simplex " + std::to_string(sid));
            auto map = detail::get_as<std::vector<Element>>(detail::need(m, "map", "face_mono"), "face_mono.map");
            if (!l.face_mono
                     .emplace(std::make_pair(sid, pos),
                              Monomorphism(l.group_of(sid), l.group_of(s.facets[pos]), std::move(map)))
                     .second)
                throw SchemaError("duplicate face_mono for simplex " + std::to_string(sid));
        }
    l.fill_trivial_monos();

    if (j.contains("boundary"))
        for (int id : detail::get_as<std::vector<int>>(j["boundary"], "boundary"))
            l.boundary.insert(id);
    if (j.contains("shift_data"))
        l.shift_data = shift_data_from_json(j["shift_data"]);
    return l;
}

inline LabeledComplex labeled_from_json(const Json& j)
{
    auto l = labeled_from_json_unchecked(j);
    require_valid(l);
    return l;
}

inline Json parse_json_text(const std::string& text)
{
    try
    {
        return Json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw ParseError(e.what());
    }
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline LabeledComplex load_orbifold(const std::string& path)
{
    return labeled_from_json(parse_json_text(read_file(path)));
}

inline Json to_json(const LabeledComplex& l)
{
    Json j;
    j["name"] = l.name;
    j["dimension"] = l.dimension();
    j["groups"] = Json::array();
    for (const auto& [id, g] : l.groups)
        j["groups"].push_back(detail::group_to_json(id, g));
    j["simplices"] = Json::array();
    for (const auto& [id, s] : l.complex.simplices())
    {
        Json e{{"id", id}, {"dim", s.dim}, {"facets", s.facets}};
        if (auto gid = l.group_id_of(id); !gid.empty())
            e["group"] = gid;
        j["simplices"].push_back(e);
    }
    j["face_monos"] = Json::array();
    for (const auto& [key, m] : l.face_mono)
        if (m.source().order() > 1)
            j["face_monos"].push_back({{"simplex", key.first}, {"facet_position", key.second}, {"map", m.map()}});
    j["boundary"] = l.boundary;
    if (l.shift_data)
        j["shift_data"] = shift_data_to_json(*l.shift_data);
    return j;
}

inline void save_orbifold(const LabeledComplex& l, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write " + path);
    out << to_json(l).dump(2) << '\n';
}

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json betti_table_to_json(const std::map<Rational, long long>& table)
{
    Json j = Json::object();
    for (const auto& [degree, b] : table)
        j[to_string(degree)] = b;
    return j;
}

inline Json to_json(const InvariantReport& r)
{
    Json j;
    j["name"] = r.name;
    j["chi_underlying"] = r.chi_underlying;
    j["chi_boundary"] = r.chi_boundary;
    j["chi_orb"] = to_json(r.chi_orb);
    j["chi_orb_inner"] = to_json(r.chi_orb_inner);
    j["chi_orb_boundary"] = to_json(r.chi_orb_boundary);
    j["chi_roan"] = r.chi_roan;
    j["sector_sum_orb"] = to_json(r.sector_sum_orb);
    j["sector_sum_plain"] = r.sector_sum_plain;
    j["sector_count"] = r.sector_count;
    j["closed_identity"] = {{"sector_sum", to_json(r.closed_identity.sector_sum)},
                            {"chi", r.closed_identity.chi},
                            {"holds", r.closed_identity.holds}};
    j["boundary_identity"] = {{"lhs", to_json(r.boundary_identity.lhs)},
                              {"rhs", to_json(r.boundary_identity.rhs)},
                              {"holds", r.boundary_identity.holds}};
    j["appendix_identity"] = {{"chi_roan", r.appendix_identity.chi_roan},
                              {"sector_sum_plain", r.appendix_identity.sector_sum_plain},
                              {"holds", r.appendix_identity.holds}};
    if (r.orbifold_betti)
        j["orbifold_betti"] = betti_table_to_json(*r.orbifold_betti);
    j["all_hold"] = r.all_hold();
    return j;
}

/// Per-class summary of a sector decomposition.
inline Json sectors_to_json(const LabeledComplex& l, const SectorDecomposition& dec)
{
    Json classes = Json::array();
    for (int t = 0; t < dec.class_count(); ++t)
    {
        Json c;
        c["index"] = t;
        c["atoms"] = dec.classes[t].size();
        std::set<int> orders;
        for (int a : dec.classes[t])
            orders.insert(dec.atoms[a].centralizer_order);
        c["centralizer_orders"] = orders;
        c["euler"] = {{"underlying", to_json(sector_euler(dec, t, SectorEulerMode::underlying))},
                      {"orbifold", to_json(sector_euler(dec, t, SectorEulerMode::orbifold))},
                      {"inner_orbifold", to_json(sector_euler(dec, t, SectorEulerMode::inner_orbifold))},
                      {"boundary_orbifold", to_json(sector_euler(dec, t, SectorEulerMode::boundary_orbifold))}};
        c["betti"] = sector_betti(dec, t);
        c["components"] = sector_components(dec, t);
        c["dimension"] = dec.sector_complexes[t].dim();
        if (l.shift_data)
            c["degree_shift"] = to_json(degree_shift(l, dec, *l.shift_data, t));
        classes.push_back(c);
    }
    return {{"name", l.name}, {"class_count", dec.class_count()}, {"classes", classes}};
}

} // namespace orbi

#endif // ORBI_IO_HPP
