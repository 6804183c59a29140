#ifndef ORBI_GROUP_HPP
#define ORBI_GROUP_HPP

/**
 * Finite groups stored as Cayley tables.
 *
 * Elements are indices 0..order-1 and index 0 is always the identity.
 * Conjugacy classes and centralizers are computed once at construction, so
 * a FiniteGroup is a cheap, immutable, shareable value.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace orbi {

using Element = int;
using CayleyTable = std::vector<std::vector<Element>>;

/// How a group was produced; used when serializing it back out.
enum class GroupKind { table, cyclic, dihedral };

struct ConjugacyClass
{
    Element representative = 0;    ///< least member
    std::vector<Element> members;  ///< sorted

    bool contains(Element g) const
    {
        return std::binary_search(members.begin(), members.end(), g);
    }
    std::size_t size() const { return members.size(); }

    friend bool operator==(const ConjugacyClass&, const ConjugacyClass&) = default;
};

class FiniteGroup
{
public:
    /// Trivial group.
    FiniteGroup() : FiniteGroup(CayleyTable{{0}}, "1", GroupKind::cyclic, 1, true) {}

    int order() const { return static_cast<int>(data_->table.size()); }
    Element mul(Element a, Element b) const { return data_->table[a][b]; }
    Element inverse(Element a) const { return data_->inverse[a]; }
    Element identity() const { return 0; }
    const CayleyTable& table() const { return data_->table; }

    const std::string& name() const { return data_->name; }
    GroupKind kind() const { return data_->kind; }
    /// k for cyclic(k) / dihedral(k), order otherwise.
    int parameter() const { return data_->parameter; }

    const std::vector<ConjugacyClass>& classes() const { return data_->classes; }
    /// Index into classes() of the class containing g.
    int class_index(Element g) const { return data_->class_of[g]; }
    const ConjugacyClass& class_of(Element g) const { return data_->classes[data_->class_of[g]]; }
    int class_count() const { return static_cast<int>(data_->classes.size()); }

    /// Sorted centralizer { h : hg = gh }.
    const std::vector<Element>& centralizer(Element g) const { return data_->centralizers[g]; }

    Element conjugate(Element h, Element g) const { return mul(mul(h, g), inverse(h)); }

    int element_order(Element g) const
    {
        int n = 1;
        for (Element x = g; x != 0; x = mul(x, g))
            ++n;
        return n;
    }

    bool is_abelian() const { return class_count() == order(); }

    bool same_law(const FiniteGroup& other) const { return table() == other.table(); }

    // Named constructors live below as free functions; this one trusts its input.
    static FiniteGroup from_validated(CayleyTable table, std::string name,
                                      GroupKind kind, int parameter)
    {
        return FiniteGroup(std::move(table), std::move(name), kind, parameter, true);
    }

private:
    struct Data
    {
        CayleyTable table;
        std::vector<Element> inverse;
        std::vector<ConjugacyClass> classes;
        std::vector<int> class_of;
        std::vector<std::vector<Element>> centralizers;
        std::string name;
        GroupKind kind = GroupKind::table;
        int parameter = 0;
    };

    FiniteGroup(CayleyTable table, std::string name, GroupKind kind, int parameter, bool)
    {
        auto d = std::make_shared<Data>();
        const int n = static_cast<int>(table.size());
        d->table = std::move(table);
        d->name = std::move(name);
        d->kind = kind;
        d->parameter = parameter;

        d->inverse.assign(n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (d->table[a][b] == 0)
                {
                    d->inverse[a] = b;
                    break;
                }

        // Classes in ascending order of least member.
        d->class_of.assign(n, -1);
        for (int g = 0; g < n; ++g)
        {
            if (d->class_of[g] >= 0)
                continue;
            std::set<Element> orbit;
            for (int h = 0; h < n; ++h)
                orbit.insert(d->table[d->table[h][g]][d->inverse[h]]);
            ConjugacyClass c;
            c.representative = g;
            c.members.assign(orbit.begin(), orbit.end());
            for (Element m : c.members)
                d->class_of[m] = static_cast<int>(d->classes.size());
            d->classes.push_back(std::move(c));
        }

        d->centralizers.resize(n);
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                if (d->table[h][g] == d->table[g][h])
                    d->centralizers[g].push_back(h);

        data_ = std::move(d);
    }

    std::shared_ptr<const Data> data_;
};

namespace detail {

inline std::optional<std::string> check_group_law(const CayleyTable& t)
{
    const int n = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a)
        if (t[0][a] != a || t[a][0] != a)
            return "element 0 is not a two-sided identity";
    for (int a = 0; a < n; ++a)
    {
        bool found = false;
        for (int b = 0; b < n && !found; ++b)
            found = t[a][b] == 0 && t[b][a] == 0;
        if (!found)
            return "element " + std::to_string(a) + " has no two-sided inverse";
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]])
                    return "associativity fails at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")";
    return std::nullopt;
}

} // namespace detail

/**
 * Validates a square multiplication table and returns the group it defines.
 * If the identity is not element 0 it is swapped into position 0.
 */
inline FiniteGroup group_from_table(CayleyTable table, std::string name = "")
{
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw NotAGroup("empty table");
    for (const auto& row : table)
    {
        if (static_cast<int>(row.size()) != n)
            throw NotAGroup("table is not square");
        for (Element x : row)
            if (x < 0 || x >= n)
                throw NotAGroup("entry " + std::to_string(x) + " out of range");
    }

    int e = -1;
    for (int a = 0; a < n && e < 0; ++a)
    {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = table[a][x] == x && table[x][a] == x;
        if (ok)
            e = a;
    }
    if (e < 0)
        throw NotAGroup("no identity element");

    if (e != 0)
    {
        // Swap labels 0 and e.
        auto relabel = [e](Element x) { return x == 0 ? e : (x == e ? 0 : x); };
        CayleyTable swapped(n, std::vector<Element>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                swapped[relabel(a)][relabel(b)] = relabel(table[a][b]);
        table = std::move(swapped);
    }

    if (auto why = detail::check_group_law(table))
        throw NotAGroup(*why);
    if (name.empty())
        name = "G" + std::to_string(n);
    return FiniteGroup::from_validated(std::move(table), std::move(name), GroupKind::table, n);
}

/// Z_k with (i,j) -> (i+j) mod k.
inline FiniteGroup cyclic(int k)
{
    if (k < 1)
        throw NotAGroup("cyclic order must be >= 1");
    CayleyTable t(k, std::vector<Element>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            t[i][j] = (i + j) % k;
    return FiniteGroup::from_validated(std::move(t), "Z" + std::to_string(k), GroupKind::cyclic, k);
}

/**
 * Dihedral group of order 2k, <r, s | r^k = s^2 = 1, s r s = r^-1>.
 *
 * Element a (0 <= a < k) is r^a and element k + a is r^a s.
 */
inline FiniteGroup dihedral(int k)
{
    if (k < 1)
        throw NotAGroup("dihedral parameter must be >= 1");
    const int n = 2 * k;
    auto mod = [k](int x) { return ((x % k) + k) % k; };
    CayleyTable t(n, std::vector<Element>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
        {
            int a = x % k, b = x / k;
            int c = y % k, d = y / k;
            // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b+d)
            int rot = mod(b == 0 ? a + c : a - c);
            t[x][y] = rot + k * ((b + d) % 2);
        }
    return FiniteGroup::from_validated(std::move(t), "D" + std::to_string(n), GroupKind::dihedral, k);
}

/**
 * Closure of a set of permutations of {0..degree-1}. Fails with GroupTooLarge
 * once more than `cap` elements have been found.
 */
inline FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generators,
                                           int degree, std::size_t cap = 10000,
                                           std::string name = "")
{
    using Perm = std::vector<int>;
    for (const auto& g : generators)
    {
        if (static_cast<int>(g.size()) != degree)
            throw NotAGroup("generator has wrong degree");
        Perm sorted = g;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < degree; ++i)
            if (sorted[i] != i)
                throw NotAGroup("generator is not a permutation");
    }
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);

    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : generators)
        {
            Perm p(degree);
            for (int x = 0; x < degree; ++x)
                p[x] = g[elems[i][x]];
            if (index.emplace(p, static_cast<int>(elems.size())).second)
            {
                elems.push_back(std::move(p));
                if (elems.size() > cap)
                    throw GroupTooLarge("closure exceeds " + std::to_string(cap) + " elements");
            }
        }

    const int n = static_cast<int>(elems.size());
    CayleyTable t(n, std::vector<Element>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
        {
            // (a*b)(x) = a(b(x))
            Perm p(degree);
            for (int x = 0; x < degree; ++x)
                p[x] = elems[a][elems[b][x]];
            t[a][b] = index.at(p);
        }
    if (name.empty())
        name = "P" + std::to_string(n);
    return FiniteGroup::from_validated(std::move(t), std::move(name), GroupKind::table, n);
}

inline const std::vector<ConjugacyClass>& conjugacy_classes(const FiniteGroup& g)
{
    return g.classes();
}

inline const std::vector<Element>& centralizer(const FiniteGroup& g, Element x)
{
    return g.centralizer(x);
}

/**
 * Subgroup of `g` given by a set of its elements, re-indexed so that the
 * identity is 0 and the remaining elements keep their relative order.
 * `embedding` receives the map from new indices to elements of `g`.
 */
inline FiniteGroup subgroup(const FiniteGroup& g, const std::vector<Element>& elements,
                            std::vector<Element>& embedding, std::string name = "")
{
    std::vector<Element> elems(elements.begin(), elements.end());
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty() || elems.front() != 0)
        throw NotAGroup("subset does not contain the identity");
    std::map<Element, int> pos;
    for (std::size_t i = 0; i < elems.size(); ++i)
        pos[elems[i]] = static_cast<int>(i);
    const int n = static_cast<int>(elems.size());
    CayleyTable t(n, std::vector<Element>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
        {
            auto it = pos.find(g.mul(elems[a], elems[b]));
            if (it == pos.end())
                throw NotAGroup("subset is not closed under multiplication");
            t[a][b] = it->second;
        }
    embedding = elems;
    if (name.empty())
        name = g.name() + "<" + std::to_string(n) + ">";
    if (n == 1)
        return FiniteGroup();
    return FiniteGroup::from_validated(std::move(t), std::move(name), GroupKind::table, n);
}

/// Elements of the subgroup generated by `gens`.
inline std::vector<Element> generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens)
{
    std::set<Element> seen{0};
    std::vector<Element> frontier{0};
    while (!frontier.empty())
    {
        Element x = frontier.back();
        frontier.pop_back();
        for (Element s : gens)
        {
            Element y = g.mul(x, s);
            if (seen.insert(y).second)
                frontier.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

/// Injective homomorphism H -> G, given by the image of every element of H.
class Monomorphism
{
public:
    Monomorphism() = default;

    Monomorphism(FiniteGroup source, FiniteGroup target, std::vector<Element> map)
        : source_(std::move(source)), target_(std::move(target)), map_(std::move(map))
    {
        if (static_cast<int>(map_.size()) != source_.order())
            throw NotMonomorphism("map length " + std::to_string(map_.size()) +
                                  " != source order " + std::to_string(source_.order()));
        for (Element x : map_)
            if (x < 0 || x >= target_.order())
                throw NotMonomorphism("image " + std::to_string(x) + " out of range");
        std::vector<Element> sorted = map_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw NotMonomorphism("map is not injective");
        if (map_[0] != 0)
            throw NotMonomorphism("identity not mapped to identity");
        for (int i = 0; i < source_.order(); ++i)
            for (int j = 0; j < source_.order(); ++j)
                if (map_[source_.mul(i, j)] != target_.mul(map_[i], map_[j]))
                    throw NotMonomorphism("homomorphism law fails at (" + std::to_string(i) +
                                          "," + std::to_string(j) + ")");
        class_map_.resize(source_.class_count());
        for (int c = 0; c < source_.class_count(); ++c)
            class_map_[c] = target_.class_index(map_[source_.classes()[c].representative]);
    }

    /// The unique monomorphism out of the trivial group.
    static Monomorphism from_trivial(const FiniteGroup& target)
    {
        return Monomorphism(FiniteGroup(), target, {0});
    }

    const FiniteGroup& source() const { return source_; }
    const FiniteGroup& target() const { return target_; }
    const std::vector<Element>& map() const { return map_; }
    Element operator()(Element h) const { return map_[h]; }

    /// Source class index -> target class index.
    const std::vector<int>& class_map() const { return class_map_; }

    friend bool operator==(const Monomorphism& a, const Monomorphism& b)
    {
        return a.map_ == b.map_ && a.source_.same_law(b.source_) && a.target_.same_law(b.target_);
    }

private:
    FiniteGroup source_;
    FiniteGroup target_;
    std::vector<Element> map_{0};
    std::vector<int> class_map_{0};
};

inline Monomorphism monomorphism(const FiniteGroup& h, const FiniteGroup& g, std::vector<Element> map)
{
    return Monomorphism(h, g, std::move(map));
}

/// Class of h in the source maps to the class of m(h) in the target.
inline std::vector<int> induced_class_map(const Monomorphism& m)
{
    return m.class_map();
}

} // namespace orbi

#endif // ORBI_GROUP_HPP
