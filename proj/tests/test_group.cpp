#include <catch_amalgamated.hpp>

#include <set>

#include <orbi/group.hpp>

using namespace orbi;

namespace {

// Brute-force oracle: classes as sets, straight from the table.
std::set<std::set<Element>> brute_classes(const CayleyTable& t)
{
    const int n = static_cast<int>(t.size());
    auto inv = [&](Element h) {
        for (int x = 0; x < n; ++x)
            if (t[h][x] == 0)
                return x;
        return -1;
    };
    std::set<std::set<Element>> out;
    for (int g = 0; g < n; ++g)
    {
        std::set<Element> c;
        for (int h = 0; h < n; ++h)
            c.insert(t[t[h][g]][inv(h)]);
        out.insert(c);
    }
    return out;
}

std::set<std::set<Element>> as_sets(const FiniteGroup& g)
{
    std::set<std::set<Element>> out;
    for (const auto& c : g.classes())
        out.emplace(c.members.begin(), c.members.end());
    return out;
}

CayleyTable klein_four() { return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}; }

void check_axioms(const FiniteGroup& g)
{
    const int n = g.order();
    for (int a = 0; a < n; ++a)
    {
        REQUIRE(g.mul(0, a) == a);
        REQUIRE(g.mul(a, 0) == a);
        REQUIRE(g.mul(a, g.inverse(a)) == 0);
        REQUIRE(g.mul(g.inverse(a), a) == 0);
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
}

} // namespace

TEST_CASE("group_from_table accepts valid tables")
{
    auto trivial = group_from_table({{0}});
    CHECK(trivial.order() == 1);
    CHECK(trivial.class_count() == 1);

    auto z3 = group_from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(z3.order() == 3);
    CHECK(z3.same_law(cyclic(3)));
}

TEST_CASE("group_from_table moves the identity to index 0")
{
    // Z3 written with identity at index 2.
    CayleyTable t{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
    auto g = group_from_table(t);
    for (int a = 0; a < 3; ++a)
        CHECK(g.mul(0, a) == a);
    check_axioms(g);
}

TEST_CASE("group_from_table rejects non-groups")
{
    auto t = klein_four();
    t[1][2] = 2;
    t[1][3] = 3;  // rows no longer a group law
    CHECK_THROWS_AS(group_from_table(t), NotAGroup);

    // One perturbed entry: identity and inverses survive, associativity does not.
    auto u = klein_four();
    u[1][2] = 2;
    bool assoc = true;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                if (u[u[a][b]][c] != u[a][u[b][c]])
                    assoc = false;
    REQUIRE_FALSE(assoc);
    CHECK_THROWS_AS(group_from_table(u), NotAGroup);

    CHECK_THROWS_AS(group_from_table({}), NotAGroup);
    CHECK_THROWS_AS(group_from_table({{0, 1}, {1}}), NotAGroup);
    CHECK_THROWS_AS(group_from_table({{0, 5}, {5, 0}}), NotAGroup);
}

TEST_CASE("cyclic groups")
{
    CHECK(cyclic(1).order() == 1);
    auto z3 = cyclic(3);
    CHECK(z3.order() == 3);
    CHECK(z3.class_count() == 3);
    auto z6 = cyclic(6);
    for (int g = 0; g < 6; ++g)
        CHECK(z6.centralizer(g).size() == 6);
    CHECK(cyclic(5).class_count() == 5);
    CHECK(z6.element_order(2) == 3);
    CHECK_THROWS_AS(cyclic(0), NotAGroup);
}

TEST_CASE("dihedral groups")
{
    auto d3 = dihedral(3);
    REQUIRE(d3.order() == 6);
    check_axioms(d3);
    REQUIRE(d3.class_count() == 3);
    CHECK(as_sets(d3) == brute_classes(d3.table()));
    CHECK(d3.classes()[0].members == std::vector<Element>{0});
    CHECK(d3.classes()[1].members == std::vector<Element>{1, 2});
    CHECK(d3.classes()[2].members == std::vector<Element>{3, 4, 5});

    // s r s = r^-1
    const Element r = 1, s = 3;
    CHECK(d3.mul(d3.mul(s, r), s) == d3.inverse(r));
    CHECK(d3.element_order(s) == 2);
    CHECK(d3.element_order(r) == 3);

    auto d1 = dihedral(1);
    CHECK(d1.order() == 2);
    CHECK(d1.is_abelian());

    auto d2 = dihedral(2);
    CHECK(d2.order() == 4);
    CHECK(d2.class_count() == 4);
    CHECK(as_sets(d2) == brute_classes(d2.table()));
    for (int g = 0; g < 4; ++g)
        CHECK(d2.element_order(g) <= 2);
}

TEST_CASE("conjugacy classes partition the group and match brute force")
{
    for (const auto& g : {cyclic(1), cyclic(5), dihedral(3), dihedral(4), dihedral(5),
                          group_from_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}}, 4)})
    {
        CHECK(as_sets(g) == brute_classes(g.table()));
        std::vector<int> seen(g.order(), 0);
        Element least = -1;
        for (const auto& c : conjugacy_classes(g))
        {
            CHECK(c.members.front() > least);
            least = c.members.front();
            for (Element x : c.members)
                ++seen[x];
        }
        for (int x : seen)
            CHECK(x == 1);
        CHECK(g.classes()[0].members == std::vector<Element>{0});
    }
}

TEST_CASE("centralizers")
{
    auto d3 = dihedral(3);
    CHECK(centralizer(d3, 1) == std::vector<Element>{0, 1, 2});
    CHECK(centralizer(d3, 3) == std::vector<Element>{0, 3});

    for (const auto& g : {cyclic(4), dihedral(3), dihedral(4),
                          group_from_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}}, 4)})
        for (int x = 0; x < g.order(); ++x)
        {
            const auto& c = g.centralizer(x);
            CHECK(g.class_of(x).size() * c.size() == static_cast<std::size_t>(g.order()));
            for (Element h : c)
                CHECK(g.mul(h, x) == g.mul(x, h));
            CHECK(std::find(c.begin(), c.end(), 0) != c.end());
            CHECK(std::find(c.begin(), c.end(), x) != c.end());
        }
}

TEST_CASE("permutation closure")
{
    auto s4 = group_from_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}}, 4);
    CHECK(s4.order() == 24);
    CHECK(s4.class_count() == 5);
    check_axioms(s4);
    CHECK_THROWS_AS(group_from_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}}, 4, 10), GroupTooLarge);
    CHECK_THROWS_AS(group_from_permutations({{0, 0}}, 2), NotAGroup);
}

TEST_CASE("monomorphisms")
{
    auto z2 = cyclic(2), z3 = cyclic(3), d3 = dihedral(3);

    auto m = monomorphism(z3, d3, {0, 1, 2});
    CHECK(m.class_map() == std::vector<int>{0, 1, 1});
    auto reflect = monomorphism(z2, d3, {0, 4});
    CHECK(induced_class_map(reflect) == std::vector<int>{0, 2});

    CHECK_THROWS_AS(monomorphism(z3, d3, {0, 1}), NotMonomorphism);
    CHECK_THROWS_AS(monomorphism(z3, d3, {0, 1, 1}), NotMonomorphism);
    CHECK_THROWS_AS(monomorphism(z3, d3, {1, 0, 2}), NotMonomorphism);
    CHECK_THROWS_AS(monomorphism(z3, d3, {0, 3, 4}), NotMonomorphism);
    CHECK_THROWS_AS(monomorphism(z3, d3, {0, 1, 9}), NotMonomorphism);
    CHECK_THROWS_AS(monomorphism(d3, z3, {0, 1, 2, 0, 1, 2}), NotMonomorphism);

    auto t = Monomorphism::from_trivial(d3);
    CHECK(t.map() == std::vector<Element>{0});
    CHECK(t.class_map() == std::vector<int>{0});

    // the automorphism r -> r^2 of Z3
    auto flip = monomorphism(z3, z3, {0, 2, 1});
    CHECK(flip.class_map() == std::vector<int>{0, 2, 1});
}

TEST_CASE("subgroups")
{
    auto d4 = dihedral(4);
    auto gen = generated_subgroup(d4, {2});
    CHECK(gen == std::vector<Element>{0, 2});
    std::vector<Element> emb;
    auto h = subgroup(d4, generated_subgroup(d4, {1}), emb);
    CHECK(h.order() == 4);
    CHECK(h.is_abelian());
    auto inc = monomorphism(h, d4, emb);
    CHECK(inc.map() == emb);

    auto trivial = subgroup(d4, {0}, emb);
    CHECK(trivial.order() == 1);
    CHECK_THROWS_AS(subgroup(d4, {0, 1}, emb), NotAGroup);
    CHECK_THROWS_AS(subgroup(d4, {1, 2}, emb), NotAGroup);
}
