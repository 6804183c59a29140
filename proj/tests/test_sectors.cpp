#include <catch_amalgamated.hpp>

#include <orbi/gallery.hpp>
#include <orbi/invariants.hpp>
#include <orbi/random.hpp>
#include <orbi/sectors.hpp>

using namespace orbi;

namespace {

void check_sector_complexes(const SectorDecomposition& dec)
{
    for (const auto& k : dec.sector_complexes)
        for (int d = 2; d <= k.dim(); ++d)
        {
            const auto a = k.boundary_matrix(d - 1), b = k.boundary_matrix(d);
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < (b.empty() ? 0 : b[0].size()); ++j)
                {
                    std::int64_t s = 0;
                    for (std::size_t m = 0; m < b.size(); ++m)
                        s += a[i][m] * b[m][j];
                    REQUIRE(s == 0);
                }
        }
}

std::vector<LabeledComplex> samples()
{
    std::vector<LabeledComplex> out{gallery::teardrop(3),
                                    gallery::football(3, 2),
                                    gallery::solid_football(3),
                                    gallery::solid_hollow_football(2, 3),
                                    gallery::figure8_disk(),
                                    gallery::antipodal_ball(),
                                    gallery::point_with_group(dihedral(4))};
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        out.push_back(random_labeled_complex(seed, {3, 6, 0.5, seed % 2 == 1}));
    return out;
}

} // namespace

TEST_CASE("teardrop sectors")
{
    for (int k = 2; k <= 7; ++k)
    {
        const auto l = gallery::teardrop(k);
        const auto dec = decompose(l);
        REQUIRE(dec.class_count() == k);
        CHECK(sector_betti(dec, 0) == std::vector<long long>{1, 0, 1});
        for (int t = 1; t < k; ++t)
        {
            CHECK(sector_betti(dec, t) == std::vector<long long>{1});
            CHECK(sector_codimension(dec, t) == 2);
            CHECK(sector_euler(dec, t, SectorEulerMode::orbifold) == make_rational(1, k));
        }
    }
}

TEST_CASE("degree shifts of the teardrop")
{
    const auto l = gallery::teardrop(3);
    const auto dec = decompose(l);
    std::set<Rational> shifts;
    for (int t = 0; t < dec.class_count(); ++t)
    {
        const auto s = degree_shift(l, dec, *l.shift_data, t);
        shifts.insert(s);
        CHECK(2 * s <= Rational(sector_codimension(dec, t)));
    }
    CHECK(shifts == std::set<Rational>{0, make_rational(1, 3), make_rational(2, 3)});

    const auto table = orbifold_betti_table(l, *l.shift_data);
    const std::map<Rational, long long> expected{
        {0, 1}, {make_rational(2, 3), 1}, {make_rational(4, 3), 1}, {2, 1}};
    CHECK(table == expected);
}

TEST_CASE("point with a group")
{
    for (const auto& g : {cyclic(1), cyclic(4), dihedral(3), dihedral(4)})
    {
        const auto l = gallery::point_with_group(g);
        const auto dec = decompose(l);
        CHECK(dec.class_count() == g.class_count());
        Rational sum = 0;
        for (int t = 0; t < dec.class_count(); ++t)
            sum += sector_euler(dec, t, SectorEulerMode::orbifold);
        CHECK(sum == 1);
    }
    const auto d3 = gallery::point_with_group(dihedral(3));
    CHECK(orbifold_betti_table(d3, *d3.shift_data) == std::map<Rational, long long>{{0, 3}});
}

TEST_CASE("solid hollow football sectors")
{
    for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {2, 5}, {3, 3}})
    {
        const auto dec = decompose(gallery::solid_hollow_football(k, l));
        CHECK(dec.class_count() == k + l - 1);
        for (int t = 1; t < dec.class_count(); ++t)
            CHECK(sector_betti(dec, t) == std::vector<long long>{1, 0});
    }
}

TEST_CASE("figure-8 sectors")
{
    const auto l = gallery::figure8_disk();
    const auto dec = decompose(l);
    REQUIRE(dec.class_count() == 3);

    // Oracle: the reflection sector is the closed set of simplices with even
    // isotropy, the rotation sector is two copies of the Z3 locus glued at the hub.
    std::set<int> even, three;
    for (const auto& [id, s] : l.complex.simplices())
    {
        if (l.group_of(id).order() % 2 == 0)
            even.insert(id);
        if (l.group_of(id).order() % 3 == 0)
            three.insert(id);
    }
    const auto even_k = subcomplex(l.complex, even);
    const auto three_k = subcomplex(l.complex, three);

    int reflection = -1, rotation = -1;
    for (int t = 1; t < 3; ++t)
        (dec.classes[t].size() == even.size() ? reflection : rotation) = t;
    REQUIRE(reflection > 0);
    REQUIRE(rotation > 0);
    CHECK(sector_betti(dec, reflection) == betti_numbers(even_k));
    CHECK(sector_betti(dec, reflection) == std::vector<long long>{1, 1});
    CHECK(dec.classes[rotation].size() == 2 * three.size() - 1);
    CHECK(sector_euler(dec, rotation, SectorEulerMode::underlying) ==
          Rational(2 * euler_characteristic(three_k) - 1));
    CHECK(sector_betti(dec, rotation) == std::vector<long long>{1, 2});
}

TEST_CASE("nontwisted sector is the underlying complex")
{
    for (const auto& l : samples())
    {
        const auto dec = decompose(l);
        CHECK(dec.sector_complexes[0].size() == l.complex.size());
        CHECK(sector_betti(dec, 0) == betti_numbers(l.complex));
        for (int a : dec.classes[0])
            CHECK(dec.atoms[a].atom.class_index == 0);
    }
}

TEST_CASE("sector structure")
{
    for (const auto& l : samples())
    {
        const auto dec = decompose(l);
        check_sector_complexes(dec);

        std::size_t total = 0;
        for (const auto& [id, s] : l.complex.simplices())
            total += l.group_of(id).class_count();
        CHECK(dec.atoms.size() == total);

        if (!l.boundary.empty())
        {
            const auto b = boundary_restriction(l);
            const auto bdec = decompose(b);
            std::set<SectorAtom> batoms;
            for (const auto& a : bdec.atoms)
                batoms.insert(a.atom);
            CHECK(dec.boundary_atoms() == batoms);
        }
        for (int t = 0; t < dec.class_count(); ++t)
        {
            CHECK(sector_codimension(dec, t) >= 0);
            CHECK(sector_euler(dec, t, SectorEulerMode::orbifold) ==
                  sector_euler(dec, t, SectorEulerMode::inner_orbifold) +
                      sector_euler(dec, t, SectorEulerMode::boundary_orbifold));
            for (int a : dec.classes[t])
                CHECK(dec.atoms[a].class_size * dec.atoms[a].centralizer_order ==
                      l.group_of(dec.atoms[a].atom.simplex).order());
        }
        if (l.shift_data)
            for (int t = 0; t < dec.class_count(); ++t)
            {
                const auto s = degree_shift(l, dec, *l.shift_data, t);
                CHECK(s >= 0);
                CHECK(2 * s <= Rational(sector_codimension(dec, t)));
            }
    }
}

TEST_CASE("shift data errors")
{
    auto l = gallery::teardrop(3);
    const auto dec = decompose(l);
    CHECK_THROWS_AS(degree_shift(l, dec, ShiftData{}, 1), MissingShiftData);

    // Two group ids over one class that disagree.
    auto vc = complex_from_vertex_sets({{0, 1, 2}});
    LabeledComplex t;
    t.name = "split";
    t.complex = vc.complex;
    t.groups.emplace("A", cyclic(3));
    t.groups.emplace("B", cyclic(3));
    for (const auto& [id, s] : t.complex.simplices())
    {
        t.set_group(id, s.dim == 0 ? "A" : "B");
        for (std::size_t i = 0; i < s.facets.size(); ++i)
            t.face_mono.emplace(std::make_pair(id, static_cast<int>(i)),
                                Monomorphism(cyclic(3), cyclic(3), {0, 1, 2}));
    }
    t.shift_data = ShiftData{{"A", {{1, {{1, 3}}}, {2, {{2, 3}}}}}, {"B", {{1, {{2, 3}}}, {2, {{1, 3}}}}}};
    REQUIRE(validate(t).empty());
    const auto tdec = decompose(t);
    REQUIRE(tdec.class_count() == 3);
    CHECK_THROWS_AS(degree_shift(t, tdec, *t.shift_data, 1), InconsistentShift);
}
