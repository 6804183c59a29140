#include <catch_amalgamated.hpp>

#include <orbi/gallery.hpp>
#include <orbi/invariants.hpp>
#include <orbi/random.hpp>

using namespace orbi;

TEST_CASE("orbifold Euler characteristics of the gallery")
{
    for (int k = 1; k <= 7; ++k)
    {
        const auto l = gallery::teardrop(k);
        CHECK(chi_orb(l) == make_rational(k + 1, k));
        CHECK(chi_roan(l) == k + 1);
        CHECK(chi_underlying(l) == 2);
    }
    CHECK(chi_orb(gallery::football(3, 2)) == make_rational(5, 6));

    const auto solid = gallery::solid_football(3);
    CHECK(chi_orb(solid) == make_rational(1, 3));
    CHECK(chi_orb_boundary(solid) == make_rational(2, 3));
    CHECK(chi_orb_inner(solid) == chi_orb(solid) - chi_orb_boundary(solid));
    CHECK(chi_boundary(solid) == 2);

    const auto oct = gallery::octahedron();
    CHECK(chi_orb(oct) == 2);
    CHECK(chi_orb(oct) == Rational(chi_underlying(oct)));

    const auto ball = gallery::antipodal_ball();
    CHECK(chi_orb(ball) == make_rational(1, 2));
    CHECK(chi_orb_boundary(ball) == 1);
}

TEST_CASE("point with a group: class equation")
{
    std::vector<FiniteGroup> groups;
    for (int k = 1; k <= 8; ++k)
        groups.push_back(cyclic(k));
    for (int k = 1; k <= 4; ++k)
        groups.push_back(dihedral(k));
    for (const auto& g : groups)
    {
        const auto l = gallery::point_with_group(g);
        const auto id = verify_closed_identity(l);
        CHECK(id.sector_sum == 1);
        CHECK(id.holds);
        CHECK(chi_roan(l) == g.class_count());
        CHECK(verify_appendix_identity(l).holds);
    }
}

TEST_CASE("identities on the gallery")
{
    for (const auto& name : gallery::example_names())
    {
        const auto l = gallery::example(name);
        const auto r = invariant_report(l);
        INFO(name);
        CHECK(r.all_hold());
        CHECK(r.closed_identity.sector_sum == r.chi_underlying);
        CHECK(r.appendix_identity.chi_roan == r.sector_sum_plain);
        if (l.boundary.empty())
            CHECK(verify_closed_identity(l).holds);
        else
        {
            CHECK_THROWS_AS(verify_closed_identity(l), HasBoundary);
            CHECK(verify_boundary_identity(l).holds);
        }
    }
    CHECK_THROWS_AS(verify_boundary_identity(gallery::teardrop(3)), NoBoundary);
}

TEST_CASE("boundary identity of the solid hollow football")
{
    for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {2, 5}})
    {
        const auto b = verify_boundary_identity(gallery::solid_hollow_football(k, l));
        CHECK(b.holds);
        CHECK(b.rhs == -4);
    }
}

TEST_CASE("inner Euler characteristic")
{
    for (const auto& l : {gallery::solid_football(2), gallery::solid_hollow_football(2, 3),
                          gallery::figure8_disk(), gallery::antipodal_ball()})
    {
        CHECK(chi_orb_inner(l) == chi_orb(l) - chi_orb_boundary(l));
        CHECK(chi_orb_boundary(l) == chi_orb(boundary_restriction(l)));
    }
}

TEST_CASE("identities on random complexes")
{
    for (std::uint64_t seed = 100; seed < 160; ++seed)
    {
        RandomComplexOptions opt;
        opt.with_boundary = seed % 2 == 0;
        const auto l = random_labeled_complex(seed, opt);
        const auto r = invariant_report(l);
        INFO(l.name);
        CHECK(r.closed_identity.holds);
        CHECK(r.boundary_identity.holds);
        CHECK(r.appendix_identity.holds);
        CHECK(r.chi_orb_inner == r.chi_orb - r.chi_orb_boundary);
    }
}

TEST_CASE("Dixon's Euler number agrees with the quotient")
{
    auto check = [](const GroupAction& a, long long expected) {
        const auto q = global_quotient(a);
        CHECK(chi_dixon(a) == Rational(chi_roan(q)));
        CHECK(chi_roan(q) == expected);
        CHECK(verify_appendix_identity(q).holds);
    };
    check(gallery::antipodal_octahedron_action(false), 1);
    check(gallery::antipodal_octahedron_action(true), 2);
    for (int k = 3; k <= 6; ++k)
        check(gallery::rotation_football_action(k), 2 * k);
    check(subdivide(gallery::edge_swap_action()), 2);
    const auto d = subdivide(gallery::dihedral_suspension_action(3));
    CHECK(chi_dixon(d) == Rational(chi_roan(global_quotient(d))));
    CHECK_THROWS_AS(chi_dixon(gallery::edge_swap_action()), NotRegular);
}

TEST_CASE("orbifold Betti tables")
{
    const auto t = gallery::teardrop(3);
    CHECK(orbifold_betti_table(t, *t.shift_data) ==
          std::map<Rational, long long>{{0, 1}, {make_rational(2, 3), 1}, {make_rational(4, 3), 1}, {2, 1}});
    const auto f = gallery::football(2, 2);
    CHECK(orbifold_betti_table(f, *f.shift_data) == std::map<Rational, long long>{{0, 1}, {1, 2}, {2, 1}});
    const auto oct = gallery::octahedron();
    CHECK(orbifold_betti_table(oct, ShiftData{}) == std::map<Rational, long long>{{0, 1}, {2, 1}});

    // total dimension = sum of sector Betti numbers = chi_roan for these spheres
    for (int k = 2; k <= 6; ++k)
    {
        const auto l = gallery::teardrop(k);
        long long total = 0;
        for (const auto& [d, b] : orbifold_betti_table(l, *l.shift_data))
            total += b;
        CHECK(total == chi_roan(l));
    }
}
