// Acceptance run: one PASS/FAIL line per criterion, exact values where exact.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <orbi/orbi.hpp>

using namespace orbi;

namespace {

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
        {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void run(int number, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    const auto start = Clock::now();
    try
    {
        body(o);
    }
    catch (const std::exception& e)
    {
        o.pass = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    o.expect(secs < limit_seconds, "time limit " + std::to_string(limit_seconds) + " s");
    if (!o.pass)
        ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << " ("
              << std::fixed << std::setprecision(3) << secs << " s)" << o.detail.str() << std::endl;
}

std::string str(const Rational& r) { return to_string(r); }

void check_axioms(Outcome& o, const FiniteGroup& g)
{
    const int n = g.order();
    bool ok = true;
    for (int a = 0; a < n; ++a)
    {
        ok = ok && g.mul(0, a) == a && g.mul(a, 0) == a && g.mul(a, g.inverse(a)) == 0 &&
             g.mul(g.inverse(a), a) == 0;
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                ok = ok && g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
    }
    o.expect(ok, "group axioms for " + g.name());
    for (int x = 0; x < n; ++x)
        o.expect(g.class_of(x).size() * g.centralizer(x).size() == static_cast<std::size_t>(n),
                 "|class|*|centralizer| in " + g.name());
}

bool d_squared_zero(const SimplicialComplex& k)
{
    for (int d = 2; d <= k.dim(); ++d)
    {
        const auto a = k.boundary_matrix(d - 1), b = k.boundary_matrix(d);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < (b.empty() ? 0 : b[0].size()); ++j)
            {
                std::int64_t s = 0;
                for (std::size_t m = 0; m < b.size(); ++m)
                    s += a[i][m] * b[m][j];
                if (s != 0)
                    return false;
            }
    }
    return true;
}

std::vector<LabeledComplex> gallery_all()
{
    std::vector<LabeledComplex> out;
    for (const auto& name : gallery::example_names())
        out.push_back(gallery::example(name));
    for (int k = 2; k <= 7; ++k)
        out.push_back(gallery::teardrop(k));
    out.push_back(gallery::football(2, 2));
    out.push_back(gallery::solid_hollow_football(2, 5));
    return out;
}

} // namespace

int main()
{
    const auto total_start = Clock::now();

    run(1, "teardrop k=2..7: chi_orb=(k+1)/k, k sectors, sector sum 2", 1.0, [](Outcome& o) {
        for (int k = 2; k <= 7; ++k)
        {
            const auto l = gallery::teardrop(k);
            const auto r = invariant_report(l);
            o.expect(r.chi_orb == make_rational(k + 1, k), "chi_orb(" + std::to_string(k) + ") = " + str(r.chi_orb));
            o.expect(r.sector_count == k, "sector count " + std::to_string(r.sector_count));
            o.expect(r.sector_sum_orb == 2, "sector sum " + str(r.sector_sum_orb));
        }
    });

    run(2, "point with cyclic 1..8 / dihedral 1..4: sum 1/|C(g)| = 1, chi_roan = #classes", 1.0, [](Outcome& o) {
        std::vector<FiniteGroup> groups;
        for (int k = 1; k <= 8; ++k)
            groups.push_back(cyclic(k));
        for (int k = 1; k <= 4; ++k)
            groups.push_back(dihedral(k));
        for (const auto& g : groups)
        {
            const auto l = gallery::point_with_group(g);
            Rational sum = 0;
            for (const auto& c : g.classes())
                sum += make_rational(1, static_cast<long long>(g.centralizer(c.representative).size()));
            o.expect(sum == 1, g.name() + " class sum " + str(sum));
            o.expect(verify_closed_identity(l).sector_sum == 1, g.name() + " sector sum");
            o.expect(chi_roan(l) == g.class_count(), g.name() + " chi_roan");
        }
    });

    run(3, "solid Z3-football: chi_orb_inner = 1/3, boundary chi_orb = 2/3", 1.0, [](Outcome& o) {
        const auto l = gallery::solid_football(3);
        const auto inner = chi_orb_inner(l), bdry = chi_orb_boundary(l);
        o.detail << " inner=" << str(inner) << " boundary=" << str(bdry) << " chi_orb=" << str(chi_orb(l));
        o.expect(bdry == make_rational(2, 3), "boundary chi_orb = 2/3");
        o.expect(inner == make_rational(1, 3), "chi_orb_inner = 1/3");
    });

    run(4, "solid hollow football (2,3),(3,4),(2,5): k+l-1 sectors, boundary identity", 2.0, [](Outcome& o) {
        for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {2, 5}})
        {
            const auto x = gallery::solid_hollow_football(k, l);
            const auto tag = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
            o.expect(decompose(x).class_count() == k + l - 1, "sector count " + tag);
            const auto b = verify_boundary_identity(x);
            o.expect(b.holds, "boundary identity " + tag + ": " + str(b.lhs) + " vs " + str(b.rhs));
        }
    });

    run(5, "closed identity on 100 random closed complexes and closed gallery", 30.0, [](Outcome& o) {
        int checked = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed)
        {
            const auto l = random_labeled_complex(seed);
            o.expect(verify_closed_identity(l).holds, l.name);
            ++checked;
        }
        for (const auto& l : gallery_all())
            if (l.boundary.empty())
            {
                o.expect(verify_closed_identity(l).holds, l.name);
                ++checked;
            }
        o.detail << " complexes=" << checked;
    });

    run(6, "appendix identity on 100 random complexes; Dixon = Roan (antipodal 1, Z3 football 2)", 30.0,
        [](Outcome& o) {
            for (std::uint64_t seed = 1000; seed < 1100; ++seed)
            {
                RandomComplexOptions opt;
                opt.with_boundary = seed % 2 == 1;
                const auto l = random_labeled_complex(seed, opt);
                o.expect(verify_appendix_identity(l).holds, l.name);
            }
            const auto anti = gallery::antipodal_octahedron_action(false);
            const auto d1 = chi_dixon(anti);
            const auto r1 = chi_roan(global_quotient(anti));
            const auto foot = gallery::rotation_football_action(3);
            const auto d2 = chi_dixon(foot);
            const auto r2 = chi_roan(global_quotient(foot));
            o.detail << " antipodal dixon=" << str(d1) << " roan=" << r1 << "; Z3 football dixon=" << str(d2)
                     << " roan=" << r2;
            o.expect(d1 == Rational(r1), "antipodal Dixon = Roan");
            o.expect(d1 == 1, "antipodal value 1");
            o.expect(d2 == Rational(r2), "football Dixon = Roan");
            o.expect(d2 == 2, "football value 2");
        });

    run(7, "charts: antipodal singular dim 0, figure-8 strata, index(z,3)=1/3, winding(z^2)=2", 5.0,
        [](Outcome& o) {
            o.expect(singular_dimension(antipodal_chart(3)) == 0, "antipodal singular dimension");
            const auto s = stratum_dimensions(figure8_chart());
            o.expect(s.per_element[0] == 3, "identity fixes R^3");
            o.expect(s.per_element[3] == 1, "R_pi^x fixes a line");
            o.expect(s.per_element[1] == 1 && s.per_element[2] == 1, "z-rotations fix a line");
            o.expect(s.full_group == 0, "full group fixes the origin only");
            o.expect(orbifold_index(parse_field("z"), rotation_chart(3)) == make_rational(1, 3), "index of z");
            const auto z2 = parse_field("z^2");
            const auto w1 = winding_index(z2, 0.5), w2 = winding_index(z2, 2.0);
            o.expect(w1 == 2 && w2 == 2, "winding of z^2 at two radii");
        });

    run(8, "teardrop(3) orbifold Betti table {0:1, 2/3:1, 4/3:1, 2:1}", 1.0, [](Outcome& o) {
        const auto l = gallery::teardrop(3);
        const auto table = orbifold_betti_table(l, *l.shift_data);
        const std::map<Rational, long long> expected{
            {0, 1}, {make_rational(2, 3), 1}, {make_rational(4, 3), 1}, {2, 1}};
        o.detail << " got " << betti_table_to_json(table).dump();
        o.expect(table == expected, "table");
    });

    run(9, "structural suites: axioms, class equation, d^2=0, chi' = chi - chi(d), conjugation", 60.0,
        [](Outcome& o) {
            for (int k = 1; k <= 8; ++k)
                check_axioms(o, cyclic(k));
            for (int k = 1; k <= 5; ++k)
                check_axioms(o, dihedral(k));
            check_axioms(o, group_from_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}}, 4));

            auto complexes = gallery_all();
            for (std::uint64_t seed = 0; seed < 40; ++seed)
                complexes.push_back(random_labeled_complex(seed, {3, 6, 0.5, seed % 2 == 0}));
            for (const auto& l : complexes)
            {
                const auto dec = decompose(l);
                for (const auto& k : dec.sector_complexes)
                    o.expect(d_squared_zero(k), "d^2 = 0 on a sector of " + l.name);
                o.expect(chi_orb_inner(l) == chi_orb(l) - chi_orb_boundary(l), "chi' on " + l.name);
                o.expect(verify_appendix_identity(l).holds, "appendix identity on " + l.name);
            }

            for (const auto& c : {antipodal_chart(3), figure8_chart(), rotation_chart(3), axial_rotation_chart(4)})
                for (std::uint64_t seed = 0; seed < 20; ++seed)
                    o.expect(singular_dimension_invariance(c, random_rotation(c.n, seed)),
                             "conjugation invariance for " + c.group.name());
        });

    const double total = std::chrono::duration<double>(Clock::now() - total_start).count();
    std::cout << "total " << std::fixed << std::setprecision(3) << total << " s, " << failures
              << " criteria failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
