#ifndef ORBI_INVARIANTS_HPP
#define ORBI_INVARIANTS_HPP

/**
 * Euler characteristics of labeled complexes and the counting identities
 * between them. Every quantity is an exact rational or integer.
 *
 * Sums run over open simplices, i.e. compactly supported Euler
 * characteristics of the strata; this is what makes the sector identities
 * below exact statements about the implementation.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "labeled.hpp"
#include "sectors.hpp"

namespace orbi {

namespace detail {

inline int parity_sign(int dim) { return dim % 2 == 0 ? 1 : -1; }

} // namespace detail

/// sum over simplices of (-1)^dim / |G_s|.
inline Rational chi_orb(const LabeledComplex& l)
{
    Rational sum = 0;
    for (const auto& [id, s] : l.complex.simplices())
        sum += make_rational(detail::parity_sign(s.dim), l.group_of(id).order());
    return sum;
}

/// chi_orb restricted to simplices not contained in the boundary.
inline Rational chi_orb_inner(const LabeledComplex& l)
{
    Rational sum = 0;
    for (const auto& [id, s] : l.complex.simplices())
        if (!l.boundary.count(id))
            sum += make_rational(detail::parity_sign(s.dim), l.group_of(id).order());
    return sum;
}

inline Rational chi_orb_boundary(const LabeledComplex& l)
{
    Rational sum = 0;
    for (int id : l.boundary)
        sum += make_rational(detail::parity_sign(l.complex.at(id).dim), l.group_of(id).order());
    return sum;
}

inline long long chi_underlying(const LabeledComplex& l) { return euler_characteristic(l.complex); }

inline long long chi_boundary(const LabeledComplex& l)
{
    long long chi = 0;
    for (int id : l.boundary)
        chi += detail::parity_sign(l.complex.at(id).dim);
    return chi;
}

/// sum over simplices of (-1)^dim times the number of conjugacy classes of G_s.
inline long long chi_roan(const LabeledComplex& l)
{
    long long sum = 0;
    for (const auto& [id, s] : l.complex.simplices())
        sum += detail::parity_sign(s.dim) * l.group_of(id).class_count();
    return sum;
}

/// (1/|G|) sum over commuting pairs (g,h) of chi(M^g ∩ M^h).
inline Rational chi_dixon(const GroupAction& a)
{
    check_regular(a);
    const FiniteGroup& g = a.group;
    std::vector<std::set<int>> fixed;
    for (int x = 0; x < g.order(); ++x)
        fixed.push_back(fixed_simplices(a, x));
    long long total = 0;
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
        {
            if (g.mul(x, y) != g.mul(y, x))
                continue;
            for (int id : fixed[x])
                if (fixed[y].count(id))
                    total += detail::parity_sign(a.complex.at(id).dim);
        }
    return make_rational(total, g.order());
}

struct ClosedIdentity
{
    Rational sector_sum;
    long long chi = 0;
    bool holds = false;
};

struct BoundaryIdentity
{
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

struct AppendixIdentity
{
    long long chi_roan = 0;
    long long sector_sum_plain = 0;
    bool holds = false;
};

namespace detail {

inline Rational sector_sum(const SectorDecomposition& dec, SectorEulerMode mode)
{
    Rational sum = 0;
    for (int t = 0; t < dec.class_count(); ++t)
        sum += sector_euler(dec, t, mode);
    return sum;
}

inline ClosedIdentity closed_identity(const LabeledComplex& l, const SectorDecomposition& dec)
{
    ClosedIdentity r;
    r.sector_sum = sector_sum(dec, SectorEulerMode::orbifold);
    r.chi = chi_underlying(l);
    r.holds = r.sector_sum == r.chi;
    return r;
}

inline BoundaryIdentity boundary_identity(const LabeledComplex& l, const SectorDecomposition& dec)
{
    BoundaryIdentity r;
    r.lhs = sector_sum(dec, SectorEulerMode::inner_orbifold) -
            sector_sum(dec, SectorEulerMode::boundary_orbifold) / 2;
    const long long chi_q = chi_underlying(l), chi_m = chi_boundary(l);
    r.rhs = Rational(chi_q - chi_m) - make_rational(chi_m, 2);
    r.holds = r.lhs == r.rhs;
    return r;
}

inline AppendixIdentity appendix_identity(const LabeledComplex& l, const SectorDecomposition& dec)
{
    AppendixIdentity r;
    r.chi_roan = chi_roan(l);
    Rational plain = sector_sum(dec, SectorEulerMode::underlying);
    r.sector_sum_plain = static_cast<long long>(boost::multiprecision::numerator(plain));
    r.holds = r.chi_roan == r.sector_sum_plain;
    return r;
}

} // namespace detail

/// Sum of sector orbifold Euler characteristics against chi of the underlying space.
inline ClosedIdentity verify_closed_identity(const LabeledComplex& l)
{
    if (!l.boundary.empty())
        throw HasBoundary(l.name + " has a declared boundary");
    return detail::closed_identity(l, decompose(l));
}

/**
 * lhs: sum over sectors of (inner orbifold chi - half the boundary-atom
 * orbifold chi). rhs: (chi(Q) - chi(dQ)) - chi(dQ)/2 from plain simplex counts.
 */
inline BoundaryIdentity verify_boundary_identity(const LabeledComplex& l)
{
    if (l.boundary.empty())
        throw NoBoundary(l.name + " has no declared boundary");
    return detail::boundary_identity(l, decompose(l));
}

inline AppendixIdentity verify_appendix_identity(const LabeledComplex& l)
{
    return detail::appendix_identity(l, decompose(l));
}

/// Degree 2*shift + j gets b_j of every sector.
inline std::map<Rational, long long> orbifold_betti_table(const LabeledComplex& l,
                                                          const SectorDecomposition& dec,
                                                          const ShiftData& shifts)
{
    std::map<Rational, long long> table;
    for (int t = 0; t < dec.class_count(); ++t)
    {
        const Rational shift = degree_shift(l, dec, shifts, t);
        const auto b = sector_betti(dec, t);
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0)
                table[2 * shift + static_cast<long long>(j)] += b[j];
    }
    return table;
}

inline std::map<Rational, long long> orbifold_betti_table(const LabeledComplex& l,
                                                          const ShiftData& shifts)
{
    return orbifold_betti_table(l, decompose(l), shifts);
}

struct InvariantReport
{
    std::string name;
    long long chi_underlying = 0;
    long long chi_boundary = 0;
    Rational chi_orb;
    Rational chi_orb_inner;
    Rational chi_orb_boundary;
    long long chi_roan = 0;
    Rational sector_sum_orb;
    long long sector_sum_plain = 0;
    int sector_count = 0;
    ClosedIdentity closed_identity;
    BoundaryIdentity boundary_identity;
    AppendixIdentity appendix_identity;
    std::optional<std::map<Rational, long long>> orbifold_betti;

    /// The sector-sum identity holds for any labeled complex, boundary or not.
    bool all_hold() const
    {
        return closed_identity.holds && boundary_identity.holds && appendix_identity.holds;
    }
};

inline InvariantReport invariant_report(const LabeledComplex& l)
{
    const auto dec = decompose(l);
    InvariantReport r;
    r.name = l.name;
    r.chi_underlying = chi_underlying(l);
    r.chi_boundary = chi_boundary(l);
    r.chi_orb = chi_orb(l);
    r.chi_orb_inner = chi_orb_inner(l);
    r.chi_orb_boundary = chi_orb_boundary(l);
    r.chi_roan = chi_roan(l);
    r.sector_count = dec.class_count();
    r.closed_identity = detail::closed_identity(l, dec);
    r.boundary_identity = detail::boundary_identity(l, dec);
    r.appendix_identity = detail::appendix_identity(l, dec);
    r.sector_sum_orb = r.closed_identity.sector_sum;
    r.sector_sum_plain = r.appendix_identity.sector_sum_plain;
    if (l.shift_data)
        r.orbifold_betti = orbifold_betti_table(l, dec, *l.shift_data);
    return r;
}

} // namespace orbi

#endif // ORBI_INVARIANTS_HPP
