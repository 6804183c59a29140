// Prints the invariants and the orbifold Betti table of teardrop(k).
//   sample_teardrop [k]

#include <cstdlib>
#include <iostream>

#include <orbi/orbi.hpp>

int main(int argc, char** argv)
{
    const int k = argc > 1 ? std::atoi(argv[1]) : 3;
    const auto l = orbi::gallery::teardrop(k);
    const auto r = orbi::invariant_report(l);

    std::cout << l.name << '\n'
              << "  chi_orb         " << orbi::to_string(r.chi_orb) << '\n'
              << "  sectors         " << r.sector_count << '\n'
              << "  sector sum      " << orbi::to_string(r.sector_sum_orb) << " (chi = "
              << r.chi_underlying << ")\n"
              << "  chi_roan        " << r.chi_roan << '\n';
    if (r.orbifold_betti)
        for (const auto& [degree, b] : *r.orbifold_betti)
            std::cout << "  H^" << orbi::to_string(degree) << " : " << b << '\n';
    return r.all_hold() ? 0 : 2;
}
