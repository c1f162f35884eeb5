// Walk through the main computations on small classes.

#include <iostream>

#include "vcmod/vcmod.hpp"

int main() {
  using namespace vcmod;

  const auto fc = gen_finite_cofinite(16, 2);
  const auto vc = vc_dimension(fc);
  std::cout << "finite/cofinite (m=16, t=2): " << fc.size() << " concepts, VC " << vc.vc << " witnessed by {";
  for (std::size_t i = 0; i < vc.certificate.points.size(); ++i) {
    std::cout << (i ? ", " : "") << vc.certificate.points[i];
  }
  std::cout << "}\n";
  for (std::size_t s = 1; s <= 4; ++s) {
    std::cout << "  thick VC at min-size " << s << ": " << vc_thick(fc, s).vc << "\n";
  }

  // Blow each point of the 3-point power set up into a cluster of 4 and add 3 noise points.
  const auto decorated = gen_cluster_decorated(gen_power_set(3), 4, 3, 11);
  std::cout << "decorated power set: VC " << vc_dimension(decorated).vc << ", thick VC at 4: "
            << vc_thick(decorated, 4).vc << "\n";

  const auto cls = gen_random(9, 30, 0.5, 2024);
  const PrincipalIdeal ideal(bits_from_string("110000001"));
  const auto mod = vc_mod_ideal(cls, ideal);
  const auto stone = vc_on_stone(cls, ideal);
  std::cout << "random class: VC " << vc_dimension(cls).vc << ", modulo N " << mod.vc << ", on the quotient "
            << stone.vc << " (" << stone.quotient.surviving.size() << " surviving atoms)\n";

  std::cout << "s(0.1, 0.05, 2) = " << sample_complexity_bound(0.1, 0.05, 2) << "\n";
  return 0;
}
