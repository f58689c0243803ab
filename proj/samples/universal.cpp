// Prints generators of the translation-invariant symmetric functions for
// small n, rewritten in elementary symmetric polynomials.
#include <iostream>

#include "reestau.hpp"

int main() {
  using namespace reestau;
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)})
    for (std::uint32_t n = 2; n <= 3; ++n) {
      auto u = universal_invariants(n, f);
      std::cout << f.name() << ", n = " << n << ":\n";
      for (const auto& g : u->gens) std::cout << "  [" << g.degree << "] " << g.rewritten.to_string() << "\n";
    }
}
