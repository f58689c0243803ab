// Eliminates Z from a saturated hypersurface algebra and compares tau.
#include <iostream>

#include "reestau.hpp"

int main() {
  using namespace reestau;
  RingPtr R = make_ring(FieldSpec::prime(2), {"x", "y", "z"}, "z");
  ReesAlgebra g(R);
  g.add(parse_poly("z^2 + x*z + y^3", R), 2);

  ReesAlgebra s = diff_saturate(g);
  std::cout << "saturated: " << s.to_string() << "\n";
  for (Route route : {Route::universal, Route::z_free}) {
    TauDrop d = tau_drop_check(s, DropMode::absolute, route);
    std::cout << to_string(route) << ": " << d.elim.algebra.to_string() << "\n"
              << "  tau " << d.tau_g << " -> " << d.tau_r << (d.holds ? " (drops by one)" : " (no drop)") << "\n";
  }
}
