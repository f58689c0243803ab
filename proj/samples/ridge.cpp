// Ridge of a homogeneous ideal over F3: additive generators and vertex space.
#include <iostream>

#include "reestau.hpp"

int main() {
  using namespace reestau;
  RingPtr R = make_ring(FieldSpec::prime(3), {"X", "Y", "Z"});
  HomIdeal I = make_hom_ideal(R, {parse_poly("X^3 + 2*Y^3 + Z^3", R), parse_poly("(X + Y)^9", R)});
  Ridge r = ridge(diff_close_hom_ideal(I));
  for (const auto& c : r.components) std::cout << "(" << c.linear_form.to_string() << ")^(3^" << c.e << ")\n";
  std::cout << "tau = " << r.tau << "\n";
  for (const auto& v : r.L_basis) std::cout << "L: " << format_vector(v) << "\n";
}
