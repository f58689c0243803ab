// Differential saturation of Rees algebras.
//
// One pass suffices: the family Delta^alpha(f_i) W^(n_i - |alpha|),
// |alpha| < n_i, already generates the smallest differential algebra
// containing O[f_i W^n_i]. Weight-0 outputs are dropped since I_0 = O.
#pragma once

#include <string>
#include <vector>

#include "reestau/rees.hpp"

namespace reestau {

enum class DiffMode { absolute, relative };

inline std::string to_string(DiffMode m) { return m == DiffMode::absolute ? "absolute" : "relative"; }

namespace detail {

// Multi-indices used to saturate a generator of the given weight.
inline std::vector<Monomial> saturation_indices(const Ring& R, DiffMode mode, std::uint32_t weight) {
  std::vector<Monomial> out;
  if (weight < 2) return out;
  if (mode == DiffMode::absolute) {
    for (std::uint32_t k = 1; k < weight; ++k) {
      auto layer = monomials_of_degree(R.dim(), k);
      out.insert(out.end(), layer.begin(), layer.end());
    }
  } else {
    if (!R.z_index()) throw PreconditionError("relative saturation needs a distinguished variable");
    for (std::uint32_t e = 1; e < weight; ++e) out.push_back(direction(R.dim(), *R.z_index(), e));
  }
  return out;
}

}  // namespace detail

inline ReesAlgebra saturate(const ReesAlgebra& g, DiffMode mode) {
  ReesAlgebra r(g.ring());
  for (const auto& e : g.gens()) r.add(e.f, e.weight);
  for (const auto& e : g.gens())
    for (const auto& a : detail::saturation_indices(*g.ring(), mode, e.weight))
      r.add(hasse_derivative(e.f, a), e.weight - static_cast<std::uint32_t>(total_degree(a)));
  Saturation s = mode == DiffMode::absolute ? Saturation::absolute : Saturation::relative;
  if (g.saturation() == Saturation::absolute) s = Saturation::absolute;
  r.set_saturation(s);
  return r;
}

// G(G): adds Delta^alpha(f_i) W^(n_i - |alpha|) for 1 <= |alpha| <= n_i - 1.
inline ReesAlgebra diff_saturate(const ReesAlgebra& g) { return saturate(g, DiffMode::absolute); }

// Closure under the Z-direction operators Delta_Z^(e) only.
inline ReesAlgebra rel_diff_saturate(const ReesAlgebra& g) {
  if (!g.ring()->z_index()) throw PreconditionError("no distinguished variable declared");
  return saturate(g, DiffMode::relative);
}

struct ClosureCheck {
  bool closed = true;
  // Derivatives not certified to lie in the graded piece of their weight.
  std::vector<std::string> missing;
};

// Bounded verifier: every Delta^alpha(f_i) must lie in I_(n_i - |alpha|),
// certified by a degree-truncated linear system. No false positives; a
// failure may only mean the certificate needs a larger degree bound.
inline ClosureCheck is_diff_closed(const ReesAlgebra& g, DiffMode mode, std::uint64_t degree_bound = 8) {
  ClosureCheck out;
  std::map<std::uint32_t, PolyIdeal> pieces;
  for (const auto& e : g.gens()) {
    for (const auto& a : detail::saturation_indices(*g.ring(), mode, e.weight)) {
      Poly h = hasse_derivative(e.f, a);
      if (h.is_zero()) continue;
      std::uint32_t w = e.weight - static_cast<std::uint32_t>(total_degree(a));
      auto it = pieces.find(w);
      if (it == pieces.end()) it = pieces.emplace(w, graded_piece(g, w)).first;
      if (!truncated_membership(it->second, h, degree_bound)) {
        out.closed = false;
        out.missing.push_back(to_string(WeightedElem{h, w}));
      }
    }
  }
  return out;
}

}  // namespace reestau
