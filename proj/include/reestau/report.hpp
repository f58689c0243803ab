// Plain-text, line-oriented reports. Byte-stable for golden tests.
#pragma once

#include <sstream>
#include <string>

#include "reestau/elim.hpp"

namespace reestau {

inline std::string format_vector(std::span<const Scalar> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

inline std::string join_vars(const Ring& R) {
  std::string s;
  for (std::size_t i = 0; i < R.dim(); ++i) s += (i ? ", " : "") + R.var(i);
  return s;
}

inline std::string tau_report(const ReesAlgebra& g, std::span<const Scalar> point = {}) {
  TauAnalysis a = analyze_tau(g, point);
  std::ostringstream out;
  out << "tau-report\n";
  out << "field: " << g.ring()->field().name() << "\n";
  out << "vars: " << join_vars(*g.ring()) << "\n";
  out << "point: " << (point.empty() ? std::string("origin") : format_vector(point)) << "\n";
  out << "saturation: " << to_string(g.saturation()) << "\n";
  out << "initial-forms:\n";
  for (const auto& f : a.initial.gens) out << "  " << f.to_string() << "\n";
  out << "closure:\n";
  for (const auto& f : a.closure.gens) out << "  " << f.to_string() << "\n";
  out << "additive:\n";
  for (const auto& c : a.ridge.components) out << "  " << c.linear_form.to_string() << " e=" << c.e << "\n";
  out << "L-basis:\n";
  for (const auto& v : a.ridge.L_basis) out << "  " << format_vector(v) << "\n";
  out << "tau = " << a.ridge.tau << "\n";
  return out.str();
}

struct ElimOutcome {
  std::string report;
  bool refuted = false;
};

inline ElimOutcome elim_report(const ReesAlgebra& saturated, Route route, DropMode mode, const ElimBounds& b = {}) {
  EliminationAlgebra e = elimination_algebra(saturated, route, b);
  const std::size_t tg = tau(saturated);
  const std::size_t tr = tau(e.algebra);
  std::ostringstream out;
  out << "elim-report\n";
  out << "route: " << to_string(route) << "\n";
  out << "field: " << saturated.ring()->field().name() << "\n";
  out << "base-vars: " << join_vars(*e.algebra.ring()) << "\n";
  out << "saturation: " << to_string(saturated.saturation()) << "\n";
  out << "generators:\n";
  for (const auto& x : e.algebra.gens()) out << "  " << to_string(x) << "\n";
  for (const auto& n : e.notes) out << "note: " << n << "\n";
  out << "tau_G = " << tg << "\n";
  out << "tau_R = " << tr << "\n";
  ElimOutcome o;
  std::string verdict;
  if (tg == 0) {
    verdict = "not applicable (tau_G = 0)";
  } else if (!is_transversal(saturated).cone_transversal) {
    verdict = "not applicable (projection not transversal)";
  } else if (mode == DropMode::absolute) {
    o.refuted = tr + 1 != tg;
    verdict = o.refuted ? "fails (expected tau_R = tau_G - 1)" : "holds (tau_R = tau_G - 1)";
  } else {
    o.refuted = tr + 1 > tg;
    verdict = o.refuted ? "fails (expected tau_R <= tau_G - 1)" : "holds (tau_R <= tau_G - 1)";
  }
  out << "verdict: " << verdict << "\n";
  o.report = out.str();
  return o;
}

}  // namespace reestau
