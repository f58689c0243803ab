// Tangent cones at a point: initial ideals, their differential closure, the
// ridge (additive generators and their vertex space L), and tau = codim L.
#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "reestau/rees.hpp"

namespace reestau {

// Homogeneous ideal of the graded ring k[X_1..X_d].
struct HomIdeal {
  RingPtr ring;
  std::vector<Poly> gens;
  bool diff_closed = false;
};

inline HomIdeal make_hom_ideal(RingPtr ring, const std::vector<Poly>& gens) {
  HomIdeal I{std::move(ring), {}, false};
  std::set<std::string> seen;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), I.ring)) throw MismatchError("generator lives in a different ring");
    require_homogeneous(g, "generator");
    if (g.is_zero()) continue;
    if (seen.insert(g.normalized().to_string()).second) I.gens.push_back(g);
  }
  return I;
}

// <In_{n_i}(f_i)> at `point` (origin when omitted); zero forms are dropped.
inline HomIdeal initial_ideal(const ReesAlgebra& g, std::span<const Scalar> point = {}) {
  std::vector<Poly> forms;
  for (const auto& e : g.gens()) {
    Poly f = point.empty() ? e.f : translate(e.f, point);
    if (f.order() < Order(e.weight))
      throw PreconditionError("generator " + to_string(e) + " has order " + f.order().to_string() +
                              " below its weight at the point");
    Poly in = initial_form(f, e.weight);
    if (!in.is_zero()) forms.push_back(std::move(in));
  }
  return make_hom_ideal(g.ring(), forms);
}

// Adds Delta^alpha(g) for every generator g and |alpha| < deg g. One pass
// is enough: the result is already closed.
inline HomIdeal diff_close_hom_ideal(const HomIdeal& I) {
  std::vector<Poly> all = I.gens;
  const std::size_t d = I.ring->dim();
  for (const auto& g : I.gens) {
    const auto D = static_cast<std::uint32_t>(g.degree());
    for (std::uint32_t k = 1; k < D; ++k)
      for (const auto& a : monomials_of_degree(d, k)) {
        Poly h = hasse_derivative(g, a);
        if (!h.is_zero()) all.push_back(std::move(h));
      }
  }
  HomIdeal out = make_hom_ideal(I.ring, all);
  out.diff_closed = true;
  return out;
}

struct RidgeComponent {
  Poly linear_form;
  std::uint32_t e;  // the additive generator is linear_form^(p^e)
};

struct Ridge {
  std::vector<RidgeComponent> components;
  std::size_t tau = 0;
  std::vector<std::vector<Scalar>> L_basis;
};

namespace detail {

// Basis of the degree-D slice of each degree 1..max_degree, built
// incrementally: I_D = span(gens of degree D) + sum_i X_i * I_(D-1).
inline std::vector<std::vector<Poly>> slices_up_to(const HomIdeal& I, std::uint32_t max_degree) {
  const std::size_t d = I.ring->dim();
  const FieldSpec f = I.ring->field();
  std::vector<std::vector<Poly>> out(max_degree + 1);
  for (std::uint32_t D = 1; D <= max_degree; ++D) {
    MonomialIndex cols(monomials_of_degree(d, D));
    RowSpace rs(f, cols.size());
    for (const auto& g : I.gens)
      if (g.degree() == D) rs.insert(*cols.coords(g));
    for (const auto& b : out[D - 1])
      for (std::size_t i = 0; i < d && !rs.full(); ++i) rs.insert(*cols.coords(b.monomial_multiple(direction(d, i, 1))));
    for (const auto& row : rs.basis()) out[D].push_back(cols.to_poly(I.ring, row));
  }
  return out;
}

}  // namespace detail

// Additive generators of a diff-closed homogeneous ideal, one degree p^e at
// a time, untwisted to linear forms. Columns are ordered with the
// non-additive monomials first, so echelon rows pivoting in the trailing
// block {X_i^(p^e)} span exactly the additive part of the slice.
inline Ridge ridge(const HomIdeal& I) {
  if (!I.diff_closed) throw PreconditionError("ridge needs a diff-closed ideal; call diff_close_hom_ideal first");
  const RingPtr& R = I.ring;
  const std::size_t d = R->dim();
  const FieldSpec f = R->field();
  const std::uint64_t p = f.characteristic();
  std::uint64_t max_deg = 0;
  for (const auto& g : I.gens) max_deg = std::max(max_deg, g.degree());

  std::vector<std::uint64_t> qs;
  if (max_deg >= 1) {
    qs.push_back(1);
    if (p)
      while (qs.back() * p <= max_deg) qs.push_back(qs.back() * p);
  }
  auto slices = detail::slices_up_to(I, qs.empty() ? 0 : static_cast<std::uint32_t>(qs.back()));

  Ridge out;
  RowSpace span(f, d);
  for (std::uint32_t e = 0; e < qs.size(); ++e) {
    const auto q = static_cast<std::uint32_t>(qs[e]);
    std::vector<Monomial> order, additive;
    for (const auto& m : monomials_of_degree(d, q)) {
      bool pure = std::count_if(m.begin(), m.end(), [](std::uint32_t x) { return x != 0; }) == 1;
      (pure ? additive : order).push_back(m);
    }
    const std::size_t split = order.size();
    std::sort(additive.begin(), additive.end(), GrlexGreater{});
    order.insert(order.end(), additive.begin(), additive.end());
    MonomialIndex cols(order);
    RowSpace rs(f, cols.size());
    for (const auto& b : slices[q]) rs.insert(*cols.coords(b));
    auto basis = rs.basis();
    auto piv = rs.pivots();
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (piv[r] < split) continue;
      Poly ell = frobenius_root(cols.to_poly(R, basis[r]), e);
      std::vector<Scalar> v(d, Scalar::zero(f));
      for (const auto& [m, c] : ell.terms())
        for (std::size_t i = 0; i < d; ++i)
          if (m[i]) v[i] = c;
      if (span.insert(v)) out.components.push_back({ell, e});
    }
  }
  out.tau = span.rank();
  out.L_basis = nullspace(f, d, span.basis());
  if (out.tau + out.L_basis.size() != d) throw std::logic_error("ridge rank and vertex-space dimension disagree");
  return out;
}

// Initial ideal, its closure and ridge in one record, for reports.
struct TauAnalysis {
  HomIdeal initial;
  HomIdeal closure;
  Ridge ridge;
};

inline TauAnalysis analyze_tau(const ReesAlgebra& g, std::span<const Scalar> point = {}) {
  TauAnalysis a{initial_ideal(g, point), {}, {}};
  a.closure = diff_close_hom_ideal(a.initial);
  a.ridge = ridge(a.closure);
  return a;
}

inline std::size_t tau(const ReesAlgebra& g, std::span<const Scalar> point = {}) {
  return analyze_tau(g, point).ridge.tau;
}

struct Transversality {
  bool cone_transversal = false;
  bool line_in_ridge = false;
};

// cone_transversal: some initial form is nonzero on the Z-axis direction.
// line_in_ridge: the Z-axis direction lies in the vertex space L.
inline Transversality is_transversal(const ReesAlgebra& g, std::span<const Scalar> point = {}) {
  const RingPtr& R = g.ring();
  if (!R->z_index()) throw PreconditionError("no distinguished variable declared");
  const std::size_t z = *R->z_index();
  TauAnalysis a = analyze_tau(g, point);
  std::vector<Scalar> ez(R->dim(), Scalar::zero(R->field()));
  ez[z] = Scalar::one(R->field());
  Transversality t;
  for (const auto& in : a.initial.gens)
    if (!in.evaluate(ez).is_zero()) t.cone_transversal = true;
  t.line_in_ridge = true;
  for (const auto& c : a.ridge.components)
    if (!c.linear_form.evaluate(ez).is_zero()) t.line_in_ridge = false;
  return t;
}

struct TransversalChange {
  ReesAlgebra algebra;
  std::vector<Scalar> shifts;  // x_i -> x_i + shifts[i] * z
};

// Tilts the fiber direction by substituting x_i -> x_i + c_i z for small
// deterministic c until the cone meets the new Z-axis only at the origin.
// Returns nullopt after `attempts` tries.
inline std::optional<TransversalChange> make_transversal(const ReesAlgebra& g, std::size_t attempts = 64) {
  const RingPtr& R = g.ring();
  if (!R->z_index()) throw PreconditionError("no distinguished variable declared");
  const std::size_t z = *R->z_index(), d = R->dim();
  const FieldSpec f = R->field();
  HomIdeal I = initial_ideal(g);
  std::vector<long> c(d, 0);
  for (std::size_t t = 0; t < attempts; ++t) {
    std::vector<Scalar> dir(d), shifts(d, Scalar::zero(f));
    for (std::size_t i = 0; i < d; ++i) {
      shifts[i] = i == z ? Scalar::zero(f) : Scalar(f, c[i]);
      dir[i] = i == z ? Scalar::one(f) : shifts[i];
    }
    bool ok = std::any_of(I.gens.begin(), I.gens.end(), [&](const Poly& h) { return !h.evaluate(dir).is_zero(); });
    if (ok) {
      std::map<std::string, Poly> images;
      Poly zv = Poly::variable(R, z);
      for (std::size_t i = 0; i < d; ++i)
        if (i != z && !shifts[i].is_zero()) images.emplace(R->var(i), Poly::variable(R, i) + zv.scaled(shifts[i]));
      ReesAlgebra out(R);
      for (const auto& e : g.gens()) out.add(substitute(e.f, images, R), e.weight);
      out.set_saturation(Saturation::none);
      return TransversalChange{out, shifts};
    }
    // next coefficient vector: odometer over 0, 1, -1, 2, -2, ... per slot
    for (std::size_t i = 0; i < d; ++i) {
      if (i == z) continue;
      c[i] = c[i] > 0 ? -c[i] : 1 - c[i];
      if (c[i] <= 2) break;
      c[i] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace reestau
