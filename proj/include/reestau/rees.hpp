// Rees algebras O[f_1 W^n_1, ..., f_s W^n_s] over a polynomial ring.
#pragma once

#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "reestau/linalg.hpp"
#include "reestau/polynomial.hpp"

namespace reestau {

struct WeightedElem {
  Poly f;
  std::uint32_t weight;
};

inline std::string to_string(const WeightedElem& e) {
  std::string body = e.f.to_string();
  if (e.f.size() > 1) body = "(" + body + ")";
  return body + " W^" + std::to_string(e.weight);
}

// Which differential closure, if any, produced an algebra.
enum class Saturation { none, relative, absolute };

inline std::string to_string(Saturation s) {
  switch (s) {
    case Saturation::relative: return "relative";
    case Saturation::absolute: return "absolute";
    default: return "none";
  }
}

class ReesAlgebra {
 public:
  explicit ReesAlgebra(RingPtr ring, Saturation sat = Saturation::none) : ring_(std::move(ring)), sat_(sat) {}

  ReesAlgebra(RingPtr ring, const std::vector<WeightedElem>& gens, Saturation sat = Saturation::none)
      : ReesAlgebra(std::move(ring), sat) {
    for (const auto& g : gens) add(g.f, g.weight);
  }

  // Adds f W^weight. Zero elements are dropped, and so are repeats up to a
  // unit multiple at the same weight. Returns true if a generator was added.
  bool add(const Poly& f, std::uint32_t weight) {
    if (weight < 1) throw PreconditionError("generator weight must be at least 1");
    if (!same_ring(f.ring(), ring_)) throw MismatchError("generator lives in a different ring");
    if (f.is_zero()) return false;
    std::string key = std::to_string(weight) + "|" + f.normalized().to_string();
    if (!seen_.insert(std::move(key)).second) return false;
    gens_.push_back({f, weight});
    return true;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<WeightedElem>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  Saturation saturation() const { return sat_; }
  void set_saturation(Saturation s) { sat_ = s; }

  std::uint64_t weight_lcm() const {
    std::uint64_t l = 1;
    for (const auto& g : gens_) l = std::lcm(l, std::uint64_t(g.weight));
    return l;
  }

  std::string to_string() const {
    std::string s = "O[";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += reestau::to_string(gens_[i]);
    }
    return s + "]";
  }

 private:
  RingPtr ring_;
  std::vector<WeightedElem> gens_;
  std::set<std::string> seen_;
  Saturation sat_;
};

struct PolyIdeal {
  RingPtr ring;
  std::vector<Poly> gens;
};

// Smallest algebra containing both: the union of the generator lists.
inline ReesAlgebra odot(const ReesAlgebra& a, const ReesAlgebra& b) {
  if (!same_ring(a.ring(), b.ring())) throw MismatchError("odot of algebras over different rings");
  ReesAlgebra r(a.ring());
  for (const auto& g : a.gens()) r.add(g.f, g.weight);
  for (const auto& g : b.gens()) r.add(g.f, g.weight);
  return r;
}

// Calls fn(product, exponents) for every product prod f_i^a_i with
// sum a_i n_i = target. Branches whose partial product already has order
// above `max_degree` are pruned, since every completion only gets larger.
inline void for_each_weighted_product(const std::vector<WeightedElem>& gens, std::uint64_t target,
                                      const std::function<void(const Poly&, const std::vector<std::uint32_t>&)>& fn,
                                      std::optional<std::uint64_t> max_degree = std::nullopt) {
  if (gens.empty()) return;
  std::vector<std::uint32_t> exps(gens.size(), 0);
  const RingPtr& R = gens.front().f.ring();
  std::function<void(std::size_t, std::uint64_t, const Poly&)> rec = [&](std::size_t i, std::uint64_t left,
                                                                          const Poly& acc) {
    if (left == 0) {
      fn(acc, exps);
      return;
    }
    if (i == gens.size()) return;
    rec(i + 1, left, acc);
    Poly cur = acc;
    std::uint32_t w = gens[i].weight;
    for (std::uint32_t a = 1; std::uint64_t(a) * w <= left; ++a) {
      cur = cur * gens[i].f;
      if (max_degree && cur.order() > Order(*max_degree)) break;
      exps[i] = a;
      rec(i + 1, left - std::uint64_t(a) * w, cur);
    }
    exps[i] = 0;
  };
  rec(0, target, Poly::constant(R, 1L));
}

// Generators of I_N: all products with total weight exactly N.
inline PolyIdeal graded_piece(const ReesAlgebra& g, std::uint64_t N) {
  if (N < 1) throw PreconditionError("graded piece index must be positive");
  PolyIdeal I{g.ring(), {}};
  std::set<std::string> seen;
  for_each_weighted_product(g.gens(), N, [&](const Poly& p, const std::vector<std::uint32_t>&) {
    if (seen.insert(p.normalized().to_string()).second) I.gens.push_back(p);
  });
  return I;
}

// The Rees ring O[I_N W^N]; N must be a common multiple of the weights.
inline ReesAlgebra veronese(const ReesAlgebra& g, std::uint64_t N) {
  for (const auto& e : g.gens())
    if (N % e.weight != 0)
      throw PreconditionError("N = " + std::to_string(N) + " is not a multiple of weight " + std::to_string(e.weight));
  ReesAlgebra r(g.ring());
  for (const auto& p : graded_piece(g, N).gens) r.add(p, static_cast<std::uint32_t>(N));
  return r;
}

inline std::vector<Scalar> origin(const RingPtr& R) { return std::vector<Scalar>(R->dim(), Scalar::zero(R->field())); }

// x in Sing(G) iff ord_x(f_i) >= n_i for every generator.
inline bool in_sing_locus(const ReesAlgebra& g, std::span<const Scalar> point) {
  if (point.size() != g.ring()->dim()) throw MismatchError("point dimension does not match ring");
  for (const auto& e : g.gens())
    if (translate(e.f, point).order() < Order(e.weight)) return false;
  return true;
}

// All multi-indices alpha with |alpha| <= max_order.
inline std::vector<Monomial> multi_indices_up_to(std::size_t nvars, std::uint32_t max_order) {
  return monomials_up_to(nvars, max_order);
}

// Every rational point of Sing(G) over F_p, lexicographically sorted.
inline std::vector<std::vector<Scalar>> enumerate_sing(const ReesAlgebra& g, std::uint64_t max_points = 1'000'000) {
  const FieldSpec f = g.ring()->field();
  if (!f.is_prime_field()) throw PreconditionError("singular-locus enumeration needs a finite field");
  const std::size_t d = g.ring()->dim();
  const std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= p;
    if (total > max_points) throw PreconditionError("search space too large for enumeration");
  }
  // ord_x(f) >= n iff every Hasse derivative of order < n vanishes at x.
  std::vector<Poly> conditions;
  for (const auto& e : g.gens())
    for (const auto& a : multi_indices_up_to(d, e.weight - 1)) {
      Poly h = hasse_derivative(e.f, a);
      if (!h.is_zero()) conditions.push_back(std::move(h));
    }
  std::vector<std::vector<Scalar>> out;
  std::vector<Scalar> pt(d, Scalar::zero(f));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = d; i-- > 0;) {
      pt[i] = Scalar(f, static_cast<long>(c % p));
      c /= p;
    }
    bool in = std::all_of(conditions.begin(), conditions.end(),
                          [&](const Poly& h) { return h.evaluate(pt).is_zero(); });
    if (in) out.push_back(pt);
  }
  return out;
}

inline void require_homogeneous(const Poly& p, const char* what) {
  if (!p.is_homogeneous()) throw PreconditionError(std::string(what) + " is not homogeneous: " + p.to_string());
}

// Span of { m * g : g in gens, deg(m) + deg(g) = D } inside the degree-D
// monomial basis.
inline RowSpace homogeneous_slice(const std::vector<Poly>& gens, const MonomialIndex& cols, std::size_t nvars,
                                  std::uint64_t D, FieldSpec f) {
  RowSpace rs(f, cols.size());
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > D) continue;
    for (const auto& m : monomials_of_degree(nvars, static_cast<std::uint32_t>(D - g.degree()))) {
      if (rs.full()) return rs;
      rs.insert(*cols.coords(g.monomial_multiple(m)));
    }
  }
  return rs;
}

// Exact membership of a homogeneous h in a homogeneous ideal, by linear
// algebra in the single degree deg(h).
inline bool ideal_contains(const PolyIdeal& I, const Poly& h) {
  for (const auto& g : I.gens) {
    if (!same_ring(g.ring(), h.ring())) throw MismatchError("ideal and element live in different rings");
    require_homogeneous(g, "ideal generator");
  }
  require_homogeneous(h, "element");
  if (h.is_zero()) return true;
  const std::size_t d = h.ring()->dim();
  const std::uint64_t D = h.degree();
  MonomialIndex cols(monomials_of_degree(d, static_cast<std::uint32_t>(D)));
  RowSpace rs = homogeneous_slice(I.gens, cols, d, D, h.field());
  return rs.contains(*cols.coords(h));
}

// One-sided certificate for h in rad(I): some h^k with k <= k_max lies in I.
inline bool radical_contains(const PolyIdeal& I, const Poly& h, std::uint32_t k_max) {
  if (k_max < 1) throw PreconditionError("k_max must be at least 1");
  Poly hk = h;
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    if (ideal_contains(I, hk)) return true;
    if (k < k_max) hk = hk * h;
  }
  return false;
}

// Certificate search for h in the ideal generated by `gens` (not
// necessarily homogeneous): h = sum q_j g_j with deg(q_j g_j) bounded by
// max(degree_bound, deg h). A true answer is a proof; false only means no
// combination exists below the bound.
inline bool truncated_membership(const PolyIdeal& I, const Poly& h, std::uint64_t degree_bound) {
  if (h.is_zero()) return true;
  const std::size_t d = h.ring()->dim();
  const std::uint64_t B = std::max<std::uint64_t>(degree_bound, h.degree());
  MonomialIndex cols(monomials_up_to(d, static_cast<std::uint32_t>(B)));
  RowSpace rs(h.field(), cols.size());
  for (const auto& g : I.gens) {
    if (!same_ring(g.ring(), h.ring())) throw MismatchError("ideal and element live in different rings");
    if (g.is_zero() || g.degree() > B) continue;
    for (const auto& m : monomials_up_to(d, static_cast<std::uint32_t>(B - g.degree()))) {
      if (rs.full()) break;
      rs.insert(*cols.coords(g.monomial_multiple(m)));
    }
  }
  return rs.contains(*cols.coords(h));
}

struct EquivVerdict {
  enum class Kind { consistent, refuted, inconclusive };
  Kind kind = Kind::consistent;
  std::vector<std::string> evidence;
};

inline std::string to_string(EquivVerdict::Kind k) {
  switch (k) {
    case EquivVerdict::Kind::refuted: return "refuted";
    case EquivVerdict::Kind::inconclusive: return "inconclusive";
    default: return "consistent-with-equivalence";
  }
}

namespace detail {

// <In_N(I_N)> at the origin.
inline PolyIdeal initial_ideal_of_piece(const ReesAlgebra& g, std::uint64_t N) {
  for (const auto& e : g.gens())
    if (N % e.weight != 0)
      throw PreconditionError("N = " + std::to_string(N) + " is not a common multiple of the weights");
  PolyIdeal J{g.ring(), {}};
  std::set<std::string> seen;
  for (const auto& p : graded_piece(g, N).gens) {
    Poly in = [&] {
      try {
        return initial_form(p, N);
      } catch (const PreconditionError&) {
        throw PreconditionError("the origin is not in the singular locus: " + p.to_string() + " has order below " +
                                std::to_string(N));
      }
    }();
    if (!in.is_zero() && seen.insert(in.normalized().to_string()).second) J.gens.push_back(in);
  }
  return J;
}

// A rational point where every generator of J vanishes but h does not; this
// certifies h is not in rad(J). Searches all of F_p^d when small, a box of
// small integers over Q.
inline std::optional<std::vector<Scalar>> radical_witness(const PolyIdeal& J, const Poly& h,
                                                          std::uint64_t budget = 20000) {
  const FieldSpec f = h.field();
  const std::size_t d = h.ring()->dim();
  std::vector<long> values;
  if (f.is_prime_field())
    for (long v = 0; v < static_cast<long>(f.characteristic()); ++v) values.push_back(v);
  else
    values = {0, 1, -1, 2, -2};
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= values.size();
    if (total > budget) return std::nullopt;
  }
  std::vector<Scalar> pt(d);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < d; ++i) {
      pt[i] = Scalar(f, values[c % values.size()]);
      c /= values.size();
    }
    if (h.evaluate(pt).is_zero()) continue;
    if (std::all_of(J.gens.begin(), J.gens.end(), [&](const Poly& g) { return g.evaluate(pt).is_zero(); }))
      return pt;
  }
  return std::nullopt;
}

}  // namespace detail

// Desk-scale integral-equivalence check: compares rad<In_N(I_N)> of both
// algebras generator by generator, in both directions.
inline EquivVerdict check_integral_equiv_desk(const ReesAlgebra& g1, const ReesAlgebra& g2, std::uint64_t N,
                                              std::uint32_t k_max) {
  if (!same_ring(g1.ring(), g2.ring())) throw MismatchError("algebras over different rings");
  PolyIdeal J1 = detail::initial_ideal_of_piece(g1, N);
  PolyIdeal J2 = detail::initial_ideal_of_piece(g2, N);
  EquivVerdict v;
  bool refuted = false, open = false;
  auto direction = [&](const PolyIdeal& from, const PolyIdeal& into, const char* label) {
    for (const auto& a : from.gens) {
      if (radical_contains(into, a, k_max)) continue;
      if (auto w = detail::radical_witness(into, a)) {
        std::string pt;
        for (std::size_t i = 0; i < w->size(); ++i) pt += (i ? "," : "") + (*w)[i].to_string();
        v.evidence.push_back(std::string(label) + ": " + a.to_string() + " not in radical, witness (" + pt + ")");
        refuted = true;
      } else {
        v.evidence.push_back(std::string(label) + ": " + a.to_string() + " not found in radical up to power " +
                             std::to_string(k_max));
        open = true;
      }
    }
  };
  direction(J1, J2, "first->second");
  direction(J2, J1, "second->first");
  v.kind = refuted ? EquivVerdict::Kind::refuted
                   : (open ? EquivVerdict::Kind::inconclusive : EquivVerdict::Kind::consistent);
  return v;
}

}  // namespace reestau
