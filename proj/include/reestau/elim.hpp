// Elimination algebras.
//
// Universal side: invariants of k[Y_1..Y_n] that are fixed by a product of
// symmetric groups acting on blocks of the Y's and by simultaneous
// translation Y_i -> Y_i + t. Both conditions are linear in each degree, so
// the computation is plain linear algebra and works in any characteristic.
//
// Specialization sends the block-wise elementary symmetric functions to the
// (signed) coefficients of monic polynomials in Z, giving Z-free elements of
// the algebra over the base ring S.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "reestau/diffsat.hpp"
#include "reestau/tangent.hpp"

namespace reestau {

struct UniversalGen {
  Poly invariant;       // in Y_1..Y_n
  std::uint32_t degree;
  Poly rewritten;       // in the block-symmetric variables
};

struct UniversalElimGens {
  std::vector<std::uint32_t> blocks;  // {n} or {r, s}
  FieldSpec field;
  std::uint32_t degree_bound = 0;
  RingPtr y_ring;
  RingPtr s_ring;
  std::vector<UniversalGen> gens;
};

namespace detail {

inline RingPtr y_ring_for(FieldSpec f, std::uint32_t n) {
  std::vector<std::string> v;
  for (std::uint32_t i = 1; i <= n; ++i) v.push_back("Y" + std::to_string(i));
  return make_ring(f, v);
}

// s1..sn for one block; v1..vr, w1..ws for two.
inline std::vector<std::string> symmetric_names(const std::vector<std::uint32_t>& blocks) {
  static const char* prefix[] = {"v", "w"};
  std::vector<std::string> out;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::uint32_t i = 1; i <= blocks[b]; ++i)
      out.push_back((blocks.size() == 1 ? std::string("s") : std::string(prefix[b])) + std::to_string(i));
  return out;
}

// Weight of each symmetric variable (i for the i-th elementary function).
inline std::vector<std::uint32_t> symmetric_weights(const std::vector<std::uint32_t>& blocks) {
  std::vector<std::uint32_t> w;
  for (auto n : blocks)
    for (std::uint32_t i = 1; i <= n; ++i) w.push_back(i);
  return w;
}

// e_0..e_k of the given polynomials.
inline std::vector<Poly> elementary_symmetric(const std::vector<Poly>& xs, const RingPtr& R) {
  std::vector<Poly> e(xs.size() + 1, Poly(R));
  e[0] = Poly::constant(R, 1L);
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (std::size_t i = j + 1; i >= 1; --i) e[i] += e[i - 1] * xs[j];
  return e;
}

// Images of the symmetric variables as elementary symmetric functions of
// the Y blocks.
inline std::map<std::string, Poly> symmetric_images(const std::vector<std::uint32_t>& blocks, const RingPtr& Y) {
  std::map<std::string, Poly> img;
  auto names = symmetric_names(blocks);
  std::size_t at = 0, name = 0;
  for (auto n : blocks) {
    std::vector<Poly> ys;
    for (std::uint32_t i = 0; i < n; ++i) ys.push_back(Poly::variable(Y, at + i));
    auto e = elementary_symmetric(ys, Y);
    for (std::uint32_t i = 1; i <= n; ++i) img.emplace(names[name++], e[i]);
    at += n;
  }
  return img;
}

// Exponent vectors with sum_i w_i a_i = D.
inline std::vector<Monomial> weighted_monomials(const std::vector<std::uint32_t>& w, std::uint32_t D) {
  std::vector<Monomial> out;
  Monomial cur(w.size(), 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i == w.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::uint32_t a = 0; a * w[i] <= left; ++a) {
      cur[i] = a;
      rec(i + 1, left - a * w[i]);
    }
    cur[i] = 0;
  };
  rec(0, D);
  return out;
}

// Orbit sums of degree-D monomials under the block symmetric groups: a
// basis of the invariants of degree D.
inline std::vector<Poly> orbit_sums(const RingPtr& Y, const std::vector<std::uint32_t>& blocks, std::uint32_t D) {
  std::map<Monomial, Poly, GrlexGreater> by_rep;
  for (const auto& m : monomials_of_degree(Y->dim(), D)) {
    Monomial rep = m;
    std::size_t at = 0;
    for (auto n : blocks) {
      std::sort(rep.begin() + at, rep.begin() + at + n, std::greater<>());
      at += n;
    }
    auto it = by_rep.find(rep);
    if (it == by_rep.end()) it = by_rep.emplace(rep, Poly(Y)).first;
    it->second.add_term(m, Scalar::one(Y->field()));
  }
  std::vector<Poly> out;
  for (auto& [rep, p] : by_rep) out.push_back(std::move(p));
  return out;
}

// f(Y + t) - f(Y), with t appended as the last variable.
inline Poly translation_defect(const Poly& f, const RingPtr& Yt) {
  const RingPtr& Y = f.ring();
  Poly t = Poly::variable(Yt, Y->dim());
  std::map<std::string, Poly> img;
  for (std::size_t i = 0; i < Y->dim(); ++i) img.emplace(Y->var(i), Poly::variable(Yt, i) + t);
  return substitute(f, img, Yt) - substitute(f, {}, Yt);
}

inline std::vector<Poly> invariants_of_degree(const RingPtr& Y, const RingPtr& Yt,
                                              const std::vector<std::uint32_t>& blocks, std::uint32_t D) {
  auto basis = orbit_sums(Y, blocks, D);
  std::map<Monomial, std::vector<Scalar>> rows;
  const FieldSpec f = Y->field();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Poly defect = translation_defect(basis[j], Yt);
    for (const auto& [m, c] : defect.terms()) {
      auto it = rows.find(m);
      if (it == rows.end()) it = rows.emplace(m, std::vector<Scalar>(basis.size(), Scalar::zero(f))).first;
      it->second[j] = c;
    }
  }
  std::vector<std::vector<Scalar>> mat;
  for (auto& [m, r] : rows) mat.push_back(std::move(r));
  std::vector<Poly> out;
  for (const auto& v : nullspace(f, basis.size(), mat)) {
    Poly p(Y);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) p += basis[j].scaled(v[j]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace detail

// Writes a block-symmetric polynomial in the block-wise elementary
// symmetric variables by solving against all weighted monomials of its
// degree. Throws when no exact re-expansion exists.
inline Poly rewrite_in_symmetrics(const Poly& inv, const std::vector<std::uint32_t>& blocks, const RingPtr& s_ring) {
  const RingPtr& Y = inv.ring();
  if (std::accumulate(blocks.begin(), blocks.end(), std::size_t{0}) != Y->dim())
    throw MismatchError("block sizes do not add up to the number of Y variables");
  if (inv.is_zero()) return Poly(s_ring);
  if (!inv.is_homogeneous()) throw PreconditionError("invariant is not homogeneous: " + inv.to_string());
  const auto D = static_cast<std::uint32_t>(inv.degree());
  auto img = detail::symmetric_images(blocks, Y);
  auto mons = detail::weighted_monomials(detail::symmetric_weights(blocks), D);
  MonomialIndex cols(monomials_of_degree(Y->dim(), D));
  std::vector<std::vector<Scalar>> columns;
  for (const auto& m : mons)
    columns.push_back(*cols.coords(substitute(Poly::term(s_ring, m, Scalar::one(Y->field())), img, Y)));
  auto c = solve_linear(Y->field(), columns, *cols.coords(inv));
  if (!c) throw PreconditionError("not invariant under the block symmetric groups: " + inv.to_string());
  Poly out(s_ring);
  for (std::size_t j = 0; j < mons.size(); ++j)
    if (!(*c)[j].is_zero()) out.add_term(mons[j], (*c)[j]);
  if (!(substitute(out, img, Y) == inv)) throw std::logic_error("symmetric rewrite does not re-expand");
  return out;
}

inline std::uint32_t default_universal_bound(const std::vector<std::uint32_t>& blocks) {
  std::uint32_t n = std::accumulate(blocks.begin(), blocks.end(), 0u);
  return n * (n - 1);
}

namespace detail {

inline UniversalElimGens compute_universal(const std::vector<std::uint32_t>& blocks, FieldSpec f,
                                           std::uint32_t bound) {
  UniversalElimGens u;
  u.blocks = blocks;
  u.field = f;
  u.degree_bound = bound;
  const std::uint32_t n = std::accumulate(blocks.begin(), blocks.end(), 0u);
  u.y_ring = y_ring_for(f, n);
  u.s_ring = make_ring(f, symmetric_names(blocks));
  auto yt_names = u.y_ring->vars();
  yt_names.push_back("t");
  RingPtr Yt = make_ring(f, yt_names);
  std::vector<WeightedElem> found;
  for (std::uint32_t D = 1; D <= bound; ++D) {
    MonomialIndex cols(monomials_of_degree(n, D));
    RowSpace decomposable(f, cols.size());
    for_each_weighted_product(found, D, [&](const Poly& p, const std::vector<std::uint32_t>&) {
      if (!decomposable.full()) decomposable.insert(*cols.coords(p));
    });
    for (const auto& inv : invariants_of_degree(u.y_ring, Yt, blocks, D)) {
      if (!decomposable.insert(*cols.coords(inv))) continue;
      Poly g = inv.normalized();
      u.gens.push_back({g, D, rewrite_in_symmetrics(g, blocks, u.s_ring)});
      found.push_back({g, D});
    }
  }
  return u;
}

class UniversalCache {
 public:
  using Key = std::tuple<std::vector<std::uint32_t>, std::uint32_t, std::uint32_t>;

  std::shared_ptr<const UniversalElimGens> get(const std::vector<std::uint32_t>& blocks, FieldSpec f,
                                               std::uint32_t bound) {
    Key k{blocks, f.characteristic(), bound};
    {
      std::shared_lock lock(mu_);
      auto it = table_.find(k);
      if (it != table_.end()) return it->second;
    }
    auto value = std::make_shared<const UniversalElimGens>(compute_universal(blocks, f, bound));
    std::unique_lock lock(mu_);
    return table_.emplace(k, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<Key, std::shared_ptr<const UniversalElimGens>> table_;
};

inline UniversalCache& universal_cache() {
  static UniversalCache cache;
  return cache;
}

}  // namespace detail

// Minimal generators of k[Y_i - Y_j]^G up to `degree_bound` (0 selects
// n(n-1)), where G is the product of symmetric groups on the blocks.
inline std::shared_ptr<const UniversalElimGens> universal_invariants(const std::vector<std::uint32_t>& blocks,
                                                                     FieldSpec f, std::uint32_t degree_bound = 0) {
  if (blocks.empty() || blocks.size() > 2) throw PreconditionError("one or two blocks are supported");
  std::uint32_t n = 0;
  for (auto b : blocks) {
    if (b == 0) throw PreconditionError("empty block");
    n += b;
  }
  if (n > 4) throw PreconditionError("universal invariants are limited to 4 roots, got " + std::to_string(n));
  if (degree_bound == 0) degree_bound = default_universal_bound(blocks);
  return detail::universal_cache().get(blocks, f, degree_bound);
}

inline std::shared_ptr<const UniversalElimGens> universal_invariants(std::uint32_t n, FieldSpec f,
                                                                     std::uint32_t degree_bound = 0) {
  return universal_invariants(std::vector<std::uint32_t>{n}, f, degree_bound);
}

// Every generator is fixed by the adjacent transpositions inside each block.
inline bool is_block_invariant(const Poly& p, const std::vector<std::uint32_t>& blocks) {
  const RingPtr& Y = p.ring();
  std::size_t at = 0;
  for (auto n : blocks) {
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      std::map<std::string, Poly> swap{{Y->var(at + i), Poly::variable(Y, at + i + 1)},
                                       {Y->var(at + i + 1), Poly::variable(Y, at + i)}};
      if (!(substitute(p, swap, Y) == p)) return false;
    }
    at += n;
  }
  return true;
}

inline bool is_translation_invariant(const Poly& p) {
  auto names = p.ring()->vars();
  names.push_back("t");
  return detail::translation_defect(p, make_ring(p.field(), names)).is_zero();
}

// Coefficients a_1..a_n of a polynomial monic in variable z: f = z^n + a_1 z^(n-1) + ... + a_n.
inline std::vector<Poly> monic_coefficients(const Poly& f, std::size_t z) {
  const std::uint64_t n = f.degree_in(z);
  Poly lead = f.coefficient_in(z, n);
  if (!lead.is_constant() || !lead.leading_coefficient().is_one())
    throw PreconditionError("not monic in " + f.ring()->var(z) + ": " + f.to_string());
  std::vector<Poly> a;
  for (std::uint64_t i = 1; i <= n; ++i) a.push_back(f.coefficient_in(z, n - i));
  return a;
}

struct Specialized {
  std::vector<WeightedElem> elems;
  std::size_t dropped = 0;  // generators that specialized to zero
};

// s_{b,i} -> (-1)^i a_{b,i}; a generator of degree m yields h W^m.
inline Specialized specialize(const UniversalElimGens& u, const std::vector<std::vector<Poly>>& coeffs,
                              const RingPtr& S) {
  if (coeffs.size() != u.blocks.size()) throw MismatchError("one coefficient list per block is required");
  std::map<std::string, Poly> img;
  auto names = detail::symmetric_names(u.blocks);
  std::size_t name = 0;
  for (std::size_t b = 0; b < u.blocks.size(); ++b) {
    if (coeffs[b].size() != u.blocks[b])
      throw MismatchError("expected " + std::to_string(u.blocks[b]) + " coefficients, got " +
                          std::to_string(coeffs[b].size()));
    for (std::uint32_t i = 1; i <= u.blocks[b]; ++i) {
      const Poly& a = coeffs[b][i - 1];
      if (!same_ring(a.ring(), S)) throw MismatchError("coefficient is not in the target ring");
      img.emplace(names[name++], i % 2 ? -a : a);
    }
  }
  Specialized out;
  for (const auto& g : u.gens) {
    Poly h = substitute(g.rewritten, img, S);
    if (h.is_zero()) ++out.dropped;
    else out.elems.push_back({h, g.degree});
  }
  return out;
}

inline Specialized specialize(const UniversalElimGens& u, const std::vector<Poly>& coeffs, const RingPtr& S) {
  return specialize(u, std::vector<std::vector<Poly>>{coeffs}, S);
}

enum class Route { universal, z_free };

inline std::string to_string(Route r) { return r == Route::universal ? "universal" : "z-free"; }

struct ElimBounds {
  std::uint64_t weight_bound = 0;       // z-free route; 0 selects 2 * lcm(weights)
  std::uint64_t degree_bound = 8;       // z-free route x-degree cap
  std::uint32_t invariant_bound = 0;    // universal route; 0 selects n(n-1)
};

struct EliminationAlgebra {
  ReesAlgebra algebra;                  // over the Z-free base ring
  Route route = Route::universal;
  std::vector<std::uint32_t> source_weights;
  std::vector<std::string> notes;
};

namespace detail {

inline Poly to_base(const Poly& f, const RingPtr& S) { return substitute(f, {}, S); }

inline Poly from_base(const Poly& f, const RingPtr& R) { return substitute(f, {}, R); }

// A generator is usable on the universal route when, after scaling by a
// unit, it is monic in Z of Z-degree equal to its weight.
inline std::optional<Poly> as_monic(const Poly& f, std::size_t z, std::uint32_t weight) {
  if (f.degree_in(z) != weight) return std::nullopt;
  Poly lead = f.coefficient_in(z, weight);
  if (!lead.is_constant() || lead.is_zero()) return std::nullopt;
  return f.scaled(lead.leading_coefficient().inverse());
}

inline void add_specialized(ReesAlgebra& out, const Specialized& s) {
  for (const auto& e : s.elems) out.add(e.f, e.weight);
}

inline EliminationAlgebra eliminate_universal(const ReesAlgebra& g, const ElimBounds& b) {
  const RingPtr& R = g.ring();
  const std::size_t z = *R->z_index();
  RingPtr S = base_ring(R);
  EliminationAlgebra out{ReesAlgebra(S), Route::universal, {}, {}};

  struct Monic {
    Poly f;
    std::uint32_t n;
  };
  std::vector<Monic> monic;
  std::vector<WeightedElem> rest;
  for (const auto& e : g.gens()) {
    out.source_weights.push_back(e.weight);
    if (e.f.degree_in(z) == 0) {
      out.algebra.add(to_base(e.f, S), e.weight);
      continue;
    }
    if (auto m = as_monic(e.f, z, e.weight)) monic.push_back({*m, e.weight});
    else rest.push_back(e);
  }
  // A non-monic h W^m joins a monic f W^w with w | m: f^(m/w) + h is again
  // an element of weight m, and monic when h has Z-degree below m.
  for (const auto& e : rest) {
    std::optional<Poly> fixed;
    for (const auto& m : monic) {
      if (e.weight % m.n) continue;
      if ((fixed = as_monic(m.f.pow(e.weight / m.n) + e.f, z, e.weight))) break;
    }
    if (!fixed) throw PreconditionError("non-monic generator on the universal route: " + to_string(e));
    out.notes.push_back("made monic: " + to_string(e) + " -> " + to_string(WeightedElem{*fixed, e.weight}));
    monic.push_back({*fixed, e.weight});
  }

  auto coeffs = [&](const Monic& m) {
    std::vector<Poly> a;
    for (const auto& c : monic_coefficients(m.f, z)) a.push_back(to_base(c, S));
    return a;
  };
  for (const auto& m : monic) {
    if (m.n < 2) continue;
    if (m.n > 4) throw PreconditionError("monic generator of degree " + std::to_string(m.n) + " exceeds 4");
    auto u = universal_invariants(m.n, R->field(), b.invariant_bound);
    add_specialized(out.algebra, specialize(*u, coeffs(m), S));
  }
  for (std::size_t i = 0; i < monic.size(); ++i)
    for (std::size_t j = i + 1; j < monic.size(); ++j) {
      const Monic *p = &monic[i], *q = &monic[j];
      if (p->n + q->n > 4) {
        out.notes.push_back("pair skipped (degrees " + std::to_string(p->n) + "+" + std::to_string(q->n) + " > 4)");
        continue;
      }
      if (p->n < q->n) std::swap(p, q);
      auto u = universal_invariants({p->n, q->n}, R->field(), b.invariant_bound);
      add_specialized(out.algebra, specialize(*u, {coeffs(*p), coeffs(*q)}, S));
    }
  out.algebra.set_saturation(Saturation::none);
  return out;
}

// Column order with every monomial of degree <= B, highest grlex first.
inline MonomialIndex truncated_columns(std::size_t d, std::uint64_t B) {
  auto mons = monomials_up_to(d, static_cast<std::uint32_t>(B));
  std::sort(mons.begin(), mons.end(), GrlexGreater{});
  return MonomialIndex(mons);
}

// Basis rows of `rs` (grlex-descending columns) whose pivot has degree <= k:
// exactly the elements of the span with degree <= k.
inline std::vector<Poly> rows_up_to_degree(const RowSpace& rs, const MonomialIndex& cols, const RingPtr& R,
                                           std::uint64_t k) {
  std::vector<Poly> out;
  auto basis = rs.basis();
  auto piv = rs.pivots();
  for (std::size_t r = 0; r < basis.size(); ++r)
    if (total_degree(cols[piv[r]]) <= k) out.push_back(cols.to_poly(R, basis[r]));
  return out;
}

inline EliminationAlgebra eliminate_z_free(const ReesAlgebra& g, const ElimBounds& b) {
  const RingPtr& R = g.ring();
  const std::size_t z = *R->z_index(), d = R->dim();
  RingPtr S = base_ring(R);
  const FieldSpec f = R->field();
  const std::uint64_t B = b.degree_bound;
  const std::uint64_t W = b.weight_bound ? b.weight_bound : 2 * g.weight_lcm();
  EliminationAlgebra out{ReesAlgebra(S), Route::z_free, {}, {}};
  for (const auto& e : g.gens()) out.source_weights.push_back(e.weight);

  // T_w: span of monomial multiples of products of weight w with degree <= B,
  // via T_w = sum_i f_i * T_(w - n_i) truncated, T_0 = all monomials.
  MonomialIndex cols = truncated_columns(d, B);
  std::vector<RowSpace> T;
  T.emplace_back(f, cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    std::vector<Scalar> v(cols.size(), Scalar::zero(f));
    v[i] = Scalar::one(f);
    T[0].insert(v);
  }
  // S-side bookkeeping for minimal generation.
  MonomialIndex scols = truncated_columns(d - 1, B);
  std::vector<RowSpace> U;
  U.emplace_back(f, scols.size());
  std::vector<WeightedElem> emitted;

  // Z-containing monomials first, Z-free ones (grlex-descending) last.
  std::vector<Monomial> zorder, zfree;
  for (const auto& m : cols.monomials()) (m[z] ? zorder : zfree).push_back(m);
  const std::size_t split = zorder.size();
  zorder.insert(zorder.end(), zfree.begin(), zfree.end());
  MonomialIndex zcols(zorder);

  for (std::uint64_t w = 1; w <= W; ++w) {
    RowSpace Tw(f, cols.size());
    for (const auto& e : g.gens()) {
      if (e.weight > w || e.f.degree() > B) continue;
      for (const auto& q : rows_up_to_degree(T[w - e.weight], cols, R, B - e.f.degree())) {
        if (Tw.full()) break;
        Tw.insert(*cols.coords(q * e.f));
      }
    }
    RowSpace Z(f, zcols.size());
    for (const auto& row : Tw.basis()) Z.insert(*zcols.coords(cols.to_poly(R, row)));
    T.push_back(std::move(Tw));

    std::vector<Poly> cand;
    auto zb = Z.basis();
    auto zp = Z.pivots();
    for (std::size_t r = 0; r < zb.size(); ++r)
      if (zp[r] >= split) cand.push_back(to_base(zcols.to_poly(R, zb[r]), S));
    std::stable_sort(cand.begin(), cand.end(), [](const Poly& a, const Poly& c) { return a.degree() < c.degree(); });

    RowSpace Uw(f, scols.size());
    for (const auto& e : emitted)
      for (const auto& q : rows_up_to_degree(U[w - e.weight], scols, S, B - e.f.degree()))
        Uw.insert(*scols.coords(q * e.f));
    std::vector<WeightedElem> fresh;
    for (const auto& c : cand) {
      if (Uw.contains(*scols.coords(c))) continue;
      fresh.push_back({c.normalized(), static_cast<std::uint32_t>(w)});
      for (const auto& m : monomials_up_to(d - 1, static_cast<std::uint32_t>(B - c.degree())))
        Uw.insert(*scols.coords(c.monomial_multiple(m)));
    }
    U.push_back(std::move(Uw));
    for (auto& e : fresh) {
      out.algebra.add(e.f, e.weight);
      emitted.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace detail

// R_{G,beta} over the Z-free base ring. Both routes need a differentially
// saturated input (relative or absolute).
inline EliminationAlgebra elimination_algebra(const ReesAlgebra& g, Route route, const ElimBounds& b = {}) {
  if (!g.ring()->z_index()) throw PreconditionError("no distinguished variable declared");
  if (g.saturation() == Saturation::none)
    throw PreconditionError("elimination needs a saturated algebra; apply relative or absolute saturation first");
  if (g.ring()->dim() < 2) throw PreconditionError("elimination needs at least one variable besides Z");
  return route == Route::universal ? detail::eliminate_universal(g, b) : detail::eliminate_z_free(g, b);
}

// Symbolic checks on a generic monic polynomial (or pair) with indeterminate
// coefficients: each specialized generator is unchanged by Z -> Z + s and
// picks up u^deg under Z -> uZ (coefficients a_i -> u^i a_i).
inline bool check_translation_invariance(const UniversalElimGens& u) {
  const FieldSpec f = u.field;
  std::vector<std::string> names;
  for (std::size_t b = 0; b < u.blocks.size(); ++b)
    for (std::uint32_t i = 1; i <= u.blocks[b]; ++i)
      names.push_back(std::string(b ? "b" : "a") + std::to_string(i));
  names.push_back("s");
  names.push_back("u");
  RingPtr A = make_ring(f, names);
  const std::size_t s_at = names.size() - 2, u_at = names.size() - 1;
  Poly s = Poly::variable(A, s_at), uu = Poly::variable(A, u_at);

  std::vector<std::vector<Poly>> base, shifted, scaled;
  std::size_t at = 0;
  for (auto n : u.blocks) {
    std::vector<Poly> a{Poly::constant(A, 1L)};
    for (std::uint32_t i = 1; i <= n; ++i) a.push_back(Poly::variable(A, at++));
    std::vector<Poly> sh, sc;
    // f(Z + s): coefficient of Z^(n-j) is sum_{i<=j} a_i C(n-i, j-i) s^(j-i).
    for (std::uint32_t j = 1; j <= n; ++j) {
      Poly c(A);
      for (std::uint32_t i = 0; i <= j; ++i) c += a[i].scaled(binomial(f, n - i, j - i)) * s.pow(j - i);
      sh.push_back(c);
      sc.push_back(a[j] * uu.pow(j));
    }
    base.emplace_back(a.begin() + 1, a.end());
    shifted.push_back(sh);
    scaled.push_back(sc);
  }
  // Compare generator by generator: specialize() drops zero images.
  std::map<std::string, Poly> img0, img1, img2;
  auto sn = detail::symmetric_names(u.blocks);
  std::size_t k = 0;
  for (std::size_t b = 0; b < u.blocks.size(); ++b)
    for (std::uint32_t i = 1; i <= u.blocks[b]; ++i, ++k) {
      auto sign = [&](const Poly& p) { return i % 2 ? -p : p; };
      img0.emplace(sn[k], sign(base[b][i - 1]));
      img1.emplace(sn[k], sign(shifted[b][i - 1]));
      img2.emplace(sn[k], sign(scaled[b][i - 1]));
    }
  for (const auto& g : u.gens) {
    Poly v0 = substitute(g.rewritten, img0, A);
    if (!(substitute(g.rewritten, img1, A) == v0)) return false;
    if (!(substitute(g.rewritten, img2, A) == v0 * uu.pow(g.degree))) return false;
  }
  return true;
}

// Delta_Z^(e)(prod (Z - Y_i)) against e_(n-e)(Z - Y_1, ..., Z - Y_n).
struct SymmetricIdentity {
  bool unsigned_holds = true;   // no sign factor
  bool signed_holds = true;     // with the factor (-1)^(n-e)
};

inline SymmetricIdentity check_symmetric_identity(std::uint32_t n, FieldSpec f) {
  std::vector<std::string> names;
  for (std::uint32_t i = 1; i <= n; ++i) names.push_back("Y" + std::to_string(i));
  names.push_back("Z");
  RingPtr R = make_ring(f, names, std::string("Z"));
  Poly Z = Poly::variable(R, n);
  Poly F = Poly::constant(R, 1L);
  std::vector<Poly> diffs;
  for (std::uint32_t i = 0; i < n; ++i) {
    diffs.push_back(Z - Poly::variable(R, i));
    F *= diffs.back();
  }
  auto e = detail::elementary_symmetric(diffs, R);
  SymmetricIdentity out;
  for (std::uint32_t k = 0; k <= n; ++k) {
    Poly lhs = hasse_derivative(F, direction(n + 1, n, k));
    const Poly& rhs = e[n - k];
    if (!(lhs == rhs)) out.unsigned_holds = false;
    if (!(lhs == ((n - k) % 2 ? -rhs : rhs))) out.signed_holds = false;
  }
  return out;
}

struct TauDrop {
  std::size_t tau_g = 0;
  std::size_t tau_r = 0;
  bool holds = false;
  EliminationAlgebra elim;
};

enum class DropMode { absolute, relative_only };

// Absolute mode: tau_R = tau_G - 1. Relative-only mode: tau_R <= tau_G - 1.
inline TauDrop tau_drop_check(const ReesAlgebra& g, DropMode mode, Route route = Route::universal,
                              const ElimBounds& b = {}) {
  if (!g.ring()->z_index()) throw PreconditionError("no distinguished variable declared");
  if (mode == DropMode::absolute && g.saturation() != Saturation::absolute)
    throw PreconditionError("absolute mode needs a diff-saturated algebra");
  if (g.saturation() == Saturation::none) throw PreconditionError("algebra is not saturated");
  Transversality t = is_transversal(g);
  if (!t.cone_transversal) throw PreconditionError("projection is not transversal: the Z-axis lies in the tangent cone");
  TauDrop r{tau(g), 0, false, elimination_algebra(g, route, b)};
  if (r.tau_g == 0) throw PreconditionError("tau is 0 at the origin; nothing to drop");
  r.tau_r = tau(r.elim.algebra);
  r.holds = mode == DropMode::absolute ? r.tau_r + 1 == r.tau_g : r.tau_r + 1 <= r.tau_g;
  return r;
}

struct PresentationVerdict {
  std::size_t tau_lhs = 0;
  std::size_t tau_rhs = 0;
  EquivVerdict equivalence;
  bool consistent() const { return tau_lhs == tau_rhs && equivalence.kind != EquivVerdict::Kind::refuted; }
};

// Compares G with O[f W^n, Delta_Z^(e)(f) W^(n-e)] (.) R_{G,beta} at the origin.
inline PresentationVerdict verify_local_presentation(const ReesAlgebra& g, const WeightedElem& f,
                                                     const ElimBounds& b = {}, std::uint32_t k_max = 4) {
  const RingPtr& R = g.ring();
  if (!R->z_index()) throw PreconditionError("no distinguished variable declared");
  const std::size_t z = *R->z_index();
  bool present = std::any_of(g.gens().begin(), g.gens().end(),
                             [&](const WeightedElem& e) { return e.weight == f.weight && e.f == f.f; });
  if (!present) throw PreconditionError("presentation element is not a generator: " + to_string(f));
  if (!detail::as_monic(f.f, z, f.weight)) throw PreconditionError("presentation element is not monic: " + to_string(f));
  if (f.f.order() != Order(f.weight))
    throw PreconditionError("presentation element must have order exactly " + std::to_string(f.weight));
  EliminationAlgebra e = elimination_algebra(g, Route::universal, b);
  ReesAlgebra rhs(R);
  rhs.add(f.f, f.weight);
  for (std::uint32_t k = 1; k < f.weight; ++k) rhs.add(hasse_derivative(f.f, direction(R->dim(), z, k)), f.weight - k);
  for (const auto& x : e.algebra.gens()) rhs.add(detail::from_base(x.f, R), x.weight);
  PresentationVerdict v;
  v.tau_lhs = tau(g);
  v.tau_rhs = tau(rhs);
  std::uint64_t N = std::lcm(g.weight_lcm(), rhs.weight_lcm());
  v.equivalence = check_integral_equiv_desk(g, rhs, N, k_max);
  return v;
}

}  // namespace reestau
