// Property and oracle checks over a suite of algebra files, one routine per
// acceptance criterion. Every routine is deterministic (fixed seeds) and
// reports per-member failures by name.
#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "reestau/algfile.hpp"
#include "reestau/elim.hpp"

namespace reestau {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;
  std::vector<std::string> failures;
};

struct VerifyOptions {
  unsigned threads = 0;  // 0: REES_TAU_THREADS or hardware concurrency
  std::uint64_t seed = 0x5eed2024;
  ElimBounds bounds;
  std::uint32_t k_max = 4;
};

inline unsigned thread_count(unsigned requested) {
  unsigned n = requested;
  if (!n)
    if (const char* env = std::getenv("REES_TAU_THREADS")) n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  if (!n) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

// fn(i) for i in [0, n) on up to `threads` workers; results keep index order.
template <class R>
std::vector<R> parallel_map(std::size_t n, unsigned threads, const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) out[i] = fn(i);
  };
  unsigned t = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < t; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

namespace detail {

// Outcome of one suite member inside a criterion.
struct MemberOutcome {
  bool applicable = false;
  bool ok = true;
  std::string line;
  std::string field;
  std::size_t tau = 0;
};

template <class F>
MemberOutcome guarded(const AlgFile& m, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    MemberOutcome o;
    o.applicable = true;
    o.ok = false;
    o.line = m.name + ": error: " + e.what();
    return o;
  }
}

inline std::optional<std::size_t> expected(const AlgFile& m, const std::string& key) {
  auto it = m.expect.find(key);
  if (it == m.expect.end()) return std::nullopt;
  return static_cast<std::size_t>(std::stoul(it->second));
}

// Monic generator of degree 2..4 in Z whose weight equals its Z-degree.
inline bool has_monic_generator(const ReesAlgebra& g, std::uint32_t lo, std::uint32_t hi) {
  if (!g.ring()->z_index()) return false;
  for (const auto& e : g.gens())
    if (e.weight >= lo && e.weight <= hi && as_monic(e.f, *g.ring()->z_index(), e.weight)) return true;
  return false;
}

inline bool drop_applicable(const ReesAlgebra& g, std::string& why) {
  if (!g.ring()->z_index()) return why = "no distinguished variable", false;
  if (!in_sing_locus(g, origin(g.ring()))) return why = "origin not singular", false;
  if (!has_monic_generator(g, 2, 3)) return why = "no monic generator of degree 2-3", false;
  if (!is_transversal(g).cone_transversal) return why = "not transversal", false;
  if (tau(g) == 0) return why = "tau = 0", false;
  return true;
}

inline CriterionResult collect(int id, std::string title, const std::vector<MemberOutcome>& rows,
                               std::size_t min_applicable) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  std::size_t applicable = 0, ok = 0;
  for (const auto& o : rows) {
    if (!o.applicable) continue;
    ++applicable;
    if (o.ok) ++ok;
    else r.failures.push_back(o.line);
  }
  r.pass = ok == applicable && applicable >= min_applicable;
  r.summary = std::to_string(ok) + "/" + std::to_string(applicable) + " members";
  if (applicable < min_applicable)
    r.failures.push_back("only " + std::to_string(applicable) + " applicable members, need " +
                         std::to_string(min_applicable));
  return r;
}

inline ReesAlgebra single(FieldSpec f, std::vector<std::string> vars, const std::string& poly, std::uint32_t w) {
  auto R = make_ring(f, vars, vars.back());
  ReesAlgebra g(R);
  g.add(parse_poly(poly, R), w);
  return g;
}

}  // namespace detail

// 1. tau drops by exactly one on diff-saturated members.
inline CriterionResult check_tau_drop(const std::vector<AlgFile>& suite, const VerifyOptions& opt = {}) {
  auto rows = parallel_map<detail::MemberOutcome>(suite.size(), thread_count(opt.threads), [&](std::size_t i) {
    const AlgFile& m = suite[i];
    return detail::guarded(m, [&] {
      detail::MemberOutcome o;
      std::string why;
      if (!detail::drop_applicable(m.algebra, why)) {
        o.line = m.name + ": skipped (" + why + ")";
        return o;
      }
      o.applicable = true;
      o.field = m.ring->field().name();
      TauDrop d = tau_drop_check(diff_saturate(m.algebra), DropMode::absolute, Route::universal, opt.bounds);
      o.tau = d.tau_g;
      o.ok = d.holds;
      if (auto t = detail::expected(m, "tau")) o.ok = o.ok && *t == d.tau_g;
      if (auto t = detail::expected(m, "tau_R")) o.ok = o.ok && *t == d.tau_r;
      o.line = m.name + ": tau_G " + std::to_string(d.tau_g) + " -> tau_R " + std::to_string(d.tau_r);
      return o;
    });
  });
  auto r = detail::collect(1, "tau drops by one under elimination", rows, 10);
  std::set<std::string> fields;
  std::set<std::size_t> taus;
  for (const auto& o : rows)
    if (o.applicable) fields.insert(o.field), taus.insert(o.tau);
  for (const char* f : {"Q", "F2", "F3", "F5"})
    if (!fields.count(f)) r.pass = false, r.failures.push_back(std::string("no member over ") + f);
  for (auto t : taus)
    if (t < 1 || t > 3) r.pass = false, r.failures.push_back("tau_G outside 1..3: " + std::to_string(t));

  struct Worked {
    FieldSpec f;
    std::vector<std::string> vars;
    const char* poly;
    std::size_t tg, tr;
  };
  const std::vector<Worked> worked{
      {FieldSpec::rationals(), {"x", "z"}, "z^2 - x^3", 1, 0},
      {FieldSpec::rationals(), {"x", "z"}, "z^2 + x*z + x^2", 2, 1},
      {FieldSpec::prime(3), {"x", "z"}, "z^2 + x*z + x^2", 1, 0},
      {FieldSpec::prime(2), {"x", "y", "z"}, "z^2 + x*z + y^3", 2, 1},
  };
  for (const auto& w : worked) {
    TauDrop d = tau_drop_check(diff_saturate(detail::single(w.f, w.vars, w.poly, 2)), DropMode::absolute,
                               Route::universal, opt.bounds);
    if (d.tau_g != w.tg || d.tau_r != w.tr) {
      r.pass = false;
      r.failures.push_back(std::string("worked triple ") + w.poly + " over " + w.f.name() + ": got " +
                           std::to_string(d.tau_g) + " -> " + std::to_string(d.tau_r));
    }
  }
  r.summary += ", fields " + std::to_string(fields.size()) + ", worked triples " +
               std::to_string(worked.size());
  return r;
}

// 2. tau is unchanged by Veronese truncation and by adjoining integral elements.
inline CriterionResult check_integral_invariance(const std::vector<AlgFile>& suite, const VerifyOptions& opt = {}) {
  std::atomic<std::size_t> pairs{0};
  auto rows = parallel_map<detail::MemberOutcome>(suite.size(), thread_count(opt.threads), [&](std::size_t i) {
    const AlgFile& m = suite[i];
    return detail::guarded(m, [&] {
      detail::MemberOutcome o;
      if (m.algebra.empty() || !in_sing_locus(m.algebra, origin(m.ring))) {
        o.line = m.name + ": skipped (origin not singular)";
        return o;
      }
      o.applicable = true;
      const std::size_t t = tau(m.algebra);
      std::vector<std::string> bad;
      std::size_t checked = 0;
      for (std::uint64_t N = m.algebra.weight_lcm(); N <= 12; N += m.algebra.weight_lcm()) {
        ++checked;
        if (tau(veronese(m.algebra, N)) != t) bad.push_back("veronese N=" + std::to_string(N));
      }
      for (const auto& a : m.adjoins) {
        Poly hk = a.h.pow(a.power);
        PolyIdeal piece = graded_piece(m.algebra, std::uint64_t(a.power) * a.weight);
        if (!truncated_membership(piece, hk, std::max<std::uint64_t>(hk.degree(), opt.bounds.degree_bound))) {
          bad.push_back("no certificate for " + a.h.to_string());
          continue;
        }
        ReesAlgebra extra(m.ring);
        extra.add(a.h, a.weight);
        ReesAlgebra joined = odot(m.algebra, extra);
        if (tau(joined) != t) bad.push_back("adjoin " + a.h.to_string());
        std::uint64_t N = std::lcm(m.algebra.weight_lcm(), std::uint64_t(a.weight));
        if (check_integral_equiv_desk(m.algebra, joined, N, opt.k_max).kind == EquivVerdict::Kind::refuted)
          bad.push_back("equivalence refuted for " + a.h.to_string());
        ++pairs;
      }
      o.ok = bad.empty();
      o.line = m.name + ": tau " + std::to_string(t) + ", " + std::to_string(checked) + " truncations" +
               (bad.empty() ? "" : ", mismatch at " + bad.front());
      return o;
    });
  });
  auto r = detail::collect(2, "tau is invariant under integral equivalence", rows, 1);
  if (pairs < 5) r.pass = false, r.failures.push_back("only " + std::to_string(pairs.load()) + " adjoined pairs");
  r.summary += ", " + std::to_string(pairs.load()) + " adjoined pairs";
  return r;
}

// 3. Saturation preserves tau and the singular locus.
inline CriterionResult check_saturation(const std::vector<AlgFile>& suite, const VerifyOptions& opt = {}) {
  std::atomic<std::size_t> enumerated{0};
  auto rows = parallel_map<detail::MemberOutcome>(suite.size(), thread_count(opt.threads), [&](std::size_t i) {
    const AlgFile& m = suite[i];
    return detail::guarded(m, [&] {
      detail::MemberOutcome o;
      if (m.algebra.empty() || !in_sing_locus(m.algebra, origin(m.ring))) {
        o.line = m.name + ": skipped (origin not singular)";
        return o;
      }
      o.applicable = true;
      ReesAlgebra s = diff_saturate(m.algebra);
      std::size_t t0 = tau(m.algebra), t1 = tau(s);
      o.ok = t0 == t1;
      o.line = m.name + ": tau " + std::to_string(t0) + " vs " + std::to_string(t1);
      const FieldSpec f = m.ring->field();
      if (f.is_prime_field() && std::pow(double(f.characteristic()), double(m.ring->dim())) <= 729.0) {
        bool same = enumerate_sing(m.algebra) == enumerate_sing(s);
        ++enumerated;
        o.ok = o.ok && same;
        if (!same) o.line += ", singular loci differ";
      }
      return o;
    });
  });
  auto r = detail::collect(3, "saturation preserves tau and Sing", rows, 1);
  r.summary += ", " + std::to_string(enumerated.load()) + " loci enumerated";
  return r;
}

// 4. Relative saturation only: tau_R <= tau_G - 1.
inline CriterionResult check_relative_drop(const std::vector<AlgFile>& suite, const VerifyOptions& opt = {}) {
  auto rows = parallel_map<detail::MemberOutcome>(suite.size(), thread_count(opt.threads), [&](std::size_t i) {
    const AlgFile& m = suite[i];
    return detail::guarded(m, [&] {
      detail::MemberOutcome o;
      std::string why;
      if (!m.ring->z_index()) {
        o.line = m.name + ": skipped (no distinguished variable)";
        return o;
      }
      ReesAlgebra g = rel_diff_saturate(m.algebra);
      if (!detail::drop_applicable(g, why)) {
        o.line = m.name + ": skipped (" + why + ")";
        return o;
      }
      o.applicable = true;
      TauDrop d = tau_drop_check(g, DropMode::relative_only, Route::universal, opt.bounds);
      o.ok = d.holds;
      if (auto t = detail::expected(m, "tau_R_relative")) o.ok = o.ok && *t == d.tau_r;
      o.line = m.name + ": tau_G " + std::to_string(d.tau_g) + " -> tau_R " + std::to_string(d.tau_r);
      return o;
    });
  });
  return detail::collect(4, "relative elimination: tau_R <= tau_G - 1", rows, 5);
}

namespace detail {

inline Poly random_poly(std::mt19937_64& rng, const RingPtr& R, std::uint32_t max_degree, std::size_t max_terms,
                        bool homogeneous_degree = false) {
  const FieldSpec f = R->field();
  std::uniform_int_distribution<long> coef(f.is_prime_field() ? 1 : -5, f.is_prime_field() ? f.characteristic() - 1 : 5);
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  auto mons = homogeneous_degree ? monomials_of_degree(R->dim(), max_degree) : monomials_up_to(R->dim(), max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  Poly p(R);
  for (std::size_t k = nterms(rng); k-- > 0;) {
    long c = coef(rng);
    if (c == 0) c = 1;
    p.add_term(mons[pick(rng)], Scalar(f, c));
  }
  return p;
}

}  // namespace detail

// 5. Hasse-Schmidt product rule on random instances.
inline CriterionResult check_hasse_product_rule(const VerifyOptions& opt = {}, std::size_t per_field = 200) {
  CriterionResult r{5, "Hasse product rule", true, "", {}};
  std::mt19937_64 rng(opt.seed ^ 5);
  std::size_t total = 0;
  for (std::uint32_t p : {0u, 2u, 3u, 5u}) {
    FieldSpec f = p ? FieldSpec::prime(p) : FieldSpec::rationals();
    for (std::size_t t = 0; t < per_field; ++t) {
      std::size_t d = 1 + rng() % 3;
      std::vector<std::string> vars;
      for (std::size_t i = 0; i < d; ++i) vars.push_back(std::string(1, char('a' + i)));
      RingPtr R = make_ring(f, vars);
      Poly a = detail::random_poly(rng, R, 1 + rng() % 5, 6), b = detail::random_poly(rng, R, 1 + rng() % 5, 6);
      Monomial alpha(d);
      for (auto& x : alpha) x = static_cast<std::uint32_t>(rng() % 4);
      Poly rhs(R);
      for (const auto& a1 : monomials_up_to(d, static_cast<std::uint32_t>(total_degree(alpha)))) {
        if (!divides(a1, alpha)) continue;
        Monomial a2(d);
        for (std::size_t i = 0; i < d; ++i) a2[i] = alpha[i] - a1[i];
        rhs += hasse_derivative(a, a1) * hasse_derivative(b, a2);
      }
      ++total;
      if (!(hasse_derivative(a * b, alpha) == rhs)) {
        r.pass = false;
        r.failures.push_back(f.name() + ": f = " + a.to_string() + ", g = " + b.to_string());
      }
    }
  }
  r.summary = std::to_string(total - r.failures.size()) + "/" + std::to_string(total) + " instances";
  return r;
}

// 6. Delta_Z^(e)(prod (Z - Y_i)) = e_(n-e)(Z - Y); reports which sign holds.
inline CriterionResult check_symmetric_identity_suite() {
  CriterionResult r{6, "symmetric identity for Hasse derivatives of prod (Z - Y_i)", true, "", {}};
  std::vector<std::string> signed_chars;
  for (std::uint32_t p : {0u, 2u, 3u, 5u}) {
    FieldSpec f = p ? FieldSpec::prime(p) : FieldSpec::rationals();
    bool all_signed = true;
    for (std::uint32_t n = 2; n <= 4; ++n) {
      SymmetricIdentity s = check_symmetric_identity(n, f);
      if (!s.unsigned_holds) {
        r.pass = false;
        r.failures.push_back("unsigned form fails for n = " + std::to_string(n) + " over " + f.name());
      }
      all_signed = all_signed && s.signed_holds;
    }
    if (all_signed) signed_chars.push_back(f.name());
  }
  std::string where;
  for (const auto& c : signed_chars) where += (where.empty() ? "" : ",") + c;
  r.summary = "unsigned form holds for n = 2,3,4; factor (-1)^(n-e) holds only over " +
              (where.empty() ? std::string("none") : where);
  return r;
}

// 7. Universal generators: group, translation and scaling behaviour.
inline CriterionResult check_elimination_invariance(const VerifyOptions& opt = {}) {
  CriterionResult r{7, "elimination invariants are translation invariant and weighted", true, "", {}};
  std::size_t gens = 0;
  std::vector<std::vector<std::uint32_t>> shapes{{2}, {3}, {1, 1}, {2, 1}};
  for (std::uint32_t p : {0u, 2u, 3u}) {
    FieldSpec f = p ? FieldSpec::prime(p) : FieldSpec::rationals();
    for (const auto& blocks : shapes) {
      auto u = universal_invariants(blocks, f, opt.bounds.invariant_bound);
      std::string tag = f.name() + " blocks " + std::to_string(blocks[0]) + (blocks.size() > 1 ? "," + std::to_string(blocks[1]) : "");
      if (u->gens.empty()) r.pass = false, r.failures.push_back(tag + ": no generators");
      for (const auto& g : u->gens) {
        ++gens;
        if (!is_block_invariant(g.invariant, blocks) || !is_translation_invariant(g.invariant))
          r.pass = false, r.failures.push_back(tag + ": " + g.invariant.to_string() + " not invariant");
      }
      if (!check_translation_invariance(*u)) r.pass = false, r.failures.push_back(tag + ": Z -> uZ + s check fails");
    }
  }
  r.summary = std::to_string(gens) + " generators over Q, F2, F3";
  return r;
}

namespace detail {

// All points of F_p^d in lexicographic order.
inline std::vector<std::vector<Scalar>> all_points(FieldSpec f, std::size_t d) {
  const long p = f.characteristic();
  std::vector<std::vector<Scalar>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= static_cast<std::size_t>(p);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Scalar> v(d);
    std::size_t c = code;
    for (std::size_t i = d; i-- > 0;) v[i] = Scalar(f, static_cast<long>(c % p)), c /= p;
    out.push_back(std::move(v));
  }
  return out;
}

inline std::size_t point_code(std::span<const Scalar> v, std::uint64_t p) {
  std::size_t c = 0;
  for (const auto& x : v) c = c * p + x.residue();
  return c;
}

// Homogeneous ideal with known vertex structure: random forms in r random
// linear forms, plus occasionally a fully random form.
inline HomIdeal random_ridge_instance(std::mt19937_64& rng, FieldSpec f, std::size_t d) {
  const std::uint32_t p = f.characteristic();
  std::vector<std::string> xs;
  for (std::size_t i = 0; i < d; ++i) xs.push_back("X" + std::to_string(i + 1));
  RingPtr R = make_ring(f, xs);
  std::size_t r = rng() % 10 == 0 ? 0 : 1 + rng() % d;
  std::vector<std::string> us;
  for (std::size_t i = 0; i < r; ++i) us.push_back("U" + std::to_string(i + 1));
  std::vector<Poly> gens;
  if (r > 0) {
    RingPtr U = make_ring(f, us);
    std::map<std::string, Poly> img;
    for (std::size_t i = 0; i < r; ++i) img.emplace(us[i], random_poly(rng, R, 1, d, true));
    std::size_t ng = 1 + rng() % 3;
    for (std::size_t k = 0; k < ng; ++k) {
      // bias toward p-powers so additive generators of higher e appear
      std::uint32_t D = rng() % 3 == 0 ? (rng() % 2 ? p : p * p) : 1 + static_cast<std::uint32_t>(rng() % (p * p));
      Poly g = substitute(random_poly(rng, U, D, 3, true), img, R);
      if (!g.is_zero()) gens.push_back(g);
    }
  }
  if (rng() % 5 == 0) {
    Poly g = random_poly(rng, R, 1 + rng() % 3, 4, true);
    if (!g.is_zero()) gens.push_back(g);
  }
  return make_hom_ideal(R, gens);
}

}  // namespace detail

// 8. Ridge soundness and completeness against pointwise oracles.
inline CriterionResult check_ridge(const VerifyOptions& opt = {}, std::size_t per_prime = 100) {
  CriterionResult r{8, "ridge soundness and completeness", true, "", {}};
  std::size_t total = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    FieldSpec f = FieldSpec::prime(p);
    std::mt19937_64 rng(opt.seed ^ (p * 7919));
    std::vector<HomIdeal> cases;
    for (std::size_t t = 0; t < per_prime; ++t) cases.push_back(detail::random_ridge_instance(rng, f, 1 + rng() % 3));
    auto bad = parallel_map<std::string>(cases.size(), thread_count(opt.threads), [&](std::size_t t) -> std::string {
      const HomIdeal& I = cases[t];
      const std::size_t d = I.ring->dim();
      HomIdeal C = diff_close_hom_ideal(I);
      Ridge rd = ridge(C);
      std::string tag = f.name() + " case " + std::to_string(t) + ": ";
      PolyIdeal closure{C.ring, C.gens};
      std::vector<std::vector<Scalar>> forms;
      for (const auto& c : rd.components) {
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < c.e; ++i) q *= p;
        if (!ideal_contains(closure, c.linear_form.pow(q))) return tag + "additive generator not in the ideal";
        for (const auto& v : rd.L_basis)
          if (!c.linear_form.evaluate(v).is_zero()) return tag + "additive generator nonzero on L";
        std::vector<Scalar> row(d, Scalar::zero(f));
        for (const auto& [m, coef] : c.linear_form.terms())
          for (std::size_t i = 0; i < d; ++i)
            if (m[i]) row[i] = coef;
        forms.push_back(row);
      }
      if (matrix_rank(f, d, forms) != rd.tau) return tag + "tau differs from rank of linear forms";
      // Oracle: zeros of the closure over F_p^d form L(F_p).
      auto pts = detail::all_points(f, d);
      std::vector<char> in_zero(pts.size(), 0);
      std::size_t zeros = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        bool z = std::all_of(C.gens.begin(), C.gens.end(), [&](const Poly& g) { return g.evaluate(pts[i]).is_zero(); });
        in_zero[i] = z;
        zeros += z;
      }
      std::size_t expect = 1;
      for (std::size_t i = 0; i < rd.L_basis.size(); ++i) expect *= p;
      if (zeros != expect) return tag + "zero set has " + std::to_string(zeros) + " points, expected " + std::to_string(expect);
      if (d - rd.L_basis.size() != rd.tau) return tag + "tau != d - dim L";
      for (const auto& v : rd.L_basis)
        if (!in_zero[detail::point_code(v, p)]) return tag + "L-basis vector outside the zero set";
      // tr_v(C) = C for the original forms, and exact invariance of each form.
      for (const auto& g : I.gens) {
        std::vector<char> gz(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) gz[i] = g.evaluate(pts[i]).is_zero();
        for (std::size_t vi = 0; vi < pts.size(); ++vi) {
          if (!in_zero[vi]) continue;
          for (std::size_t wi = 0; wi < pts.size(); ++wi) {
            std::vector<Scalar> s(d);
            for (std::size_t k = 0; k < d; ++k) s[k] = pts[wi][k] + pts[vi][k];
            if (gz[detail::point_code(s, p)] != gz[wi]) return tag + "cone not stable under translation by L";
          }
        }
        for (const auto& v : rd.L_basis)
          if (!(translate(g, v) == g)) return tag + "form not invariant under an L-basis vector";
      }
      return {};
    });
    for (auto& b : bad)
      if (!b.empty()) r.pass = false, r.failures.push_back(b);
    total += cases.size();
  }
  r.summary = std::to_string(total - r.failures.size()) + "/" + std::to_string(total) + " random ideals";
  return r;
}

// 9. Both elimination routes give the same tau_R.
inline CriterionResult check_route_agreement(const std::vector<AlgFile>& suite, const VerifyOptions& opt = {}) {
  auto rows = parallel_map<detail::MemberOutcome>(suite.size(), thread_count(opt.threads), [&](std::size_t i) {
    const AlgFile& m = suite[i];
    return detail::guarded(m, [&] {
      detail::MemberOutcome o;
      std::string why;
      if (!detail::drop_applicable(m.algebra, why)) {
        o.line = m.name + ": skipped (" + why + ")";
        return o;
      }
      o.applicable = true;
      o.line = m.name + ":";
      for (auto sat : {Saturation::absolute, Saturation::relative}) {
        ReesAlgebra g = sat == Saturation::absolute ? diff_saturate(m.algebra) : rel_diff_saturate(m.algebra);
        std::size_t tu = tau(elimination_algebra(g, Route::universal, opt.bounds).algebra);
        std::size_t tz = tau(elimination_algebra(g, Route::z_free, opt.bounds).algebra);
        o.ok = o.ok && tu == tz;
        o.line += " " + to_string(sat) + " " + std::to_string(tu) + "/" + std::to_string(tz);
      }
      return o;
    });
  });
  return detail::collect(9, "universal and z-free routes agree on tau_R", rows, 1);
}

namespace detail {

// Brute-force span of vectors over F_p, as a set; nullopt once it would
// exceed `cap` elements.
inline std::optional<std::unordered_set<std::string>> enumerate_span(const std::vector<std::vector<std::uint8_t>>& rows,
                                                                      std::size_t n, std::uint32_t p, std::size_t cap) {
  std::unordered_set<std::string> span{std::string(n, '\0')};
  for (const auto& r : rows) {
    std::string key(r.begin(), r.end());
    if (span.count(key)) continue;
    if (span.size() * p > cap) return std::nullopt;
    std::vector<std::string> base(span.begin(), span.end());
    for (const auto& s : base)
      for (std::uint32_t c = 1; c < p; ++c) {
        std::string t = s;
        for (std::size_t j = 0; j < n; ++j) t[j] = static_cast<char>((std::uint8_t(t[j]) + c * r[j]) % p);
        span.insert(std::move(t));
      }
  }
  return span;
}

}  // namespace detail

// 10. ideal_contains against brute-force enumeration of the degree slice.
inline CriterionResult check_membership_oracle(const VerifyOptions& opt = {}, std::size_t per_field = 150,
                                               std::size_t cap = 531441) {
  CriterionResult r{10, "ideal membership matches a brute-force oracle", true, "", {}};
  std::size_t queries = 0, resampled = 0, members = 0;
  for (std::uint32_t p : {2u, 3u}) {
    FieldSpec f = FieldSpec::prime(p);
    std::mt19937_64 rng(opt.seed ^ (p * 104729));
    for (std::size_t t = 0; t < per_field;) {
      std::size_t d = 1 + rng() % 3;
      std::vector<std::string> vars;
      for (std::size_t i = 0; i < d; ++i) vars.push_back(std::string(1, char('x' + i)));
      RingPtr R = make_ring(f, vars);
      PolyIdeal I{R, {}};
      for (std::size_t k = 1 + rng() % 3; k-- > 0;) {
        Poly g = detail::random_poly(rng, R, 1 + static_cast<std::uint32_t>(rng() % 4), 3, true);
        if (!g.is_zero()) I.gens.push_back(g);
      }
      auto D = static_cast<std::uint32_t>(1 + rng() % 4);
      MonomialIndex cols(monomials_of_degree(d, D));
      std::vector<std::vector<std::uint8_t>> rows;
      std::vector<Poly> spanning;
      for (const auto& g : I.gens) {
        if (g.degree() > D) continue;
        for (const auto& m : monomials_of_degree(d, static_cast<std::uint32_t>(D - g.degree()))) {
          Poly mg = g.monomial_multiple(m);
          spanning.push_back(mg);
          std::vector<std::uint8_t> v(cols.size(), 0);
          for (const auto& [mm, c] : mg.terms()) v[*cols.find(mm)] = static_cast<std::uint8_t>(c.residue());
          rows.push_back(std::move(v));
        }
      }
      auto span = detail::enumerate_span(rows, cols.size(), p, cap);
      if (!span) {
        ++resampled;
        continue;
      }
      ++t;
      std::vector<Poly> probes;
      for (int k = 0; k < 3; ++k) probes.push_back(detail::random_poly(rng, R, D, 4, true));
      if (!spanning.empty()) {
        Poly in(R);
        for (const auto& s : spanning)
          if (rng() % 2) in += s.scaled(Scalar(f, static_cast<long>(1 + rng() % (p - 1))));
        probes.push_back(in);
        probes.push_back(in + detail::random_poly(rng, R, D, 1, true));
      }
      for (const auto& h : probes) {
        std::string key(cols.size(), '\0');
        for (const auto& [mm, c] : h.terms()) key[*cols.find(mm)] = static_cast<char>(c.residue());
        bool oracle = span->count(key) > 0;
        bool got = ideal_contains(I, h);
        ++queries;
        members += oracle;
        if (oracle != got) {
          r.pass = false;
          r.failures.push_back(f.name() + ": " + h.to_string() + " oracle " + (oracle ? "in" : "out"));
        }
      }
    }
  }
  r.summary = std::to_string(queries) + " queries (" + std::to_string(members) + " members), " +
              std::to_string(resampled) + " oversized instances resampled";
  return r;
}

inline std::vector<CriterionResult> run_acceptance(const std::vector<AlgFile>& suite, const VerifyOptions& opt = {}) {
  std::vector<CriterionResult> out;
  out.push_back(check_tau_drop(suite, opt));
  out.push_back(check_integral_invariance(suite, opt));
  out.push_back(check_saturation(suite, opt));
  out.push_back(check_relative_drop(suite, opt));
  out.push_back(check_hasse_product_rule(opt));
  out.push_back(check_symmetric_identity_suite());
  out.push_back(check_elimination_invariance(opt));
  out.push_back(check_ridge(opt));
  out.push_back(check_route_agreement(suite, opt));
  out.push_back(check_membership_oracle(opt));
  return out;
}

inline std::string format_result(const CriterionResult& r) {
  return "criterion " + std::to_string(r.id) + " " + (r.pass ? "PASS" : "FAIL") + " " + r.title + ": " + r.summary;
}

}  // namespace reestau
