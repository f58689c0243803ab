// Sparse multivariate polynomials over Q or F_p.
//
// A polynomial is a map from dense exponent vectors to nonzero coefficients,
// kept in graded-lex descending order, so equal polynomials have equal maps.
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reestau/errors.hpp"
#include "reestau/field.hpp"

namespace reestau {

// Per-variable exponents are capped at 2^31 - 1.
using Monomial = std::vector<std::uint32_t>;
inline constexpr std::uint64_t kMaxExponent = std::numeric_limits<std::int32_t>::max();

inline std::uint64_t total_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t e = std::uint64_t(a[i]) + b[i];
    if (e > kMaxExponent) throw PreconditionError("exponent exceeds the per-variable degree cap");
    r[i] = static_cast<std::uint32_t>(e);
  }
  return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// All exponent vectors of total degree `degree` in `nvars` variables, in
// graded-lex descending order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (nvars == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    if (i + 1 == nvars) {
      cur[i] = left;
      out.push_back(cur);
      cur[i] = 0;
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(0, degree);
  return out;
}

inline std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t max_degree) {
  std::vector<Monomial> out;
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    auto layer = monomials_of_degree(nvars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// Order of vanishing at the origin; the zero polynomial has order infinity.
class Order {
 public:
  constexpr Order(std::uint64_t v) : v_(v) {}  // NOLINT: implicit from integers
  static constexpr Order infinity() { return Order(kInf); }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr std::uint64_t value() const { return v_; }
  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

  friend constexpr auto operator<=>(Order, Order) = default;

 private:
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v_;
};

class Ring {
 public:
  Ring(FieldSpec field, std::vector<std::string> vars, std::optional<std::size_t> z_index = std::nullopt)
      : field_(field), vars_(std::move(vars)), z_index_(z_index) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].empty()) throw PreconditionError("empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (vars_[i] == vars_[j]) throw PreconditionError("duplicate variable name: " + vars_[i]);
    }
    if (z_index_ && *z_index_ >= vars_.size()) throw PreconditionError("distinguished variable index out of range");
  }

  FieldSpec field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t dim() const { return vars_.size(); }
  std::optional<std::size_t> z_index() const { return z_index_; }
  const std::string& var(std::size_t i) const { return vars_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  FieldSpec field_;
  std::vector<std::string> vars_;
  std::optional<std::size_t> z_index_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(FieldSpec field, std::vector<std::string> vars,
                         std::optional<std::string> z_var = std::nullopt) {
  std::optional<std::size_t> zi;
  if (z_var) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == *z_var) zi = i;
    if (!zi) throw PreconditionError("distinguished variable not declared: " + *z_var);
  }
  return std::make_shared<const Ring>(field, std::move(vars), zi);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

// The ring S obtained by forgetting the distinguished variable Z.
inline RingPtr base_ring(const RingPtr& r) {
  if (!r->z_index()) throw PreconditionError("no distinguished variable declared");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < r->dim(); ++i)
    if (i != *r->z_index()) vars.push_back(r->var(i));
  return make_ring(r->field(), std::move(vars));
}

class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexGreater>;

  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Scalar& c) {
    Poly p(ring);
    p.add_term(Monomial(p.ring_->dim(), 0), c);
    return p;
  }
  static Poly constant(RingPtr ring, long c) {
    FieldSpec f = ring->field();
    return constant(std::move(ring), Scalar(f, c));
  }
  static Poly variable(RingPtr ring, std::size_t i) {
    Monomial m(ring->dim(), 0);
    m.at(i) = 1;
    FieldSpec f = ring->field();
    return term(std::move(ring), std::move(m), Scalar::one(f));
  }
  static Poly term(RingPtr ring, Monomial m, const Scalar& c) {
    Poly p(std::move(ring));
    p.add_term(m, c);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  FieldSpec field() const { return ring_->field(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field()) : it->second;
  }

  // Leading (graded-lex largest) term's coefficient; requires nonzero.
  const Scalar& leading_coefficient() const {
    if (terms_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
    return terms_.begin()->second;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0); }

  // Largest total degree; 0 for the zero polynomial.
  std::uint64_t degree() const { return terms_.empty() ? 0 : total_degree(terms_.begin()->first); }

  Order order() const {
    if (terms_.empty()) return Order::infinity();
    return Order(total_degree(terms_.rbegin()->first));
  }

  bool is_homogeneous() const { return terms_.empty() || degree() == order().value(); }

  Poly homogeneous_part(std::uint64_t n) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_)
      if (total_degree(m) == n) r.terms_.emplace(m, c);
    return r;
  }

  std::uint64_t degree_in(std::size_t var) const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max<std::uint64_t>(d, m[var]);
    return d;
  }

  // Coefficient of var^k, still written in the full ring (var does not occur).
  Poly coefficient_in(std::size_t var, std::uint64_t k) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
      if (m[var] != k) continue;
      Monomial mm = m;
      mm[var] = 0;
      r.terms_.emplace(std::move(mm), c);
    }
    return r;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (m.size() != ring_->dim()) throw MismatchError("exponent vector length does not match ring");
    if (c.is_zero()) return;
    if (c.characteristic() != ring_->field().characteristic()) throw MismatchError("coefficient from a different field");
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Scalar& s) const {
    Poly r(ring_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }

  Poly monomial_multiple(const Monomial& m) const {
    Poly r(ring_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace(monomial_product(mm, m), c);
    return r;
  }

  Poly pow(std::uint64_t k) const {
    Poly r = constant(ring_, 1L), b = *this;
    while (k) {
      if (k & 1) r *= b;
      k >>= 1;
      if (k) b *= b;
    }
    return r;
  }

  // Scaled so that the leading coefficient is 1; zero stays zero.
  Poly normalized() const { return is_zero() ? *this : scaled(leading_coefficient().inverse()); }

  Scalar evaluate(std::span<const Scalar> point) const {
    if (point.size() != ring_->dim()) throw MismatchError("point dimension does not match ring");
    Scalar acc = Scalar::zero(field());
    for (const auto& [m, c] : terms_) {
      Scalar t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) t *= point[i].pow(m[i]);
      acc += t;
    }
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void check(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) throw MismatchError("polynomials from different rings");
  }

  RingPtr ring_;
  Terms terms_;
};

inline std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += ring.var(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

inline std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c.is_negative();
    Scalar mag = neg ? -c : c;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_to_string(*ring_, m);
    if (mono.empty()) out += mag.to_string();
    else if (mag.is_one()) out += mono;
    else out += mag.to_string() + '*' + mono;
  }
  return out;
}

// Degree-n initial form of f at the origin: the degree-n part when
// ord(f) = n, zero when ord(f) > n. An order below n breaks the weight
// contract of a Rees generator at a singular point.
inline Poly initial_form(const Poly& f, std::uint64_t n) {
  Order o = f.order();
  if (o > Order(n)) return Poly(f.ring());
  if (o < Order(n))
    throw PreconditionError("order " + o.to_string() + " is below weight " + std::to_string(n) + " for " + f.to_string());
  return f.homogeneous_part(n);
}

// Hasse-Schmidt derivative: the coefficient of T^alpha in f(x + T).
inline Poly hasse_derivative(const Poly& f, const Monomial& alpha) {
  if (alpha.size() != f.ring()->dim()) throw MismatchError("multi-index length does not match ring");
  const FieldSpec field = f.field();
  Poly r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (!divides(alpha, m)) continue;
    Scalar coef = c;
    Monomial rest(m.size());
    for (std::size_t i = 0; i < m.size() && !coef.is_zero(); ++i) {
      if (alpha[i]) coef *= binomial(field, m[i], alpha[i]);
      rest[i] = m[i] - alpha[i];
    }
    if (!coef.is_zero()) r.add_term(rest, coef);
  }
  return r;
}

// Unit multi-index scaled by k along variable `var`.
inline Monomial direction(std::size_t nvars, std::size_t var, std::uint32_t k) {
  Monomial a(nvars, 0);
  a.at(var) = k;
  return a;
}

// Replaces each variable of f's ring by a polynomial in `target`. Variables
// absent from `images` map to the same-named variable of the target ring.
inline Poly substitute(const Poly& f, const std::map<std::string, Poly>& images, const RingPtr& target) {
  const Ring& src = *f.ring();
  if (!(src.field() == target->field())) throw MismatchError("substitution changes the coefficient field");
  std::vector<std::optional<Poly>> img(src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) {
    auto it = images.find(src.var(i));
    if (it != images.end()) {
      if (!same_ring(it->second.ring(), target)) throw MismatchError("image of " + src.var(i) + " is not in the target ring");
      img[i] = it->second;
    } else if (auto j = target->index_of(src.var(i))) {
      img[i] = Poly::variable(target, *j);
    }
  }
  std::vector<std::vector<Poly>> powers(src.dim());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, 1L));
    while (cache.size() <= e) cache.push_back(cache.back() * *img[i]);
    return cache[e];
  };
  Poly r(target);
  for (const auto& [m, c] : f.terms()) {
    Poly t = Poly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!img[i]) throw MismatchError("no image for variable " + src.var(i) + " in target ring");
      t *= power(i, m[i]);
    }
    r += t;
  }
  return r;
}

// f(x + point): moves `point` to the origin.
inline Poly translate(const Poly& f, std::span<const Scalar> point) {
  const RingPtr& R = f.ring();
  if (point.size() != R->dim()) throw MismatchError("point dimension does not match ring");
  std::map<std::string, Poly> images;
  for (std::size_t i = 0; i < R->dim(); ++i)
    if (!point[i].is_zero()) images.emplace(R->var(i), Poly::variable(R, i) + Poly::constant(R, point[i]));
  if (images.empty()) return f;
  return substitute(f, images, R);
}

// Linear form l with l^(p^e) = g for an additive form g = sum c_i X_i^(p^e).
// On F_p every coefficient is its own p-th root.
inline Poly frobenius_root(const Poly& g, std::uint32_t e) {
  const std::uint32_t p = g.field().characteristic();
  if (e > 0 && p == 0) throw PreconditionError("Frobenius root with e > 0 in characteristic 0");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxExponent) throw PreconditionError("p^e exceeds the degree cap");
  }
  Poly root(g.ring());
  for (const auto& [m, c] : g.terms()) {
    std::size_t hits = 0, at = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) ++hits, at = i;
    if (hits != 1 || m[at] != q) throw PreconditionError("not an additive form of degree p^e: " + g.to_string());
    root.add_term(direction(m.size(), at, 1), c);
  }
  if (!(root.pow(q) == g)) throw PreconditionError("Frobenius root does not re-power to the input");
  return root;
}

}  // namespace reestau
