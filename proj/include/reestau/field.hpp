// Coefficient fields: the rationals and prime fields F_p.
//
// Both are perfect, so p-th roots of coefficients always exist; on F_p the
// Frobenius is the identity, which is what the ridge extraction relies on.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "reestau/errors.hpp"

namespace reestau {

class FieldSpec {
 public:
  FieldSpec() = default;  // Q

  static FieldSpec rationals() noexcept { return FieldSpec(); }

  static FieldSpec prime(std::uint32_t p) {
    if (p < 2 || p > (1u << 30)) throw PreconditionError("field characteristic out of range: " + std::to_string(p));
    for (std::uint32_t q = 2; static_cast<std::uint64_t>(q) * q <= p; ++q)
      if (p % q == 0) throw PreconditionError("field characteristic is not prime: " + std::to_string(p));
    FieldSpec f;
    f.p_ = p;
    return f;
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime_field() const noexcept { return p_ != 0; }
  std::string name() const { return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_); }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  static FieldSpec trusted(std::uint32_t p) noexcept {
    FieldSpec f;
    f.p_ = p;
    return f;
  }

  std::uint32_t p_ = 0;
};

namespace detail {

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

inline std::uint64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace detail

// An exact field element. Elements of F_p are stored as least nonnegative
// residues; rationals as canonical GMP fractions.
class Scalar {
 public:
  Scalar() = default;  // 0 in Q

  Scalar(FieldSpec f, long v) : p_(f.characteristic()) {
    if (p_) {
      long r = v % static_cast<long>(p_);
      if (r < 0) r += p_;
      v_ = static_cast<std::uint64_t>(r);
    } else {
      v_ = mpq_class(v);
    }
  }

  Scalar(FieldSpec f, const mpz_class& v) : p_(f.characteristic()) {
    if (p_) v_ = detail::reduce_mpz(v, p_);
    else v_ = mpq_class(v);
  }

  Scalar(FieldSpec f, const mpq_class& v) : p_(f.characteristic()) {
    if (p_) {
      std::uint64_t den = detail::reduce_mpz(v.get_den(), p_);
      if (den == 0) throw PreconditionError("denominator vanishes in " + f.name());
      v_ = detail::reduce_mpz(v.get_num(), p_) * detail::mod_inv(den, p_) % p_;
    } else {
      mpq_class c(v);
      c.canonicalize();
      v_ = std::move(c);
    }
  }

  static Scalar zero(FieldSpec f) { return Scalar(f, 0L); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1L); }

  FieldSpec field() const { return FieldSpec::trusted(p_); }
  std::uint32_t characteristic() const noexcept { return p_; }

  bool is_zero() const {
    if (p_) return std::get<std::uint64_t>(v_) == 0;
    return sgn(std::get<mpq_class>(v_)) == 0;
  }
  bool is_one() const {
    if (p_) return std::get<std::uint64_t>(v_) == 1;
    return std::get<mpq_class>(v_) == 1;
  }

  // Residue in [0, p); only meaningful on prime fields.
  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }

  // True for negative rationals; never for F_p.
  bool is_negative() const { return p_ == 0 && sgn(std::get<mpq_class>(v_)) < 0; }

  Scalar operator-() const {
    Scalar r = *this;
    if (p_) {
      auto& x = std::get<std::uint64_t>(r.v_);
      x = x ? p_ - x : 0;
    } else {
      auto& q = std::get<mpq_class>(r.v_);
      q = -q;
    }
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    if (p_) {
      auto& x = std::get<std::uint64_t>(v_);
      x += std::get<std::uint64_t>(o.v_);
      if (x >= p_) x -= p_;
    } else {
      std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (p_) {
      auto& x = std::get<std::uint64_t>(v_);
      x = x * std::get<std::uint64_t>(o.v_) % p_;
    } else {
      std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    }
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const {
    if (is_zero()) throw PreconditionError("division by zero");
    Scalar r = *this;
    if (p_) r.v_ = detail::mod_inv(std::get<std::uint64_t>(v_), p_);
    else r.v_ = mpq_class(1) / std::get<mpq_class>(v_);
    return r;
  }

  Scalar pow(std::uint64_t e) const {
    if (p_) {
      Scalar r = *this;
      r.v_ = detail::mod_pow(std::get<std::uint64_t>(v_), e, p_);
      return r;
    }
    Scalar r = one(FieldSpec::rationals()), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return false;
    if (a.p_) return std::get<std::uint64_t>(a.v_) == std::get<std::uint64_t>(b.v_);
    return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
  }

  // Reduced fraction ("-3/2") or least nonnegative residue.
  std::string to_string() const {
    if (p_) return std::to_string(std::get<std::uint64_t>(v_));
    return std::get<mpq_class>(v_).get_str();
  }

 private:
  void check(const Scalar& o) const {
    if (o.p_ != p_) throw MismatchError("scalars from different fields");
  }

  std::uint32_t p_ = 0;
  std::variant<std::uint64_t, mpq_class> v_ = mpq_class(0);
};

// binom(n, k) as a field element. Over F_p this goes through Lucas' theorem
// so that no intermediate factorial is ever divided by a multiple of p.
inline Scalar binomial(FieldSpec f, std::uint64_t n, std::uint64_t k) {
  if (k > n) return Scalar::zero(f);
  const std::uint64_t p = f.characteristic();
  if (p == 0) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(f, b);
  }
  std::uint64_t acc = 1;
  while (n || k) {
    std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return Scalar::zero(f);
    kd = std::min(kd, nd - kd);
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < kd; ++i) {
      num = num * ((nd - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    acc = acc * num % p * detail::mod_inv(den, p) % p;
    n /= p;
    k /= p;
  }
  return Scalar(f, static_cast<long>(acc));
}

}  // namespace reestau
