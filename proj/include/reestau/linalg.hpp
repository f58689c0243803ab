// Exact linear algebra over the coefficient field.
//
// Everything reduces to one primitive: a subspace of k^n kept in reduced row
// echelon form whose pivots are first nonzero columns. Ordering the columns
// so that "unwanted" coordinates come first turns the same routine into an
// intersection with a coordinate subspace: the basis rows whose pivot falls
// in the trailing block span exactly that intersection.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "reestau/polynomial.hpp"

namespace reestau {

namespace detail {

struct ModP {
  using E = std::uint32_t;
  std::uint64_t p;
  E from(const Scalar& s) const { return static_cast<E>(s.residue()); }
  Scalar to(E e, FieldSpec f) const { return Scalar(f, static_cast<long>(e)); }
  static bool zero(E e) { return e == 0; }
  E inv(E a) const { return static_cast<E>(mod_inv(a, p)); }
  E mul(E a, E b) const { return static_cast<E>(std::uint64_t(a) * b % p); }
  // a - f*b
  E axpy(E a, E f, E b) const { return static_cast<E>((a + p - std::uint64_t(f) * b % p) % p); }
};

struct Rat {
  using E = mpq_class;
  E from(const Scalar& s) const { return s.rational(); }
  Scalar to(const E& e, FieldSpec f) const { return Scalar(f, e); }
  static bool zero(const E& e) { return sgn(e) == 0; }
  E inv(const E& a) const { return 1 / a; }
  E mul(const E& a, const E& b) const { return a * b; }
  E axpy(const E& a, const E& f, const E& b) const { return a - f * b; }
};

template <class K>
class Echelon {
 public:
  using E = typename K::E;

  Echelon(K k, std::size_t ncols) : k_(std::move(k)), n_(ncols) {}

  void reduce(std::vector<E>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::size_t c = piv_[r];
      if (K::zero(v[c])) continue;
      E f = v[c];
      const auto& row = rows_[r];
      for (std::size_t j = c; j < n_; ++j)
        if (!K::zero(row[j])) v[j] = k_.axpy(v[j], f, row[j]);
    }
  }

  bool insert(std::vector<E> v) {
    if (rows_.size() == n_) return false;
    reduce(v);
    std::size_t j = 0;
    while (j < n_ && K::zero(v[j])) ++j;
    if (j == n_) return false;
    E s = k_.inv(v[j]);
    for (std::size_t t = j; t < n_; ++t)
      if (!K::zero(v[t])) v[t] = k_.mul(v[t], s);
    for (auto& row : rows_) {
      if (K::zero(row[j])) continue;
      E f = row[j];
      for (std::size_t t = j; t < n_; ++t)
        if (!K::zero(v[t])) row[t] = k_.axpy(row[t], f, v[t]);
    }
    auto at = std::lower_bound(piv_.begin(), piv_.end(), j) - piv_.begin();
    piv_.insert(piv_.begin() + at, j);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
  }

  bool contains(std::vector<E> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const E& e) { return K::zero(e); });
  }

  const K& field_ops() const { return k_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<E>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }

 private:
  K k_;
  std::size_t n_;
  std::vector<std::vector<E>> rows_;
  std::vector<std::size_t> piv_;
};

}  // namespace detail

// A subspace of k^n in reduced row echelon form.
class RowSpace {
 private:
  template <class Ech>
  static std::vector<typename Ech::E> lift(const Ech& e, std::span<const Scalar> row) {
    std::vector<typename Ech::E> v;
    v.reserve(row.size());
    for (const auto& s : row) v.push_back(e.field_ops().from(s));
    return v;
  }

 public:
  RowSpace(FieldSpec f, std::size_t ncols) : field_(f), n_(ncols), impl_(make(f, ncols)) {}

  FieldSpec field() const { return field_; }
  std::size_t ncols() const { return n_; }

  std::size_t rank() const {
    return std::visit([](const auto& e) { return e.rank(); }, impl_);
  }

  bool full() const { return rank() == n_; }

  // Returns true when the row was independent of the current basis.
  bool insert(std::span<const Scalar> row) {
    check(row);
    return std::visit([&](auto& e) { return e.insert(lift(e, row)); }, impl_);
  }

  bool contains(std::span<const Scalar> row) const {
    check(row);
    return std::visit([&](const auto& e) { return e.contains(lift(e, row)); }, impl_);
  }

  std::vector<std::size_t> pivots() const {
    return std::visit([](const auto& e) { return e.pivots(); }, impl_);
  }

  std::vector<std::vector<Scalar>> basis() const {
    return std::visit(
        [&](const auto& e) {
          std::vector<std::vector<Scalar>> out;
          for (const auto& row : e.rows()) {
            std::vector<Scalar> r;
            r.reserve(n_);
            for (const auto& x : row) r.push_back(e.field_ops().to(x, field_));
            out.push_back(std::move(r));
          }
          return out;
        },
        impl_);
  }

  // Reduced form of `row` modulo the subspace (zero iff contained).
  std::vector<Scalar> reduce(std::span<const Scalar> row) const {
    check(row);
    return std::visit(
        [&](const auto& e) {
          auto v = lift(e, row);
          e.reduce(v);
          std::vector<Scalar> out;
          for (const auto& x : v) out.push_back(e.field_ops().to(x, field_));
          return out;
        },
        impl_);
  }

 private:
  using Impl = std::variant<detail::Echelon<detail::ModP>, detail::Echelon<detail::Rat>>;

  static Impl make(FieldSpec f, std::size_t n) {
    if (f.is_prime_field()) return detail::Echelon<detail::ModP>(detail::ModP{f.characteristic()}, n);
    return detail::Echelon<detail::Rat>(detail::Rat{}, n);
  }

  void check(std::span<const Scalar> row) const {
    if (row.size() != n_) throw MismatchError("row length does not match the ambient dimension");
  }

  FieldSpec field_;
  std::size_t n_;
  Impl impl_;
};

// Basis of { v : row . v = 0 for every row }.
inline std::vector<std::vector<Scalar>> nullspace(FieldSpec f, std::size_t ncols,
                                                  const std::vector<std::vector<Scalar>>& rows) {
  RowSpace rs(f, ncols);
  for (const auto& r : rows) rs.insert(r);
  auto basis = rs.basis();
  auto piv = rs.pivots();
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(ncols, Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t r = 0; r < basis.size(); ++r) v[piv[r]] = -basis[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

// Some c with sum_j c_j * columns[j] = target, or nullopt.
inline std::optional<std::vector<Scalar>> solve_linear(FieldSpec f, const std::vector<std::vector<Scalar>>& columns,
                                                       const std::vector<Scalar>& target) {
  const std::size_t k = columns.size(), m = target.size();
  RowSpace rs(f, k + 1);
  std::vector<Scalar> row(k + 1, Scalar::zero(f));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) row[j] = columns[j].at(i);
    row[k] = target[i];
    rs.insert(row);
  }
  auto basis = rs.basis();
  auto piv = rs.pivots();
  std::vector<Scalar> c(k, Scalar::zero(f));
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (piv[r] == k) return std::nullopt;
    c[piv[r]] = basis[r][k];
  }
  return c;
}

inline std::size_t matrix_rank(FieldSpec f, std::size_t ncols, const std::vector<std::vector<Scalar>>& rows) {
  RowSpace rs(f, ncols);
  for (const auto& r : rows) rs.insert(r);
  return rs.rank();
}

// Column coordinates for a fixed list of monomials.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Monomial> cols) : cols_(std::move(cols)) {
    for (std::size_t i = 0; i < cols_.size(); ++i) at_.emplace(cols_[i], i);
  }

  std::size_t size() const { return cols_.size(); }
  const Monomial& operator[](std::size_t i) const { return cols_[i]; }
  const std::vector<Monomial>& monomials() const { return cols_; }

  std::optional<std::size_t> find(const Monomial& m) const {
    auto it = at_.find(m);
    if (it == at_.end()) return std::nullopt;
    return it->second;
  }

  // Dense coordinates of p; nullopt if p has a monomial outside the index.
  std::optional<std::vector<Scalar>> coords(const Poly& p) const {
    std::vector<Scalar> v(cols_.size(), Scalar::zero(p.field()));
    for (const auto& [m, c] : p.terms()) {
      auto i = find(m);
      if (!i) return std::nullopt;
      v[*i] = c;
    }
    return v;
  }

  Poly to_poly(const RingPtr& ring, std::span<const Scalar> v) const {
    Poly p(ring);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) p.add_term(cols_[i], v[i]);
    return p;
  }

 private:
  std::vector<Monomial> cols_;
  std::map<Monomial, std::size_t> at_;
};

}  // namespace reestau
