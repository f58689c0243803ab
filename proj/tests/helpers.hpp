#pragma once

#include <gtest/gtest.h>

#include "reestau.hpp"

namespace reestau::testing {

inline RingPtr ring(FieldSpec f, std::vector<std::string> vars, std::optional<std::string> z = std::nullopt) {
  return make_ring(f, std::move(vars), std::move(z));
}

inline RingPtr Q(std::vector<std::string> vars, std::optional<std::string> z = std::nullopt) {
  return ring(FieldSpec::rationals(), std::move(vars), std::move(z));
}

inline RingPtr F(std::uint32_t p, std::vector<std::string> vars, std::optional<std::string> z = std::nullopt) {
  return ring(FieldSpec::prime(p), std::move(vars), std::move(z));
}

inline Poly P(const std::string& text, const RingPtr& R) { return parse_poly(text, R); }

inline ReesAlgebra algebra(const RingPtr& R, std::vector<std::pair<std::string, std::uint32_t>> gens) {
  ReesAlgebra g(R);
  for (auto& [t, w] : gens) g.add(P(t, R), w);
  return g;
}

inline std::vector<Scalar> point(const RingPtr& R, std::vector<long> xs) {
  std::vector<Scalar> v;
  for (long x : xs) v.emplace_back(R->field(), x);
  return v;
}

inline std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace reestau::testing
