#include "helpers.hpp"

using namespace reestau;
using namespace reestau::testing;

namespace {
FieldSpec q() { return FieldSpec::rationals(); }
FieldSpec f(std::uint32_t p) { return FieldSpec::prime(p); }

std::vector<std::string> rewritten(const UniversalElimGens& u) {
  std::vector<std::string> out;
  for (const auto& g : u.gens) out.push_back(g.rewritten.to_string());
  return out;
}
}  // namespace

TEST(Universal, QuadraticOverRationals) {
  auto u = universal_invariants(2, q());
  ASSERT_EQ(u->gens.size(), 1u);
  EXPECT_EQ(u->gens[0].degree, 2u);
  EXPECT_EQ(u->gens[0].invariant, P("Y1^2 - 2*Y1*Y2 + Y2^2", u->y_ring));
  EXPECT_EQ(u->gens[0].rewritten, P("s1^2 - 4*s2", u->s_ring));
}

TEST(Universal, QuadraticInCharacteristicTwo) {
  auto u = universal_invariants(2, f(2));
  ASSERT_EQ(u->gens.size(), 1u);
  EXPECT_EQ(u->gens[0].degree, 1u);
  EXPECT_EQ(u->gens[0].rewritten, P("s1", u->s_ring));
}

TEST(Universal, CubicOverRationals) {
  // sum_{i<j} (Y_i - Y_j)^2 = 2 s1^2 - 6 s2 and prod (3 Y_i - s1) = 2 s1^3 - 9 s1 s2 + 27 s3.
  auto u = universal_invariants(3, q());
  EXPECT_EQ(rewritten(*u), (std::vector<std::string>{"s1^2 - 3*s2", "s1^3 - 9/2*s1*s2 + 27/2*s3"}));
}

TEST(Universal, TrivialGroupPair) {
  for (FieldSpec k : {q(), f(2), f(3)}) {
    auto u = universal_invariants(std::vector<std::uint32_t>{1, 1}, k);
    ASSERT_EQ(u->gens.size(), 1u);
    EXPECT_EQ(u->gens[0].degree, 1u);
    EXPECT_EQ(u->gens[0].invariant.normalized(), P("Y1 - Y2", u->y_ring));
  }
}

TEST(Universal, Limits) {
  EXPECT_THROW(universal_invariants(5, q()), PreconditionError);
  EXPECT_THROW(universal_invariants(0, q()), PreconditionError);
}

TEST(Universal, CachedTablesAreShared) {
  EXPECT_EQ(universal_invariants(3, f(3)).get(), universal_invariants(3, f(3)).get());
}

TEST(Universal, GeneratorsAreInvariant) {
  for (FieldSpec k : {q(), f(2), f(3), f(5)})
    for (std::uint32_t n = 2; n <= 4; ++n) {
      auto u = universal_invariants(n, k);
      for (const auto& g : u->gens) {
        EXPECT_TRUE(is_block_invariant(g.invariant, {n})) << k.name() << " " << n;
        EXPECT_TRUE(is_translation_invariant(g.invariant)) << k.name() << " " << n;
      }
      EXPECT_TRUE(check_translation_invariance(*u)) << k.name() << " " << n;
    }
}

TEST(Universal, ZeroIsInvariant) {
  auto u = universal_invariants(2, q());
  EXPECT_TRUE(is_translation_invariant(Poly(u->y_ring)));
  EXPECT_TRUE(is_block_invariant(Poly(u->y_ring), {2}));
}

TEST(Universal, RewriteRejectsNonSymmetric) {
  auto u = universal_invariants(2, q());
  EXPECT_THROW(rewrite_in_symmetrics(P("Y1", u->y_ring), {2}, u->s_ring), PreconditionError);
}

TEST(Specialize, Cusp) {
  auto R = Q({"x"});
  auto u = universal_invariants(2, q());
  Specialized s = specialize(*u, {Poly(R), P("-x^3", R)}, R);
  ASSERT_EQ(s.elems.size(), 1u);
  EXPECT_EQ(to_string(s.elems[0]), "4*x^3 W^2");
}

TEST(Specialize, ZeroCoefficients) {
  auto R = Q({"x"});
  auto u = universal_invariants(3, q());
  Specialized s = specialize(*u, {Poly(R), Poly(R), Poly(R)}, R);
  EXPECT_TRUE(s.elems.empty());
}

TEST(Identity, SymmetricFunctions) {
  for (FieldSpec k : {q(), f(2), f(3), f(5)})
    for (std::uint32_t n = 2; n <= 4; ++n) {
      auto r = check_symmetric_identity(n, k);
      EXPECT_TRUE(r.unsigned_holds) << k.name() << " " << n;
      EXPECT_EQ(r.signed_holds, k.characteristic() == 2) << k.name() << " " << n;
    }
}

TEST(Elimination, CuspUniversal) {
  auto R = Q({"x", "z"}, "z");
  ReesAlgebra g = rel_diff_saturate(algebra(R, {{"z^2 - x^3", 2}}));
  EliminationAlgebra e = elimination_algebra(g, Route::universal);
  std::vector<std::string> gens;
  for (const auto& x : e.algebra.gens()) gens.push_back(to_string(x));
  EXPECT_EQ(gens, (std::vector<std::string>{"4*x^3 W^2"}));
  EXPECT_EQ(tau(e.algebra), 0u);
}

TEST(Elimination, CuspZFreeAgrees) {
  auto R = Q({"x", "z"}, "z");
  ReesAlgebra g = rel_diff_saturate(algebra(R, {{"z^2 - x^3", 2}}));
  ElimBounds b;
  b.weight_bound = 4;
  EXPECT_EQ(tau(elimination_algebra(g, Route::z_free, b).algebra), 0u);
}

TEST(Elimination, CharacteristicTwoLinearGenerator) {
  auto R = F(2, {"x", "y", "z"}, "z");
  ReesAlgebra g = rel_diff_saturate(algebra(R, {{"z^2 + x*z + y^3", 2}}));
  EliminationAlgebra e = elimination_algebra(g, Route::universal);
  std::vector<std::string> gens;
  for (const auto& x : e.algebra.gens()) gens.push_back(to_string(x));
  EXPECT_NE(std::find(gens.begin(), gens.end(), "x W^1"), gens.end());
}

TEST(Elimination, Preconditions) {
  auto R = Q({"x", "z"}, "z");
  ReesAlgebra g = algebra(R, {{"z^2 - x^3", 2}});
  EXPECT_THROW(elimination_algebra(g, Route::universal), PreconditionError);
  EXPECT_THROW(elimination_algebra(diff_saturate(algebra(Q({"x"}), {{"x^2", 2}})), Route::universal),
               PreconditionError);
}

TEST(TauDrop, WorkedTriples) {
  struct Case {
    FieldSpec k;
    std::vector<std::string> vars;
    const char* poly;
    std::size_t tg, tr;
  };
  for (const auto& c : std::vector<Case>{{q(), {"x", "z"}, "z^2 - x^3", 1, 0},
                                         {q(), {"x", "z"}, "z^2 + x*z + x^2", 2, 1},
                                         {f(3), {"x", "z"}, "z^2 + x*z + x^2", 1, 0},
                                         {f(2), {"x", "y", "z"}, "z^2 + x*z + y^3", 2, 1}}) {
    auto R = make_ring(c.k, c.vars, "z");
    for (Route route : {Route::universal, Route::z_free}) {
      TauDrop d = tau_drop_check(diff_saturate(algebra(R, {{c.poly, 2}})), DropMode::absolute, route);
      EXPECT_EQ(d.tau_g, c.tg) << c.poly << " " << c.k.name();
      EXPECT_EQ(d.tau_r, c.tr) << c.poly << " " << c.k.name();
      EXPECT_TRUE(d.holds);
    }
  }
}

TEST(TauDrop, RejectsWrongSaturation) {
  auto R = Q({"x", "z"}, "z");
  ReesAlgebra g = algebra(R, {{"z^2 - x^3", 2}});
  EXPECT_THROW(tau_drop_check(rel_diff_saturate(g), DropMode::absolute), PreconditionError);
  EXPECT_TRUE(tau_drop_check(rel_diff_saturate(g), DropMode::relative_only).holds);
  EXPECT_THROW(tau_drop_check(diff_saturate(algebra(R, {{"x^2", 2}})), DropMode::absolute), PreconditionError);
}

TEST(TauDrop, NonMonicGeneratorIsRepaired) {
  auto R = Q({"x", "z"}, "z");
  ReesAlgebra g = diff_saturate(algebra(R, {{"2*z^2 - x^3", 2}, {"x*z + x^3", 2}}));
  TauDrop d = tau_drop_check(g, DropMode::absolute);
  EXPECT_TRUE(d.holds);
  EXPECT_FALSE(d.elim.notes.empty());
}

TEST(TauDrop, UnrepairableGeneratorIsReported) {
  auto R = Q({"x", "z"}, "z");
  ReesAlgebra g = diff_saturate(algebra(R, {{"z^2 - x^3", 2}, {"x*z^2 + x^4", 2}}));
  EXPECT_THROW(elimination_algebra(g, Route::universal), PreconditionError);
  EXPECT_NO_THROW(elimination_algebra(g, Route::z_free));
}

TEST(Presentation, LocalPresentation) {
  auto R = Q({"x", "z"}, "z");
  ReesAlgebra g = rel_diff_saturate(algebra(R, {{"z^2 - x^3", 2}}));
  auto v = verify_local_presentation(g, g.gens()[0]);
  EXPECT_TRUE(v.consistent());
  ReesAlgebra h = rel_diff_saturate(algebra(R, {{"z^2 + x*z + x^2", 2}}));
  auto w = verify_local_presentation(h, h.gens()[0]);
  EXPECT_TRUE(w.consistent());
  EXPECT_EQ(w.tau_lhs, 2u);
  EXPECT_EQ(w.tau_rhs, 2u);
}

TEST(Presentation, MissingElement) {
  auto R = Q({"x", "z"}, "z");
  ReesAlgebra g = rel_diff_saturate(algebra(R, {{"x^2", 2}}));
  EXPECT_THROW(verify_local_presentation(g, WeightedElem{P("z^2 - x^3", R), 2}), PreconditionError);
}
