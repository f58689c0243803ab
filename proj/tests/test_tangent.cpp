#include "helpers.hpp"

using namespace reestau;
using namespace reestau::testing;

TEST(Tangent, InitialIdeal) {
  auto R = Q({"x", "z"});
  EXPECT_EQ(strings(initial_ideal(algebra(R, {{"z^2 - x^3", 2}})).gens), (std::vector<std::string>{"z^2"}));
  EXPECT_TRUE(initial_ideal(algebra(R, {{"x^3", 2}})).gens.empty());
  auto S = Q({"x", "y"});
  EXPECT_EQ(strings(initial_ideal(algebra(S, {{"x", 1}, {"y^2", 2}})).gens),
            (std::vector<std::string>{"x", "y^2"}));
  EXPECT_THROW(initial_ideal(algebra(R, {{"x", 2}})), PreconditionError);
}

TEST(Tangent, InitialIdealAtPoint) {
  auto R = Q({"x", "z"});
  auto I = initial_ideal(algebra(R, {{"z^2 - (x-1)^3", 2}}), point(R, {1, 0}));
  EXPECT_EQ(strings(I.gens), (std::vector<std::string>{"z^2"}));
}

TEST(Tangent, DiffClosure) {
  auto R = Q({"X", "Y"});
  auto C = diff_close_hom_ideal(make_hom_ideal(R, {P("X^2 + Y^2", R)}));
  EXPECT_EQ(strings(C.gens), (std::vector<std::string>{"X^2 + Y^2", "2*X", "2*Y"}));
  auto S = F(2, {"X", "Y"});
  EXPECT_EQ(diff_close_hom_ideal(make_hom_ideal(S, {P("X^2 + Y^2", S)})).gens.size(), 1u);
  EXPECT_EQ(diff_close_hom_ideal(make_hom_ideal(R, {P("X", R)})).gens.size(), 1u);
  EXPECT_THROW(make_hom_ideal(R, {P("X + 1", R)}), PreconditionError);
}

TEST(Tangent, RidgeOverRationals) {
  auto R = Q({"X", "Y"});
  Ridge r = ridge(diff_close_hom_ideal(make_hom_ideal(R, {P("X^2 + Y^2", R)})));
  EXPECT_EQ(r.tau, 2u);
  EXPECT_TRUE(r.L_basis.empty());
  ASSERT_EQ(r.components.size(), 2u);
  for (const auto& c : r.components) EXPECT_EQ(c.e, 0u);
}

TEST(Tangent, RidgeUntwistsFrobenius) {
  auto R = F(2, {"X", "Y"});
  Ridge r = ridge(diff_close_hom_ideal(make_hom_ideal(R, {P("X^2 + Y^2", R)})));
  EXPECT_EQ(r.tau, 1u);
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0].linear_form, P("X + Y", R));
  EXPECT_EQ(r.components[0].e, 1u);
  ASSERT_EQ(r.L_basis.size(), 1u);
  EXPECT_EQ(format_vector(r.L_basis[0]), "(1,1)");
}

TEST(Tangent, RidgeOfEmptyIdeal) {
  auto R = F(3, {"X", "Y", "Z"});
  Ridge r = ridge(diff_close_hom_ideal(make_hom_ideal(R, {})));
  EXPECT_EQ(r.tau, 0u);
  EXPECT_EQ(r.L_basis.size(), 3u);
}

TEST(Tangent, RidgeNeedsClosedIdeal) {
  auto R = Q({"X"});
  EXPECT_THROW(ridge(make_hom_ideal(R, {P("X^2", R)})), PreconditionError);
}

TEST(Tangent, RidgeSecondFrobeniusPower) {
  // (X + 2Y)^9 is additive of level 2 over F3; its closure has no lower
  // additive part.
  auto R = F(3, {"X", "Y"});
  Ridge r = ridge(diff_close_hom_ideal(make_hom_ideal(R, {P("X^9 + 2*Y^9", R)})));
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0].e, 2u);
  EXPECT_EQ(r.components[0].linear_form, P("X + 2*Y", R));
}

TEST(Tangent, TauExamples) {
  auto Rq = Q({"x", "z"});
  EXPECT_EQ(tau(algebra(Rq, {{"z^2 + z*x + x^2", 2}})), 2u);
  EXPECT_EQ(tau(algebra(F(3, {"x", "z"}), {{"z^2 + z*x + x^2", 2}})), 1u);
  EXPECT_EQ(tau(algebra(Rq, {{"x^3", 2}})), 0u);
  EXPECT_EQ(tau(algebra(Rq, {{"z^2 - x^3", 2}})), 1u);
}

TEST(Tangent, Transversality) {
  auto R = Q({"x", "z"}, "z");
  EXPECT_TRUE(is_transversal(algebra(R, {{"z^2 - x^3", 2}})).cone_transversal);
  EXPECT_FALSE(is_transversal(algebra(R, {{"x^2", 2}})).cone_transversal);
  auto S = F(3, {"x", "z"}, "z");
  auto t = is_transversal(algebra(S, {{"z^2 + z*x + x^2", 2}}));
  EXPECT_TRUE(t.cone_transversal);
  EXPECT_FALSE(t.line_in_ridge);
  EXPECT_THROW(is_transversal(algebra(Q({"x"}), {{"x", 1}})), PreconditionError);
}

TEST(Tangent, MakeTransversal) {
  auto R = Q({"x", "z"}, "z");
  auto t = make_transversal(algebra(R, {{"x^2", 2}}));
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(is_transversal(t->algebra).cone_transversal);
  EXPECT_EQ(tau(t->algebra), 1u);
  EXPECT_FALSE(make_transversal(algebra(R, {{"x^3", 2}})).has_value());
}

TEST(Tangent, ReportEndsWithTau) {
  auto R = Q({"x", "z"}, "z");
  std::string rep = tau_report(algebra(R, {{"z^2 - x^3", 2}}));
  EXPECT_EQ(rep.substr(rep.size() - 8), "tau = 1\n");
  EXPECT_EQ(rep, tau_report(algebra(R, {{"z^2 - x^3", 2}})));
}
