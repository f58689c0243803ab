#include "helpers.hpp"

using namespace reestau;
using namespace reestau::testing;

TEST(Rees, RejectsBadGenerators) {
  auto R = Q({"x"});
  ReesAlgebra g(R);
  EXPECT_THROW(g.add(P("x", R), 0), PreconditionError);
  EXPECT_THROW(g.add(P("x", F(3, {"x"})), 1), MismatchError);
}

TEST(Rees, Odot) {
  auto R = Q({"x", "y"});
  ReesAlgebra a = algebra(R, {{"x", 1}}), b = algebra(R, {{"y", 2}});
  EXPECT_EQ(odot(a, b).to_string(), "O[x W^1, y W^2]");
  EXPECT_EQ(odot(a, a).size(), 1u);
}

namespace {
std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST(Rees, GradedPiece) {
  auto R = Q({"x", "y"});
  ReesAlgebra g = algebra(R, {{"x", 1}, {"y^2", 2}});
  EXPECT_EQ(sorted(strings(graded_piece(g, 2).gens)), (std::vector<std::string>{"x^2", "y^2"}));
  ReesAlgebra h = algebra(R, {{"x*y", 2}});
  EXPECT_TRUE(graded_piece(h, 3).gens.empty());
  EXPECT_EQ(strings(graded_piece(h, 4).gens), (std::vector<std::string>{"x^2*y^2"}));
}

TEST(Rees, Veronese) {
  auto R = Q({"x", "y"});
  ReesAlgebra v = veronese(algebra(R, {{"x", 1}, {"y^2", 2}}), 2);
  std::vector<std::string> gens;
  for (const auto& e : v.gens()) gens.push_back(to_string(e));
  EXPECT_EQ(sorted(gens), (std::vector<std::string>{"x^2 W^2", "y^2 W^2"}));
  ReesAlgebra h = algebra(R, {{"x*y", 2}});
  EXPECT_EQ(veronese(h, 2).to_string(), h.to_string());
  EXPECT_EQ(veronese(algebra(R, {{"x", 1}}), 3).to_string(), "O[x^3 W^3]");
}

TEST(Rees, SingLocusPointTest) {
  auto R = Q({"x"});
  ReesAlgebra g = algebra(R, {{"x^2", 2}});
  EXPECT_TRUE(in_sing_locus(g, point(R, {0})));
  EXPECT_FALSE(in_sing_locus(g, point(R, {1})));
  EXPECT_THROW(in_sing_locus(g, point(R, {0, 0})), MismatchError);
}

TEST(Rees, EnumerateSing) {
  auto R = F(3, {"x"});
  EXPECT_EQ(enumerate_sing(algebra(R, {{"x^2", 2}})).size(), 1u);
  EXPECT_TRUE(enumerate_sing(algebra(R, {{"1", 1}})).empty());
  auto S = F(2, {"x", "y"});
  auto pts = enumerate_sing(algebra(S, {{"x*y", 1}}));
  std::vector<std::string> got;
  for (const auto& p : pts) got.push_back(format_vector(p));
  EXPECT_EQ(got, (std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)"}));
  EXPECT_THROW(enumerate_sing(algebra(Q({"x"}), {{"x", 1}})), PreconditionError);
}

TEST(Rees, SingUsesHasseOrders) {
  // x^2 over F2 has order 2 at every point of the line x = 0, and the
  // ordinary derivative would wrongly vanish everywhere.
  auto R = F(2, {"x", "y"});
  EXPECT_EQ(enumerate_sing(algebra(R, {{"x^2", 2}})).size(), 2u);
}

TEST(Membership, HomogeneousSlices) {
  auto R = Q({"x", "y"});
  PolyIdeal I{R, {P("x^2", R), P("y^2", R)}};
  EXPECT_TRUE(ideal_contains(I, P("x^2*y", R)));
  EXPECT_FALSE(ideal_contains(I, P("x*y", R)));
  EXPECT_TRUE(ideal_contains(PolyIdeal{R, {}}, Poly(R)));
  EXPECT_THROW(ideal_contains(I, P("x + 1", R)), PreconditionError);
}

TEST(Membership, Radical) {
  auto R = Q({"x", "y"});
  EXPECT_TRUE(radical_contains(PolyIdeal{R, {P("x^2", R)}}, P("x", R), 2));
  EXPECT_TRUE(radical_contains(PolyIdeal{R, {P("x^2", R), P("y^2", R)}}, P("x + y", R), 3));
  EXPECT_FALSE(radical_contains(PolyIdeal{R, {P("x*y", R)}}, P("x", R), 5));
}

TEST(Membership, Truncated) {
  auto R = Q({"x", "z"});
  PolyIdeal I{R, {P("z^2 - x^3", R), P("z", R)}};
  EXPECT_TRUE(truncated_membership(I, P("x^3", R), 4));
  EXPECT_FALSE(truncated_membership(I, P("x^2", R), 6));
}

TEST(Equivalence, IntegralPair) {
  auto R = Q({"x"});
  auto v = check_integral_equiv_desk(algebra(R, {{"x^2", 2}}), algebra(R, {{"x^2", 2}, {"x^3", 3}}), 6, 4);
  EXPECT_EQ(v.kind, EquivVerdict::Kind::consistent);
}

TEST(Equivalence, DifferentRadicals) {
  auto R = Q({"x", "y"});
  auto v = check_integral_equiv_desk(algebra(R, {{"x", 1}}), algebra(R, {{"y", 1}}), 1, 4);
  EXPECT_EQ(v.kind, EquivVerdict::Kind::refuted);
  EXPECT_FALSE(v.evidence.empty());
}

TEST(Equivalence, VeroneseOfSuiteMembers) {
  for (const auto& m : load_suite(REESTAU_SUITE_DIR)) {
    std::uint64_t N = m.algebra.weight_lcm();
    auto v = check_integral_equiv_desk(m.algebra, veronese(m.algebra, N), N, 4);
    EXPECT_NE(v.kind, EquivVerdict::Kind::refuted) << m.name;
  }
}
