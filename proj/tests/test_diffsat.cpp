#include "helpers.hpp"

using namespace reestau;
using namespace reestau::testing;

TEST(DiffSat, AbsoluteAddsDerivatives) {
  auto R = Q({"x", "z"}, "z");
  ReesAlgebra s = diff_saturate(algebra(R, {{"z^2 + x^2", 2}}));
  EXPECT_EQ(s.to_string(), "O[(x^2 + z^2) W^2, 2*x W^1, 2*z W^1]");
  EXPECT_EQ(s.saturation(), Saturation::absolute);
}

TEST(DiffSat, CharacteristicTwoAddsNothing) {
  auto R = F(2, {"x", "z"});
  EXPECT_EQ(diff_saturate(algebra(R, {{"z^2", 2}})).size(), 1u);
  EXPECT_EQ(diff_saturate(algebra(R, {{"x", 1}})).size(), 1u);
}

TEST(DiffSat, RelativeUsesOnlyZ) {
  auto R = F(2, {"x", "y", "z"}, "z");
  ReesAlgebra s = rel_diff_saturate(algebra(R, {{"z^2 + x*z + y^3", 2}}));
  EXPECT_EQ(s.to_string(), "O[(y^3 + x*z + z^2) W^2, x W^1]");
  EXPECT_EQ(s.saturation(), Saturation::relative);

  auto Rq = Q({"x", "z"}, "z");
  EXPECT_EQ(rel_diff_saturate(algebra(Rq, {{"z^3", 3}})).to_string(), "O[z^3 W^3, 3*z^2 W^2, 3*z W^1]");
  EXPECT_EQ(rel_diff_saturate(algebra(Rq, {{"x^2", 2}})).size(), 1u);
}

TEST(DiffSat, RelativeNeedsZ) {
  EXPECT_THROW(rel_diff_saturate(algebra(Q({"x"}), {{"x^2", 2}})), PreconditionError);
}

TEST(DiffSat, ClosedCheck) {
  auto R = Q({"x", "z"}, "z");
  ReesAlgebra g = algebra(R, {{"z^2 + x^2", 2}});
  auto c = is_diff_closed(g, DiffMode::absolute);
  EXPECT_FALSE(c.closed);
  EXPECT_FALSE(c.missing.empty());
  EXPECT_TRUE(is_diff_closed(diff_saturate(g), DiffMode::absolute).closed);
  EXPECT_TRUE(is_diff_closed(algebra(R, {{"x", 1}}), DiffMode::absolute).closed);
}

TEST(DiffSat, SaturatedSuiteMembersAreClosed) {
  for (const auto& m : load_suite(REESTAU_SUITE_DIR))
    EXPECT_TRUE(is_diff_closed(diff_saturate(m.algebra), DiffMode::absolute).closed) << m.name;
}

TEST(DiffSat, SaturationKeepsTau) {
  auto R = F(3, {"x", "y", "z"}, "z");
  ReesAlgebra g = algebra(R, {{"z^3 + x^2*z + y^3", 3}});
  EXPECT_EQ(tau(g), tau(diff_saturate(g)));
  EXPECT_EQ(enumerate_sing(g), enumerate_sing(diff_saturate(g)));
}
