#include "helpers.hpp"

using namespace reestau;
using namespace reestau::testing;

TEST(Field, RejectsNonPrimeCharacteristic) {
  EXPECT_THROW(FieldSpec::prime(4), PreconditionError);
  EXPECT_THROW(FieldSpec::prime(1), PreconditionError);
  EXPECT_EQ(FieldSpec::prime(7).name(), "F7");
}

TEST(Field, BinomialsModP) {
  FieldSpec f3 = FieldSpec::prime(3);
  EXPECT_TRUE(binomial(f3, 3, 1).is_zero());
  EXPECT_EQ(binomial(f3, 4, 1), Scalar(f3, 1L));
  EXPECT_EQ(binomial(FieldSpec::rationals(), 10, 3), Scalar(FieldSpec::rationals(), 120L));
}

TEST(Parse, TermsOfCusp) {
  auto R = Q({"x", "z"});
  Poly f = P("z^2 - x^3", R);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coefficient({0, 2}), Scalar(R->field(), 1L));
  EXPECT_EQ(f.coefficient({3, 0}), Scalar(R->field(), -1L));
  EXPECT_EQ(f.to_string(), "-x^3 + z^2");
}

TEST(Parse, CancellationInCharacteristicTwo) {
  EXPECT_TRUE(P("x + x", F(2, {"x"})).is_zero());
}

TEST(Parse, DifferenceOfSquares) {
  auto R = Q({"x", "z"});
  EXPECT_EQ(P("(z - x)*(z + x)", R), P("z^2 - x^2", R));
}

TEST(Parse, RationalCoefficientsAndResidues) {
  EXPECT_EQ(P("3/6*x", Q({"x"})).to_string(), "1/2*x");
  EXPECT_EQ(P("-x", F(5, {"x"})).to_string(), "4*x");
  EXPECT_EQ(P("7", F(5, {"x"})).to_string(), "2");
}

TEST(Parse, Errors) {
  auto R = Q({"x", "y"});
  EXPECT_THROW(P("", R), ParseError);
  EXPECT_THROW(P("x y", R), ParseError);
  EXPECT_THROW(P("2x", R), ParseError);
  EXPECT_THROW(P("x + w", R), ParseError);
  EXPECT_THROW(P("(x + y", R), ParseError);
  EXPECT_THROW(P("x^", R), ParseError);
  try {
    P("x + * y", R);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Arithmetic, Products) {
  auto R = Q({"x"});
  EXPECT_EQ(P("(x+1)*(x-1)", R), P("x^2 - 1", R));
  auto S = F(2, {"x", "y"});
  EXPECT_EQ(P("(x+y)^2", S), P("x^2 + y^2", S));
  EXPECT_EQ(P("x", R).pow(0), Poly::constant(R, 1L));
}

TEST(Arithmetic, MixingRingsThrows) {
  EXPECT_THROW(P("x", Q({"x"})) + P("x", F(3, {"x"})), MismatchError);
}

TEST(Order, ValuesAndInfinity) {
  auto R = Q({"x", "z"});
  EXPECT_EQ(P("z^2 - x^3", R).order(), Order(2));
  EXPECT_TRUE(Poly(R).order().is_infinite());
  EXPECT_EQ(P("1 + x", R).order(), Order(0));
}

TEST(InitialForm, Examples) {
  auto R = Q({"x", "z"});
  EXPECT_EQ(initial_form(P("z^2 - x^3", R), 2), P("z^2", R));
  EXPECT_TRUE(initial_form(P("x^3", R), 2).is_zero());
  EXPECT_EQ(initial_form(P("z^2 + z*x + x^2", R), 2), P("z^2 + z*x + x^2", R));
  EXPECT_THROW(initial_form(P("x", R), 2), PreconditionError);
}

TEST(Hasse, BinomialExpansion) {
  auto R = Q({"z"});
  EXPECT_EQ(hasse_derivative(P("z^3", R), {1}), P("3*z^2", R));
  auto S = F(2, {"z"});
  EXPECT_TRUE(hasse_derivative(P("z^2", S), {1}).is_zero());
  EXPECT_EQ(hasse_derivative(P("z^2", S), {2}), Poly::constant(S, 1L));
}

TEST(Hasse, MixedIndex) {
  auto R = Q({"x", "y"});
  EXPECT_EQ(hasse_derivative(P("x^2*y", R), {1, 1}), P("2*x", R));
  EXPECT_EQ(hasse_derivative(P("x^2*y", R), {2, 1}), Poly::constant(R, 1L));
}

TEST(Hasse, TaylorShiftMatchesDerivatives) {
  // f(x + T) = sum_k Delta^(k) f(x) T^k, checked coefficient by coefficient.
  auto R = F(3, {"x", "T"});
  Poly f = P("x^5 + 2*x^3 + x", R);
  Poly shifted = substitute(f, {{"x", P("x + T", R)}}, R);
  for (std::uint32_t k = 0; k <= 5; ++k)
    EXPECT_EQ(shifted.coefficient_in(1, k), hasse_derivative(f, {k, 0})) << k;
}

TEST(Substitute, ShiftAndScale) {
  auto R = Q({"x", "z", "u"});
  EXPECT_EQ(substitute(P("z^2 - x", R), {{"z", P("z + 1", R)}}, R), P("z^2 + 2*z + 1 - x", R));
  EXPECT_EQ(substitute(P("z^2", R), {{"z", P("u*z", R)}}, R), P("u^2*z^2", R));
}

TEST(Translate, MovesPointToOrigin) {
  auto R = Q({"x", "y"});
  Poly f = P("(x - 1)^2 + y^3", R);
  EXPECT_EQ(translate(f, point(R, {1, 0})), P("x^2 + y^3", R));
}

TEST(Frobenius, Roots) {
  auto R = F(2, {"X", "Y"});
  EXPECT_EQ(frobenius_root(P("X^2 + Y^2", R), 1), P("X + Y", R));
  EXPECT_EQ(frobenius_root(P("X", R), 0), P("X", R));
  auto S = F(3, {"X", "Y"});
  EXPECT_EQ(frobenius_root(P("X^9 + 2*Y^9", S), 2), P("X + 2*Y", S));
  EXPECT_THROW(frobenius_root(P("X^2 + X*Y", R), 1), PreconditionError);
}

TEST(Monomials, GrlexOrder) {
  auto ms = monomials_of_degree(2, 2);
  ASSERT_EQ(ms.size(), 3u);
  EXPECT_EQ(ms.front(), (Monomial{2, 0}));
  EXPECT_EQ(ms.back(), (Monomial{0, 2}));
  EXPECT_EQ(monomials_up_to(3, 2).size(), 10u);
}
