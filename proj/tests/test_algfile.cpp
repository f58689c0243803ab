#include "helpers.hpp"

using namespace reestau;
using namespace reestau::testing;

TEST(AlgFile, ParsesAllDirectives) {
  AlgFile a = parse_alg_text(R"(# a comment
field F3
vars x, y, z
z-var z

gen 2 z^2 + x*y   # trailing comment
adjoin 2 2 x*y
expect tau 3
)");
  EXPECT_EQ(a.ring->field().name(), "F3");
  EXPECT_EQ(a.ring->dim(), 3u);
  ASSERT_TRUE(a.ring->z_index());
  EXPECT_EQ(*a.ring->z_index(), 2u);
  EXPECT_EQ(a.algebra.to_string(), "O[(x*y + z^2) W^2]");
  ASSERT_EQ(a.adjoins.size(), 1u);
  EXPECT_EQ(a.adjoins[0].weight, 2u);
  EXPECT_EQ(a.adjoins[0].power, 2u);
  EXPECT_EQ(a.expect.at("tau"), "3");
}

TEST(AlgFile, GeneratorsMayPrecedeVars) {
  AlgFile a = parse_alg_text("field Q\ngen 1 x\nvars x\n");
  EXPECT_EQ(a.algebra.size(), 1u);
}

namespace {
std::string error_of(const std::string& text) {
  try {
    parse_alg_text(text, "t.alg");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST(AlgFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_of("field Q\nvars x\ngen 2 x^2 +\n"), "t.alg:3: syntax error at position 5: unexpected end of input");
  EXPECT_EQ(error_of("field Q\nvars x\nbogus 1\n"), "t.alg:3: unknown directive 'bogus'");
  EXPECT_EQ(error_of("field F4\nvars x\n"), "t.alg:1: field characteristic is not prime: 4");
  EXPECT_EQ(error_of("field Q\nvars x\ngen 0 x\n"), "t.alg:3: weight must be positive");
  EXPECT_EQ(error_of("field Q\nvars x\ngen x\n"), "t.alg:3: weight must be a positive integer, got 'x'");
  EXPECT_EQ(error_of("vars x\n"), "t.alg:0: missing 'field' line");
  EXPECT_EQ(error_of("field Q\n"), "t.alg:0: missing 'vars' line");
  EXPECT_NE(error_of("field Q\nvars x\nz-var w\n"), "");
  EXPECT_NE(error_of("field Q\nvars x,x\n"), "");
  EXPECT_NE(error_of("field Q\nvars x\ngen 1 y\n"), "");
}

TEST(AlgFile, SuiteLoadsSorted) {
  auto suite = load_suite(REESTAU_SUITE_DIR);
  ASSERT_GE(suite.size(), 15u);
  EXPECT_TRUE(std::is_sorted(suite.begin(), suite.end(),
                             [](const AlgFile& a, const AlgFile& b) { return a.name < b.name; }));
  EXPECT_THROW(load_alg_file("/nonexistent.alg"), Error);
  EXPECT_THROW(load_suite("/nonexistent"), Error);
}

TEST(AlgFile, SuiteExpectationsHold) {
  for (const auto& m : load_suite(REESTAU_SUITE_DIR)) {
    if (auto it = m.expect.find("tau"); it != m.expect.end()) {
      EXPECT_EQ(std::to_string(tau(m.algebra)), it->second) << m.name;
    }
  }
}
