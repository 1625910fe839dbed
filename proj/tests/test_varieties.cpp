#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "monvar/random_words.hpp"
#include "monvar/varieties.hpp"

using namespace monvar;

namespace {
Identity id(const std::string& text) { return parse_identity(text); }
}  // namespace

TEST_CASE("semilattice criterion") {
  CHECK(holds_in_SL(id("xy = yx")));
  CHECK(holds_in_SL(id("x = xx")));
  CHECK(!holds_in_SL(id("x = y")));
}

TEST_CASE("capped-exponent criterion") {
  CHECK(holds_in_C(id("xx = xxx")));
  CHECK(holds_in_C(id("xy = yx")));
  CHECK(holds_in_C(id("xyx = xxy")));
  CHECK(!holds_in_C(id("x = xx")));
}

TEST_CASE("simple-order criterion") {
  CHECK(holds_in_D1(id("xxy = xyx")));
  CHECK(!holds_in_D1(id("xy = yx")));
  // simple letter t sits in the same position relative to other simple
  // letters; multiple sets match
  CHECK(holds_in_D1(id("xtx = xxt")));
}

TEST_CASE("brute force over the 3-element commutative model agrees with C") {
  // {1, a, a^2} with a^2 = a^3, commutative
  FiniteMonoid m;
  m.names = {"1", "a", "aa"};
  m.identity_index = 0;
  m.table = {0, 1, 2, 1, 2, 2, 2, 2, 2};
  m.check();
  for (const char* text : {"xx = xxx", "xy = yx", "xyx = xxy", "x = xx", "x = y",
                           "xxyy = yyxx", "xy = xyy"})
    CHECK(holds_in_C(id(text)) == satisfies_identity(m, id(text)).holds);
}

TEST_CASE("oracle-backed deciders") {
  Verdict d2 = holds_in_D2(id("xyzxty = yxzxty"));
  CHECK(d2.holds);
  CHECK(d2.method == DecisionMethod::FiniteOracle);
  Verdict fails = holds_in_D2(id("xtx = xxt"));
  CHECK(!fails.holds);
  REQUIRE(fails.witness.has_value());
  CHECK(holds_in_D2(id("xxy = yxx")).holds);
}

TEST_CASE("1-equivalence decider") {
  Verdict v = holds_in_M(id("xysxty = yxsxty"));
  CHECK(!v.holds);
  CHECK(v.method == DecisionMethod::Criterion);
  CHECK(holds_in_M(id("xtyzxy = xtyzyx")).holds);
  // non-reduced sides fall back to the finite oracle
  Verdict oracle = holds_in_M(id("xzxyty = xzyxty"));
  CHECK(oracle.holds);
  CHECK(oracle.method == DecisionMethod::FiniteOracle);
}

TEST_CASE("equal-1-blocks decider") {
  CHECK(!holds_in_N(id("xyzxy = yxzxy")).holds);
  CHECK(holds_in_N(id("xtyzxy = xtyzyx")).holds);
  Word u = parse_word("xysxty");
  CHECK(holds_in_N(Identity(u, u)).holds);
  CHECK_THROWS_AS(holds_in_N(id("xzxyty = xzyxty")), NotReducedError);
}

TEST_CASE("dual deciders act on reversed identities") {
  CHECK(holds_in_dual(VarietyId::M, id("xyzxty = yxzxty")).holds);
  CHECK(!holds_in_dual(VarietyId::M, id("xtyzxy = xtyzyx")).holds);
  Word u = parse_word("xysxty");
  CHECK(holds_in_dual(VarietyId::N, Identity(u, u)).holds);
  CHECK_THROWS_AS(holds_in_dual(VarietyId::C, id("xy = yx")), std::invalid_argument);
}

TEST_CASE("dispatch") {
  CHECK(holds_in(VarietyId::T, id("x = y")).holds);
  CHECK(holds_in(VarietyId::SL, id("xy = yx")).holds);
  CHECK(!holds_in(VarietyId::D1, id("xy = yx")).holds);
  CHECK(holds_in(VarietyId::DualM, id("xyzxty = yxzxty")).holds);
}

TEST_CASE("variety names round trip") {
  for (VarietyId v : {VarietyId::T, VarietyId::SL, VarietyId::C, VarietyId::D1,
                      VarietyId::D2, VarietyId::M, VarietyId::N, VarietyId::DualM,
                      VarietyId::DualN})
    CHECK(parse_variety(to_string(v)) == v);
  CHECK(!parse_variety("Q").has_value());
}

TEST_CASE("isoterm criteria") {
  CHECK(is_isoterm(VarietyId::M, parse_word("xysxty")));
  CHECK(is_isoterm(VarietyId::N, parse_word("xysxty")));
  // the 2-block xy admits a swap
  CHECK(!is_isoterm(VarietyId::N, parse_word("xtyzxy")));
  CHECK(!is_isoterm(VarietyId::M, parse_word("xtyzxy")));
  // a two-letter subblock of a 1-block together with its target 2-block
  CHECK(!is_isoterm(VarietyId::M, parse_word("xytxy")));
  CHECK(!is_isoterm(VarietyId::N, parse_word("xytxy")));
  CHECK(is_isoterm(VarietyId::M, parse_word("xyzxty")));
  CHECK_THROWS_AS(is_isoterm(VarietyId::M, parse_word("xzxyty")), NotReducedError);
  CHECK_THROWS_AS(is_isoterm(VarietyId::SL, parse_word("x")), std::invalid_argument);
}

TEST_CASE("monotonicity along the chain") {
  std::mt19937 rng(99);
  auto alpha = default_alphabet(4);
  for (int i = 0; i < 200; ++i) {
    Word u = random_reduced_word(rng, alpha, 10);
    Word v = i % 2 ? shuffle_2_blocks(rng, u)
                   : shuffle_preserving_1_equivalence(rng, u);
    Identity idv(u, v);
    bool n_ = holds_in_N(idv).holds;
    bool m_ = holds_in_M(idv).holds;
    bool d2 = holds_in_D2(idv).holds;
    bool d1 = holds_in_D1(idv);
    bool c_ = holds_in_C(idv);
    bool sl = holds_in_SL(idv);
    CHECK((!n_ || m_));
    CHECK((!m_ || d2));
    CHECK((!d2 || d1));
    CHECK((!d1 || c_));
    CHECK((!c_ || sl));
  }
}
