#include <catch2/catch_amalgamated.hpp>

#include "monvar/blocks.hpp"
#include "monvar/families.hpp"

using namespace monvar;

TEST_CASE("index sets enumerate in lexicographic order") {
  CHECK(index_set(2, 1) == std::vector<IndexTuple>{{1}});
  CHECK(index_set(2, 2) == std::vector<IndexTuple>{{1, 1}, {1, 2}});
  CHECK(index_set(2, 3) ==
        std::vector<IndexTuple>{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}});
  CHECK(index_set(3, 3).size() == 9);
  CHECK(tuple_extend({1, 2}, 3) == IndexTuple{1, 2, 3});
  CHECK_THROWS_AS(index_set(10, 12), std::invalid_argument);
}

TEST_CASE("building blocks of the families") {
  CHECK(format_word(build_e(2)) == "s_2 x_2 t_2 y_2");
  CHECK(format_word(build_f(0)) == "s_0 x_0 x_1 y_1 y_0");
  CHECK(format_word(build_c(2)) ==
        "s[1,1]^1 x[1,1]^1 s[1,1]^2 x[1,1]^2 s[1,2]^1 x[1,2]^1 s[1,2]^2 x[1,2]^2");
  CHECK(build_c(2).size() == 8);
  CHECK(format_word(build_d(2, 1)) ==
        "s_1 x_1^1 x[1,1]^1 x[1,1]^2 x_1^2 x[1,2]^1 x[1,2]^2");
}

TEST_CASE("the b words") {
  CHECK(format_word(build_b(1)) ==
        "x_0 y_0 s_1 x_1 x_2 y_2 y_1 s_2 x_2 t_2 y_2 s_0 x_0 x_1 y_1 y_0");
  CHECK(build_b(1).size() == 16);
  Word b1p = build_b_prime(1);
  CHECK(b1p[0] == Letter("y", {0}));
  CHECK(b1p[1] == Letter("x", {0}));
  // only the first two letters differ
  for (std::size_t i = 2; i < b1p.size(); ++i) CHECK(b1p[i] == build_b(1)[i]);
}

TEST_CASE("the a words") {
  Word a1 = build_a(1);
  CHECK(a1.size() == 22);
  CHECK(content(a1).size() == 14);
  CHECK(format_word(Word({a1.letters.begin(), a1.letters.begin() + 5})) ==
        "x y s_1 x_1^1 x[1,1]^1");
  Word a1p = build_a_prime(1);
  CHECK(a1p[0] == Letter("y"));
  CHECK(a1p[1] == Letter("x"));
  for (std::size_t i = 2; i < a1.size(); ++i) CHECK(a1p[i] == a1[i]);
  CHECK(build_a(2).size() == 944);
}

TEST_CASE("families are reduced") {
  for (int n : {1, 2}) {
    CHECK(is_reduced(build_a(n)));
    CHECK(is_reduced(build_a_prime(n)));
    CHECK(is_reduced(build_b(n)));
    CHECK(is_reduced(build_b_prime(n)));
  }
}

TEST_CASE("the letter cap guards the larger members") {
  CHECK_THROWS_AS(build_a(3), std::invalid_argument);
  CHECK_NOTHROW(build_a(2));
}

TEST_CASE("eta maps the a family onto the b family") {
  for (int n : {1, 2}) {
    Substitution e = eta(n);
    CHECK(apply_substitution(e, build_a(n)) == build_b(n));
    CHECK(apply_substitution(e, build_a_prime(n)) == build_b_prime(n));
  }
  // catch-all clause erases fresh letters
  CHECK(apply_substitution(eta(1), parse_word("q")).empty());
}

TEST_CASE("b variants") {
  CHECK(build_b_variant(1, std::vector<bool>{false}) == build_b(1));
  Word swapped = build_b_variant(1, std::vector<bool>{true});
  CHECK(format_word(swapped) ==
        "x_0 y_0 s_1 x_1 x_2 y_2 y_1 s_2 x_2 t_2 y_2 s_0 x_0 y_1 x_1 y_0");

  Substitution identity_zeta;
  Substitution swap_zeta;
  swap_zeta.mapping[Letter("x", {1})] = Word{{Letter("y", {1})}};
  swap_zeta.mapping[Letter("y", {1})] = Word{{Letter("x", {1})}};
  CHECK(build_b_variant(1, std::vector<Substitution>{identity_zeta}) == build_b(1));
  CHECK(build_b_variant(1, std::vector<Substitution>{swap_zeta}) == swapped);

  Substitution bad;
  bad.mapping[Letter("x", {1})] = Word{};
  CHECK_THROWS_AS(build_b_variant(1, std::vector<Substitution>{bad}),
                  std::invalid_argument);
}

TEST_CASE("a variants") {
  CHECK(build_a_variant(1, {}) == build_a(1));
  ZetaFamily zetas;
  zetas[{1}] = {2, 1};  // swap the trailing pair
  Word w = build_a_variant(1, zetas);
  CHECK(w != build_a(1));
  CHECK(format_word(Word({w.letters.end() - 3, w.letters.end()})) == "x_1^2 x_1^1 y");
  ZetaFamily bad;
  bad[{1, 1}] = {2, 1};  // even arity not allowed
  CHECK_THROWS_AS(build_a_variant(1, bad), std::invalid_argument);
  ZetaFamily notperm;
  notperm[{1}] = {1, 1};
  CHECK_THROWS_AS(build_a_variant(1, notperm), std::invalid_argument);
}

TEST_CASE("bigram uniqueness") {
  CHECK(!unique_bigrams(parse_word("xyxy")));
  CHECK(unique_bigrams(parse_word("xy")));
  CHECK(unique_bigrams(Word{}));
  for (bool z : {false, true})
    CHECK(unique_bigrams(build_b_variant(1, std::vector<bool>{z})));
  for (int n : {1, 2}) CHECK(unique_bigrams(build_a_variant(n, {})));
}

TEST_CASE("decomposition shapes match the formula expansion") {
  for (int n : {1, 2}) {
    CHECK(shape_of(full_decompose(build_a(n))) == expected_a_shape(n, false));
    CHECK(shape_of(full_decompose(build_a_prime(n))) == expected_a_shape(n, true));
  }
}

TEST_CASE("variety bases") {
  IdentitySystem n_basis = variety_basis(VarietyId::N);
  REQUIRE(n_basis.identities.size() == 4);
  CHECK(format_identity(n_basis.identities[0]) == "xxy = yxx");
  CHECK(format_identity(n_basis.identities[1]) == "xxyz = xyxzx");
  CHECK(format_identity(n_basis.identities[2]) == "xzxyty = xzyxty");
  CHECK(format_identity(n_basis.identities[3]) == "xtyzxy = xtyzyx");
  CHECK(variety_basis(VarietyId::M).identities.size() == 5);
  CHECK(variety_basis(VarietyId::D2).identities.size() == 5);
  // the dual basis is the letterwise reversal
  IdentitySystem dual = variety_basis(VarietyId::DualN);
  CHECK(dual.identities[3].lhs == reverse(n_basis.identities[3].lhs));
}

TEST_CASE("sigma_K systems") {
  CHECK(sigma_K({}, 3).identities.empty());
  IdentitySystem s = sigma_K({1}, 3);
  REQUIRE(s.identities.size() == 1);
  CHECK(s.identities[0].lhs == build_a(1));
  CHECK(s.identities[0].rhs == build_a_prime(1));
  CHECK(sigma_K({1, 2, 3}, 2).identities.size() == 2);
}
