#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "monvar/blocks.hpp"
#include "monvar/random_words.hpp"

using namespace monvar;

TEST_CASE("decomposition of the worked example") {
  Word w = parse_word("abcdxcbyezaed");
  Decomposition d = decompose(w);
  REQUIRE(d.block_count() == 4);
  CHECK(d.dividers[0].empty());
  CHECK(format_word(d.dividers[1]) == "x");
  CHECK(format_word(d.dividers[2]) == "y");
  CHECK(format_word(d.dividers[3]) == "z");
  CHECK(format_word(d.blocks[0]) == "abcd");
  CHECK(format_word(d.blocks[1]) == "cb");
  CHECK(format_word(d.blocks[2]) == "e");
  CHECK(format_word(d.blocks[3]) == "aed");
  CHECK(d.reassemble() == w);
}

TEST_CASE("decomposition of the empty word") {
  Decomposition d = decompose(Word{});
  REQUIRE(d.block_count() == 1);
  CHECK(d.dividers[0].empty());
  CHECK(d.blocks[0].empty());
}

TEST_CASE("decompose xyzxty") {
  Decomposition d = decompose(parse_word("xyzxty"));
  REQUIRE(d.block_count() == 3);
  CHECK(format_word(d.dividers[1]) == "z");
  CHECK(format_word(d.dividers[2]) == "t");
  CHECK(format_word(d.blocks[0]) == "xy");
  CHECK(format_word(d.blocks[1]) == "x");
  CHECK(format_word(d.blocks[2]) == "y");
}

TEST_CASE("block classification") {
  Word w = parse_word("abcdxcbyezaed");
  Decomposition d = decompose(w);
  CHECK(classify_block(w, d, 0) == BlockClass::OneBlock);
  CHECK(classify_block(w, d, 1) == BlockClass::TwoBlock);
  CHECK(classify_block(w, d, 2) == BlockClass::OneBlock);
  CHECK(classify_block(w, d, 3) == BlockClass::TwoBlock);

  Word m = parse_word("xzxyty");
  Decomposition dm = decompose(m);
  // block after divider z holds the 2nd occurrence of x and the 1st of y
  CHECK(classify_block(m, dm, 1) == BlockClass::Mixed);
}

TEST_CASE("reducedness") {
  CHECK(is_reduced(parse_word("abcdxcbyezaed")));
  CHECK(!is_reduced(parse_word("xzxyty")));
  CHECK(!is_reduced(parse_word("xxx")));
  CHECK(is_reduced(Word{}));
  CHECK(is_reduced(parse_word("xyzxty")));
}

TEST_CASE("full decomposition of the worked example") {
  FullDecomposition fd = full_decompose(parse_word("abcdxcbyezaed"));
  CHECK(format_full_decomposition(fd) == "a|bc|d _x_ cb _y_ e _z_ a|e|d");
}

TEST_CASE("full decomposition splits the xyzxty head block") {
  FullDecomposition fd = full_decompose(parse_word("xyzxty"));
  REQUIRE(fd.blocks[0].subblocks.size() == 2);
  CHECK(format_word(fd.blocks[0].subblocks[0].letters) == "x");
  CHECK(format_word(fd.blocks[0].subblocks[1].letters) == "y");
  CHECK(fd.blocks[0].subblocks[0].target_block == 1);
  CHECK(fd.blocks[0].subblocks[1].target_block == 2);
}

TEST_CASE("full decomposition rejects non-reduced words") {
  CHECK_THROWS_AS(full_decompose(parse_word("xzxyty")), NotReducedError);
}

TEST_CASE("equivalence") {
  CHECK(are_equivalent(parse_word("xyzxty"), parse_word("yxzxty")));
  CHECK(!are_equivalent(parse_word("xyzxty"), parse_word("xzxyty")));
  Word u = parse_word("xysxty");
  CHECK(are_equivalent(u, u));
}

TEST_CASE("1-equivalence") {
  CHECK(!are_1_equivalent(parse_word("xysxty"), parse_word("yxsxty")));
  CHECK(are_1_equivalent(parse_word("xtyzxy"), parse_word("xtyzyx")));
  CHECK_THROWS_AS(are_1_equivalent(parse_word("xzxyty"), parse_word("xzxyty")),
                  NotReducedError);
}

TEST_CASE("1-equivalence is an equivalence relation") {
  std::mt19937 rng(5);
  auto alpha = default_alphabet(4);
  for (int i = 0; i < 200; ++i) {
    Word u = random_reduced_word(rng, alpha, 10);
    Word v = shuffle_preserving_1_equivalence(rng, u);
    Word w = shuffle_preserving_1_equivalence(rng, v);
    CHECK(are_1_equivalent(u, u));
    CHECK(are_1_equivalent(u, v));
    CHECK(are_1_equivalent(v, u));
    CHECK(are_1_equivalent(u, w));
  }
}

TEST_CASE("blocks of reduced words are linear") {
  std::mt19937 rng(17);
  auto alpha = default_alphabet(5);
  for (int i = 0; i < 300; ++i) {
    Word w = random_reduced_word(rng, alpha, 12);
    Decomposition d = decompose(w);
    for (const Word& block : d.blocks) {
      std::set<Letter> seen;
      for (const Letter& l : block.letters) CHECK(seen.insert(l).second);
    }
  }
}

TEST_CASE("first occurrence in a 1-block precedes the second in a later 2-block") {
  std::mt19937 rng(23);
  auto alpha = default_alphabet(5);
  for (int i = 0; i < 300; ++i) {
    Word w = random_reduced_word(rng, alpha, 12);
    FullDecomposition fd = full_decompose(w);
    for (std::size_t b = 0; b < fd.blocks.size(); ++b) {
      if (fd.blocks[b].cls != BlockClass::OneBlock) continue;
      for (const Subblock& sb : fd.blocks[b].subblocks) {
        for (const Letter& l : sb.letters.letters) {
          if (occurrence_counts(w).at(l) < 2) continue;
          CHECK(sb.target_block > b);
          CHECK(fd.blocks[sb.target_block].cls == BlockClass::TwoBlock);
        }
      }
    }
  }
}

TEST_CASE("full decomposition reassembles") {
  std::mt19937 rng(31);
  auto alpha = default_alphabet(5);
  for (int i = 0; i < 200; ++i) {
    Word w = random_reduced_word(rng, alpha, 12);
    FullDecomposition fd = full_decompose(w);
    CHECK(fd.dec.reassemble() == w);
    for (std::size_t b = 0; b < fd.blocks.size(); ++b) {
      Word joined;
      for (const Subblock& sb : fd.blocks[b].subblocks) joined += sb.letters;
      CHECK(joined == fd.dec.blocks[b]);
    }
  }
}
