#ifndef MONVAR_RANDOM_WORDS_HPP_
#define MONVAR_RANDOM_WORDS_HPP_

#include <algorithm>
#include <random>
#include <vector>

#include "monvar/blocks.hpp"
#include "monvar/word.hpp"

namespace monvar {

inline std::vector<Letter> default_alphabet(std::size_t k) {
  static const char* bases[] = {"x", "y", "z", "s", "t", "u", "v", "w"};
  std::vector<Letter> out;
  for (std::size_t i = 0; i < k && i < 8; ++i) out.emplace_back(bases[i]);
  return out;
}

/// Random reduced word over (a subset of) the given alphabet with length at
/// most max_len: sample multiplicity profiles and permutations until one is
/// reduced. Falls back to a square-free arrangement (always reduced).
inline Word random_reduced_word(std::mt19937& rng, const std::vector<Letter>& alphabet,
                                std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> pick_k(1, alphabet.size());
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::size_t k = pick_k(rng);
    std::vector<Letter> pool;
    for (std::size_t i = 0; i < k; ++i) {
      bool multiple = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
      pool.push_back(alphabet[i]);
      if (multiple) pool.push_back(alphabet[i]);
    }
    if (pool.size() > max_len) continue;
    std::shuffle(pool.begin(), pool.end(), rng);
    Word w{pool};
    if (is_reduced(w)) return w;
  }
  // distinct letters only; trivially reduced
  std::size_t k = std::min(alphabet.size(), max_len);
  Word w;
  for (std::size_t i = 0; i < k; ++i) w += alphabet[i];
  return w;
}

/// Random 1-equivalent rearrangement: permutes letters inside every subblock
/// of every 1-block and inside every 2-block. Dividers, block boundaries and
/// subblock content are untouched, so the result is reduced and 1-equivalent
/// to w.
inline Word shuffle_preserving_1_equivalence(std::mt19937& rng, const Word& w) {
  FullDecomposition fd = full_decompose(w);
  Word out;
  for (std::size_t i = 0; i < fd.dec.block_count(); ++i) {
    out += fd.dec.dividers[i];
    if (fd.blocks[i].cls == BlockClass::TwoBlock) {
      Word shuffled = fd.dec.blocks[i];
      std::shuffle(shuffled.letters.begin(), shuffled.letters.end(), rng);
      out += shuffled;
    } else {
      for (const Subblock& sb : fd.blocks[i].subblocks) {
        Word shuffled = sb.letters;
        std::shuffle(shuffled.letters.begin(), shuffled.letters.end(), rng);
        out += shuffled;
      }
    }
  }
  return out;
}

/// Random rearrangement touching only 2-blocks; preserves equivalence and
/// leaves every 1-block equal, so u and the result satisfy the N criterion.
inline Word shuffle_2_blocks(std::mt19937& rng, const Word& w) {
  FullDecomposition fd = full_decompose(w);
  Word out;
  for (std::size_t i = 0; i < fd.dec.block_count(); ++i) {
    out += fd.dec.dividers[i];
    Word block = fd.dec.blocks[i];
    if (fd.blocks[i].cls == BlockClass::TwoBlock)
      std::shuffle(block.letters.begin(), block.letters.end(), rng);
    out += block;
  }
  return out;
}

}  // namespace monvar

#endif  // MONVAR_RANDOM_WORDS_HPP_
