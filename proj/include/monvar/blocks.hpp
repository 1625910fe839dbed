#ifndef MONVAR_BLOCKS_HPP_
#define MONVAR_BLOCKS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "monvar/word.hpp"

namespace monvar {

class NotReducedError : public std::runtime_error {
 public:
  explicit NotReducedError(const Word& w)
      : std::runtime_error("word is not reduced: " + format_word(w)) {}
};

/// Alternating dividers and blocks: w = t_0 w_0 t_1 w_1 ... t_m w_m, where
/// t_1..t_m are the simple letters of w in order of occurrence and t_0 is the
/// empty divider. Blocks are the (possibly empty) factors between dividers.
struct Decomposition {
  std::vector<Word> dividers;  // dividers[0] is the empty word
  std::vector<Word> blocks;    // blocks.size() == dividers.size()

  std::size_t block_count() const { return blocks.size(); }

  Word reassemble() const {
    Word w;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      w += dividers[i];
      w += blocks[i];
    }
    return w;
  }
};

enum class BlockClass { Empty, OneBlock, TwoBlock, Mixed };

inline const char* to_string(BlockClass c) {
  switch (c) {
    case BlockClass::Empty: return "empty";
    case BlockClass::OneBlock: return "1-block";
    case BlockClass::TwoBlock: return "2-block";
    case BlockClass::Mixed: return "mixed";
  }
  return "?";
}

/// A maximal run inside a block whose letters' other occurrences share one
/// target block (the second occurrences for a 1-block, the first for a
/// 2-block).
struct Subblock {
  Word letters;
  std::size_t target_block = 0;

  bool operator==(const Subblock&) const = default;
};

struct BlockDecomposition {
  BlockClass cls = BlockClass::Empty;
  std::vector<Subblock> subblocks;  // empty for an empty block

  bool operator==(const BlockDecomposition&) const = default;
};

struct FullDecomposition {
  Decomposition dec;
  std::vector<BlockDecomposition> blocks;
};

namespace detail {

// Per-position occurrence rank (1 for a letter's first occurrence, 2 for its
// second, ...).
inline std::vector<int> occurrence_ranks(const Word& w) {
  std::map<Letter, int> seen;
  std::vector<int> ranks(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) ranks[i] = ++seen[w[i]];
  return ranks;
}

// Block index of every position of w under its decomposition (dividers get
// the index of the block they precede, but only block positions are read).
inline std::vector<std::size_t> block_index_by_position(const Word& w) {
  auto simple = simple_letters(w);
  std::vector<std::size_t> idx(w.size());
  std::size_t block = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (simple.count(w[i])) ++block;
    idx[i] = block;
  }
  return idx;
}

}  // namespace detail

inline Decomposition decompose(const Word& w) {
  auto simple = simple_letters(w);
  Decomposition d;
  d.dividers.emplace_back();  // t_0 = empty word
  d.blocks.emplace_back();
  for (const Letter& l : w.letters) {
    if (simple.count(l)) {
      d.dividers.push_back(Word{{l}});
      d.blocks.emplace_back();
    } else {
      d.blocks.back() += l;
    }
  }
  return d;
}

/// Classification of block i of the decomposition of w by occurrence ranks.
inline BlockClass classify_block(const Word& w, const Decomposition& dec,
                                 std::size_t i) {
  if (i >= dec.block_count()) throw std::out_of_range("block index");
  if (dec.blocks[i].empty()) return BlockClass::Empty;
  auto ranks = detail::occurrence_ranks(w);
  auto idx = detail::block_index_by_position(w);
  auto simple = simple_letters(w);
  bool all1 = true, all2 = true;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (idx[p] != i || simple.count(w[p])) continue;
    if (ranks[p] != 1) all1 = false;
    if (ranks[p] != 2) all2 = false;
  }
  if (all1) return BlockClass::OneBlock;
  if (all2) return BlockClass::TwoBlock;
  return BlockClass::Mixed;
}

/// A word is reduced when every nonempty block is a 1-block or a 2-block;
/// this forces every multiple letter to occur exactly twice.
inline bool is_reduced(const Word& w) {
  auto dec = decompose(w);
  auto ranks = detail::occurrence_ranks(w);
  auto idx = detail::block_index_by_position(w);
  auto simple = simple_letters(w);
  // rank profile per block: bit 1 = has rank-1 occurrence, bit 2 = rank-2,
  // bit 4 = rank >= 3.
  std::vector<int> profile(dec.block_count(), 0);
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (simple.count(w[p])) continue;
    int r = ranks[p];
    profile[idx[p]] |= r == 1 ? 1 : r == 2 ? 2 : 4;
  }
  for (int pr : profile)
    if (pr != 0 && pr != 1 && pr != 2) return false;
  return true;
}

inline FullDecomposition full_decompose(const Word& w) {
  if (!is_reduced(w)) throw NotReducedError(w);
  FullDecomposition fd;
  fd.dec = decompose(w);
  auto ranks = detail::occurrence_ranks(w);
  auto idx = detail::block_index_by_position(w);
  auto simple = simple_letters(w);

  // In a reduced word every multiple letter occurs exactly twice; record the
  // block of each occurrence.
  std::map<Letter, std::size_t> first_block, second_block;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (simple.count(w[p])) continue;
    (ranks[p] == 1 ? first_block : second_block)[w[p]] = idx[p];
  }

  fd.blocks.resize(fd.dec.block_count());
  for (std::size_t i = 0; i < fd.dec.block_count(); ++i) {
    const Word& block = fd.dec.blocks[i];
    BlockDecomposition& bd = fd.blocks[i];
    bd.cls = classify_block(w, fd.dec, i);
    if (bd.cls == BlockClass::Empty) continue;
    bool one = bd.cls == BlockClass::OneBlock;
    for (const Letter& l : block.letters) {
      std::size_t target = one ? second_block.at(l) : first_block.at(l);
      if (bd.subblocks.empty() || bd.subblocks.back().target_block != target)
        bd.subblocks.push_back(Subblock{Word{}, target});
      bd.subblocks.back().letters += l;
    }
  }
  return fd;
}

/// Pretty form with underlined dividers and '|' between subblocks, e.g.
/// "a|bc|d _x_ cb _y_ e _z_ a|e|d".
inline std::string format_full_decomposition(const FullDecomposition& fd) {
  std::string out;
  auto append_part = [&out](const std::string& part) {
    if (!out.empty()) out += ' ';
    out += part;
  };
  for (std::size_t i = 0; i < fd.dec.block_count(); ++i) {
    if (i > 0) append_part("_" + format_word(fd.dec.dividers[i]) + "_");
    if (fd.blocks[i].cls == BlockClass::Empty) continue;
    std::string part;
    for (std::size_t j = 0; j < fd.blocks[i].subblocks.size(); ++j) {
      if (j) part += '|';
      part += format_word(fd.blocks[i].subblocks[j].letters);
    }
    append_part(part);
  }
  return out;
}

/// Same divider sequence and blockwise equal content.
inline bool are_equivalent(const Word& u, const Word& v) {
  auto du = decompose(u);
  auto dv = decompose(v);
  if (du.dividers != dv.dividers) return false;
  for (std::size_t i = 0; i < du.block_count(); ++i)
    if (content(du.blocks[i]) != content(dv.blocks[i])) return false;
  return true;
}

/// Equivalent, and every two corresponding 1-blocks have the same sequence of
/// subblock contents. Defined for reduced words only.
inline bool are_1_equivalent(const Word& u, const Word& v) {
  if (!is_reduced(u)) throw NotReducedError(u);
  if (!is_reduced(v)) throw NotReducedError(v);
  if (!are_equivalent(u, v)) return false;
  auto fu = full_decompose(u);
  auto fv = full_decompose(v);
  for (std::size_t i = 0; i < fu.blocks.size(); ++i) {
    if (fu.blocks[i].cls != fv.blocks[i].cls) return false;
    if (fu.blocks[i].cls != BlockClass::OneBlock) continue;
    const auto& su = fu.blocks[i].subblocks;
    const auto& sv = fv.blocks[i].subblocks;
    if (su.size() != sv.size()) return false;
    for (std::size_t j = 0; j < su.size(); ++j)
      if (content(su[j].letters) != content(sv[j].letters)) return false;
  }
  return true;
}

}  // namespace monvar

#endif  // MONVAR_BLOCKS_HPP_
