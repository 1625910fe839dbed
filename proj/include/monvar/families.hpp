#ifndef MONVAR_FAMILIES_HPP_
#define MONVAR_FAMILIES_HPP_

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "monvar/blocks.hpp"
#include "monvar/varieties.hpp"
#include "monvar/word.hpp"

namespace monvar {

/// Tuple (1, i_1, ..., i_{k-1}) with 1 <= i_j <= n, ordered lexicographically
/// within fixed (n, k).
using IndexTuple = std::vector<int>;

inline IndexTuple tuple_extend(IndexTuple gamma, int j) {
  gamma.push_back(j);
  return gamma;
}

/// All n^{k-1} tuples of arity k in ascending order.
inline std::vector<IndexTuple> index_set(int n, int k, std::size_t cap = 2000000) {
  if (n < 1 || k < 1) throw std::invalid_argument("index_set requires n, k >= 1");
  double total = 1;
  for (int i = 1; i < k; ++i) total *= n;
  if (total > static_cast<double>(cap))
    throw std::invalid_argument("index set too large");
  std::vector<IndexTuple> out;
  out.reserve(static_cast<std::size_t>(total));
  IndexTuple cur(static_cast<std::size_t>(k), 1);
  while (true) {
    out.push_back(cur);
    // odometer over entries 2..k, last fastest
    int pos = k - 1;
    while (pos >= 1) {
      if (++cur[static_cast<std::size_t>(pos)] <= n) break;
      cur[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 1) break;
  }
  return out;
}

namespace detail {

inline Letter plain(const std::string& base) { return Letter(base); }
inline Letter indexed(const std::string& base, int m) { return Letter(base, {m}); }
inline Letter family(const std::string& base, const IndexTuple& gamma, int sup) {
  return Letter(base, gamma, sup);
}

inline void check_letter_cap(const Word& w, std::size_t cap) {
  if (w.size() > cap) throw std::invalid_argument("word exceeds the letter cap");
}

}  // namespace detail

/// c_n: for each gamma in ascending order, s_gamma^(1) x_gamma^(1) ...
/// s_gamma^(n) x_gamma^(n).
inline Word build_c(int n, std::size_t cap = 5000) {
  if (n < 1) throw std::invalid_argument("build_c requires n >= 1");
  Word w;
  for (const IndexTuple& gamma : index_set(n, n, cap)) {
    for (int j = 1; j <= n; ++j) {
      w += detail::family("s", gamma, j);
      w += detail::family("x", gamma, j);
    }
    detail::check_letter_cap(w, cap);
  }
  return w;
}

/// d_n^(k): s_k, then for each gamma of arity k and each j, x_gamma^(j)
/// followed by x_{gamma+j}^(1) ... x_{gamma+j}^(n).
inline Word build_d(int n, int k, std::size_t cap = 5000) {
  if (n < 1 || k < 1) throw std::invalid_argument("build_d requires n, k >= 1");
  Word w;
  w += detail::indexed("s", k);
  for (const IndexTuple& gamma : index_set(n, k, cap)) {
    for (int j = 1; j <= n; ++j) {
      w += detail::family("x", gamma, j);
      IndexTuple ext = tuple_extend(gamma, j);
      for (int l = 1; l <= n; ++l) w += detail::family("x", ext, l);
    }
    detail::check_letter_cap(w, cap);
  }
  return w;
}

inline Word build_e(int m) {
  if (m < 0) throw std::invalid_argument("build_e requires m >= 0");
  Word w;
  w += detail::indexed("s", m);
  w += detail::indexed("x", m);
  w += detail::indexed("t", m);
  w += detail::indexed("y", m);
  return w;
}

inline Word build_f(int m) {
  if (m < 0) throw std::invalid_argument("build_f requires m >= 0");
  Word w;
  w += detail::indexed("s", m);
  w += detail::indexed("x", m);
  w += detail::indexed("x", m + 1);
  w += detail::indexed("y", m + 1);
  w += detail::indexed("y", m);
  return w;
}

/// Permutations of {1..2n} attached to odd-arity index tuples; missing
/// entries act as the identity. Used for the rearranged a-words.
using ZetaFamily = std::map<IndexTuple, std::vector<int>>;

namespace detail {

inline const std::vector<int>* zeta_perm(const ZetaFamily& zetas, const IndexTuple& alpha,
                                         int two_n) {
  auto it = zetas.find(alpha);
  if (it == zetas.end()) return nullptr;
  const std::vector<int>& p = it->second;
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < two_n; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i + 1)
      throw std::invalid_argument("zeta is not a permutation of 1..2n");
  return &it->second;
}

// a_n with the leading pair chi(xy) and the x-letters of odd-arity groups
// permuted by the zeta family (identity family yields a_n itself).
inline Word build_a_impl(int n, bool swap_head, const ZetaFamily& zetas,
                         std::size_t cap) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  int two_n = 2 * n;
  Word w;
  w += plain(swap_head ? "y" : "x");
  w += plain(swap_head ? "x" : "y");
  for (int i = 1; i <= n; ++i) {
    // d_{2n}^(2i-1) with the inner odd-arity group gamma+j permuted
    int k = 2 * i - 1;
    w += indexed("s", k);
    for (const IndexTuple& gamma : index_set(two_n, k, cap)) {
      for (int j = 1; j <= two_n; ++j) {
        w += family("x", gamma, j);
        IndexTuple ext = tuple_extend(gamma, j);
        const std::vector<int>* perm = zeta_perm(zetas, ext, two_n);
        for (int l = 1; l <= two_n; ++l)
          w += family("x", ext, perm ? (*perm)[static_cast<std::size_t>(l - 1)] : l);
      }
      check_letter_cap(w, cap);
    }
  }
  w += build_c(two_n, cap);
  detail::check_letter_cap(w, cap);
  for (int i = n - 1; i >= 1; --i) w += build_d(two_n, 2 * i, cap);
  detail::check_letter_cap(w, cap);
  w += plain("s");
  w += plain("x");
  IndexTuple one{1};
  const std::vector<int>* perm = zeta_perm(zetas, one, two_n);
  for (int i = 1; i <= two_n; ++i)
    w += family("x", one, perm ? (*perm)[static_cast<std::size_t>(i - 1)] : i);
  w += plain("y");
  detail::check_letter_cap(w, cap);
  return w;
}

}  // namespace detail

inline Word build_a(int n, std::size_t cap = 5000) {
  return detail::build_a_impl(n, false, {}, cap);
}

inline Word build_a_prime(int n, std::size_t cap = 5000) {
  return detail::build_a_impl(n, true, {}, cap);
}

/// The rearranged word (identity zetas give a_n): each odd-arity letter group
/// {x_alpha^(1..2n)} may be permuted, both inside the descending-d section and
/// in the trailing x_1 group.
inline Word build_a_variant(int n, const ZetaFamily& zetas, std::size_t cap = 5000) {
  for (const auto& [alpha, perm] : zetas) {
    if (alpha.empty() || alpha.front() != 1)
      throw std::invalid_argument("zeta index tuple must start with 1");
    if (alpha.size() % 2 == 0)
      throw std::invalid_argument("zeta index tuples must have odd arity");
  }
  return detail::build_a_impl(n, false, zetas, cap);
}

namespace detail {

inline Word build_b_impl(int n, bool swap_head, const std::vector<bool>& swaps) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  Word w;
  w += indexed(swap_head ? "y" : "x", 0);
  w += indexed(swap_head ? "x" : "y", 0);
  for (int i = 1; i <= n; ++i) w += build_f(2 * i - 1);
  w += build_e(2 * n);
  for (int i = n - 1; i >= 0; --i) {
    bool swap = swaps[static_cast<std::size_t>(i)];
    w += indexed("s", 2 * i);
    w += indexed("x", 2 * i);
    w += indexed(swap ? "y" : "x", 2 * i + 1);
    w += indexed(swap ? "x" : "y", 2 * i + 1);
    w += indexed("y", 2 * i);
  }
  return w;
}

}  // namespace detail

inline Word build_b(int n) {
  return detail::build_b_impl(n, false, std::vector<bool>(static_cast<std::size_t>(n)));
}

inline Word build_b_prime(int n) {
  return detail::build_b_impl(n, true, std::vector<bool>(static_cast<std::size_t>(n)));
}

/// The rearranged word with tail factors s_{2i} x_{2i} ζ_i(x_{2i+1})
/// ζ_i(y_{2i+1}) y_{2i}; each ζ_i either fixes or swaps the inner pair.
inline Word build_b_variant(int n, const std::vector<bool>& swaps) {
  if (static_cast<int>(swaps.size()) != n)
    throw std::invalid_argument("expected one zeta choice per 0..n-1");
  return detail::build_b_impl(n, false, swaps);
}

/// Substitution form: each zeta_i must map {x_{2i+1}, y_{2i+1}} onto itself.
inline Word build_b_variant(int n, const std::vector<Substitution>& zetas) {
  if (static_cast<int>(zetas.size()) != n)
    throw std::invalid_argument("expected one zeta per 0..n-1");
  std::vector<bool> swaps(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Word xs{{detail::indexed("x", 2 * i + 1)}};
    Word ys{{detail::indexed("y", 2 * i + 1)}};
    Word ix = apply_substitution(zetas[static_cast<std::size_t>(i)], xs);
    Word iy = apply_substitution(zetas[static_cast<std::size_t>(i)], ys);
    if (ix == xs && iy == ys)
      swaps[static_cast<std::size_t>(i)] = false;
    else if (ix == ys && iy == xs)
      swaps[static_cast<std::size_t>(i)] = true;
    else
      throw std::invalid_argument("zeta must fix or swap the pair x, y at its level");
  }
  return detail::build_b_impl(n, false, swaps);
}

/// The endomorphism collapsing a_n onto b_n: keeps x, y, s (as their
/// 0-indexed forms), the odd/even section dividers, and the all-ones index
/// tuples; every other letter is erased.
inline Substitution eta(int n) {
  if (n < 1) throw std::invalid_argument("eta requires n >= 1");
  int two_n = 2 * n;
  Substitution sub;
  sub.erase_unmapped = true;
  auto map1 = [&sub](const Letter& from, const Letter& to) {
    sub.mapping[from] = Word{{to}};
  };
  map1(detail::plain("x"), detail::indexed("x", 0));
  map1(detail::plain("y"), detail::indexed("y", 0));
  map1(detail::plain("s"), detail::indexed("s", 0));
  for (int q = 1; q <= two_n - 1; ++q)
    map1(detail::indexed("s", q), detail::indexed("s", q));
  for (int q = 1; q <= two_n; ++q) {
    IndexTuple ones(static_cast<std::size_t>(q), 1);
    map1(detail::family("x", ones, 1), detail::indexed("x", q));
    map1(detail::family("x", ones, 2), detail::indexed("y", q));
  }
  IndexTuple ones(static_cast<std::size_t>(two_n), 1);
  map1(detail::family("s", ones, 1), detail::indexed("s", two_n));
  map1(detail::family("s", ones, 2), detail::indexed("t", two_n));
  return sub;
}

/// True iff every length-2 factor of w occurs exactly once.
inline bool unique_bigrams(const Word& w) {
  std::set<std::pair<Letter, Letter>> seen;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!seen.insert({w[i], w[i + 1]}).second) return false;
  return true;
}

struct IdentitySystem {
  std::vector<Identity> identities;

  void add(const std::string& name, const std::string& text) {
    Identity id = parse_identity(text);
    id.name = name;
    add(std::move(id));
  }
  void add(Identity id) {
    for (const Identity& e : identities)
      if (!id.name.empty() && e.name == id.name)
        throw std::invalid_argument("duplicate identity name: " + id.name);
    identities.push_back(std::move(id));
  }
};

inline Identity sigma1() { return parse_identity("sigma1: xyzxty = yxzxty"); }
inline Identity sigma2() { return parse_identity("sigma2: xtyzxy = xtyzyx"); }
inline Identity sigma3() { return parse_identity("sigma3: xzxyty = xzyxty"); }

inline IdentitySystem phi_system() {
  IdentitySystem s;
  s.add("phi1", "xxy = yxx");
  s.add("phi2", "xxyz = xyxzx");
  s.add(sigma3());
  return s;
}

inline IdentitySystem variety_basis(VarietyId v) {
  IdentitySystem s;
  switch (v) {
    case VarietyId::T:
      s.add("t", "x =");
      return s;
    case VarietyId::SL:
      s.add("idem", "xx = x");
      s.add("comm", "xy = yx");
      return s;
    case VarietyId::C:
      s.add("aper", "xx = xxx");
      s.add("comm", "xy = yx");
      return s;
    case VarietyId::D1:
      s.add("aper", "xx = xxx");
      s.add("d1a", "xxy = xyx");
      s.add("d1b", "xyx = yxx");
      return s;
    case VarietyId::D2:
      s = phi_system();
      s.add(sigma1());
      s.add(sigma2());
      return s;
    case VarietyId::M:
      s = phi_system();
      s.add("m", "xyzxy = yxzxy");
      s.add(sigma2());
      return s;
    case VarietyId::N:
      s = phi_system();
      s.add(sigma2());
      return s;
    case VarietyId::DualM:
    case VarietyId::DualN: {
      IdentitySystem base =
          variety_basis(v == VarietyId::DualM ? VarietyId::M : VarietyId::N);
      for (const Identity& id : base.identities)
        s.add(Identity(reverse(id.lhs), reverse(id.rhs), id.name + "-rev"));
      return s;
    }
  }
  throw std::logic_error("unknown variety");
}

/// The separating systems {a_n = a_n' | n in K}, truncated at the cap.
inline IdentitySystem sigma_K(const std::set<int>& K, int cap,
                              std::size_t letter_cap = 5000) {
  IdentitySystem s;
  for (int n : K) {
    if (n > cap) continue;
    if (n < 1) throw std::invalid_argument("sigma_K requires positive n");
    s.add(Identity(build_a(n, letter_cap), build_a_prime(n, letter_cap),
                   "a" + std::to_string(n)));
  }
  return s;
}

/// Shape of a full decomposition with subblock targets forgotten; used to
/// compare a computed decomposition against a formula-level expansion.
struct BlockShape {
  BlockClass cls = BlockClass::Empty;
  std::vector<Word> subblocks;

  bool operator==(const BlockShape&) const = default;
};

struct DecompositionShape {
  std::vector<Word> dividers;  // dividers[0] empty
  std::vector<BlockShape> blocks;

  bool operator==(const DecompositionShape&) const = default;
};

inline DecompositionShape shape_of(const FullDecomposition& fd) {
  DecompositionShape s;
  s.dividers = fd.dec.dividers;
  s.blocks.resize(fd.blocks.size());
  for (std::size_t i = 0; i < fd.blocks.size(); ++i) {
    s.blocks[i].cls = fd.blocks[i].cls;
    for (const Subblock& sb : fd.blocks[i].subblocks)
      s.blocks[i].subblocks.push_back(sb.letters);
  }
  return s;
}

/// Expansion of the claimed full decomposition of a_n (swapped: a_n'),
/// independent of the decomposition algorithm.
inline DecompositionShape expected_a_shape(int n, bool swapped,
                                           std::size_t cap = 5000) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  int two_n = 2 * n;
  DecompositionShape s;
  auto add_block = [&s](const Word& divider, BlockShape shape) {
    s.dividers.push_back(divider);
    s.blocks.push_back(std::move(shape));
  };

  // leading 1-block chi(xy): one subblock, both second occurrences in the tail
  {
    BlockShape head;
    head.cls = BlockClass::OneBlock;
    Word pair;
    pair += detail::plain(swapped ? "y" : "x");
    pair += detail::plain(swapped ? "x" : "y");
    head.subblocks.push_back(pair);
    add_block(Word{}, std::move(head));
  }

  // ascending odd sections: heads are singleton subblocks, each extension
  // group shares one target so it forms one subblock
  for (int i = 1; i <= n - 1; ++i) {
    BlockShape b;
    b.cls = BlockClass::OneBlock;
    for (const IndexTuple& gamma : index_set(two_n, 2 * i - 1, cap)) {
      for (int j = 1; j <= two_n; ++j) {
        b.subblocks.push_back(Word{{detail::family("x", gamma, j)}});
        Word group;
        IndexTuple ext = tuple_extend(gamma, j);
        for (int l = 1; l <= two_n; ++l) group += detail::family("x", ext, l);
        b.subblocks.push_back(group);
      }
    }
    add_block(Word{{detail::indexed("s", 2 * i - 1)}}, std::move(b));
  }

  // section before the c-part: extension letters land in distinct c-blocks,
  // so every letter is its own subblock
  {
    BlockShape b;
    b.cls = BlockClass::OneBlock;
    for (const IndexTuple& gamma : index_set(two_n, two_n - 1, cap)) {
      for (int j = 1; j <= two_n; ++j) {
        b.subblocks.push_back(Word{{detail::family("x", gamma, j)}});
        IndexTuple ext = tuple_extend(gamma, j);
        for (int l = 1; l <= two_n; ++l)
          b.subblocks.push_back(Word{{detail::family("x", ext, l)}});
      }
    }
    add_block(Word{{detail::indexed("s", two_n - 1)}}, std::move(b));
  }

  // c-part: singleton 2-blocks
  for (const IndexTuple& gamma : index_set(two_n, two_n, cap)) {
    for (int j = 1; j <= two_n; ++j) {
      BlockShape b;
      b.cls = BlockClass::TwoBlock;
      b.subblocks.push_back(Word{{detail::family("x", gamma, j)}});
      add_block(Word{{detail::family("s", gamma, j)}}, std::move(b));
    }
  }

  // descending even sections
  for (int i = n - 1; i >= 1; --i) {
    BlockShape b;
    b.cls = BlockClass::TwoBlock;
    for (const IndexTuple& gamma : index_set(two_n, 2 * i, cap)) {
      for (int j = 1; j <= two_n; ++j) {
        b.subblocks.push_back(Word{{detail::family("x", gamma, j)}});
        Word group;
        IndexTuple ext = tuple_extend(gamma, j);
        for (int l = 1; l <= two_n; ++l) group += detail::family("x", ext, l);
        b.subblocks.push_back(group);
      }
    }
    add_block(Word{{detail::indexed("s", 2 * i)}}, std::move(b));
  }

  // tail 2-block x | x_1 group | y
  {
    BlockShape b;
    b.cls = BlockClass::TwoBlock;
    b.subblocks.push_back(Word{{detail::plain("x")}});
    Word group;
    IndexTuple one{1};
    for (int i = 1; i <= two_n; ++i) group += detail::family("x", one, i);
    b.subblocks.push_back(group);
    b.subblocks.push_back(Word{{detail::plain("y")}});
    add_block(Word{{detail::plain("s")}}, std::move(b));
  }
  return s;
}

}  // namespace monvar

#endif  // MONVAR_FAMILIES_HPP_
