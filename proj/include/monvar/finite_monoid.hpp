#ifndef MONVAR_FINITE_MONOID_HPP_
#define MONVAR_FINITE_MONOID_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "monvar/word.hpp"

namespace monvar {

/// A finite monoid as an indexed element list with a total multiplication
/// table. Associativity and neutrality are checked on construction.
struct FiniteMonoid {
  std::vector<std::string> names;
  std::size_t identity_index = 0;
  std::optional<std::size_t> zero_index;
  std::vector<std::uint16_t> table;  // row-major, size() * size()

  std::size_t size() const { return names.size(); }

  std::size_t mul(std::size_t a, std::size_t b) const {
    return table[a * size() + b];
  }

  void check() const {
    std::size_t n = size();
    if (table.size() != n * n) throw std::logic_error("table size mismatch");
    for (std::size_t a = 0; a < n; ++a) {
      if (mul(identity_index, a) != a || mul(a, identity_index) != a)
        throw std::logic_error("identity element is not neutral");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::logic_error("multiplication is not associative");
    if (zero_index) {
      for (std::size_t a = 0; a < n; ++a)
        if (mul(*zero_index, a) != *zero_index || mul(a, *zero_index) != *zero_index)
          throw std::logic_error("zero element is not absorbing");
    }
  }
};

/// All contiguous factors of all words in W, including the empty word.
inline std::set<Word> subword_closure(const std::set<Word>& ws) {
  std::set<Word> out;
  out.insert(Word{});
  for (const Word& w : ws) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word factor;
      for (std::size_t j = i; j < w.size(); ++j) {
        factor += w[j];
        out.insert(factor);
      }
    }
  }
  return out;
}

/// The Rees quotient S(W): elements are the subwords of W plus an absorbing
/// zero; the product of two subwords is their concatenation when that is
/// again a subword, and zero otherwise.
inline FiniteMonoid build_sw(const std::set<Word>& ws) {
  std::set<Word> closure = subword_closure(ws);
  std::vector<Word> elems(closure.begin(), closure.end());
  std::sort(elems.begin(), elems.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  FiniteMonoid m;
  std::unordered_map<Word, std::uint16_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    m.names.push_back(elems[i].empty() ? "λ" : format_word(elems[i]));
    index.emplace(elems[i], static_cast<std::uint16_t>(i));
  }
  m.names.push_back("0");
  std::size_t n = m.names.size();
  std::uint16_t zero = static_cast<std::uint16_t>(n - 1);
  m.identity_index = 0;  // the empty word sorts first
  m.zero_index = zero;

  m.table.assign(n * n, zero);
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      auto it = index.find(elems[a] + elems[b]);
      if (it != index.end()) m.table[a * n + b] = it->second;
    }
  }
  m.check();
  return m;
}

inline FiniteMonoid build_sw(std::initializer_list<std::string> texts) {
  std::set<Word> ws;
  for (const auto& t : texts) ws.insert(parse_word(t));
  return build_sw(ws);
}

/// Componentwise product; element (a,b) has index a * |B| + b.
inline FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  FiniteMonoid m;
  std::size_t na = a.size(), nb = b.size(), n = na * nb;
  if (n > 60000) throw std::invalid_argument("product monoid too large");
  m.names.reserve(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      m.names.push_back("(" + a.names[i] + "," + b.names[j] + ")");
  m.identity_index = a.identity_index * nb + b.identity_index;
  if (a.zero_index && b.zero_index)
    m.zero_index = *a.zero_index * nb + *b.zero_index;
  m.table.resize(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          m.table[(i * nb + j) * n + (k * nb + l)] =
              static_cast<std::uint16_t>(a.mul(i, k) * nb + b.mul(j, l));
  if (n <= 256) m.check();
  return m;
}

/// The symmetric group on n points (n <= 5) as a monoid table. Elements are
/// permutations in lexicographic one-line order; composition acts left-first:
/// (p*q)(i) = q(p(i)).
inline FiniteMonoid symmetric_group_monoid(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("symmetric group bound is 1..5");
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, std::uint16_t> index;
  FiniteMonoid m;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = static_cast<std::uint16_t>(i);
    std::string name;
    for (int v : perms[i]) name += static_cast<char>('1' + v);
    m.names.push_back(name);
  }
  m.identity_index = index.at(base);
  std::size_t sz = perms.size();
  m.table.resize(sz * sz);
  for (std::size_t i = 0; i < sz; ++i) {
    for (std::size_t j = 0; j < sz; ++j) {
      std::vector<int> comp(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k)
        comp[static_cast<std::size_t>(k)] =
            perms[j][static_cast<std::size_t>(perms[i][static_cast<std::size_t>(k)])];
      m.table[i * sz + j] = index.at(comp);
    }
  }
  m.check();
  return m;
}

inline FiniteMonoid trivial_monoid() {
  FiniteMonoid m;
  m.names = {"e"};
  m.identity_index = 0;
  m.table = {0};
  return m;
}

/// A valuation of letters by element indices.
using Assignment = std::map<Letter, std::size_t>;

inline std::size_t evaluate(const FiniteMonoid& m, const Word& w, const Assignment& a) {
  std::size_t acc = m.identity_index;
  for (const Letter& l : w.letters) {
    auto it = a.find(l);
    if (it == a.end())
      throw std::invalid_argument("unassigned letter " + format_letter(l));
    acc = m.mul(acc, it->second);
    if (m.zero_index && acc == *m.zero_index) {
      // zero is absorbing; the rest of the fold cannot change the value
      return acc;
    }
  }
  return acc;
}

struct SatResult {
  bool holds = true;
  std::optional<Assignment> witness;  // first refuting assignment in scan order
};

namespace detail {

// Letters of the identity in first-occurrence order (lhs first).
inline std::vector<Letter> identity_letters(const Identity& id) {
  std::vector<Letter> out;
  std::set<Letter> seen;
  for (const Word* side : {&id.lhs, &id.rhs})
    for (const Letter& l : side->letters)
      if (seen.insert(l).second) out.push_back(l);
  return out;
}

// Word as positions into the letter list.
inline std::vector<std::size_t> encode(const Word& w, const std::vector<Letter>& letters) {
  std::vector<std::size_t> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters) {
    auto it = std::find(letters.begin(), letters.end(), l);
    out.push_back(static_cast<std::size_t>(it - letters.begin()));
  }
  return out;
}

inline std::size_t eval_encoded(const FiniteMonoid& m,
                                const std::vector<std::size_t>& word,
                                const std::vector<std::size_t>& values) {
  std::size_t acc = m.identity_index;
  for (std::size_t li : word) {
    acc = m.mul(acc, values[li]);
    if (m.zero_index && acc == *m.zero_index) return acc;
  }
  return acc;
}

}  // namespace detail

/// Exhaustive satisfaction check over all |M|^k assignments. Assignments are
/// scanned lexicographically: letters in first-occurrence order, elements by
/// index, with the last letter varying fastest, so the reported witness is
/// deterministic.
inline SatResult satisfies_identity(const FiniteMonoid& m, const Identity& id) {
  auto letters = detail::identity_letters(id);
  auto lhs = detail::encode(id.lhs, letters);
  auto rhs = detail::encode(id.rhs, letters);
  std::size_t k = letters.size();
  std::size_t n = m.size();

  double total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= static_cast<double>(n);
  if (total > 6e9) throw std::invalid_argument("assignment space too large");

  std::vector<std::size_t> values(k, 0);
  while (true) {
    if (detail::eval_encoded(m, lhs, values) != detail::eval_encoded(m, rhs, values)) {
      Assignment witness;
      for (std::size_t i = 0; i < k; ++i) witness[letters[i]] = values[i];
      return SatResult{false, witness};
    }
    // odometer increment, last letter fastest
    std::size_t pos = k;
    while (pos > 0) {
      if (++values[pos - 1] < n) break;
      values[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return SatResult{};
}

struct IsotermResult {
  bool isoterm = true;
  std::optional<Word> witness;  // first w' (by length, then lex) with w ≈ w' satisfied
  std::size_t candidates_checked = 0;
};

namespace detail {

// Sparse assignments used to reject candidate words cheaply before the full
// satisfaction scan: everything to the identity except at most two letters.
// A mismatch on any of them is already a refutation, so rejecting on one is
// exact; survivors still get the full scan.
class IsotermChecker {
 public:
  IsotermChecker(const FiniteMonoid& m, const Word& w,
                 const std::vector<Letter>& letters)
      : m_(m), letters_(letters), subject_(encode(w, letters)) {
    std::size_t k = letters.size(), n = m.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t e = 0; e < n; ++e) {
        if (e == m.identity_index) continue;
        sparse_.push_back({{i, e}, {k, 0}});
      }
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        for (std::size_t e = 0; e < n; ++e)
          for (std::size_t f = 0; f < n; ++f) {
            if (e == m.identity_index || f == m.identity_index) continue;
            sparse_.push_back({{i, e}, {j, f}});
          }
      }
    subject_sparse_.reserve(sparse_.size());
    for (const auto& s : sparse_) subject_sparse_.push_back(eval_sparse(subject_, s));
  }

  bool equivalent(const std::vector<std::size_t>& candidate) const {
    for (std::size_t si = 0; si < sparse_.size(); ++si)
      if (eval_sparse(candidate, sparse_[si]) != subject_sparse_[si]) return false;
    // full scan
    std::size_t k = letters_.size(), n = m_.size();
    std::vector<std::size_t> values(k, 0);
    while (true) {
      std::size_t a = eval_values(subject_, values);
      std::size_t b = eval_values(candidate, values);
      if (a != b) return false;
      std::size_t pos = k;
      while (pos > 0) {
        if (++values[pos - 1] < n) break;
        values[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
    return true;
  }

 private:
  using SparseAssignment = std::pair<std::pair<std::size_t, std::size_t>,
                                     std::pair<std::size_t, std::size_t>>;

  std::size_t eval_sparse(const std::vector<std::size_t>& word,
                          const SparseAssignment& s) const {
    std::size_t acc = m_.identity_index;
    for (std::size_t li : word) {
      std::size_t v = li == s.first.first    ? s.first.second
                      : li == s.second.first ? s.second.second
                                             : m_.identity_index;
      acc = m_.mul(acc, v);
      if (m_.zero_index && acc == *m_.zero_index) return acc;
    }
    return acc;
  }

  std::size_t eval_values(const std::vector<std::size_t>& word,
                          const std::vector<std::size_t>& values) const {
    std::size_t acc = m_.identity_index;
    for (std::size_t li : word) {
      acc = m_.mul(acc, values[li]);
      if (m_.zero_index && acc == *m_.zero_index) return acc;
    }
    return acc;
  }

  const FiniteMonoid& m_;
  const std::vector<Letter>& letters_;
  std::vector<std::size_t> subject_;
  std::vector<SparseAssignment> sparse_;
  std::vector<std::size_t> subject_sparse_;
};

}  // namespace detail

/// Bounded isoterm search: scans every word w' != w over content(w) with
/// length <= max_len and per-letter multiplicity <= max_mult, in order of
/// length then letter-lexicographic, and reports the first w' for which
/// m satisfies w ≈ w'. An Isoterm verdict is relative to the bounds.
///
/// Candidate counts are pre-restricted to occurrence counts that the monoid
/// itself cannot distinguish on powers (e^c vs e^c' for every element e);
/// any other count is refuted by a single-letter assignment, so the
/// restriction does not change the verdict.
inline IsotermResult is_isoterm_bounded(const FiniteMonoid& m, const Word& w,
                                        std::size_t max_len, int max_mult) {
  if (max_len < w.size()) throw std::invalid_argument("max_len below len(w)");
  std::vector<Letter> letters;
  for (const Letter& l : content(w)) letters.push_back(l);
  std::size_t k = letters.size();
  auto counts = occurrence_counts(w);

  // powers e^c for c = 0..max_mult
  std::size_t n = m.size();
  std::vector<std::vector<std::size_t>> pow(n);
  int max_count = max_mult;
  for (auto& [l, c] : counts) max_count = std::max(max_count, c);
  for (std::size_t e = 0; e < n; ++e) {
    pow[e].resize(static_cast<std::size_t>(max_count) + 1);
    pow[e][0] = m.identity_index;
    for (int c = 1; c <= max_count; ++c)
      pow[e][static_cast<std::size_t>(c)] = m.mul(pow[e][static_cast<std::size_t>(c - 1)], e);
  }
  auto counts_indistinguishable = [&](int c1, int c2) {
    for (std::size_t e = 0; e < n; ++e)
      if (pow[e][static_cast<std::size_t>(c1)] != pow[e][static_cast<std::size_t>(c2)])
        return false;
    return true;
  };
  std::vector<std::vector<int>> allowed(k);
  for (std::size_t i = 0; i < k; ++i) {
    int c = counts.at(letters[i]);
    for (int c2 = 0; c2 <= max_mult; ++c2)
      if (counts_indistinguishable(c, c2)) allowed[i].push_back(c2);
    if (allowed[i].empty()) return IsotermResult{};  // every candidate refutable
  }

  detail::IsotermChecker checker(m, w, letters);
  auto encoded_w = detail::encode(w, letters);
  IsotermResult result;

  std::vector<std::size_t> candidate;
  std::vector<int> used(k, 0);
  // DFS in letter-lex order; emits candidates of the current target length.
  auto emit = [&](std::size_t target_len, auto&& self) -> bool {
    if (candidate.size() == target_len) {
      bool complete = true;
      for (std::size_t i = 0; i < k; ++i) {
        if (std::find(allowed[i].begin(), allowed[i].end(), used[i]) == allowed[i].end()) {
          complete = false;
          break;
        }
      }
      if (!complete || candidate == encoded_w) return false;
      ++result.candidates_checked;
      return checker.equivalent(candidate);
    }
    // prune branches that cannot reach the minimum allowed counts in the
    // remaining positions
    std::size_t deficit = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (used[i] < allowed[i].front())
        deficit += static_cast<std::size_t>(allowed[i].front() - used[i]);
    if (candidate.size() + deficit > target_len) return false;
    for (std::size_t i = 0; i < k; ++i) {
      if (used[i] >= max_mult) continue;
      if (used[i] + 1 > allowed[i].back()) continue;
      candidate.push_back(i);
      ++used[i];
      if (self(target_len, self)) return true;
      --used[i];
      candidate.pop_back();
    }
    return false;
  };

  for (std::size_t len = 0; len <= max_len; ++len) {
    candidate.clear();
    std::fill(used.begin(), used.end(), 0);
    if (emit(len, emit)) {
      Word witness;
      for (std::size_t li : candidate) witness += letters[li];
      result.isoterm = false;
      result.witness = witness;
      return result;
    }
  }
  return result;
}

}  // namespace monvar

#endif  // MONVAR_FINITE_MONOID_HPP_
