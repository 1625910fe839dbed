#ifndef MONVAR_DERIVATION_HPP_
#define MONVAR_DERIVATION_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "monvar/blocks.hpp"
#include "monvar/families.hpp"
#include "monvar/word.hpp"

namespace monvar {

/// One way of reading a pattern inside a subject:
/// subject = prefix · ξ(pattern) · suffix.
struct Match {
  Word prefix;
  Substitution substitution;
  Word suffix;
};

namespace detail {

// Pattern letters in first-occurrence order; bindings are tried with image
// lengths ascending, which with leftmost-prefix-first gives a deterministic
// enumeration.
inline void match_at(const Word& pattern, const Word& subject, std::size_t start,
                     std::size_t i, std::size_t pos,
                     std::map<Letter, Word>& bound, std::vector<Match>& out) {
  if (i == pattern.size()) {
    Match m;
    m.prefix = Word({subject.letters.begin(),
                     subject.letters.begin() + static_cast<std::ptrdiff_t>(start)});
    m.substitution.mapping = bound;
    m.substitution.erase_unmapped = true;
    m.suffix = Word({subject.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                     subject.letters.end()});
    out.push_back(std::move(m));
    return;
  }
  const Letter& l = pattern[i];
  auto it = bound.find(l);
  if (it != bound.end()) {
    const Word& img = it->second;
    if (pos + img.size() > subject.size()) return;
    if (!std::equal(img.letters.begin(), img.letters.end(),
                    subject.letters.begin() + static_cast<std::ptrdiff_t>(pos)))
      return;
    match_at(pattern, subject, start, i + 1, pos + img.size(), bound, out);
    return;
  }
  for (std::size_t len = 0; pos + len <= subject.size(); ++len) {
    Word img({subject.letters.begin() + static_cast<std::ptrdiff_t>(pos),
              subject.letters.begin() + static_cast<std::ptrdiff_t>(pos + len)});
    bound.emplace(l, std::move(img));
    match_at(pattern, subject, start, i + 1, pos + len, bound, out);
    bound.erase(l);
  }
}

}  // namespace detail

/// All decompositions subject = prefix · ξ(pattern) · suffix where ξ maps
/// pattern letters to possibly-empty words, consistently. Leftmost prefix
/// first, then images in ascending length.
inline std::vector<Match> match_pattern(const Word& pattern, const Word& subject) {
  std::vector<Match> out;
  std::map<Letter, Word> bound;
  for (std::size_t start = 0; start <= subject.size(); ++start)
    detail::match_at(pattern, subject, start, 0, start, bound, out);
  return out;
}

enum class Direction { Forward, Backward };

inline const char* to_string(Direction d) {
  return d == Direction::Forward ? "forward" : "backward";
}

/// Every word obtainable from w by one application of id in the given
/// direction (pattern = that side, replaced by the other). w itself is
/// excluded unless include_self is set.
inline std::set<Word> one_step(const Word& w, const Identity& id, Direction dir,
                               bool include_self = false) {
  const Word& pattern = dir == Direction::Forward ? id.lhs : id.rhs;
  const Word& target = dir == Direction::Forward ? id.rhs : id.lhs;
  std::set<Word> out;
  for (const Match& m : match_pattern(pattern, w)) {
    Word result = m.prefix + apply_substitution(m.substitution, target) + m.suffix;
    if (include_self || result != w) out.insert(std::move(result));
  }
  return out;
}

struct DerivationStep {
  std::string identity_name;
  Direction direction = Direction::Forward;
  Match match;
  Word result;
};

struct DerivationTrace {
  Word source;
  std::vector<DerivationStep> steps;

  /// Reapplies each step and checks the recorded intermediate words.
  bool replay(const IdentitySystem& system, const Word& target) const {
    Word cur = source;
    for (const DerivationStep& s : steps) {
      const Identity* id = nullptr;
      for (const Identity& e : system.identities)
        if (e.name == s.identity_name) id = &e;
      if (!id) return false;
      const Word& pattern = s.direction == Direction::Forward ? id->lhs : id->rhs;
      const Word& repl = s.direction == Direction::Forward ? id->rhs : id->lhs;
      Word expect = s.match.prefix + apply_substitution(s.match.substitution, pattern) +
                    s.match.suffix;
      if (expect != cur) return false;
      cur = s.match.prefix + apply_substitution(s.match.substitution, repl) +
            s.match.suffix;
      if (cur != s.result) return false;
    }
    return cur == target;
  }
};

struct DeriveResult {
  std::optional<DerivationTrace> trace;  // empty means exhaustion, not a proof
  std::size_t states_explored = 0;

  bool found() const { return trace.has_value(); }
};

namespace detail {

// First (identity, direction, match) in scan order that rewrites `from` into
// `to`; used when assembling a trace from BFS parent pointers.
inline DerivationStep step_between(const IdentitySystem& system, const Word& from,
                                   const Word& to) {
  for (const Identity& id : system.identities) {
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
      const Word& pattern = dir == Direction::Forward ? id.lhs : id.rhs;
      const Word& repl = dir == Direction::Forward ? id.rhs : id.lhs;
      for (const Match& m : match_pattern(pattern, from)) {
        Word result = m.prefix + apply_substitution(m.substitution, repl) + m.suffix;
        if (result == to) return DerivationStep{id.name, dir, m, to};
      }
    }
  }
  throw std::logic_error("no single step between adjacent trace words");
}

}  // namespace detail

/// Bidirectional breadth-first search for a rewrite sequence lhs -> rhs using
/// the system's identities in both directions. Absence of a trace within the
/// bounds is not a non-derivability proof.
inline DeriveResult derives(const IdentitySystem& system, const Identity& goal,
                            std::size_t max_depth, std::size_t max_len,
                            std::size_t max_states) {
  DeriveResult res;
  if (goal.lhs == goal.rhs) {
    res.trace = DerivationTrace{goal.lhs, {}};
    return res;
  }
  // parent maps per side; side 0 grows from lhs, side 1 from rhs
  std::unordered_map<Word, Word> parent[2];
  std::deque<Word> frontier[2];
  std::size_t depth[2] = {0, 0};
  parent[0].emplace(goal.lhs, goal.lhs);
  parent[1].emplace(goal.rhs, goal.rhs);
  frontier[0].push_back(goal.lhs);
  frontier[1].push_back(goal.rhs);

  auto assemble = [&](const Word& meet) {
    std::vector<Word> path;  // lhs ... meet
    for (Word cur = meet;; cur = parent[0].at(cur)) {
      path.push_back(cur);
      if (cur == goal.lhs) break;
    }
    std::reverse(path.begin(), path.end());
    for (Word cur = meet; cur != goal.rhs;) {  // meet ... rhs
      cur = parent[1].at(cur);
      path.push_back(cur);
    }
    DerivationTrace trace;
    trace.source = goal.lhs;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      trace.steps.push_back(detail::step_between(system, path[i], path[i + 1]));
    res.trace = std::move(trace);
  };

  while (!frontier[0].empty() || !frontier[1].empty()) {
    // expand the smaller non-exhausted frontier one level
    int side;
    if (frontier[0].empty())
      side = 1;
    else if (frontier[1].empty())
      side = 0;
    else
      side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (depth[0] + depth[1] >= max_depth) break;
    ++depth[side];
    std::deque<Word> next;
    while (!frontier[side].empty()) {
      Word cur = std::move(frontier[side].front());
      frontier[side].pop_front();
      for (const Identity& id : system.identities) {
        for (Direction dir : {Direction::Forward, Direction::Backward}) {
          for (const Word& succ : one_step(cur, id, dir)) {
            if (succ.size() > max_len) continue;
            if (parent[side].count(succ)) continue;
            parent[side].emplace(succ, cur);
            ++res.states_explored;
            if (res.states_explored > max_states) return res;
            if (parent[1 - side].count(succ)) {
              assemble(succ);
              return res;
            }
            next.push_back(succ);
          }
        }
      }
    }
    frontier[side] = std::move(next);
  }
  return res;
}

/// Sorts each 2-block of a reduced word in letter order; reachable from w by
/// adjacent swaps of second occurrences, so the canonical forms of two
/// reduced words coincide exactly when the swap identity connects them.
inline Word sigma2_canonical(const Word& w) {
  FullDecomposition fd = full_decompose(w);  // throws NotReducedError
  Word out;
  for (std::size_t i = 0; i < fd.dec.block_count(); ++i) {
    out += fd.dec.dividers[i];
    if (fd.blocks[i].cls == BlockClass::TwoBlock) {
      Word sorted = fd.dec.blocks[i];
      std::sort(sorted.letters.begin(), sorted.letters.end());
      out += sorted;
    } else {
      out += fd.dec.blocks[i];
    }
  }
  return out;
}

}  // namespace monvar

#endif  // MONVAR_DERIVATION_HPP_
