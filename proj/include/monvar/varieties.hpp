#ifndef MONVAR_VARIETIES_HPP_
#define MONVAR_VARIETIES_HPP_

#include <algorithm>
#include <optional>
#include <string>

#include "monvar/blocks.hpp"
#include "monvar/finite_monoid.hpp"
#include "monvar/word.hpp"

namespace monvar {

enum class VarietyId { T, SL, C, D1, D2, M, N, DualM, DualN };

inline const char* to_string(VarietyId v) {
  switch (v) {
    case VarietyId::T: return "T";
    case VarietyId::SL: return "SL";
    case VarietyId::C: return "C";
    case VarietyId::D1: return "D1";
    case VarietyId::D2: return "D2";
    case VarietyId::M: return "M";
    case VarietyId::N: return "N";
    case VarietyId::DualM: return "dualM";
    case VarietyId::DualN: return "dualN";
  }
  return "?";
}

inline std::optional<VarietyId> parse_variety(const std::string& s) {
  for (VarietyId v : {VarietyId::T, VarietyId::SL, VarietyId::C, VarietyId::D1,
                      VarietyId::D2, VarietyId::M, VarietyId::N, VarietyId::DualM,
                      VarietyId::DualN})
    if (s == to_string(v)) return v;
  return std::nullopt;
}

enum class DecisionMethod { Criterion, FiniteOracle };

struct Verdict {
  bool holds = false;
  DecisionMethod method = DecisionMethod::Criterion;
  std::optional<Assignment> witness;  // refuting assignment (finite oracle only)
  std::string oracle;                 // name of the oracle monoid, if used
};

/// Generators used as exact oracles: S(xysxty) generates M, S(xsytxy) its
/// dual, and S(xtx) generates D2. Built once, shared.
inline const FiniteMonoid& oracle_m() {
  static const FiniteMonoid m = build_sw({"xysxty"});
  return m;
}
inline const FiniteMonoid& oracle_dual_m() {
  static const FiniteMonoid m = build_sw({"xsytxy"});
  return m;
}
inline const FiniteMonoid& oracle_d2() {
  static const FiniteMonoid m = build_sw({"xtx"});
  return m;
}

inline bool holds_in_SL(const Identity& id) {
  return content(id.lhs) == content(id.rhs);
}

/// In a commutative monoid with x^2 = x^3 the value of a word depends only on
/// each letter's occurrence count capped at 2.
inline bool holds_in_C(const Identity& id) {
  auto cl = occurrence_counts(id.lhs);
  auto cr = occurrence_counts(id.rhs);
  for (const auto& counts : {cl, cr})
    for (const auto& [l, n] : counts) {
      auto itl = cl.find(l);
      auto itr = cr.find(l);
      int a = itl == cl.end() ? 0 : std::min(itl->second, 2);
      int b = itr == cr.end() ? 0 : std::min(itr->second, 2);
      if (a != b) return false;
    }
  return true;
}

/// Same simple letters in the same order, same multiple letters.
inline bool holds_in_D1(const Identity& id) {
  auto su = simple_letters(id.lhs);
  auto sv = simple_letters(id.rhs);
  if (su != sv) return false;
  if (multiple_letters(id.lhs) != multiple_letters(id.rhs)) return false;
  return restrict(id.lhs, su) == restrict(id.rhs, sv);
}

inline Verdict holds_in_D2(const Identity& id) {
  SatResult r = satisfies_identity(oracle_d2(), id);
  return Verdict{r.holds, DecisionMethod::FiniteOracle, r.witness, "S(xtx)"};
}

/// Reduced identities are decided by the 1-equivalence criterion; anything
/// else falls back to brute force over the generator S(xysxty), which is
/// exact for all identities.
inline Verdict holds_in_M(const Identity& id) {
  if (is_reduced(id.lhs) && is_reduced(id.rhs)) {
    return Verdict{are_1_equivalent(id.lhs, id.rhs), DecisionMethod::Criterion};
  }
  SatResult r = satisfies_identity(oracle_m(), id);
  return Verdict{r.holds, DecisionMethod::FiniteOracle, r.witness, "S(xysxty)"};
}

/// Criterion only: equivalent words whose corresponding 1-blocks are equal.
/// There is no finite oracle with a known construction for N, so non-reduced
/// input is rejected.
inline Verdict holds_in_N(const Identity& id) {
  if (!is_reduced(id.lhs)) throw NotReducedError(id.lhs);
  if (!is_reduced(id.rhs)) throw NotReducedError(id.rhs);
  if (!are_equivalent(id.lhs, id.rhs)) return Verdict{false, DecisionMethod::Criterion};
  auto fu = full_decompose(id.lhs);
  auto fv = full_decompose(id.rhs);
  for (std::size_t i = 0; i < fu.dec.block_count(); ++i) {
    bool one_u = fu.blocks[i].cls == BlockClass::OneBlock;
    bool one_v = fv.blocks[i].cls == BlockClass::OneBlock;
    if (one_u != one_v) return Verdict{false, DecisionMethod::Criterion};
    if (one_u && fu.dec.blocks[i] != fv.dec.blocks[i])
      return Verdict{false, DecisionMethod::Criterion};
  }
  return Verdict{true, DecisionMethod::Criterion};
}

inline Identity reversed_identity(const Identity& id) {
  return Identity(reverse(id.lhs), reverse(id.rhs), id.name);
}

inline Verdict holds_in(VarietyId v, const Identity& id);

/// Dual varieties satisfy exactly the letterwise-reversed identities.
inline Verdict holds_in_dual(VarietyId v, const Identity& id) {
  if (v != VarietyId::M && v != VarietyId::N)
    throw std::invalid_argument("dual decider defined for M and N only");
  return holds_in(v, reversed_identity(id));
}

inline Verdict holds_in(VarietyId v, const Identity& id) {
  switch (v) {
    case VarietyId::T:
      return Verdict{true, DecisionMethod::Criterion};
    case VarietyId::SL:
      return Verdict{holds_in_SL(id), DecisionMethod::Criterion};
    case VarietyId::C:
      return Verdict{holds_in_C(id), DecisionMethod::Criterion};
    case VarietyId::D1:
      return Verdict{holds_in_D1(id), DecisionMethod::Criterion};
    case VarietyId::D2:
      return holds_in_D2(id);
    case VarietyId::M:
      return holds_in_M(id);
    case VarietyId::N:
      return holds_in_N(id);
    case VarietyId::DualM:
      return holds_in_dual(VarietyId::M, id);
    case VarietyId::DualN:
      return holds_in_dual(VarietyId::N, id);
  }
  throw std::logic_error("unknown variety");
}

/// Isoterm criteria for M and N on reduced words: a nontrivial rearrangement
/// exists exactly when some 2-block has two letters or (for M) some subblock
/// of a 1-block has two letters.
inline bool is_isoterm(VarietyId v, const Word& w) {
  if (v != VarietyId::M && v != VarietyId::N)
    throw std::invalid_argument("isoterm criterion defined for M and N only");
  FullDecomposition fd = full_decompose(w);  // throws if not reduced
  for (const BlockDecomposition& b : fd.blocks) {
    if (b.cls == BlockClass::TwoBlock) {
      std::size_t total = 0;
      for (const Subblock& s : b.subblocks) total += s.letters.size();
      if (total > 1) return false;
    }
    if (v == VarietyId::M && b.cls == BlockClass::OneBlock) {
      for (const Subblock& s : b.subblocks)
        if (s.letters.size() > 1) return false;
    }
  }
  return true;
}

}  // namespace monvar

#endif  // MONVAR_VARIETIES_HPP_
