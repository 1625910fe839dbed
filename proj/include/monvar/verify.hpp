#ifndef MONVAR_VERIFY_HPP_
#define MONVAR_VERIFY_HPP_

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monvar/blocks.hpp"
#include "monvar/derivation.hpp"
#include "monvar/families.hpp"
#include "monvar/finite_monoid.hpp"
#include "monvar/random_words.hpp"
#include "monvar/varieties.hpp"
#include "monvar/word.hpp"

namespace monvar {

enum class VerifyMode { Quick, Full };

struct CheckResult {
  std::string name;
  std::string status;  // pass | fail | skipped(budget)
  std::string details;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const CheckResult& c : checks)
      if (c.status == "fail") return false;
    return true;
  }
};

namespace detail {

struct CheckContext {
  std::ostringstream details;
  bool budget_exceeded = false;
  std::chrono::steady_clock::time_point deadline;

  bool out_of_budget() {
    if (std::chrono::steady_clock::now() > deadline) budget_exceeded = true;
    return budget_exceeded;
  }
};

inline void run_check(VerifyReport& report, const std::string& name,
                      double budget_seconds,
                      const std::function<bool(CheckContext&)>& body) {
  CheckResult r;
  r.name = name;
  CheckContext ctx;
  ctx.deadline = std::chrono::steady_clock::now() +
                 std::chrono::milliseconds(static_cast<long>(budget_seconds * 1000));
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(ctx);
  } catch (const std::exception& e) {
    ok = false;
    ctx.details << " exception: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                  .count();
  if (ctx.budget_exceeded && ok)
    r.status = "skipped(budget)";
  else
    r.status = ok ? "pass" : "fail";
  r.details = ctx.details.str();
  report.checks.push_back(std::move(r));
}

inline Word canonical_word_letters(const std::vector<int>& seq,
                                   const std::vector<Letter>& alphabet) {
  Word w;
  for (int i : seq) w += alphabet[static_cast<std::size_t>(i)];
  return w;
}

}  // namespace detail

inline VerifyReport run_verify(VerifyMode mode) {
  using detail::run_check;
  VerifyReport report;
  const bool full = mode == VerifyMode::Full;
  const int random_cases = full ? 1000 : 100;
  const int max_family_n = full ? 2 : 1;

  // 1. worked-example full decomposition
  run_check(report, "example-decomposition", 5, [](detail::CheckContext& ctx) {
    Word w = parse_word("abcdxcbyezaed");
    FullDecomposition fd = full_decompose(w);
    std::string got = format_full_decomposition(fd);
    ctx.details << got;
    if (got != "a|bc|d _x_ cb _y_ e _z_ a|e|d") return false;
    if (fd.blocks.size() != 4) return false;
    bool classes = fd.blocks[0].cls == BlockClass::OneBlock &&
                   fd.blocks[1].cls == BlockClass::TwoBlock &&
                   fd.blocks[2].cls == BlockClass::OneBlock &&
                   fd.blocks[3].cls == BlockClass::TwoBlock;
    bool contents = format_word(fd.dec.blocks[0]) == "abcd" &&
                    format_word(fd.dec.blocks[1]) == "cb" &&
                    format_word(fd.dec.blocks[2]) == "e" &&
                    format_word(fd.dec.blocks[3]) == "aed";
    return classes && contents;
  });

  // 2. Rees quotient sizes and table checks
  run_check(report, "sw-sizes", 10, [](detail::CheckContext& ctx) {
    std::size_t a = build_sw({"xtx"}).size();
    std::size_t b = build_sw({"xysxty"}).size();
    std::size_t c = build_sw({"xsytxy"}).size();
    std::size_t d = build_sw({"xytxy", "xytyx"}).size();
    ctx.details << a << "/" << b << "/" << c << "/" << d;
    return a == 7 && b == 21 && c == 21 && d == 21;
  });

  // 3. generator/basis coherence
  run_check(report, "generator-coherence", 60, [](detail::CheckContext& ctx) {
    const FiniteMonoid& sm = oracle_m();
    for (const Identity& id : variety_basis(VarietyId::M).identities) {
      if (!satisfies_identity(sm, id).holds) {
        ctx.details << "S(xysxty) refutes " << id.name;
        return false;
      }
    }
    SatResult s1 = satisfies_identity(sm, sigma1());
    if (s1.holds || !s1.witness) {
      ctx.details << "S(xysxty) fails to refute the first swap identity";
      return false;
    }
    Identity sig1 = sigma1();
    if (evaluate(sm, sig1.lhs, *s1.witness) == evaluate(sm, sig1.rhs, *s1.witness)) {
      ctx.details << "returned witness does not refute";
      return false;
    }
    const FiniteMonoid& d2 = oracle_d2();
    IdentitySystem d2_ids = phi_system();
    d2_ids.add(sigma1());
    d2_ids.add(sigma2());
    for (const Identity& id : d2_ids.identities)
      if (!satisfies_identity(d2, id).holds) {
        ctx.details << "S(xtx) refutes " << id.name;
        return false;
      }
    const FiniteMonoid& dm = oracle_dual_m();
    for (const Identity& id : variety_basis(VarietyId::DualM).identities)
      if (!satisfies_identity(dm, id).holds) {
        ctx.details << "S(xsytxy) refutes " << id.name;
        return false;
      }
    ctx.details << "all basis identities verified";
    return true;
  });

  // 4. criterion vs oracle for the 1-equivalence decider
  run_check(report, "criterion-oracle-agreement", 300,
            [random_cases](detail::CheckContext& ctx) {
              std::mt19937 rng(20240817);
              const FiniteMonoid& sm = oracle_m();
              for (int i = 0; i < random_cases; ++i) {
                Word u, v;
                if (i % 2 == 0) {
                  auto alpha = default_alphabet(5);
                  u = random_reduced_word(rng, alpha, 10);
                  v = random_reduced_word(rng, alpha, 10);
                } else {
                  auto alpha = default_alphabet(4);
                  u = random_reduced_word(rng, alpha, 10);
                  v = shuffle_preserving_1_equivalence(rng, u);
                }
                bool crit = are_1_equivalent(u, v);
                bool oracle = satisfies_identity(sm, Identity(u, v)).holds;
                if (crit != oracle) {
                  ctx.details << "disagreement on " << format_word(u) << " = "
                              << format_word(v) << " criterion=" << crit;
                  return false;
                }
              }
              ctx.details << random_cases << "/" << random_cases << " agree";
              return true;
            });

  // 5. the separating family: 1-equivalent but not N-equal
  run_check(report, "separating-family", 30, [max_family_n](detail::CheckContext& ctx) {
    for (int n = 1; n <= max_family_n; ++n) {
      Word a = build_a(n), ap = build_a_prime(n);
      if (!is_reduced(a) || !is_reduced(ap)) {
        ctx.details << "a_" << n << " not reduced";
        return false;
      }
      if (!are_1_equivalent(a, ap)) {
        ctx.details << "a_" << n << " pair not 1-equivalent";
        return false;
      }
      if (holds_in_N(Identity(a, ap)).holds) {
        ctx.details << "a_" << n << " pair unexpectedly N-equal";
        return false;
      }
    }
    ctx.details << "n=1.." << max_family_n;
    return true;
  });

  // 6. computed decomposition matches the formula-level expansion
  run_check(report, "family-decomposition-shape", 60,
            [max_family_n](detail::CheckContext& ctx) {
              for (int n = 1; n <= max_family_n; ++n) {
                for (bool swapped : {false, true}) {
                  Word w = swapped ? build_a_prime(n) : build_a(n);
                  if (shape_of(full_decompose(w)) != expected_a_shape(n, swapped)) {
                    ctx.details << "shape mismatch at n=" << n
                                << (swapped ? " (swapped)" : "");
                    return false;
                  }
                }
              }
              ctx.details << "n=1.." << max_family_n << ", both head orders";
              return true;
            });

  // 7. bigram uniqueness of the variant words
  run_check(report, "unique-bigrams", 60, [max_family_n](detail::CheckContext& ctx) {
    for (bool z0 : {false, true})
      if (!unique_bigrams(build_b_variant(1, std::vector<bool>{z0}))) {
        ctx.details << "b-variant n=1 failed";
        return false;
      }
    if (max_family_n >= 2) {
      for (bool z0 : {false, true})
        for (bool z1 : {false, true})
          if (!unique_bigrams(build_b_variant(2, std::vector<bool>{z0, z1}))) {
            ctx.details << "b-variant n=2 failed";
            return false;
          }
    }
    for (int n = 1; n <= max_family_n; ++n)
      if (!unique_bigrams(build_a_variant(n, {}))) {
        ctx.details << "a-variant n=" << n << " failed";
        return false;
      }
    ctx.details << "all variants bigram-unique";
    return true;
  });

  // 8. the collapsing endomorphism maps the a-family onto the b-family
  run_check(report, "eta-image", 30, [max_family_n](detail::CheckContext& ctx) {
    for (int n = 1; n <= max_family_n; ++n) {
      Substitution e = eta(n);
      if (apply_substitution(e, build_a(n)) != build_b(n)) {
        ctx.details << "eta(a_" << n << ") != b_" << n;
        return false;
      }
      if (apply_substitution(e, build_a_prime(n)) != build_b_prime(n)) {
        ctx.details << "eta(a_" << n << "') != b_" << n << "'";
        return false;
      }
    }
    ctx.details << "n=1.." << max_family_n;
    return true;
  });

  // 9. derivation sanity and canonicalization
  run_check(report, "derivation-sanity", 300, [random_cases](detail::CheckContext& ctx) {
    IdentitySystem s1;
    s1.add(sigma1());
    Identity goal = parse_identity("xyzxy = yxzxy");
    DeriveResult r = derives(s1, goal, 1, 6, 10000);
    if (!r.found() || r.trace->steps.size() != 1) {
      ctx.details << "no 1-step derivation of the collapsed swap identity";
      return false;
    }
    const Substitution& sub = r.trace->steps[0].match.substitution;
    auto t_img = sub.mapping.find(Letter("t"));
    if (t_img == sub.mapping.end() || !t_img->second.empty()) {
      ctx.details << "derivation step does not erase t";
      return false;
    }
    if (!r.trace->replay(s1, goal.rhs)) {
      ctx.details << "trace replay failed";
      return false;
    }

    IdentitySystem s2;
    s2.add(sigma2());
    std::mt19937 rng(991);
    int pairs = std::max(100, random_cases / 5);
    for (int i = 0; i < pairs; ++i) {
      auto alpha = default_alphabet(4);
      Word u = random_reduced_word(rng, alpha, 10);
      Word v;
      switch (i % 3) {
        case 0: v = shuffle_2_blocks(rng, u); break;
        case 1: v = shuffle_preserving_1_equivalence(rng, u); break;
        default: v = random_reduced_word(rng, alpha, 10); break;
      }
      bool n_holds = false;
      try {
        n_holds = holds_in_N(Identity(u, v)).holds;
      } catch (const NotReducedError&) {
        continue;
      }
      bool canon_eq = sigma2_canonical(u) == sigma2_canonical(v);
      if (canon_eq != n_holds) {
        ctx.details << "canonical form disagrees with the decider on "
                    << format_word(u) << " = " << format_word(v);
        return false;
      }
      if (n_holds) {
        std::size_t two_block_letters = 0;
        FullDecomposition fd = full_decompose(u);
        for (std::size_t b = 0; b < fd.blocks.size(); ++b)
          if (fd.blocks[b].cls == BlockClass::TwoBlock)
            two_block_letters += fd.dec.blocks[b].size();
        DeriveResult d = derives(s2, Identity(u, v),
                                 two_block_letters * two_block_letters + 1, u.size(),
                                 1000000);
        if (!d.found() || !d.trace->replay(s2, v)) {
          ctx.details << "no swap-only derivation for " << format_word(u) << " = "
                      << format_word(v);
          return false;
        }
      }
    }
    ctx.details << pairs << " random pairs checked";
    return true;
  });

  // 10. separations along the variety chain plus monotonicity
  run_check(report, "chain-separations", 300, [random_cases](detail::CheckContext& ctx) {
    Identity comm = parse_identity("xy = yx");
    if (!holds_in_C(comm) || holds_in_D1(comm)) {
      ctx.details << "commutativity separation failed";
      return false;
    }
    if (!holds_in_D2(sigma1()).holds || holds_in_M(sigma1()).holds) {
      ctx.details << "first swap identity separation failed";
      return false;
    }
    Identity collapsed = parse_identity("xyzxy = yxzxy");
    if (!holds_in_M(collapsed).holds || holds_in_N(collapsed).holds) {
      ctx.details << "collapsed swap identity separation failed";
      return false;
    }
    std::mt19937 rng(4242);
    for (int i = 0; i < random_cases; ++i) {
      auto alpha = default_alphabet(4);
      Word u = random_reduced_word(rng, alpha, 10);
      Word v;
      switch (i % 3) {
        case 0: v = shuffle_2_blocks(rng, u); break;
        case 1: v = shuffle_preserving_1_equivalence(rng, u); break;
        default: v = random_reduced_word(rng, alpha, 10); break;
      }
      Identity id(u, v);
      bool n_ = holds_in_N(id).holds;
      bool m_ = holds_in_M(id).holds;
      bool d2 = holds_in_D2(id).holds;
      bool d1 = holds_in_D1(id);
      bool c_ = holds_in_C(id);
      bool sl = holds_in_SL(id);
      if ((n_ && !m_) || (m_ && !d2) || (d2 && !d1) || (d1 && !c_) || (c_ && !sl)) {
        ctx.details << "monotonicity violated on " << format_word(u) << " = "
                    << format_word(v);
        return false;
      }
    }
    ctx.details << random_cases << " random identities, no violations";
    return true;
  });

  // 11. the group-product examples
  run_check(report, "group-product", 60, [](detail::CheckContext& ctx) {
    FiniteMonoid s3 = symmetric_group_monoid(3);
    SatResult r = satisfies_identity(s3, sigma1());
    if (r.holds || !r.witness) {
      ctx.details << "S3 satisfies the first swap identity";
      return false;
    }
    FiniteMonoid prod = direct_product(oracle_d2(), s3);
    if (prod.size() != 42) {
      ctx.details << "unexpected product size " << prod.size();
      return false;
    }
    IsotermResult iso = is_isoterm_bounded(prod, parse_word("xtx"), 5, 3);
    if (!iso.isoterm) {
      ctx.details << "xtx not an isoterm for the product (witness "
                  << format_word(*iso.witness) << ")";
      return false;
    }
    if (satisfies_identity(prod, parse_identity("xy = yx")).holds) {
      ctx.details << "product is commutative";
      return false;
    }
    ctx.details << "refutations and bounded isoterm verified";
    return true;
  });

  // 12. isoterm criterion vs bounded brute force
  run_check(report, "isoterm-criterion", full ? 570 : 60,
            [full](detail::CheckContext& ctx) {
              const FiniteMonoid& sm = oracle_m();
              std::size_t max_letters = full ? 4 : 3;
              std::size_t max_len = full ? 8 : 6;
              auto alphabet = default_alphabet(max_letters);
              std::size_t words_checked = 0;
              // canonical words: letter i appears only after letters 0..i-1
              std::vector<int> seq;
              std::function<bool(std::size_t)> scan = [&](std::size_t used) -> bool {
                if (!seq.empty()) {
                  Word w = detail::canonical_word_letters(seq, alphabet);
                  if (is_reduced(w)) {
                    if (ctx.out_of_budget()) return false;
                    bool crit = is_isoterm(VarietyId::M, w);
                    bool oracle =
                        is_isoterm_bounded(sm, w, w.size() + 2, 3).isoterm;
                    ++words_checked;
                    if (crit != oracle) {
                      ctx.details << "disagreement on " << format_word(w)
                                  << " criterion=" << crit;
                      return false;
                    }
                  }
                }
                if (seq.size() == max_len) return true;
                std::size_t limit = std::min(used + 1, max_letters);
                for (std::size_t i = 0; i < limit; ++i) {
                  seq.push_back(static_cast<int>(i));
                  bool ok = scan(std::max(used, i + 1));
                  seq.pop_back();
                  if (!ok) return false;
                }
                return true;
              };
              bool ok = scan(0);
              if (ok || ctx.budget_exceeded)
                ctx.details << words_checked << " reduced words compared";
              return ok || ctx.budget_exceeded;
            });

  return report;
}

}  // namespace monvar

#endif  // MONVAR_VERIFY_HPP_
