// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "skewpbw/commands.hpp"
#include "skewpbw/error.hpp"
#include "support.hpp"

namespace skewpbw {
namespace {

using testing::corpus_presentation;
using testing::expr;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

Outcome woronowicz() {
  Outcome out;
  const Presentation p = corpus_presentation("woronowicz");
  const PbwVerdict v = check_pbw(build_system(p));
  const NCPoly expected = expr(p, "nu^-2*x*y*z - nu^-1*z^2");
  out.require(v.is_pbw, "PBW verdict");
  out.require(v.witnesses.size() == 1, "single overlap");
  out.require(v.witnesses[0].g == expected, "g321 = " + expected.str(p.generators));
  out.require(v.witnesses[0].h == expected, "h321 = " + expected.str(p.generators));
  out.note("g321 = h321 = " + v.witnesses[0].g.str(p.generators));
  return out;
}

Outcome dispin() {
  Outcome out;
  const Presentation p = corpus_presentation("dispin");
  const SkewSystem q = build_system(p);
  const PbwVerdict v = check_pbw(q);
  const NCPoly expected = expr(p, "-x*y*z + 2*x*z + y^2 - y");
  out.require(v.is_pbw, "PBW verdict");
  out.require(v.witnesses[0].g == expected && v.witnesses[0].h == expected,
              "common value " + expected.str(p.generators));
  const Classification c = classify(extract_coefficients(q), q);
  out.require(c.case_letter == 'b' && c.subcase == "b.i", "case b, subcase b.i");
  out.note("common value " + v.witnesses[0].g.str(p.generators) + "; case " +
           std::string(1, c.case_letter) + ", subcase " + c.subcase.value_or("-"));
  return out;
}

Outcome counterexample() {
  Outcome out;
  const Presentation p = corpus_presentation("ex3");
  const SkewSystem q = build_system(p);
  const PbwVerdict v = check_pbw(q);
  // The two displayed reductions of the overlap.
  const NCPoly g = expr(p, "beta*alpha*x*y*z + alpha*y*z + beta*x*z + z");
  const NCPoly h = expr(p, "beta*alpha*x*y*z + beta*x*z + y*z");
  out.require(!v.is_pbw, "NOT PBW verdict");
  out.require(v.witnesses[0].g == g, "stred(x3 f21)");
  out.require(v.witnesses[0].h == h, "stred(f32 x1)");
  out.require(v.witnesses[0].difference == g - h &&
                  v.witnesses[0].difference == expr(p, "(alpha - 1)*y*z + z"),
              "difference (alpha - 1)*y*z + z");
  const ConditionReport report = check_conditions(extract_coefficients(q));
  out.require(!report.satisfied(), "conditions violated");
  const ConditionRecord& delfi = report.find("delfi");
  out.require(delfi.printed_lhs == Scalar(1L) && delfi.printed_rhs == Scalar(0L) &&
                  !delfi.printed_satisfied,
              "delfi violated as 1 = 0");
  out.note("difference " + v.witnesses[0].difference.str(p.generators) +
           "; delfi as printed: " + delfi.printed_lhs.str() + " = " +
           delfi.printed_rhs.str());
  std::string violated;
  for (const auto& r : report.records) {
    if (!r.satisfied) {
      violated += (violated.empty() ? "" : ", ") + r.label + " (" + r.lhs.str() +
                  " = " + r.rhs.str() + ")";
    }
  }
  out.note("violated in derived form: " + violated);
  return out;
}

Outcome rederivation(bool& corrected_match) {
  Outcome out;
  const Derivation d = derive_conditions();
  const DerivationCheck check = verify_derivation(d);
  out.require(check.ten_identities, "exactly ten identities");
  out.require(check.expected_monomials, "one identity per expected monomial");
  out.require(check.leading_cancels, "x1x2x3 coefficient cancels");
  std::string mismatches;
  for (const auto& l : check.printed_mismatches) {
    mismatches += (mismatches.empty() ? "" : ", ") + l;
  }
  out.require(check.printed_mismatches.empty(),
              "ring-equal to the transcribed equations; differ: " + mismatches);
  for (const auto& spec : condition_table()) {
    if (!spec.erratum()) continue;
    out.note(std::string(spec.label) + " transcribed: " + std::string(spec.printed_lhs) +
             " = " + std::string(spec.printed_rhs));
    for (const auto& id : d.identities) {
      if (id.label == spec.label) {
        out.note(std::string(spec.label) + " derived:     " + id.lhs.str() + " = " +
                 id.rhs.str());
      }
    }
  }
  corrected_match = check.matches_corrected();
  return out;
}

Outcome cross_validation() {
  Outcome out;
  testing::Rng rng(20261016);
  std::size_t disagreements = 0, pbw = 0;
  std::vector<std::pair<SkewSystem, bool>> oracle_pbw, oracle_not;
  for (int k = 0; k < 500; ++k) {
    // Alternate dense and sparse tails so both verdicts occur.
    const double sparsity = k % 2 ? 0.85 : 0.25;
    const SkewCoefficients c = testing::random_coefficients(rng, sparsity, 0.3);
    const SkewSystem q = rebuild_system(c, nullptr);
    const bool verdict = check_pbw(q).is_pbw;
    const bool conditions = check_conditions(c).satisfied();
    disagreements += verdict != conditions;
    pbw += verdict;
    auto& bucket = verdict ? oracle_pbw : oracle_not;
    if (bucket.size() < 25) bucket.emplace_back(q, verdict);
  }
  out.require(disagreements == 0,
              std::to_string(disagreements) + " check_pbw/check_conditions disagreements");
  out.note("500 systems, " + std::to_string(pbw) + " PBW, " +
           std::to_string(disagreements) + " disagreements");

  std::vector<std::pair<SkewSystem, bool>> sample = oracle_pbw;
  sample.insert(sample.end(), oracle_not.begin(), oracle_not.end());
  out.require(sample.size() == 50, "50 systems for the oracle");
  std::vector<Word> words{Word()};
  std::vector<Word> layer{Word()};
  for (int d = 1; d <= 4; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (Letter g = 0; g < 3; ++g) next.push_back(w * Word{g});
    }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::size_t oracle_disagreements = 0;
  for (const auto& [q, verdict] : sample) {
    bool unique = true;
    for (const auto& w : words) {
      if (normal_forms_exhaustive(NCPoly::monomial(3, 1L, w), q).size() != 1) {
        unique = false;
        break;
      }
    }
    oracle_disagreements += unique != verdict;
  }
  out.require(oracle_disagreements == 0,
              std::to_string(oracle_disagreements) + " oracle disagreements");
  out.note("oracle on " + std::to_string(sample.size()) + " systems x " +
           std::to_string(words.size()) + " words, " +
           std::to_string(oracle_pbw.size()) + " PBW");
  return out;
}

std::vector<std::string> pbw_corpus() {
  std::vector<std::string> out;
  for (const auto& name : testing::valid_corpus_names()) {
    if (check_pbw(testing::corpus_system(name)).is_pbw) out.push_back(name);
  }
  return out;
}

Outcome basis_counting() {
  Outcome out;
  testing::Rng rng(6);
  const auto names = pbw_corpus();
  for (const auto& name : names) {
    const SkewSystem q = testing::corpus_system(name);
    const std::size_t n = q.generator_count();
    for (std::size_t d = 0; d <= 5; ++d) {
      // Irreducible words: no rule left side occurs as a factor.
      std::size_t irreducible = 0;
      std::vector<Letter> w(d, 0);
      for (bool more = true; more;) {
        bool reducible = false;
        for (std::size_t k = 0; k + 1 < d && !reducible; ++k) {
          for (const auto& r : q.rules()) {
            if (r.lhs[0] == w[k] && r.lhs[1] == w[k + 1]) reducible = true;
          }
        }
        irreducible += !reducible;
        std::size_t k = 0;
        while (k < d && ++w[k] == n) w[k++] = 0;
        more = k < d;
      }
      const mpz_class expected = testing::binomial(d + 2, 2);
      out.require(mpz_class(static_cast<unsigned long>(irreducible)) == expected &&
                      count_standard_words(n, d) == irreducible,
                  name + " degree " + std::to_string(d));
    }
    const PbwVerdict v = check_pbw(q);
    std::size_t failures = 0;
    for (int t = 0; t < 100; ++t) {
      const NCPoly f = testing::random_poly(rng, n, 2, 2, true);
      const NCPoly g = testing::random_poly(rng, n, 2, 2, true);
      const NCPoly h = testing::random_poly(rng, n, 2, 2, true);
      const NCPoly left = quotient_multiply(quotient_multiply(f, g, q, v), h, q, v);
      const NCPoly right = quotient_multiply(f, quotient_multiply(g, h, q, v), q, v);
      failures += left != right;
    }
    out.require(failures == 0, name + ": " + std::to_string(failures) + " non-associative triples");
  }
  std::string list;
  for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
  out.note("PBW examples: " + list);
  return out;
}

Outcome trace_soundness() {
  Outcome out;
  testing::Rng rng(7);
  const auto names = testing::valid_corpus_names();
  std::vector<SkewSystem> systems;
  for (const auto& n : names) systems.push_back(testing::corpus_system(n));
  std::size_t failures = 0, steps = 0;
  for (int k = 0; k < 1000; ++k) {
    const SkewSystem& q = systems[k % systems.size()];
    const NCPoly f = testing::random_poly(rng, q.generator_count(), 4, 4);
    const StandardForm sf = stred(f, q);
    steps += sf.trace.steps.size();
    failures += testing::replay(sf.trace, q) != f - sf.poly;
  }
  out.require(failures == 0, std::to_string(failures) + " traces do not replay");
  out.note("1000 calls over " + std::to_string(systems.size()) + " presentations, " +
           std::to_string(steps) + " steps replayed");
  return out;
}

Outcome classification_guards() {
  Outcome out;
  const auto classify_text = [](const std::string& text) {
    const SkewSystem q = build_system(parse_presentation(text));
    if (!check_pbw(q).is_pbw) return std::string("not PBW");
    const Classification c = classify(extract_coefficients(q), q);
    return std::string(1, c.case_letter) + (c.subcase ? " " + *c.subcase : "");
  };
  const auto family = [](const std::string& a, const std::string& b, const std::string& g,
                         const std::string& lambda, const std::string& mu,
                         const std::string& nu) {
    return "generators: x, y, z\ny*z - (" + a + ")*z*y = " + lambda + "\nz*x - (" + b +
           ")*x*z = " + mu + "\nx*y - (" + g + ")*y*x = " + nu + "\n";
  };
  struct Case {
    std::string text;
    char expected;
  };
  std::vector<Case> cases;
  for (const auto& name : {"quantum3space", "dispin", "case_c", "case_d", "e_i"}) {
    const auto entry = find_corpus_entry(name);
    cases.push_back({std::string(entry->text), "abcde"[cases.size()]});
  }
  cases.push_back({family("2", "-1", "1/3", "0", "0", "0"), 'a'});
  cases.push_back({family("1/2", "3", "7", "0", "0", "0"), 'a'});
  cases.push_back({family("1", "-1", "1", "z", "y", "x"), 'b'});
  cases.push_back({family("1", "2", "1", "0", "y", "0"), 'b'});
  cases.push_back({family("3", "1/2", "3", "0", "y + 1", "0"), 'c'});
  cases.push_back({family("-2", "5", "-2", "0", "4", "0"), 'c'});
  cases.push_back({family("3", "3", "3", "0", "0", "0"), 'd'});
  cases.push_back({family("-1", "-1", "-1", "0", "0", "0"), 'd'});
  cases.push_back({family("1", "1", "1", "0", "0", "z"), 'e'});
  cases.push_back({family("1", "1", "1", "0", "0", "5"), 'e'});
  for (const auto& c : cases) {
    const std::string got = classify_text(c.text);
    out.require(!got.empty() && got[0] == c.expected,
                std::string("expected case ") + c.expected + ", got " + got);
  }
  const std::string ei = family("1", "1", "1", "x", "y", "z");
  const SkewSystem q = build_system(parse_presentation(ei));
  out.require(check_pbw(q).is_pbw, "e.i relations are PBW");
  out.require(classify_text(ei) == "e e.i", "e.i relations classify e.i");
  out.note(std::to_string(cases.size()) + " instantiations classified");
  return out;
}

struct Criterion {
  int id;
  const char* title;
  double budget_ms;  // 0 means no runtime bound
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace skewpbw

int main() {
  using namespace skewpbw;
  bool corrected_match = false;
  const std::vector<Criterion> criteria = {
      {1, "Woronowicz reproduction", 1000, woronowicz},
      {2, "dispin reproduction and classification", 1000, dispin},
      {3, "counterexample reproduction", 1000, counterexample},
      {4, "condition re-derivation against the transcribed equations", 5000,
       [&] { return rederivation(corrected_match); }},
      {5, "check_pbw / check_conditions / oracle cross-validation", 60000, cross_validation},
      {6, "basis counting and associativity", 30000, basis_counting},
      {7, "trace soundness", 0, trace_soundness},
      {8, "classification guards", 0, classification_guards},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.notes.push_back(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (c.budget_ms > 0 && ms >= c.budget_ms) {
      out.pass = false;
      out.notes.push_back("runtime over " + std::to_string(static_cast<int>(c.budget_ms)) + " ms");
    }
    failed += !out.pass;
    std::printf("%s criterion %d: %s (%.1f ms)\n", out.pass ? "PASS" : "FAIL", c.id, c.title, ms);
    for (const auto& n : out.notes) std::printf("    %s\n", n.c_str());
  }
  std::printf("info: derived identities %s the corrected table\n",
              corrected_match ? "match" : "do not match");
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
