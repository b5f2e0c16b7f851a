// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

#include "skewpbw/skewcheck.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "skewpbw/error.hpp"
#include "skewpbw/presentio.hpp"

namespace skewpbw {

namespace {

constexpr std::array<const char*, 3> kPairSuffix = {"23", "13", "12"};

// Rule (j, i) for each Pair, 0-based letters.
constexpr std::array<std::pair<Letter, Letter>, 3> kPairRule = {
    std::pair<Letter, Letter>{2, 1}, {2, 0}, {1, 0}};

constexpr std::size_t kAlpha = 0;
constexpr std::size_t kBeta = 1;
constexpr std::size_t kGamma = 2;

std::size_t r_index(int t, Pair p) {
  return 3 + static_cast<std::size_t>(p) * 4 + static_cast<std::size_t>(t);
}

// The published identities and, where they differ, the identities that
// actually follow from the two reductions. Rows are in publication order.
// Differences (index typos in the published equations):
//   gordito rhs   r1_13*r2_23 -> r1_13*r3_23
//   moder   lhs   r2_12*r3_13 -> r2_12*r3_23
//   moder   rhs   r2_13*r3_23 -> r3_13*r3_23
//   delfi   lhs   r3_13       -> r3_12
const std::array<ConditionSpec, 10> kConditions = {{
    {"gordito", Word{0},
     "gamma^-1*beta*r0_23 + gamma^-1*r3_13*r1_23 + r1_12*r1_13 + r2_12*r1_23",
     "alpha^-1*r1_12*r1_13 + r0_23 + r1_12*r2_23 + r1_13*r2_23",
     "gamma^-1*beta*r0_23 + gamma^-1*r3_13*r1_23 + r1_12*r1_13 + r2_12*r1_23",
     "alpha^-1*r1_12*r1_13 + r0_23 + r1_12*r2_23 + r1_13*r3_23"},
    {"flaquito", Word{1},
     "gamma^-1*r0_13 + gamma^-1*r3_13*r2_23 + r1_12*r2_13 + r2_12*r2_23",
     "alpha^-1*r0_13 + alpha^-1*r1_13*r2_12 + r2_12*r2_23 + r2_13*r3_23",
     "gamma^-1*r0_13 + gamma^-1*r3_13*r2_23 + r1_12*r2_13 + r2_12*r2_23",
     "alpha^-1*r0_13 + alpha^-1*r1_13*r2_12 + r2_12*r2_23 + r2_13*r3_23"},
    {"moder", Word{2},
     "gamma^-1*r3_13*r3_23 + r0_12 + r1_12*r3_13 + r2_12*r3_13",
     "beta*alpha^-1*r0_12 + alpha^-1*r1_13*r3_12 + r2_23*r3_12 + r2_13*r3_23",
     "gamma^-1*r3_13*r3_23 + r0_12 + r1_12*r3_13 + r2_12*r3_23",
     "beta*alpha^-1*r0_12 + alpha^-1*r1_13*r3_12 + r2_23*r3_12 + r3_13*r3_23"},
    {"pss1", Word{0, 1},
     "gamma^-1*r1_13 + gamma^-1*beta*r2_23",
     "gamma^-1*alpha^-1*r1_13 + gamma^-1*r2_23",
     "gamma^-1*r1_13 + gamma^-1*beta*r2_23",
     "gamma^-1*alpha^-1*r1_13 + gamma^-1*r2_23"},
    {"pss2", Word{0, 2},
     "gamma^-1*beta*r3_23 + beta*r1_12",
     "beta*alpha^-1*r1_12 + beta*r3_23",
     "gamma^-1*beta*r3_23 + beta*r1_12",
     "beta*alpha^-1*r1_12 + beta*r3_23"},
    {"pss3", Word{1, 2},
     "gamma^-1*alpha^-1*r3_13 + alpha^-1*r2_12",
     "beta*alpha^-1*r2_12 + alpha^-1*r3_13",
     "gamma^-1*alpha^-1*r3_13 + alpha^-1*r2_12",
     "beta*alpha^-1*r2_12 + alpha^-1*r3_13"},
    {"cattt", Word{0, 0},
     "gamma^-1*beta*r1_23", "r1_23",
     "gamma^-1*beta*r1_23", "r1_23"},
    {"doggg", Word{1, 1},
     "gamma^-1*r2_13", "alpha^-1*r2_13",
     "gamma^-1*r2_13", "alpha^-1*r2_13"},
    {"delfi", Word{2, 2},
     "r3_13", "beta*alpha^-1*r3_12",
     "r3_12", "beta*alpha^-1*r3_12"},
    {"pss6", Word{},
     "gamma^-1*r3_13*r0_23 + r1_12*r0_13 + r2_12*r0_23",
     "alpha^-1*r0_12*r1_13 + r0_12*r2_23 + r0_13*r3_23",
     "gamma^-1*r3_13*r0_23 + r1_12*r0_13 + r2_12*r0_23",
     "alpha^-1*r0_12*r1_13 + r0_12*r2_23 + r0_13*r3_23"},
}};

struct ParsedCondition {
  Scalar printed_lhs, printed_rhs, lhs, rhs;
};

const std::vector<ParsedCondition>& parsed_conditions() {
  static const std::vector<ParsedCondition> parsed = [] {
    const ContextPtr& ctx = condition_context();
    std::vector<ParsedCondition> out;
    for (const auto& spec : kConditions) {
      out.push_back({parse_scalar(spec.printed_lhs, ctx),
                     parse_scalar(spec.printed_rhs, ctx),
                     parse_scalar(spec.lhs, ctx), parse_scalar(spec.rhs, ctx)});
    }
    return out;
  }();
  return parsed;
}

// ---------------------------------------------------------------------------
// Classification helpers

enum class Tri { No, Yes, Unknown };

Tri decide_equal(const Scalar& a, const Scalar& b) {
  const Scalar d = a - b;
  if (d.is_zero()) return Tri::Yes;
  if (d.is_rational()) return Tri::No;
  return Tri::Unknown;
}

// Affine form c0 + c1 x + c2 y + c3 z.
using Affine = std::array<Scalar, 4>;

Affine affine(const SkewCoefficients& c, Pair p, const Scalar& factor) {
  Affine a;
  for (int t = 0; t < 4; ++t) a[t] = factor * c.at(t, p);
  return a;
}

// Matchers over the bracket-form right sides.
using Matcher = std::function<bool(const Affine&)>;

bool zero_except(const Affine& a, std::initializer_list<int> allowed) {
  for (int t = 0; t < 4; ++t) {
    if (std::find(allowed.begin(), allowed.end(), t) != allowed.end()) continue;
    if (!a[t].is_zero()) return false;
  }
  return true;
}

Matcher zero() {
  return [](const Affine& a) { return zero_except(a, {}); };
}
Matcher gen(int g) {
  return [g](const Affine& a) { return zero_except(a, {g}) && a[g].is_one(); };
}
Matcher any_constant() {
  return [](const Affine& a) { return zero_except(a, {0}); };
}
Matcher scaled_gen(int g) {
  return [g](const Affine& a) { return zero_except(a, {g}); };
}
Matcher gen_plus_constant(int g) {
  return [g](const Affine& a) { return zero_except(a, {0, g}) && a[g].is_one(); };
}
Matcher scaled_gen_plus_constant(int g) {
  return [g](const Affine& a) { return zero_except(a, {0, g}); };
}
Matcher exact(Affine expected) {
  return [expected](const Affine& a) { return a == expected; };
}

struct Pattern {
  const char* label;
  Matcher lambda, mu, nu;
};

const std::map<char, std::vector<Pattern>>& patterns() {
  static const std::map<char, std::vector<Pattern>> table = [] {
    std::map<char, std::vector<Pattern>> t;
    constexpr int x = 1, y = 2, z = 3;
    t['a'] = {{"a", zero(), zero(), zero()}};
    t['b'] = {
        {"b.i", gen(z), gen(y), gen(x)},
        {"b.ii", gen(z), any_constant(), gen(x)},
        {"b.iii", zero(), gen(y), zero()},
        {"b.iv", zero(), any_constant(), zero()},
        {"b.v", scaled_gen(z), zero(), gen(x)},
        {"b.vi", gen(z), zero(), zero()},
    };
    t['c'] = {
        {"c.i", zero(), gen_plus_constant(y), zero()},
        {"c.ii", zero(), any_constant(), zero()},
    };
    t['d'] = {{"d", scaled_gen_plus_constant(x), scaled_gen_plus_constant(y),
               scaled_gen_plus_constant(z)}};
    t['e'] = {
        {"e.i", gen(x), gen(y), gen(z)},
        {"e.ii", zero(), zero(), gen(z)},
        {"e.iii", zero(), zero(), any_constant()},
        {"e.iv", exact({Scalar(), Scalar(), Scalar(-1L), Scalar()}),
         exact({Scalar(), Scalar(1L), Scalar(1L), Scalar()}), zero()},
        {"e.v", scaled_gen(z), gen(z), zero()},
    };
    return t;
  }();
  return table;
}

}  // namespace

// ---------------------------------------------------------------------------

SkewCoefficients extract_coefficients(const SkewSystem& q) {
  if (q.generator_count() != 3) {
    throw Error(ErrorKind::Shape, "expected 3 generators, got " +
                                      std::to_string(q.generator_count()));
  }
  SkewCoefficients c;
  for (int p = 0; p < 3; ++p) {
    const auto [j, i] = kPairRule[p];
    const NCPoly& tail = q.tail(j, i);
    for (const auto& [w, a] : tail.terms()) {
      if (w.size() > 1) {
        throw Error(ErrorKind::Shape,
                    "rule (" + std::to_string(j + 1) + "," +
                        std::to_string(i + 1) + ") has the quadratic tail term '" +
                        w.str(default_names(3)) + "'");
      }
    }
    c.r[p][0] = tail.coefficient(Word{});
    for (Letter g = 0; g < 3; ++g) c.r[p][g + 1] = tail.coefficient(Word{g});
  }
  c.alpha_inv = q.leading_coefficient(2, 1);
  c.beta = q.leading_coefficient(2, 0);
  c.gamma_inv = q.leading_coefficient(1, 0);
  return c;
}

SkewSystem rebuild_system(const SkewCoefficients& c, const ContextPtr& ctx) {
  const std::array<const Scalar*, 3> units = {&c.alpha_inv, &c.beta,
                                              &c.gamma_inv};
  std::vector<Rule> rules;
  for (int p = 0; p < 3; ++p) {
    const auto [j, i] = kPairRule[p];
    NCPoly rhs = NCPoly::monomial(3, *units[p], Word{i, j});
    rhs.add_term(Word{}, c.r[p][0]);
    for (Letter g = 0; g < 3; ++g) rhs.add_term(Word{g}, c.r[p][g + 1]);
    rules.push_back(Rule{Word{j, i}, std::move(rhs)});
  }
  return SkewSystem::validate(std::move(rules), 3, ctx);
}

const ContextPtr& condition_context() {
  static const ContextPtr ctx = [] {
    std::vector<ParamDecl> decls = {
        {"alpha", true}, {"beta", true}, {"gamma", true}};
    for (const char* suffix : kPairSuffix) {
      for (int t = 0; t < 4; ++t) {
        decls.push_back({"r" + std::to_string(t) + "_" + suffix, false});
      }
    }
    return make_context(std::move(decls));
  }();
  return ctx;
}

SkewCoefficients symbolic_coefficients() {
  const ContextPtr& ctx = condition_context();
  SkewCoefficients c;
  c.alpha_inv = Scalar::parameter(ctx, kAlpha, -1);
  c.beta = Scalar::parameter(ctx, kBeta);
  c.gamma_inv = Scalar::parameter(ctx, kGamma, -1);
  for (int p = 0; p < 3; ++p) {
    for (int t = 0; t < 4; ++t) {
      c.r[p][t] = Scalar::parameter(ctx, r_index(t, static_cast<Pair>(p)));
    }
  }
  return c;
}

std::vector<Scalar> condition_images(const SkewCoefficients& c) {
  std::vector<Scalar> images(condition_context()->size());
  images[kAlpha] = c.alpha_inv.inverse();
  images[kBeta] = c.beta;
  images[kGamma] = c.gamma_inv.inverse();
  for (int p = 0; p < 3; ++p) {
    for (int t = 0; t < 4; ++t) {
      images[r_index(t, static_cast<Pair>(p))] = c.r[p][t];
    }
  }
  return images;
}

std::span<const ConditionSpec> condition_table() { return kConditions; }

bool ConditionReport::satisfied() const {
  return std::all_of(records.begin(), records.end(),
                     [](const auto& r) { return r.satisfied; });
}

bool ConditionReport::printed_satisfied() const {
  return std::all_of(records.begin(), records.end(),
                     [](const auto& r) { return r.printed_satisfied; });
}

const ConditionRecord& ConditionReport::find(std::string_view label) const {
  for (const auto& r : records) {
    if (r.label == label) return r;
  }
  throw Error(ErrorKind::Argument, "no condition labelled '" +
                                       std::string(label) + "'");
}

ConditionReport check_conditions(const SkewCoefficients& c) {
  const std::vector<Scalar> images = condition_images(c);
  const auto& parsed = parsed_conditions();
  ConditionReport report;
  for (std::size_t k = 0; k < kConditions.size(); ++k) {
    ConditionRecord rec;
    rec.label = std::string(kConditions[k].label);
    rec.monomial = kConditions[k].monomial;
    rec.lhs = parsed[k].lhs.evaluate(images);
    rec.rhs = parsed[k].rhs.evaluate(images);
    rec.satisfied = (rec.lhs - rec.rhs).is_zero();
    rec.printed_lhs = parsed[k].printed_lhs.evaluate(images);
    rec.printed_rhs = parsed[k].printed_rhs.evaluate(images);
    rec.printed_satisfied = (rec.printed_lhs - rec.printed_rhs).is_zero();
    rec.erratum = kConditions[k].erratum();
    report.records.push_back(std::move(rec));
  }
  return report;
}

Derivation derive_conditions() {
  const SkewSystem q =
      rebuild_system(symbolic_coefficients(), condition_context());
  const PbwVerdict verdict = check_pbw(q);
  const OverlapWitness& w = verdict.witnesses.front();

  Derivation d;
  const Word top{0, 1, 2};
  d.leading_lhs = w.g.coefficient(top);
  d.leading_rhs = w.h.coefficient(top);
  for (const auto& [m, coeff] : w.difference.terms()) {
    DerivedIdentity id;
    id.monomial = m;
    id.lhs = w.g.coefficient(m);
    id.rhs = w.h.coefficient(m);
    for (const auto& spec : kConditions) {
      if (spec.monomial == m) id.label = std::string(spec.label);
    }
    d.identities.push_back(std::move(id));
  }
  // Publication order.
  std::stable_sort(d.identities.begin(), d.identities.end(),
                   [](const DerivedIdentity& a, const DerivedIdentity& b) {
                     auto pos = [](const DerivedIdentity& x) {
                       for (std::size_t k = 0; k < kConditions.size(); ++k) {
                         if (kConditions[k].label == x.label) return k;
                       }
                       return kConditions.size();
                     };
                     return pos(a) < pos(b);
                   });
  return d;
}

DerivationCheck verify_derivation(const Derivation& d) {
  DerivationCheck check;
  check.ten_identities = d.identities.size() == kConditions.size();
  check.leading_cancels = (d.leading_lhs - d.leading_rhs).is_zero() &&
                          !d.leading_lhs.is_zero();

  std::vector<std::string> missing;
  bool monomials = check.ten_identities;
  const auto& parsed = parsed_conditions();
  for (std::size_t k = 0; k < kConditions.size(); ++k) {
    const auto& spec = kConditions[k];
    auto it = std::find_if(d.identities.begin(), d.identities.end(),
                           [&](const auto& id) { return id.monomial == spec.monomial; });
    if (it == d.identities.end()) {
      monomials = false;
      check.corrected_mismatches.emplace_back(spec.label);
      check.printed_mismatches.emplace_back(spec.label);
      continue;
    }
    const Scalar derived = it->lhs - it->rhs;
    if (!(derived == parsed[k].lhs - parsed[k].rhs)) {
      check.corrected_mismatches.emplace_back(spec.label);
    }
    if (!(derived == parsed[k].printed_lhs - parsed[k].printed_rhs)) {
      check.printed_mismatches.emplace_back(spec.label);
    }
  }
  check.expected_monomials = monomials;
  return check;
}

// ---------------------------------------------------------------------------

Classification classify(const SkewCoefficients& c, const SkewSystem& q) {
  if (!check_pbw(q).is_pbw) {
    throw Error(ErrorKind::VerdictRequired,
                "classification requires a PBW presentation");
  }
  Classification out;
  out.alpha = c.alpha_inv.inverse();
  out.beta = c.beta;
  out.gamma = c.gamma_inv.inverse();

  const Tri ab = decide_equal(out.alpha, out.beta);
  const Tri bg = decide_equal(out.beta, out.gamma);
  const Tri ag = decide_equal(out.alpha, out.gamma);
  const Tri a1 = decide_equal(out.alpha, Scalar(1L));

  auto indeterminate = [&](std::vector<std::pair<Tri, const char*>> needed) {
    std::string list;
    for (const auto& [value, predicate] : needed) {
      if (value != Tri::Unknown) continue;
      if (!list.empty()) list += ", ";
      list += predicate;
    }
    throw Error(ErrorKind::Indeterminate,
                "cannot decide branch predicates: " + list + " (alpha = " +
                    out.alpha.str() + ", beta = " + out.beta.str() +
                    ", gamma = " + out.gamma.str() + ")");
  };

  if (ab == Tri::Unknown || bg == Tri::Unknown || ag == Tri::Unknown) {
    indeterminate({{ab, "alpha = beta"},
                   {bg, "beta = gamma"},
                   {ag, "alpha = gamma"},
                   {a1, "alpha = 1"}});
  }
  if (ab == Tri::No && bg == Tri::No && ag == Tri::No) {
    out.case_letter = 'a';
  } else if (ab == Tri::Yes && bg == Tri::Yes) {
    if (a1 == Tri::Unknown) indeterminate({{a1, "alpha = 1"}});
    out.case_letter = a1 == Tri::Yes ? 'e' : 'd';
  } else if (ag == Tri::Yes) {
    if (a1 == Tri::Unknown) indeterminate({{a1, "alpha = 1"}});
    out.case_letter = a1 == Tri::Yes ? 'b' : 'c';
  } else {
    throw Error(ErrorKind::Indeterminate,
                "parameters alpha = " + out.alpha.str() + ", beta = " +
                    out.beta.str() + ", gamma = " + out.gamma.str() +
                    " have two distinct values with alpha != gamma; no listed "
                    "case applies");
  }

  // Bracket-form right sides: yz - alpha zy = lambda, zx - beta xz = mu,
  // xy - gamma yx = nu.
  const Affine lambda = affine(c, Pair::P23, -out.alpha);
  const Affine mu = affine(c, Pair::P13, Scalar(1L));
  const Affine nu = affine(c, Pair::P12, -out.gamma);
  for (const auto& p : patterns().at(out.case_letter)) {
    if (p.lambda(lambda) && p.mu(mu) && p.nu(nu)) {
      if (std::string_view(p.label).size() > 1) {
        out.subcase = p.label;
      } else {
        out.notes.emplace_back("relations match the listed form");
      }
      break;
    }
  }
  if (!out.subcase && out.notes.empty()) {
    out.notes.emplace_back("relations match none of the listed forms verbatim");
  }
  return out;
}

}  // namespace skewpbw
