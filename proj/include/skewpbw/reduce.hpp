// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

// Skew reduction systems and the reduction engine.
//
// A skew system on x1..xn has one rule per descending pair j > i:
//
//     x_j x_i  ->  c_{i,j} x_i x_j + p_{ji},   c_{i,j} a unit,
//     lm(p_{ji}) strictly below x_i x_j in deglex.
//
// Every right-hand side is deglex-smaller than its left-hand word, so every
// reduction sequence terminates.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "skewpbw/freealg.hpp"

namespace skewpbw {

struct Rule {
  Word lhs;    // W_sigma
  NCPoly rhs;  // f_sigma
};

class SkewSystem {
 public:
  /// Checks that `rules` form a skew reduction system on n generators:
  /// exactly one rule per pair j > i, each of the form x_j x_i -> c x_i x_j +
  /// tail with c a unit and lm(tail) below x_i x_j. A tail term on x_i x_j
  /// itself is already folded into c because rhs is a single polynomial.
  /// Errors name the offending pair, 1-based.
  static SkewSystem validate(std::vector<Rule> rules, std::size_t n,
                             ContextPtr ctx);

  std::size_t generator_count() const { return n_; }
  const ContextPtr& context() const { return ctx_; }

  /// Rule for x_j x_i, letters 0-based, j > i.
  const Rule& rule(Letter j, Letter i) const { return rules_[index(j, i)]; }
  const Scalar& leading_coefficient(Letter j, Letter i) const {
    return coefficients_[index(j, i)];
  }
  const NCPoly& tail(Letter j, Letter i) const { return tails_[index(j, i)]; }

  /// Rules ordered by pair index: (2,1), (3,1), (3,2), (4,1), ...
  const std::vector<Rule>& rules() const { return rules_; }

 private:
  SkewSystem() = default;
  static std::size_t index(Letter j, Letter i) {
    return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
  }

  std::size_t n_ = 0;
  ContextPtr ctx_;
  std::vector<Rule> rules_;
  std::vector<Scalar> coefficients_;
  std::vector<NCPoly> tails_;
};

/// One reduction r_{A sigma B} applied to a term with coefficient c.
struct ReductionStep {
  Letter j = 0;  // sigma = (j, i), 0-based
  Letter i = 0;
  Word left;     // A
  Word right;    // B
  Scalar coefficient;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;

  /// Sum over steps of c * A * (W_sigma - f_sigma) * B. Equals
  /// original - final for a trace produced by stred.
  NCPoly telescoped(const SkewSystem& q) const;

  /// Line-oriented audit form: "σ=(j,i) A=<word> B=<word> c=<scalar>".
  std::string str(std::span<const std::string> names) const;
};

/// r_{A sigma B}(f): moves the coefficient of A*W*B onto A*f_sigma*B. Acts
/// trivially when A*W*B is not in the support of f.
NCPoly apply_reduction(const NCPoly& f, const Rule& rule, const Word& left,
                       const Word& right);

/// Monomial reduction: rewrites the least descent of the non-standard word w.
/// Error(Precondition) when w is standard. When `step` is non-null it
/// receives the reduction that was applied.
NCPoly red(const Scalar& c, const Word& w, const SkewSystem& q,
           ReductionStep* step = nullptr);

struct StandardForm {
  NCPoly poly;
  ReductionTrace trace;
};

/// Reduction to standard form: repeatedly moves a standard leading term to
/// the output or replaces a non-standard one by red(lm(f)).
StandardForm stred(const NCPoly& f, const SkewSystem& q);

struct ExhaustiveLimits {
  std::size_t max_degree = 4;
  std::size_t node_cap = 1'000'000;
};

/// Explores every maximal reduction sequence from f and returns the distinct
/// irreducible results, sorted by rendering. Independent of red/stred: every
/// (sigma, A, B) that acts non-trivially is tried at every state.
/// Error(Precondition) if deg f exceeds the cap, Error(Budget) when more than
/// node_cap states are visited.
std::vector<NCPoly> normal_forms_exhaustive(const NCPoly& f,
                                            const SkewSystem& q,
                                            const ExhaustiveLimits& limits = {});

}  // namespace skewpbw
