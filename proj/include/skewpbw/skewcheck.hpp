// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

// Three-generator specialization.
//
// With x1 = x, x2 = y, x3 = z the relations of a 3-dimensional skew
// polynomial algebra read
//
//   x3 x2 = alpha^-1 x2 x3 + r0_23 + r1_23 x1 + r2_23 x2 + r3_23 x3
//   x3 x1 = beta     x1 x3 + r0_13 + r1_13 x1 + r2_13 x2 + r3_13 x3
//   x2 x1 = gamma^-1 x1 x2 + r0_12 + r1_12 x1 + r2_12 x2 + r3_12 x3
//
// and the single overlap x3 x2 x1 resolves iff ten coefficient identities
// hold, one per monomial of stred(x3 f21) - stred(f32 x1).

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewpbw/diamond.hpp"

namespace skewpbw {

/// Index of a relation in the r-tables: (2,3), (1,3), (1,2).
enum class Pair { P23 = 0, P13 = 1, P12 = 2 };

struct SkewCoefficients {
  Scalar alpha_inv;  // c_{2,3}
  Scalar beta;       // c_{1,3}
  Scalar gamma_inv;  // c_{1,2}
  std::array<std::array<Scalar, 4>, 3> r;  // r[pair][t], t = 0..3

  const Scalar& at(int t, Pair p) const { return r[static_cast<int>(p)][t]; }
  Scalar& at(int t, Pair p) { return r[static_cast<int>(p)][t]; }

  bool operator==(const SkewCoefficients&) const = default;
};

/// Reads the unit coefficients and the twelve tail coefficients.
/// Error(Shape) unless n = 3 and every tail has degree <= 1.
SkewCoefficients extract_coefficients(const SkewSystem& q);

/// The skew system with the given coefficients.
SkewSystem rebuild_system(const SkewCoefficients& c, const ContextPtr& ctx);

/// Symbolic context of the identities: units alpha, beta, gamma, then the
/// ordinary parameters r0_23..r3_23, r0_13..r3_13, r0_12..r3_12.
const ContextPtr& condition_context();

/// The fully symbolic coefficients over condition_context().
SkewCoefficients symbolic_coefficients();

/// Images of the condition_context() parameters for concrete coefficients,
/// for use with Scalar::evaluate.
std::vector<Scalar> condition_images(const SkewCoefficients& c);

/// One of the ten identities, stored as expression text over
/// condition_context(). `printed_*` is the identity as published; `lhs`/`rhs`
/// is the identity as it follows from the two reductions. They differ only
/// where the published equation carries an index typo.
struct ConditionSpec {
  std::string_view label;
  Word monomial;  // over x1, x2, x3
  std::string_view printed_lhs;
  std::string_view printed_rhs;
  std::string_view lhs;
  std::string_view rhs;

  bool erratum() const { return printed_lhs != lhs || printed_rhs != rhs; }
};

std::span<const ConditionSpec> condition_table();

struct ConditionRecord {
  std::string label;
  Word monomial;
  Scalar lhs;
  Scalar rhs;
  bool satisfied = false;
  Scalar printed_lhs;
  Scalar printed_rhs;
  bool printed_satisfied = false;
  bool erratum = false;
};

struct ConditionReport {
  std::vector<ConditionRecord> records;

  bool satisfied() const;
  bool printed_satisfied() const;
  const ConditionRecord& find(std::string_view label) const;
};

/// Evaluates all ten identities on c. The verdict uses the derived form;
/// the published form of each row is evaluated alongside.
ConditionReport check_conditions(const SkewCoefficients& c);

struct DerivedIdentity {
  std::string label;  // empty if the monomial has no table entry
  Word monomial;
  Scalar lhs;  // coefficient in stred(x3 f21)
  Scalar rhs;  // coefficient in stred(f32 x1)
};

struct Derivation {
  std::vector<DerivedIdentity> identities;  // support of the difference
  Scalar leading_lhs;  // coefficient of x1x2x3 on both sides
  Scalar leading_rhs;
};

/// Runs check_pbw on the fully symbolic system and reads one identity off
/// each monomial of the overlap difference.
Derivation derive_conditions();

struct DerivationCheck {
  bool ten_identities = false;
  bool expected_monomials = false;
  bool leading_cancels = false;
  std::vector<std::string> corrected_mismatches;
  std::vector<std::string> printed_mismatches;

  bool matches_corrected() const {
    return ten_identities && expected_monomials && leading_cancels &&
           corrected_mismatches.empty();
  }
  bool matches_printed() const {
    return ten_identities && expected_monomials && leading_cancels &&
           printed_mismatches.empty();
  }
};

/// Compares a derivation against the table, label by label, as ring
/// elements (lhs - rhs).
DerivationCheck verify_derivation(const Derivation& d);

struct Classification {
  char case_letter = '?';  // 'a'..'e'
  Scalar alpha;
  Scalar beta;
  Scalar gamma;
  std::optional<std::string> subcase;  // e.g. "b.i"
  std::vector<std::string> notes;
};

/// Case by the multiset {alpha, beta, gamma}; subcase by syntactic match of
/// the bracket-form right sides against the listed relation patterns.
/// Error(VerdictRequired) if q is not PBW; Error(Indeterminate) when a
/// needed equality between symbolic parameters cannot be decided, or the
/// multiset matches no case.
Classification classify(const SkewCoefficients& c, const SkewSystem& q);

}  // namespace skewpbw
