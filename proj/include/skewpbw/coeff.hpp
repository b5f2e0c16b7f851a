// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

// Exact coefficient arithmetic.
//
// A Scalar is either a plain rational number or a Laurent polynomial in the
// parameters of a ParamContext. Parameters declared as units may carry
// negative exponents; ordinary parameters may not. Every Scalar is kept in a
// canonical form, so structural equality is ring equality:
//
//   * a value with no parameter dependence is always stored as a rational and
//     carries no context, so constants mix freely with any context;
//   * parametric values store only nonzero coefficients, keyed by exponent
//     vectors in a fixed (descending) order.

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace skewpbw {

using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign). Throws Error(Parse) on
/// malformed text and Error(DivisionByZero) on a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

struct ParamDecl {
  std::string name;
  bool unit = false;

  bool operator==(const ParamDecl&) const = default;
};

/// Names and unit flags of the parameters a presentation declares. Fixed once
/// built; shared by every scalar of that presentation.
class ParamContext {
 public:
  explicit ParamContext(std::vector<ParamDecl> decls);

  std::size_t size() const { return decls_.size(); }
  const ParamDecl& operator[](std::size_t index) const { return decls_[index]; }
  std::span<const ParamDecl> decls() const { return decls_; }
  std::optional<std::size_t> find(std::string_view name) const;

  bool operator==(const ParamContext& other) const = default;

 private:
  std::vector<ParamDecl> decls_;
};

using ContextPtr = std::shared_ptr<const ParamContext>;

ContextPtr make_context(std::vector<ParamDecl> decls);

/// True when both pointers denote the same parameter declarations (a null
/// pointer is the empty context).
bool same_context(const ContextPtr& a, const ContextPtr& b);

using Exponents = std::vector<int>;

class Scalar {
 public:
  using Terms = std::map<Exponents, Rational, std::greater<>>;

  Scalar() = default;
  Scalar(long value) : constant_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value) : constant_(value) {  // NOLINT
    constant_.canonicalize();
  }

  /// The scalar p^power for the parameter at `index` of `ctx`.
  static Scalar parameter(const ContextPtr& ctx, std::size_t index,
                          int power = 1);

  /// Builds a scalar from raw terms; zero coefficients are dropped and the
  /// exponent vectors are validated against the context.
  static Scalar from_terms(const ContextPtr& ctx, Terms terms);

  bool is_zero() const { return terms_.empty() && sgn(constant_) == 0; }
  bool is_one() const { return terms_.empty() && constant_ == 1; }
  bool is_rational() const { return terms_.empty(); }

  /// Throws Error(Precondition) for a parametric scalar.
  const Rational& rational_value() const;

  /// Null for rational scalars.
  const ContextPtr& context() const { return ctx_; }

  /// Terms in canonical order. A rational scalar reports a single term with an
  /// empty exponent vector (or no terms when zero).
  Terms terms() const;
  std::size_t term_count() const;

  /// Sign of the first term in canonical order; 0 for zero.
  int leading_sign() const;

  /// Nonzero rational, or a single term whose exponents touch unit
  /// parameters only.
  bool is_unit() const;

  /// Throws Error(DivisionByZero) for zero and Error(NotAUnit) for any other
  /// non-unit.
  Scalar inverse() const;

  /// Negative powers require a unit.
  Scalar pow(int exponent) const;

  /// Substitutes images[k] for the k-th parameter of this scalar's context.
  /// Images may live in any (common) context; negative exponents require unit
  /// images.
  Scalar evaluate(std::span<const Scalar> images) const;

  bool is_parametric() const { return !terms_.empty(); }

  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

 private:
  static ContextPtr merge_contexts(const Scalar& a, const Scalar& b);
  Terms lifted(const ContextPtr& ctx) const;
  void assign(const ContextPtr& ctx, Terms terms);

  Rational constant_;  // value when terms_ is empty
  ContextPtr ctx_;     // non-null iff terms_ is non-empty
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace skewpbw
