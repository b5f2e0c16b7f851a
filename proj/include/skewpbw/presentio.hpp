// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

// Presentation files.
//
//   generators: x, y, z          # declaration order is the deglex order
//   unit nu                      # unit parameters may take negative powers
//   param r                      # ordinary parameters may not
//   z*y = y*z - z                # rewrite form: x_j*x_i = f_ji, j > i
//   z*x + x*z = y                # bracket form: a*b - c*b*a = lambda
//
// Comments start with '#'. Several declarations may share a line when
// separated by ';'. Expressions use + - * / ^ and parentheses; '/' only
// divides by a unit scalar, '^' takes an integer exponent.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewpbw/coeff.hpp"
#include "skewpbw/freealg.hpp"
#include "skewpbw/reduce.hpp"

namespace skewpbw {

struct Relation {
  Letter j = 0;  // rewrite x_j x_i -> rhs, 0-based, j > i
  Letter i = 0;
  NCPoly rhs;
  std::size_t line = 0;
};

struct Presentation {
  std::vector<std::string> generators;
  ContextPtr context;
  std::vector<Relation> relations;  // sorted by descending pair: (n,n-1), ...

  std::size_t generator_count() const { return generators.size(); }
  std::optional<Letter> generator(std::string_view name) const;
  const Relation& relation(Letter j, Letter i) const;
};

/// Structural equality ignoring source line numbers.
bool equivalent(const Presentation& a, const Presentation& b);

/// Throws ParseError with line/column for malformed input, unknown symbols,
/// duplicate or missing relations and ascending rewrite-form left sides.
Presentation parse_presentation(std::string_view text);

/// Parses an expression over the given generators and parameters.
NCPoly parse_expression(std::string_view text,
                        std::span<const std::string> generators,
                        const ContextPtr& ctx);

/// Parses a generator-free expression to a scalar.
Scalar parse_scalar(std::string_view text, const ContextPtr& ctx);

/// Canonical text: header, declarations, rewrite-form relations in
/// descending pair order. parse_presentation(render_presentation(p)) is
/// equivalent to p.
std::string render_presentation(const Presentation& p);

/// FNV-1a 64-bit digest of the canonical rendering, as 16 hex digits.
std::string presentation_digest(const Presentation& p);

/// Replaces the named parameters by rational values and drops them from the
/// context. Error(Argument) for unknown names or a zero unit.
Presentation substitute(const Presentation& p,
                        std::span<const std::pair<std::string, Rational>> values);

/// Validated skew system of the presentation's relations.
SkewSystem build_system(const Presentation& p);

}  // namespace skewpbw
