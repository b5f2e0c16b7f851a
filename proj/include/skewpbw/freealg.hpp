// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

// Words of the free monoid on n generators and noncommutative polynomials
// over Scalar. Generators are 0-based letters internally; x1 is letter 0.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewpbw/coeff.hpp"

namespace skewpbw {

using Letter = std::uint16_t;

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t k) const { return letters_[k]; }
  std::span<const Letter> letters() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const;

  /// Non-decreasing letters. Words of length < 2 are standard.
  bool is_standard() const;

  /// Least k with w[k] > w[k+1].
  std::optional<std::size_t> first_descent() const;

  /// Exponent-collapsed rendering, e.g. x*y^2*z; the empty word is "1".
  std::string str(std::span<const std::string> names) const;

  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Degree first, then left-to-right with the smaller letter smaller.
std::strong_ordering deglex_compare(const Word& u, const Word& v);

struct DeglexGreater {
  bool operator()(const Word& a, const Word& b) const {
    return deglex_compare(a, b) > 0;
  }
};

/// Default generator names x1..xn.
std::vector<std::string> default_names(std::size_t n);

/// Number of non-decreasing words of length d on n letters: C(d+n-1, n-1).
std::uint64_t count_standard_words(std::size_t n, std::size_t d);

/// Element of the free associative algebra on `arity` generators. Terms are
/// kept in descending deglex order, so the leading term is the first one.
class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, DeglexGreater>;

  NCPoly() = default;
  explicit NCPoly(std::size_t arity) : arity_(arity) {}

  static NCPoly constant(std::size_t arity, const Scalar& c);
  static NCPoly monomial(std::size_t arity, const Scalar& c, Word w);
  static NCPoly generator(std::size_t arity, Letter g);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Coefficient of `w`, zero when absent.
  Scalar coefficient(const Word& w) const;

  /// Deglex-greatest word and its coefficient; Error(EmptyPolynomial) on 0.
  std::pair<const Word&, const Scalar&> leading() const;

  /// Length of the leading word; Error(EmptyPolynomial) on 0.
  std::size_t degree() const;

  /// Every support word is standard.
  bool is_standard() const;

  /// Adds c*w in place.
  void add_term(const Word& w, const Scalar& c);

  /// Removes and returns the leading term.
  std::pair<Word, Scalar> pop_leading();

  /// Multiplies every coefficient by c.
  NCPoly scaled(const Scalar& c) const;

  /// Substitutes parameter images into every coefficient.
  NCPoly evaluated(std::span<const Scalar> images) const;

  std::string str(std::span<const std::string> names) const;
  std::string str() const { return str(default_names(arity_)); }

  friend NCPoly operator+(const NCPoly& f, const NCPoly& g);
  friend NCPoly operator-(const NCPoly& f, const NCPoly& g);
  friend NCPoly operator-(const NCPoly& f);
  friend NCPoly operator*(const NCPoly& f, const NCPoly& g);
  friend NCPoly operator*(const Scalar& c, const NCPoly& f);
  friend bool operator==(const NCPoly& f, const NCPoly& g);

  NCPoly& operator+=(const NCPoly& g);
  NCPoly& operator-=(const NCPoly& g);

 private:
  void check_word(const Word& w) const;

  std::size_t arity_ = 0;
  Terms terms_;
};

/// Multiplies f on the left by A and on the right by B, scaling by c:
/// c * A * f * B.
NCPoly sandwich(const Scalar& c, const Word& left, const NCPoly& f,
                const Word& right);

}  // namespace skewpbw
