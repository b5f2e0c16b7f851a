// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

// Shared fixtures and independent oracles for the test binaries.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "skewpbw/corpus.hpp"
#include "skewpbw/diamond.hpp"
#include "skewpbw/presentio.hpp"
#include "skewpbw/skewcheck.hpp"

namespace skewpbw::testing {

inline const std::vector<std::string> kXyz = {"x", "y", "z"};

inline Presentation corpus_presentation(std::string_view name) {
  auto entry = find_corpus_entry(name);
  if (!entry) throw std::runtime_error("no corpus entry " + std::string(name));
  return parse_presentation(entry->text);
}

inline SkewSystem corpus_system(std::string_view name) {
  return build_system(corpus_presentation(name));
}

/// Corpus entries that parse and validate.
inline std::vector<std::string> valid_corpus_names() {
  std::vector<std::string> out;
  for (const auto& e : builtin_corpus()) {
    try {
      build_system(parse_presentation(e.text));
      out.emplace_back(e.name);
    } catch (const Error&) {
    }
  }
  return out;
}

inline NCPoly expr(const Presentation& p, std::string_view text) {
  return parse_expression(text, p.generators, p.context);
}

// ---------------------------------------------------------------------------
// Rational oracle: words as vector<int>, coefficients as mpq_class, no code
// shared with the library. Rewrites the RIGHTMOST descent, the opposite of
// the library's least-descent rule.

using RawWord = std::vector<int>;
using RawPoly = std::map<RawWord, mpq_class>;

struct RawRule {
  int j, i;
  RawPoly rhs;
};

inline void raw_add(RawPoly& f, const RawWord& w, const mpq_class& c) {
  auto [it, inserted] = f.emplace(w, c);
  if (!inserted) it->second += c;
  if (it->second == 0) f.erase(it);
}

/// Rational rules of q; throws if a coefficient is parametric.
inline std::vector<RawRule> raw_rules(const SkewSystem& q) {
  std::vector<RawRule> out;
  for (const auto& rule : q.rules()) {
    RawRule r{rule.lhs[0], rule.lhs[1], {}};
    for (const auto& [w, c] : rule.rhs.terms()) {
      RawWord rw(w.letters().begin(), w.letters().end());
      raw_add(r.rhs, rw, c.rational_value());
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline RawPoly raw_from(const NCPoly& f) {
  RawPoly out;
  for (const auto& [w, c] : f.terms()) {
    raw_add(out, RawWord(w.letters().begin(), w.letters().end()), c.rational_value());
  }
  return out;
}

/// Normal form by repeatedly rewriting the rightmost descent of any
/// reducible word. Terminates for skew systems.
inline RawPoly raw_normal_form(RawPoly f, const std::vector<RawRule>& rules) {
  const auto find_rule = [&](int j, int i) -> const RawRule& {
    for (const auto& r : rules) {
      if (r.j == j && r.i == i) return r;
    }
    throw std::runtime_error("missing rule");
  };
  for (;;) {
    auto it = f.begin();
    std::size_t pos = 0;
    bool found = false;
    for (; it != f.end(); ++it) {
      const RawWord& w = it->first;
      for (std::size_t k = w.size(); k-- > 1;) {
        if (w[k - 1] > w[k]) {
          pos = k - 1;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return f;
    const RawWord w = it->first;
    const mpq_class c = it->second;
    f.erase(it);
    const RawRule& r = find_rule(w[pos], w[pos + 1]);
    for (const auto& [v, d] : r.rhs) {
      RawWord nw(w.begin(), w.begin() + static_cast<long>(pos));
      nw.insert(nw.end(), v.begin(), v.end());
      nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
      raw_add(f, nw, c * d);
    }
  }
}

/// Number of words of length d on n letters containing no factor x_j x_i
/// with j > i, by enumeration.
inline std::size_t brute_force_irreducible(std::size_t n, std::size_t d) {
  std::size_t count = 0;
  std::vector<std::size_t> w(d, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t k = 1; k < d; ++k) {
      if (w[k - 1] > w[k]) ok = false;
    }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < d && ++w[k] == n) w[k++] = 0;
    if (k == d) return count;
  }
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Sum of c*A*(W - f)*B over the steps, built from free-algebra products.
inline NCPoly replay(const ReductionTrace& trace, const SkewSystem& q) {
  const std::size_t n = q.generator_count();
  NCPoly sum(n);
  for (const auto& s : trace.steps) {
    const Rule& rule = q.rule(s.j, s.i);
    const NCPoly a = NCPoly::monomial(n, Scalar(1L), s.left);
    const NCPoly b = NCPoly::monomial(n, Scalar(1L), s.right);
    const NCPoly w = NCPoly::monomial(n, Scalar(1L), rule.lhs);
    sum += s.coefficient * (a * (w - rule.rhs) * b);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Random data.

using Rng = std::mt19937_64;

inline Rational pick(Rng& rng, const std::vector<Rational>& values) {
  std::uniform_int_distribution<std::size_t> d(0, values.size() - 1);
  return values[d(rng)];
}

inline const std::vector<Rational> kUnits = {Rational(1, 2), 1, 2, 3};
inline const std::vector<Rational> kTail = {-2, -1, 0, 1, 2};

/// Random three-generator system with linear tails: units from
/// {1/2, 1, 2, 3}, tail coefficients from {-2..2}. `sparsity` is the chance
/// that a tail coefficient is forced to 0, and `equal_units` the chance that
/// all three units are 1; both raise the share of PBW systems.
inline SkewCoefficients random_coefficients(Rng& rng, double sparsity,
                                            double equal_units) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SkewCoefficients c;
  if (u(rng) < equal_units) {
    c.alpha_inv = c.beta = c.gamma_inv = Scalar(1L);
  } else {
    c.alpha_inv = pick(rng, kUnits);
    c.beta = pick(rng, kUnits);
    c.gamma_inv = pick(rng, kUnits);
  }
  for (auto& row : c.r) {
    for (auto& v : row) v = u(rng) < sparsity ? Scalar(0L) : Scalar(pick(rng, kTail));
  }
  return c;
}

/// Random polynomial with up to `terms` terms of degree <= max_degree and
/// small rational coefficients.
inline NCPoly random_poly(Rng& rng, std::size_t n, std::size_t terms,
                          std::size_t max_degree, bool standard = false) {
  std::uniform_int_distribution<std::size_t> len(0, max_degree);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  NCPoly f(n);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<Letter> w(len(rng));
    for (auto& l : w) l = static_cast<Letter>(letter(rng));
    if (standard) std::sort(w.begin(), w.end());
    int a = num(rng);
    if (a == 0) a = 1;
    f.add_term(Word(std::move(w)), Scalar(Rational(a, den(rng))));
  }
  return f;
}

}  // namespace skewpbw::testing
