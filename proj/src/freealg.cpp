// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

#include "skewpbw/freealg.hpp"

#include <algorithm>

#include "skewpbw/error.hpp"

namespace skewpbw {

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

bool Word::is_standard() const { return !first_descent().has_value(); }

std::optional<std::size_t> Word::first_descent() const {
  for (std::size_t k = 0; k + 1 < letters_.size(); ++k) {
    if (letters_[k] > letters_[k + 1]) return k;
  }
  return std::nullopt;
}

std::string Word::str(std::span<const std::string> names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < letters_.size();) {
    std::size_t run = 1;
    while (k + run < letters_.size() && letters_[k + run] == letters_[k]) ++run;
    if (!out.empty()) out += '*';
    out += names[letters_[k]];
    if (run > 1) out += '^' + std::to_string(run);
    k += run;
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> letters;
  letters.reserve(a.size() + b.size());
  letters.insert(letters.end(), a.letters_.begin(), a.letters_.end());
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(letters));
}

std::strong_ordering deglex_compare(const Word& u, const Word& v) {
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  const auto a = u.letters();
  const auto b = v.letters();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
  return names;
}

std::uint64_t count_standard_words(std::size_t n, std::size_t d) {
  if (n == 0) return d == 0 ? 1 : 0;
  // C(d + n - 1, k) with k = min(d, n - 1), built incrementally so every
  // intermediate value is itself a binomial coefficient.
  const std::size_t top = d + n - 1;
  const std::size_t k = std::min(d, n - 1);
  unsigned __int128 c = 1;
  for (std::size_t m = 1; m <= k; ++m) {
    c = c * (top - k + m) / m;
  }
  return static_cast<std::uint64_t>(c);
}

// ---------------------------------------------------------------------------
// NCPoly

NCPoly NCPoly::constant(std::size_t arity, const Scalar& c) {
  return monomial(arity, c, Word());
}

NCPoly NCPoly::monomial(std::size_t arity, const Scalar& c, Word w) {
  NCPoly f(arity);
  f.add_term(w, c);
  return f;
}

NCPoly NCPoly::generator(std::size_t arity, Letter g) {
  return monomial(arity, Scalar(1L), Word{g});
}

void NCPoly::check_word(const Word& w) const {
  for (Letter l : w.letters()) {
    if (l >= arity_) {
      throw Error(ErrorKind::Arity,
                  "generator x" + std::to_string(l + 1) +
                      " out of range for " + std::to_string(arity_) +
                      " generators");
    }
  }
}

Scalar NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

std::pair<const Word&, const Scalar&> NCPoly::leading() const {
  if (terms_.empty()) {
    throw Error(ErrorKind::EmptyPolynomial, "zero polynomial has no leading term");
  }
  return {terms_.begin()->first, terms_.begin()->second};
}

std::size_t NCPoly::degree() const { return leading().first.size(); }

bool NCPoly::is_standard() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.is_standard(); });
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  check_word(w);
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::pair<Word, Scalar> NCPoly::pop_leading() {
  if (terms_.empty()) {
    throw Error(ErrorKind::EmptyPolynomial, "zero polynomial has no leading term");
  }
  auto node = terms_.extract(terms_.begin());
  return {std::move(node.key()), std::move(node.mapped())};
}

NCPoly NCPoly::scaled(const Scalar& c) const {
  NCPoly out(arity_);
  if (c.is_zero()) return out;
  for (const auto& [w, a] : terms_) {
    Scalar p = c * a;
    if (!p.is_zero()) out.terms_.emplace_hint(out.terms_.end(), w, std::move(p));
  }
  return out;
}

NCPoly NCPoly::evaluated(std::span<const Scalar> images) const {
  NCPoly out(arity_);
  for (const auto& [w, a] : terms_) out.add_term(w, a.evaluate(images));
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& g) {
  if (arity_ != g.arity_) {
    throw Error(ErrorKind::Arity, "polynomials over different generator counts");
  }
  for (const auto& [w, c] : g.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& g) { return *this += -g; }

NCPoly operator+(const NCPoly& f, const NCPoly& g) {
  NCPoly out = f;
  out += g;
  return out;
}

NCPoly operator-(const NCPoly& f) { return f.scaled(Scalar(-1L)); }

NCPoly operator-(const NCPoly& f, const NCPoly& g) { return f + (-g); }

NCPoly operator*(const NCPoly& f, const NCPoly& g) {
  if (f.arity_ != g.arity_) {
    throw Error(ErrorKind::Arity, "polynomials over different generator counts");
  }
  NCPoly out(f.arity_);
  for (const auto& [u, a] : f.terms_) {
    for (const auto& [v, b] : g.terms_) out.add_term(u * v, a * b);
  }
  return out;
}

NCPoly operator*(const Scalar& c, const NCPoly& f) { return f.scaled(c); }

bool operator==(const NCPoly& f, const NCPoly& g) {
  return f.arity_ == g.arity_ && f.terms_ == g.terms_;
}

NCPoly sandwich(const Scalar& c, const Word& left, const NCPoly& f,
                const Word& right) {
  NCPoly out(f.arity());
  for (const auto& [w, a] : f.terms()) out.add_term(left * w * right, c * a);
  return out;
}

std::string NCPoly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string body;
    bool negative = false;
    if (c.term_count() == 1) {
      negative = c.leading_sign() < 0;
      const Scalar mag = negative ? -c : c;
      if (w.empty()) {
        body = mag.str();
      } else if (mag.is_one()) {
        body = w.str(names);
      } else if (mag.is_rational() && mag.rational_value().get_den() != 1) {
        body = "(" + mag.str() + ")*" + w.str(names);
      } else {
        body = mag.str() + "*" + w.str(names);
      }
    } else {
      body = "(" + c.str() + ")";
      if (!w.empty()) body += "*" + w.str(names);
    }
    if (first) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

}  // namespace skewpbw
