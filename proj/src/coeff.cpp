// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

#include "skewpbw/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>

#include "skewpbw/error.hpp"

namespace skewpbw {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

bool all_zero(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

// "name" or "name^k" products for the nonzero exponents of one term.
std::string monomial_factors(const ParamContext& ctx, const Exponents& e) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx[k].name;
    if (e[k] != 1) out += '^' + std::to_string(e[k]);
  }
  return out;
}

// Renders |q| * factors for q > 0.
std::string magnitude_text(const Rational& q, const std::string& factors) {
  if (factors.empty()) return to_string(q);
  if (q == 1) return factors;
  if (q.get_den() == 1) return to_string(q) + "*" + factors;
  return "(" + to_string(q) + ")*" + factors;
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Context: return "context";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::NotAUnit: return "not-a-unit";
    case ErrorKind::EmptyPolynomial: return "empty-polynomial";
    case ErrorKind::Arity: return "arity";
    case ErrorKind::InvalidSystem: return "invalid-system";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::VerdictRequired: return "verdict-required";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Indeterminate: return "indeterminate";
    case ErrorKind::Argument: return "argument";
  }
  return "unknown";
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const auto num = body.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1")
                                                   : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 0, 0);
  }
  if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
    throw Error(ErrorKind::DivisionByZero,
                "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(std::string(num) + "/" + std::string(den), 10);
  q.canonicalize();
  if (!text.empty() && text.front() == '-') q = -q;
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// ParamContext

ParamContext::ParamContext(std::vector<ParamDecl> decls)
    : decls_(std::move(decls)) {
  std::set<std::string_view> seen;
  for (const auto& d : decls_) {
    if (d.name.empty()) throw Error(ErrorKind::Argument, "empty parameter name");
    if (!seen.insert(d.name).second) {
      throw Error(ErrorKind::Argument, "duplicate parameter '" + d.name + "'");
    }
  }
}

std::optional<std::size_t> ParamContext::find(std::string_view name) const {
  for (std::size_t k = 0; k < decls_.size(); ++k) {
    if (decls_[k].name == name) return k;
  }
  return std::nullopt;
}

ContextPtr make_context(std::vector<ParamDecl> decls) {
  return std::make_shared<const ParamContext>(std::move(decls));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  const std::size_t na = a ? a->size() : 0;
  const std::size_t nb = b ? b->size() : 0;
  if (na == 0 || nb == 0) return na == nb;
  return *a == *b;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::parameter(const ContextPtr& ctx, std::size_t index, int power) {
  if (!ctx || index >= ctx->size()) {
    throw Error(ErrorKind::Argument, "parameter index out of range");
  }
  Exponents e(ctx->size(), 0);
  e[index] = power;
  Terms t;
  t.emplace(std::move(e), Rational(1));
  return from_terms(ctx, std::move(t));
}

Scalar Scalar::from_terms(const ContextPtr& ctx, Terms terms) {
  const std::size_t n = ctx ? ctx->size() : 0;
  for (const auto& [e, q] : terms) {
    if (e.size() != n) {
      throw Error(ErrorKind::Context, "exponent vector does not match context");
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (e[k] < 0 && !(*ctx)[k].unit) {
        throw Error(ErrorKind::NotAUnit,
                    "negative power of non-unit parameter '" + (*ctx)[k].name +
                        "'");
      }
    }
  }
  Scalar s;
  s.assign(ctx, std::move(terms));
  return s;
}

void Scalar::assign(const ContextPtr& ctx, Terms terms) {
  std::erase_if(terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  if (terms.empty()) {
    constant_ = 0;
    ctx_.reset();
    terms_.clear();
    return;
  }
  if (terms.size() == 1 && all_zero(terms.begin()->first)) {
    constant_ = terms.begin()->second;
    ctx_.reset();
    terms_.clear();
    return;
  }
  constant_ = 0;
  ctx_ = ctx;
  terms_ = std::move(terms);
}

const Rational& Scalar::rational_value() const {
  if (!terms_.empty()) {
    throw Error(ErrorKind::Precondition,
                "scalar '" + str() + "' is not a rational constant");
  }
  return constant_;
}

Scalar::Terms Scalar::terms() const {
  if (!terms_.empty()) return terms_;
  Terms t;
  if (sgn(constant_) != 0) t.emplace(Exponents{}, constant_);
  return t;
}

std::size_t Scalar::term_count() const {
  if (!terms_.empty()) return terms_.size();
  return sgn(constant_) == 0 ? 0 : 1;
}

int Scalar::leading_sign() const {
  if (!terms_.empty()) return sgn(terms_.begin()->second);
  return sgn(constant_);
}

bool Scalar::is_unit() const {
  if (terms_.empty()) return sgn(constant_) != 0;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] != 0 && !(*ctx_)[k].unit) return false;
  }
  return true;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (terms_.empty()) return Scalar(Rational(1) / constant_);
  if (!is_unit()) {
    throw Error(ErrorKind::NotAUnit, "'" + str() + "' is not a unit");
  }
  const auto& [e, q] = *terms_.begin();
  Exponents inv(e.size());
  std::transform(e.begin(), e.end(), inv.begin(), [](int x) { return -x; });
  Terms t;
  t.emplace(std::move(inv), Rational(1) / q);
  return from_terms(ctx_, std::move(t));
}

Scalar Scalar::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result(1L);
  Scalar base = *this;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

Scalar Scalar::evaluate(std::span<const Scalar> images) const {
  if (terms_.empty()) return *this;
  if (images.size() != ctx_->size()) {
    throw Error(ErrorKind::Context, "substitution size does not match context");
  }
  Scalar sum;
  for (const auto& [e, q] : terms_) {
    Scalar term(q);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] != 0) term *= images[k].pow(e[k]);
    }
    sum += term;
  }
  return sum;
}

ContextPtr Scalar::merge_contexts(const Scalar& a, const Scalar& b) {
  if (!a.ctx_) return b.ctx_;
  if (!b.ctx_) return a.ctx_;
  if (!same_context(a.ctx_, b.ctx_)) {
    throw Error(ErrorKind::Context,
                "scalars belong to different parameter contexts");
  }
  return a.ctx_;
}

Scalar::Terms Scalar::lifted(const ContextPtr& ctx) const {
  if (!terms_.empty()) return terms_;
  Terms t;
  if (sgn(constant_) != 0) t.emplace(Exponents(ctx->size(), 0), constant_);
  return t;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.terms_.empty() && b.terms_.empty()) {
    return Scalar(Rational(a.constant_ + b.constant_));
  }
  const ContextPtr ctx = Scalar::merge_contexts(a, b);
  Scalar::Terms t = a.lifted(ctx);
  for (const auto& [e, q] : b.lifted(ctx)) t[e] += q;
  Scalar s;
  s.assign(ctx, std::move(t));
  return s;
}

Scalar operator-(const Scalar& a) {
  Scalar s = a;
  s.constant_ = -s.constant_;
  for (auto& [e, q] : s.terms_) q = -q;
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.terms_.empty() && b.terms_.empty()) {
    return Scalar(Rational(a.constant_ * b.constant_));
  }
  if (a.is_zero() || b.is_zero()) return Scalar();
  const ContextPtr ctx = Scalar::merge_contexts(a, b);
  Scalar::Terms t;
  if (a.terms_.empty() || b.terms_.empty()) {
    const Scalar& param = a.terms_.empty() ? b : a;
    const Rational& c = a.terms_.empty() ? a.constant_ : b.constant_;
    for (const auto& [e, q] : param.terms_) t.emplace(e, q * c);
  } else {
    for (const auto& [ea, qa] : a.terms_) {
      for (const auto& [eb, qb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        t[e] += qa * qb;
      }
    }
  }
  Scalar s;
  s.assign(ctx, std::move(t));
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.terms_.empty() != b.terms_.empty()) return false;
  if (a.terms_.empty()) return a.constant_ == b.constant_;
  return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
}

std::string Scalar::str() const {
  if (terms_.empty()) return to_string(constant_);
  std::string out;
  bool first = true;
  for (const auto& [e, q] : terms_) {
    const bool negative = sgn(q) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += magnitude_text(abs(q), monomial_factors(*ctx_, e));
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace skewpbw
