// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

#include "skewpbw/presentio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <set>

#include "skewpbw/error.hpp"

namespace skewpbw {

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_identifier(std::string_view s) {
  return !s.empty() && is_name_start(s.front()) &&
         std::all_of(s.begin(), s.end(), is_name_char);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Column (1-based) of `part` inside `whole`, where part is a view into whole.
std::size_t column_of(std::string_view whole, std::string_view part) {
  return static_cast<std::size_t>(part.data() - whole.data()) + 1;
}

// Recursive-descent expression parser over one source fragment.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*'|'/') power)*
//   power  := atom ['^' ['+'|'-'] integer]
//   atom   := integer | name | '(' expr ')'
class ExprParser {
 public:
  ExprParser(std::string_view text, std::span<const std::string> generators,
             const ContextPtr& ctx, std::size_t line, std::size_t column)
      : text_(text),
        generators_(generators),
        ctx_(ctx),
        line_(line),
        column_(column) {}

  NCPoly parse_all() {
    NCPoly f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_ + pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t arity() const { return generators_.size(); }

  NCPoly expr() {
    NCPoly f(arity());
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    NCPoly t = term();
    f = negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        f += term();
      } else if (accept('-')) {
        f -= term();
      } else {
        return f;
      }
    }
  }

  NCPoly term() {
    NCPoly f = power();
    for (;;) {
      if (accept('*')) {
        f = f * power();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const NCPoly d = power();
        f = f.scaled(unit_of(d, at).inverse());
      } else {
        return f;
      }
    }
  }

  Scalar unit_of(const NCPoly& d, std::size_t at) {
    const bool constant =
        d.size() == 1 && d.terms().begin()->first.empty();
    if (!constant || !d.terms().begin()->second.is_unit()) {
      pos_ = at;
      fail(d.is_zero() ? "division by zero" : "can only divide by a unit scalar");
    }
    return d.terms().begin()->second;
  }

  NCPoly power() {
    skip_space();
    const std::size_t at = pos_;
    NCPoly base = atom();
    if (!accept('^')) return base;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_space();
    const std::size_t digits_at = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == digits_at) fail("expected integer exponent");
    if (pos_ - digits_at > 6) fail("exponent too large");
    const int e = std::stoi(std::string(text_.substr(digits_at, pos_ - digits_at)));
    if (negative) {
      return NCPoly::constant(arity(), unit_of(base, at).pow(-e));
    }
    NCPoly out = NCPoly::constant(arity(), Scalar(1L));
    for (int k = 0; k < e; ++k) out = out * base;
    return out;
  }

  NCPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NCPoly f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      Rational q(std::string(text_.substr(start, pos_ - start)), 10);
      return NCPoly::constant(arity(), Scalar(q));
    }
    if (is_name_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t g = 0; g < generators_.size(); ++g) {
        if (generators_[g] == name) {
          return NCPoly::generator(arity(), static_cast<Letter>(g));
        }
      }
      if (ctx_) {
        if (auto k = ctx_->find(name)) {
          return NCPoly::constant(arity(), Scalar::parameter(ctx_, *k));
        }
      }
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::span<const std::string> generators_;
  const ContextPtr& ctx_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

struct Statement {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto at = s.find(sep, start);
    parts.push_back(s.substr(start, at - start));
    if (at == std::string_view::npos) return parts;
    start = at + 1;
  }
}

std::string pair_text(const std::vector<std::string>& g, Letter a, Letter b) {
  return g[a] + "*" + g[b];
}

Relation relation_from(const NCPoly& lhs, const NCPoly& rhs,
                       const std::vector<std::string>& gens,
                       const Statement& st) {
  const std::size_t col = st.column;
  // Rewrite form: a single word of length 2 with coefficient 1.
  if (lhs.size() == 1) {
    const auto& [w, c] = *lhs.terms().begin();
    if (w.size() == 2 && c.is_one()) {
      if (w[0] == w[1]) {
        throw ParseError("relation left side must use two distinct generators",
                         st.line, col);
      }
      if (w[0] < w[1]) {
        throw ParseError("relation left side '" + pair_text(gens, w[0], w[1]) +
                             "' is not descending; rewrite it as '" +
                             pair_text(gens, w[1], w[0]) + " = ...'",
                         st.line, col);
      }
      return Relation{w[0], w[1], rhs, st.line};
    }
  }
  // Bracket form: a*u*v + b*v*u = rhs.
  if (lhs.size() == 2) {
    auto it = lhs.terms().begin();
    const Word& u = it->first;
    const Word& v = std::next(it)->first;
    if (u.size() == 2 && v.size() == 2 && u[0] == v[1] && u[1] == v[0] &&
        u[0] != u[1]) {
      const Word& descending = u[0] > u[1] ? u : v;
      const Scalar c = lhs.coefficient(descending);
      if (!c.is_unit()) {
        throw ParseError("coefficient of '" +
                             pair_text(gens, descending[0], descending[1]) +
                             "' must be a unit",
                         st.line, col);
      }
      const NCPoly rest = lhs - NCPoly::monomial(gens.size(), c, descending);
      return Relation{descending[0], descending[1],
                      (rhs - rest).scaled(c.inverse()), st.line};
    }
  }
  throw ParseError(
      "relation left side must be 'b*a' (rewrite form) or 'a*b - c*b*a' "
      "(bracket form)",
      st.line, col);
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<Letter> Presentation::generator(std::string_view name) const {
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g] == name) return static_cast<Letter>(g);
  }
  return std::nullopt;
}

const Relation& Presentation::relation(Letter j, Letter i) const {
  for (const auto& r : relations) {
    if (r.j == j && r.i == i) return r;
  }
  throw Error(ErrorKind::Argument, "no relation for the requested pair");
}

bool equivalent(const Presentation& a, const Presentation& b) {
  if (a.generators != b.generators || !same_context(a.context, b.context) ||
      a.relations.size() != b.relations.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.relations.size(); ++k) {
    const auto& x = a.relations[k];
    const auto& y = b.relations[k];
    if (x.j != y.j || x.i != y.i || !(x.rhs == y.rhs)) return false;
  }
  return true;
}

NCPoly parse_expression(std::string_view text,
                        std::span<const std::string> generators,
                        const ContextPtr& ctx) {
  return ExprParser(text, generators, ctx, 1, 1).parse_all();
}

Scalar parse_scalar(std::string_view text, const ContextPtr& ctx) {
  const NCPoly f = ExprParser(text, {}, ctx, 1, 1).parse_all();
  if (f.is_zero()) return Scalar();
  return f.terms().begin()->second;
}

Presentation parse_presentation(std::string_view text) {
  std::vector<Statement> statements;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    const std::string_view full = line;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    for (std::string_view part : split(line, ';')) {
      const std::string_view s = trim(part);
      if (!s.empty()) statements.push_back({s, line_no, column_of(full, s)});
    }
  }
  if (statements.empty()) throw ParseError("empty presentation", 1, 1);

  Presentation p;
  const auto& head = statements.front();
  constexpr std::string_view kHeader = "generators:";
  if (!head.text.starts_with(kHeader)) {
    throw ParseError("expected 'generators:' header", head.line, head.column);
  }
  {
    const std::string_view list = head.text.substr(kHeader.size());
    for (std::string_view name : split(list, ',')) {
      const std::string_view n = trim(name);
      const std::size_t col =
          head.column + static_cast<std::size_t>(n.data() - head.text.data());
      if (!is_identifier(n)) {
        throw ParseError("invalid generator name '" + std::string(n) + "'",
                         head.line, col);
      }
      if (p.generator(n)) {
        throw ParseError("duplicate generator '" + std::string(n) + "'",
                         head.line, col);
      }
      p.generators.emplace_back(n);
    }
    if (p.generators.size() < 2) {
      throw ParseError("at least two generators are required", head.line,
                       head.column);
    }
  }

  std::vector<ParamDecl> decls;
  std::vector<const Statement*> relation_statements;
  for (std::size_t s = 1; s < statements.size(); ++s) {
    const Statement& st = statements[s];
    const bool is_unit = st.text.starts_with("unit") && st.text.size() > 4 &&
                         std::isspace(static_cast<unsigned char>(st.text[4]));
    const bool is_param = st.text.starts_with("param") && st.text.size() > 5 &&
                          std::isspace(static_cast<unsigned char>(st.text[5]));
    if (st.text.find('=') != std::string_view::npos) {
      relation_statements.push_back(&st);
      continue;
    }
    if (!is_unit && !is_param) {
      throw ParseError("expected a declaration or a relation", st.line,
                       st.column);
    }
    const std::string_view list = st.text.substr(is_unit ? 4 : 5);
    for (std::string_view name : split(list, ',')) {
      const std::string_view n = trim(name);
      const std::size_t col =
          st.column + static_cast<std::size_t>(n.data() - st.text.data());
      if (!is_identifier(n)) {
        throw ParseError("invalid parameter name '" + std::string(n) + "'",
                         st.line, col);
      }
      if (p.generator(n)) {
        throw ParseError("parameter '" + std::string(n) +
                             "' clashes with a generator name",
                         st.line, col);
      }
      if (std::any_of(decls.begin(), decls.end(),
                      [&](const ParamDecl& d) { return d.name == n; })) {
        throw ParseError("duplicate parameter '" + std::string(n) + "'",
                         st.line, col);
      }
      decls.push_back({std::string(n), is_unit});
    }
  }
  if (!decls.empty()) p.context = make_context(std::move(decls));

  const std::size_t n = p.generators.size();
  std::vector<std::optional<Relation>> slots(n * n);
  for (const Statement* st : relation_statements) {
    const auto eq = st->text.find('=');
    if (st->text.find('=', eq + 1) != std::string_view::npos) {
      throw ParseError("relation has more than one '='", st->line,
                       st->column + st->text.find('=', eq + 1));
    }
    const std::string_view lhs_text = st->text.substr(0, eq);
    const std::string_view rhs_text = st->text.substr(eq + 1);
    const NCPoly lhs =
        ExprParser(lhs_text, p.generators, p.context, st->line, st->column)
            .parse_all();
    const NCPoly rhs = ExprParser(rhs_text, p.generators, p.context, st->line,
                                  st->column + eq + 1)
                           .parse_all();
    Relation r = relation_from(lhs, rhs, p.generators, *st);
    auto& slot = slots[r.j * n + r.i];
    if (slot) {
      throw ParseError("duplicate relation for '" +
                           pair_text(p.generators, r.j, r.i) +
                           "' (first given on line " +
                           std::to_string(slot->line) + ")",
                       st->line, st->column);
    }
    slot = std::move(r);
  }

  // Missing relations are reported at the end of the input.
  const std::size_t end_line =
      1 + static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  for (std::size_t j = n; j-- > 1;) {
    for (std::size_t i = j; i-- > 0;) {
      auto& slot = slots[j * n + i];
      if (!slot) {
        throw ParseError(
            "missing relation for '" +
                pair_text(p.generators, static_cast<Letter>(j),
                          static_cast<Letter>(i)) +
                "'",
            end_line, 1);
      }
      p.relations.push_back(std::move(*slot));
    }
  }
  return p;
}

std::string render_presentation(const Presentation& p) {
  std::string out = "generators: ";
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    if (g) out += ", ";
    out += p.generators[g];
  }
  out += '\n';
  if (p.context) {
    for (const auto& d : p.context->decls()) {
      out += (d.unit ? "unit " : "param ") + d.name + '\n';
    }
  }
  for (const auto& r : p.relations) {
    out += pair_text(p.generators, r.j, r.i) + " = " + r.rhs.str(p.generators) +
           '\n';
  }
  return out;
}

std::string presentation_digest(const Presentation& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : render_presentation(p)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Presentation substitute(const Presentation& p,
                        std::span<const std::pair<std::string, Rational>> values) {
  if (values.empty()) return p;
  const std::size_t count = p.context ? p.context->size() : 0;
  std::vector<std::optional<Rational>> fixed(count);
  for (const auto& [name, value] : values) {
    const auto k = p.context ? p.context->find(name) : std::nullopt;
    if (!k) throw Error(ErrorKind::Argument, "unknown parameter '" + name + "'");
    if ((*p.context)[*k].unit && sgn(value) == 0) {
      throw Error(ErrorKind::Argument,
                  "unit parameter '" + name + "' cannot be set to 0");
    }
    fixed[*k] = value;
  }
  std::vector<ParamDecl> kept;
  for (std::size_t k = 0; k < count; ++k) {
    if (!fixed[k]) kept.push_back((*p.context)[k]);
  }
  ContextPtr ctx = kept.empty() ? nullptr : make_context(std::move(kept));
  std::vector<Scalar> images;
  std::size_t next = 0;
  for (std::size_t k = 0; k < count; ++k) {
    images.push_back(fixed[k] ? Scalar(*fixed[k])
                              : Scalar::parameter(ctx, next++));
  }

  Presentation out;
  out.generators = p.generators;
  out.context = ctx;
  for (const auto& r : p.relations) {
    out.relations.push_back(Relation{r.j, r.i, r.rhs.evaluated(images), r.line});
  }
  return out;
}

SkewSystem build_system(const Presentation& p) {
  std::vector<Rule> rules;
  rules.reserve(p.relations.size());
  for (const auto& r : p.relations) {
    rules.push_back(Rule{Word{r.j, r.i}, r.rhs});
  }
  return SkewSystem::validate(std::move(rules), p.generator_count(), p.context);
}

}  // namespace skewpbw
