// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

#include "skewpbw/reduce.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "skewpbw/error.hpp"

namespace skewpbw {

namespace {

std::string pair_name(std::size_t j, std::size_t i) {
  return "(" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ")";
}

void check_context(const NCPoly& f, const ContextPtr& ctx,
                   const std::string& where) {
  for (const auto& [w, c] : f.terms()) {
    if (c.is_parametric() && !same_context(c.context(), ctx)) {
      throw Error(ErrorKind::Context,
                  "rule " + where + " uses a foreign parameter context");
    }
  }
}

}  // namespace

SkewSystem SkewSystem::validate(std::vector<Rule> rules, std::size_t n,
                                ContextPtr ctx) {
  if (n == 0 || n > 0xffff) {
    throw Error(ErrorKind::InvalidSystem, "generator count out of range");
  }
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<std::optional<Rule>> slots(pairs);

  for (auto& r : rules) {
    if (r.lhs.size() != 2) {
      throw Error(ErrorKind::InvalidSystem,
                  "rule left-hand side must be a word of length 2");
    }
    const Letter j = r.lhs[0];
    const Letter i = r.lhs[1];
    if (j >= n || i >= n) {
      throw Error(ErrorKind::Arity, "rule uses a generator beyond x" +
                                        std::to_string(n));
    }
    if (j <= i) {
      throw Error(ErrorKind::InvalidSystem,
                  "rule " + pair_name(j, i) +
                      ": left-hand word must be x_j x_i with j > i");
    }
    if (r.rhs.arity() != n) {
      throw Error(ErrorKind::Arity,
                  "rule " + pair_name(j, i) + ": wrong generator count");
    }
    auto& slot = slots[index(j, i)];
    if (slot) {
      throw Error(ErrorKind::InvalidSystem,
                  "duplicate rule for pair " + pair_name(j, i));
    }
    slot = std::move(r);
  }

  SkewSystem q;
  q.n_ = n;
  q.ctx_ = std::move(ctx);
  q.rules_.reserve(pairs);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto& slot = slots[index(static_cast<Letter>(j), static_cast<Letter>(i))];
      if (!slot) {
        throw Error(ErrorKind::InvalidSystem,
                    "missing rule for pair " + pair_name(j, i));
      }
      check_context(slot->rhs, q.ctx_, pair_name(j, i));
      const Word ascending{static_cast<Letter>(i), static_cast<Letter>(j)};
      Scalar c = slot->rhs.coefficient(ascending);
      if (!c.is_unit()) {
        throw Error(ErrorKind::InvalidSystem,
                    "rule " + pair_name(j, i) + ": coefficient of x" +
                        std::to_string(i + 1) + "x" + std::to_string(j + 1) +
                        " is '" + c.str() + "', not a unit");
      }
      NCPoly tail = slot->rhs - NCPoly::monomial(n, c, ascending);
      if (!tail.is_zero() && deglex_compare(tail.leading().first, ascending) > 0) {
        throw Error(ErrorKind::InvalidSystem,
                    "rule " + pair_name(j, i) + ": tail term '" +
                        tail.leading().first.str(default_names(n)) +
                        "' exceeds x" + std::to_string(i + 1) + "x" +
                        std::to_string(j + 1) + " in deglex");
      }
      q.coefficients_.push_back(std::move(c));
      q.tails_.push_back(std::move(tail));
      q.rules_.push_back(std::move(*slot));
    }
  }
  return q;
}

// ---------------------------------------------------------------------------

NCPoly ReductionTrace::telescoped(const SkewSystem& q) const {
  NCPoly sum(q.generator_count());
  for (const auto& s : steps) {
    const Rule& r = q.rule(s.j, s.i);
    const NCPoly difference =
        NCPoly::monomial(q.generator_count(), Scalar(1L), r.lhs) - r.rhs;
    sum += sandwich(s.coefficient, s.left, difference, s.right);
  }
  return sum;
}

std::string ReductionTrace::str(std::span<const std::string> names) const {
  std::string out;
  for (const auto& s : steps) {
    out += "σ=(" + std::to_string(s.j + 1) + "," + std::to_string(s.i + 1) +
           ") A=" + s.left.str(names) + " B=" + s.right.str(names) +
           " c=" + s.coefficient.str() + "\n";
  }
  return out;
}

NCPoly apply_reduction(const NCPoly& f, const Rule& rule, const Word& left,
                       const Word& right) {
  const Word target = left * rule.lhs * right;
  const Scalar c = f.coefficient(target);
  if (c.is_zero()) return f;
  NCPoly out = f;
  out.add_term(target, -c);
  out += sandwich(c, left, rule.rhs, right);
  return out;
}

NCPoly red(const Scalar& c, const Word& w, const SkewSystem& q,
           ReductionStep* step) {
  const auto k = w.first_descent();
  if (!k) {
    throw Error(ErrorKind::Precondition,
                "red: '" + w.str(default_names(q.generator_count())) +
                    "' is standard");
  }
  const Letter j = w[*k];
  const Letter i = w[*k + 1];
  Word left = w.subword(0, *k);
  Word right = w.subword(*k + 2, w.size() - *k - 2);
  NCPoly out = sandwich(c, left, q.rule(j, i).rhs, right);
  if (step) *step = ReductionStep{j, i, std::move(left), std::move(right), c};
  return out;
}

StandardForm stred(const NCPoly& f, const SkewSystem& q) {
  if (f.arity() != q.generator_count()) {
    throw Error(ErrorKind::Arity, "stred: polynomial and system disagree on n");
  }
  StandardForm out{NCPoly(f.arity()), {}};
  NCPoly rest = f;
  while (!rest.is_zero()) {
    auto [w, c] = rest.pop_leading();
    if (w.is_standard()) {
      out.poly.add_term(w, c);
      continue;
    }
    ReductionStep step;
    rest += red(c, w, q, &step);
    out.trace.steps.push_back(std::move(step));
  }
  return out;
}

std::vector<NCPoly> normal_forms_exhaustive(const NCPoly& f,
                                            const SkewSystem& q,
                                            const ExhaustiveLimits& limits) {
  const auto names = default_names(q.generator_count());
  if (!f.is_zero() && f.degree() > limits.max_degree) {
    throw Error(ErrorKind::Precondition,
                "exhaustive search: degree of '" + f.str(names) +
                    "' exceeds the cap " + std::to_string(limits.max_degree));
  }

  std::unordered_set<std::string> seen;
  std::map<std::string, NCPoly> finals;
  std::deque<NCPoly> frontier;
  seen.insert(f.str(names));
  frontier.push_back(f);

  while (!frontier.empty()) {
    NCPoly g = std::move(frontier.front());
    frontier.pop_front();
    bool irreducible = true;
    for (const auto& [w, c] : g.terms()) {
      for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k] <= w[k + 1]) continue;
        irreducible = false;
        NCPoly next = apply_reduction(g, q.rule(w[k], w[k + 1]),
                                      w.subword(0, k),
                                      w.subword(k + 2, w.size() - k - 2));
        if (seen.insert(next.str(names)).second) {
          if (seen.size() > limits.node_cap) {
            throw Error(ErrorKind::Budget,
                        "exhaustive search on '" + f.str(names) +
                            "' exceeded " + std::to_string(limits.node_cap) +
                            " states");
          }
          frontier.push_back(std::move(next));
        }
      }
    }
    if (irreducible) {
      auto key = g.str(names);
      finals.emplace(std::move(key), std::move(g));
    }
  }

  std::vector<NCPoly> out;
  out.reserve(finals.size());
  for (auto& [key, g] : finals) out.push_back(std::move(g));
  return out;
}

}  // namespace skewpbw
