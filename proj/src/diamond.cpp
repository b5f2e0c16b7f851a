// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

#include "skewpbw/diamond.hpp"

#include "skewpbw/error.hpp"

namespace skewpbw {

std::vector<Overlap> enumerate_overlaps(const SkewSystem& q) {
  const std::size_t n = q.generator_count();
  std::vector<Overlap> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto lk = static_cast<Letter>(k);
        const auto lj = static_cast<Letter>(j);
        const auto li = static_cast<Letter>(i);
        Overlap o;
        o.k = lk;
        o.j = lj;
        o.i = li;
        o.left_target = NCPoly::generator(n, lk) * q.rule(lj, li).rhs;
        o.right_target = q.rule(lk, lj).rhs * NCPoly::generator(n, li);
        out.push_back(std::move(o));
      }
    }
  }
  return out;
}

PbwVerdict check_pbw(const SkewSystem& q) {
  PbwVerdict verdict;
  for (auto& o : enumerate_overlaps(q)) {
    OverlapWitness w;
    w.g = stred(o.left_target, q).poly;
    w.h = stred(o.right_target, q).poly;
    w.difference = w.g - w.h;
    w.overlap = std::move(o);
    if (!w.resolved() && !verdict.first_failure) {
      verdict.is_pbw = false;
      verdict.first_failure = verdict.witnesses.size();
    }
    verdict.witnesses.push_back(std::move(w));
  }
  return verdict;
}

NCPoly quotient_multiply(const NCPoly& f, const NCPoly& g, const SkewSystem& q,
                         const PbwVerdict& verdict) {
  if (!verdict.is_pbw) {
    throw Error(ErrorKind::VerdictRequired,
                "quotient product requires a PBW system");
  }
  if (!f.is_standard() || !g.is_standard()) {
    throw Error(ErrorKind::Precondition,
                "quotient product operands must be standard polynomials");
  }
  return stred(f * g, q).poly;
}

}  // namespace skewpbw
