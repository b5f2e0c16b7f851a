// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

// Overlap ambiguities of a skew system and the PBW decision.
//
// The only ambiguities of a skew system are the words x_k x_j x_i with
// k > j > i. The system has a PBW basis of standard monomials iff, for every
// such triple, stred(x_k f_ji) == stred(f_kj x_i).

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skewpbw/reduce.hpp"

namespace skewpbw {

struct Overlap {
  Letter k = 0;  // 0-based, k > j > i
  Letter j = 0;
  Letter i = 0;
  NCPoly left_target;   // x_k * f_ji
  NCPoly right_target;  // f_kj * x_i

  Word word() const { return Word{k, j, i}; }
};

/// All C(n,3) overlaps, in lexicographic (i, j, k) order.
std::vector<Overlap> enumerate_overlaps(const SkewSystem& q);

struct OverlapWitness {
  Overlap overlap;
  NCPoly g;           // stred(x_k f_ji)
  NCPoly h;           // stred(f_kj x_i)
  NCPoly difference;  // g - h

  bool resolved() const { return difference.is_zero(); }
};

struct PbwVerdict {
  bool is_pbw = true;
  std::vector<OverlapWitness> witnesses;  // one per overlap, scan order
  std::optional<std::size_t> first_failure;  // index into witnesses
};

PbwVerdict check_pbw(const SkewSystem& q);

/// Product of two standard polynomials in k<X>/I_Q: stred(f * g).
/// Error(VerdictRequired) unless `verdict` is a PBW verdict for q,
/// Error(Precondition) unless f and g are standard.
NCPoly quotient_multiply(const NCPoly& f, const NCPoly& g, const SkewSystem& q,
                         const PbwVerdict& verdict);

}  // namespace skewpbw
