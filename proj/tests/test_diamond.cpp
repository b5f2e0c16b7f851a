// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "skewpbw/diamond.hpp"
#include "skewpbw/error.hpp"
#include "support.hpp"

namespace skewpbw {
namespace {

using testing::corpus_presentation;
using testing::expr;

const char* kFour = R"(generators: a, b, c, d
d*c = c*d
d*b = b*d
d*a = a*d
c*b = b*c
c*a = a*c
b*a = a*b
)";

TEST_CASE("overlap enumeration") {
  const auto three = enumerate_overlaps(testing::corpus_system("dispin"));
  REQUIRE(three.size() == 1);
  CHECK(three[0].word() == Word{2, 1, 0});

  const auto four = enumerate_overlaps(build_system(parse_presentation(kFour)));
  REQUIRE(four.size() == 4);
  CHECK(four[0].word() == Word{2, 1, 0});
  CHECK(four[1].word() == Word{3, 1, 0});
  CHECK(four[2].word() == Word{3, 2, 0});
  CHECK(four[3].word() == Word{3, 2, 1});

  const SkewSystem two = build_system(parse_presentation("generators: x, y\ny*x = 2*x*y + 1\n"));
  CHECK(enumerate_overlaps(two).empty());
  CHECK(check_pbw(two).is_pbw);
}

TEST_CASE("worked examples") {
  {
    const Presentation p = corpus_presentation("dispin");
    const PbwVerdict v = check_pbw(build_system(p));
    CHECK(v.is_pbw);
    CHECK(v.witnesses[0].g == expr(p, "-x*y*z + 2*x*z + y^2 - y"));
    CHECK(v.witnesses[0].h == v.witnesses[0].g);
  }
  {
    const Presentation p = corpus_presentation("woronowicz");
    const PbwVerdict v = check_pbw(build_system(p));
    CHECK(v.is_pbw);
    CHECK(v.witnesses[0].g == expr(p, "nu^-2*x*y*z - nu^-1*z^2"));
    CHECK(v.witnesses[0].h == v.witnesses[0].g);
  }
  {
    const Presentation p = corpus_presentation("ex3");
    const PbwVerdict v = check_pbw(build_system(p));
    CHECK_FALSE(v.is_pbw);
    CHECK(v.first_failure == 0u);
    CHECK(v.witnesses[0].difference == expr(p, "(alpha - 1)*y*z + z"));
  }
}

TEST_CASE("quotient multiplication") {
  const Presentation p = corpus_presentation("dispin");
  const SkewSystem q = build_system(p);
  const PbwVerdict v = check_pbw(q);
  CHECK(quotient_multiply(expr(p, "y"), expr(p, "x"), q, v) == expr(p, "x*y - x"));
  const NCPoly f = expr(p, "x*y^2 - 3*z + 1/2");
  CHECK(quotient_multiply(expr(p, "1"), f, q, v) == f);
  CHECK(quotient_multiply(f, expr(p, "1"), q, v) == f);
  CHECK(quotient_multiply(quotient_multiply(expr(p, "z"), expr(p, "y"), q, v),
                          expr(p, "x"), q, v) ==
        quotient_multiply(expr(p, "z"),
                          quotient_multiply(expr(p, "y"), expr(p, "x"), q, v), q, v));
  CHECK_THROWS_AS(quotient_multiply(expr(p, "z*x"), f, q, v), Error);

  const SkewSystem ex3 = testing::corpus_system("ex3");
  CHECK_THROWS_AS(quotient_multiply(NCPoly::generator(3, 1), NCPoly::generator(3, 0),
                                    ex3, check_pbw(ex3)),
                  Error);
}

TEST_CASE("verdict agrees with the exhaustive oracle") {
  for (const auto& name : testing::valid_corpus_names()) {
    Presentation p = corpus_presentation(name);
    std::vector<std::pair<std::string, Rational>> values;
    Rational v = 2;
    for (const auto& d : p.context ? p.context->decls() : std::span<const ParamDecl>{}) {
      values.emplace_back(d.name, v);
      v += 1;
    }
    const SkewSystem q = build_system(substitute(p, values));
    const PbwVerdict verdict = check_pbw(q);
    CAPTURE(name);
    std::size_t non_unique = 0;
    for (const auto& w : {Word{2, 1, 0}, Word{2, 2, 1, 0}, Word{2, 1, 0, 0}, Word{1, 2, 0, 1}}) {
      non_unique += normal_forms_exhaustive(NCPoly::monomial(3, 1L, w), q).size() > 1;
    }
    CHECK((non_unique == 0) == verdict.is_pbw);
    CHECK(check_pbw(q).is_pbw == verdict.is_pbw);
  }
}

TEST_CASE("n = 4 with a failing overlap") {
  std::string text = kFour;
  text.replace(text.find("b*a = a*b"), 9, "b*a = a*b + a");
  text.replace(text.find("c*a = a*c"), 9, "c*a = a*c + c");
  const SkewSystem q = build_system(parse_presentation(text));
  const PbwVerdict v = check_pbw(q);
  CHECK_FALSE(v.is_pbw);
  REQUIRE(v.first_failure.has_value());
  const Word bad = v.witnesses[*v.first_failure].overlap.word();
  CHECK(normal_forms_exhaustive(NCPoly::monomial(4, 1L, bad), q).size() >= 2);
}

}  // namespace
}  // namespace skewpbw
