#include "svcoh/sv_algebra.hpp"

#include <doctest.h>

#include <random>

using namespace svcoh;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

const Params kSamples[] = {
    {q(0), q(1, 3)}, {q(-1), q(1, 2)}, {q(1), q(1, 2)}, {q(-3), q(-1, 2)},
    {q(-1), q(0)},   {q(5, 2), q(-2, 3)}, {q(2), q(1)}, {q(-3), q(3, 2)},
};

}  // namespace

TEST_SUITE("sv-algebra") {

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-4") == q(-4));
  CHECK(parse_rational("+2/4") == q(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), RationalParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), RationalParseError);
  CHECK_THROWS_AS(parse_rational(""), RationalParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), RationalParseError);
  CHECK(to_fraction_string(q(-3)) == "-3/1");
  CHECK(to_string(q(-6, 4)) == "-3/2");
}

TEST_CASE("classify_mu") {
  CHECK(classify_mu(q(1, 3)) == MuClass::NotHalfInteger);
  CHECK(classify_mu(q(1, 2)) == MuClass::HalfOddInteger);
  CHECK(classify_mu(q(-2)) == MuClass::Integer);
  CHECK(classify_mu(q(-7, 2)) == MuClass::HalfOddInteger);
  CHECK(classify_mu(q(3, 4)) == MuClass::NotHalfInteger);
  CHECK(Params(q(0), q(4, 2)).mu_class == MuClass::Integer);
}

TEST_CASE("basis index parity") {
  CHECK_THROWS_AS(BasisIndex::make(Family::Y, 2), std::invalid_argument);
  CHECK_THROWS_AS(BasisIndex::make(Family::L, 3), std::invalid_argument);
  CHECK(BasisIndex::Y(q(-3, 2)).idx2 == -3);
  CHECK_THROWS_AS(BasisIndex::Y(q(1)), std::invalid_argument);
  CHECK(BasisIndex::L(2).index() == 2);
  CHECK(to_string(BasisIndex::Y2(5)) == "Y_5/2");
}

TEST_CASE("bracket examples") {
  const Params p0(q(0), q(0));
  CHECK(bracket(BasisIndex::L(2), BasisIndex::L(3), p0) == Element(BasisIndex::L(5), 1));
  CHECK(bracket(BasisIndex::Y2(1), BasisIndex::Y2(3), p0) == Element(BasisIndex::M(2), 1));
  CHECK(bracket(BasisIndex::L(1), BasisIndex::M(0), Params(q(0), q(1, 2))) ==
        Element(BasisIndex::M(1), 1));
  CHECK(bracket(BasisIndex::M(1), BasisIndex::M(2), p0).is_zero());
  CHECK(bracket(BasisIndex::Y2(1), BasisIndex::M(2), p0).is_zero());
  CHECK(bracket(BasisIndex::L(4), BasisIndex::L(4), p0).is_zero());
  // [L_2, Y_{1/2}] = (1/2 - (lambda+1) + mu) Y_{5/2} at lambda = 1, mu = 1/2.
  CHECK(bracket(BasisIndex::L(2), BasisIndex::Y2(1), Params(q(1), q(1, 2))) ==
        Element(BasisIndex::Y2(5), -1));
}

TEST_CASE("bracket_elements") {
  const Params p0(q(0), q(1, 2));
  Element x;
  x.add(BasisIndex::L(2), 1);
  x.add(BasisIndex::L(3), 1);
  Element expected;
  expected.add(BasisIndex::L(2), -2);
  expected.add(BasisIndex::L(3), -3);
  CHECK(bracket_elements(x, Element(BasisIndex::L(0)), p0) == expected);
  CHECK(bracket_elements(Element{}, x, p0).is_zero());

  // [Y_{1/2}, Y_{5/2}] = 2 M_3 and [Y_{3/2}, Y_{5/2}] = M_4, term by term.
  Element ys;
  ys.add(BasisIndex::Y2(1), 1);
  ys.add(BasisIndex::Y2(3), 1);
  Element want;
  want.add(BasisIndex::M(3), 2);
  want.add(BasisIndex::M(4), 1);
  CHECK(bracket_elements(ys, Element(BasisIndex::Y2(5)), p0) == want);
}

TEST_CASE("degree") {
  const Params p(q(0), q(1, 2));
  CHECK(degree(BasisIndex::L(-3), p) == -3);
  CHECK(degree(BasisIndex::Y2(1), p) == 1);
  CHECK(degree(BasisIndex::M(-1), p) == 0);
}

TEST_CASE("jacobi_defect examples") {
  CHECK(jacobi_defect(BasisIndex::L(1), BasisIndex::L(2), BasisIndex::L(3), Params(q(0), q(0)))
            .is_zero());
  CHECK(jacobi_defect(BasisIndex::L(2), BasisIndex::Y2(1), BasisIndex::M(-1),
                      Params(q(1), q(1, 2)))
            .is_zero());

  // lambda = -1, mu = 3/2, (L_{-1}, Y_{1/2}, Y_{3/2}), expanded by hand:
  //   [[L_{-1},Y_{1/2}],Y_{3/2}] = 2[Y_{-1/2},Y_{3/2}] = 4 M_1
  //   [[Y_{1/2},Y_{3/2}],L_{-1}] = [M_2, L_{-1}]        = -4 M_1
  //   [[Y_{3/2},L_{-1}],Y_{1/2}] = -3[Y_{1/2},Y_{1/2}]  = 0
  const Params p(q(-1), q(3, 2));
  const auto Lm1 = BasisIndex::L(-1), Yh = BasisIndex::Y2(1), Y3h = BasisIndex::Y2(3);
  CHECK(bracket_elements(bracket(Lm1, Yh, p), Element(Y3h), p) == Element(BasisIndex::M(1), 4));
  CHECK(bracket_elements(bracket(Yh, Y3h, p), Element(Lm1), p) == Element(BasisIndex::M(1), -4));
  CHECK(bracket_elements(bracket(Y3h, Lm1, p), Element(Yh), p).is_zero());
  CHECK(jacobi_defect(Lm1, Yh, Y3h, p).is_zero());
}

TEST_CASE("enumerate_window") {
  const auto w1 = enumerate_window(1);
  const std::vector<BasisIndex> want{
      BasisIndex::L(-1), BasisIndex::L(0),   BasisIndex::L(1),  BasisIndex::Y2(-3),
      BasisIndex::Y2(-1), BasisIndex::Y2(1), BasisIndex::Y2(3), BasisIndex::M(-1),
      BasisIndex::M(0),  BasisIndex::M(1)};
  CHECK(w1 == want);
  CHECK(enumerate_window(2).size() == 16);
  CHECK(std::is_sorted(w1.begin(), w1.end()));
  for (int n = 1; n < 6; ++n)
    for (const auto& b : enumerate_window(n)) CHECK(in_window(b, n + 1));
  CHECK_THROWS_AS(enumerate_window(0), std::invalid_argument);
}

TEST_CASE("degree_zero_basis") {
  CHECK(degree_zero_basis(Params(q(2), q(1, 3))).size() == 1);
  const auto half = degree_zero_basis(Params(q(2), q(1, 2)));
  REQUIRE(half.size() == 3);
  CHECK(half[1] == BasisIndex::Y2(-1));
  CHECK(half[2] == BasisIndex::M(-1));
  const auto integral = degree_zero_basis(Params(q(2), q(2)));
  REQUIRE(integral.size() == 2);
  CHECK(integral[1] == BasisIndex::M(-4));
  for (const auto& p : kSamples)
    for (const auto& b : degree_zero_basis(p)) CHECK(degree(b, p) == 0);
}

TEST_CASE("property: antisymmetry, grading and ad L_0 on window 8") {
  const auto w = enumerate_window(8);
  for (const auto& p : kSamples) {
    for (const auto& a : w) {
      CHECK(bracket(BasisIndex::L(0), a, p) == degree(a, p) * Element(a));
      for (const auto& b : w) {
        const auto ab = bracket(a, b, p);
        REQUIRE((ab + bracket(b, a, p)).is_zero());
        for (const auto& [t, c] : ab.terms()) REQUIRE(degree(t, p) == degree(a, p) + degree(b, p));
      }
    }
  }
}

TEST_CASE("property: Jacobi on random triples") {
  std::mt19937 rng(7);
  const auto w = enumerate_window(10);
  std::uniform_int_distribution<std::size_t> pick(0, w.size() - 1);
  std::uniform_int_distribution<int> small(-7, 7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Params p(make_rational(small(rng), 1 + (trial % 4)), make_rational(small(rng), 1 + (trial % 6)));
    REQUIRE(jacobi_defect(w[pick(rng)], w[pick(rng)], w[pick(rng)], p).is_zero());
  }
}

}  // TEST_SUITE
