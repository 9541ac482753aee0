#include <random>

#include "doctest.h"
#include "homlie/qrational.hpp"
#include "printers.hpp"

using namespace homlie;

namespace {

LaurentPoly q(int e) { return LaurentPoly::monomial(e); }

// Defining quotients computed by division, independent of the closed forms.
QRational bracket_by_division(int n) { return QRational(q(n) - q(-n), q(1) - q(-1)); }
QRational brace_by_division(int n) { return QRational(LaurentPoly(1) - q(n), LaurentPoly(1) - q(1)); }

QRational random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), exp(-3, 3), len(1, 3);
  auto poly = [&] {
    LaurentPoly p;
    for (int i = len(rng); i > 0; --i) p += LaurentPoly::monomial(exp(rng), Rational(coeff(rng), 1 + (i % 2)));
    return p;
  };
  LaurentPoly den;
  while (den.is_zero()) den = poly();
  return QRational(poly(), den);
}

}  // namespace

TEST_CASE("laurent arithmetic and rendering") {
  LaurentPoly p = q(2) + LaurentPoly(1) + q(-2);
  CHECK(p.to_string() == "q^2 + 1 + q^-2");
  CHECK((p - p).is_zero());
  CHECK((q(1) * q(-1)).is_one());
  CHECK(LaurentPoly::from_terms({{1, 2}, {1, -2}, {0, 0}}).is_zero());
  CHECK((-q(1) + LaurentPoly::monomial(-1, Rational(3, 2))).to_string() == "-q + 3/2*q^-1");
  CHECK(p.evaluate(2) == Rational(21, 4));
}

TEST_CASE("exact division") {
  auto quotient = divide_exact(q(2) - q(-2), q(1) - q(-1));
  REQUIRE(quotient);
  CHECK(*quotient == q(1) + q(-1));
  CHECK((q(1) + q(-1)) * (q(1) - q(-1)) == q(2) - q(-2));
  CHECK_FALSE(divide_exact(q(2) + LaurentPoly(1), q(1) - LaurentPoly(1)));
  CHECK(QRational(q(2) - q(-2), q(1) - q(-1)) == QRational(q(1) + q(-1)));
}

TEST_CASE("gcd normalization") {
  LaurentPoly a = (q(1) - LaurentPoly(2)) * (q(2) + LaurentPoly(1));
  LaurentPoly b = (q(1) - LaurentPoly(2)) * (q(1) + LaurentPoly(3)) * LaurentPoly(6);
  CHECK(gcd(a, b) == q(1) - LaurentPoly(2));
  CHECK(gcd(a.shifted(-4), b.shifted(7)) == q(1) - LaurentPoly(2));
  CHECK(gcd(q(3), q(5)).is_one());
}

TEST_CASE("canonical form") {
  QRational x(LaurentPoly(2) * (q(1) - LaurentPoly(1)), LaurentPoly(-4) * (q(3) - LaurentPoly(1)));
  CHECK(x.den() == q(2) + q(1) + LaurentPoly(1));
  CHECK(x.num() == LaurentPoly(Rational(-1, 2)));
  CHECK(x.to_string() == "(-1/2)/(q^2 + q + 1)");
  QRational y(q(5) * LaurentPoly(3), q(2) * LaurentPoly(6));
  CHECK(y.is_laurent());
  CHECK(y == QRational(LaurentPoly::monomial(3, Rational(1, 2))));
  CHECK(QRational(q(1) + q(-1)).to_string() == "(q + q^-1)");
  CHECK(QRational(Rational(-3, 2)).to_string() == "-3/2");
  CHECK_THROWS_AS(QRational(q(1), LaurentPoly()), DivisionByZero);
  CHECK_THROWS_AS(QRational().inverse(), DivisionByZero);
  CHECK_THROWS_AS(QRational(1) / QRational(), DivisionByZero);
}

TEST_CASE("q-numbers") {
  CHECK(q_bracket_number(0).is_zero());
  CHECK(q_bracket_number(1).is_one());
  CHECK(q_bracket_number(2) == QRational(q(1) + q(-1)));
  CHECK(q_bracket_number(-3) == -QRational(q(2) + LaurentPoly(1) + q(-2)));
  CHECK(q_brace_number(0).is_zero());
  CHECK(q_brace_number(2) == QRational(LaurentPoly(1) + q(1)));
  CHECK(q_brace_number(-1) == -QRational(q(-1)));
  for (int n = -9; n <= 9; ++n) {
    CHECK(q_bracket_number(n) == bracket_by_division(n));
    CHECK(q_brace_number(n) == brace_by_division(n));
    CHECK(q_bracket_number(-n) == -q_bracket_number(n));
    CHECK(q_brace_number(n + 1) == QRational(1) + QRational::q_power(1) * q_brace_number(n));
    CHECK(QRational::q_power(n) * q_brace_number(-n) == -q_brace_number(n));
  }
}

TEST_CASE("q-number identities on [-8, 8]") {
  for (int m = -8; m <= 8; ++m) {
    for (int n = -8; n <= 8; ++n) {
      const QRational qn = QRational::q_power(n), qm = QRational::q_power(m), qmn = QRational::q_power(-n);
      CHECK(qn * q_bracket_number(m) - qm * q_bracket_number(n) == q_bracket_number(m - n));
      CHECK(qmn * q_bracket_number(m) + qm * q_bracket_number(n) == q_bracket_number(m + n));
      CHECK(q_brace_number(n + m) == q_brace_number(n) + qn * q_brace_number(m));
    }
  }
}

TEST_CASE("specialize") {
  CHECK(specialize(q_bracket_number(2), 2) == Rational(5, 2));
  CHECK(specialize(q_brace_number(3), 2) == 7);
  QRational pole(LaurentPoly(1), q(1) - LaurentPoly(2));
  CHECK_THROWS_AS(specialize(pole, 2), PoleAtPoint);
  CHECK_THROWS_AS(specialize(q_bracket_number(2), 1), ForbiddenSpecialization);
  CHECK_THROWS_AS(specialize(q_bracket_number(2), -1), ForbiddenSpecialization);
  CHECK_THROWS_AS(specialize(q_bracket_number(2), 0), ForbiddenSpecialization);
  CHECK(specialize(QRational(LaurentPoly(1), q(1) + LaurentPoly(1)), Rational(1, 2)) == Rational(2, 3));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    QRational a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QRational());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(QRational(a.num(), a.den()) == a);
    CHECK(a.pow(2) == a * a);
  }
}
