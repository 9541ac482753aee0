#include "doctest.h"
#include "homlie/checker.hpp"
#include "homlie/dsl.hpp"
#include "printers.hpp"

using namespace homlie;

namespace {

// Same bracket and alpha on every pair of the window.
bool agree(const AlgebraPresentation& a, const AlgebraPresentation& b, const Window& w) {
  Evaluator ea(a), eb(b);
  auto basis = a.basis(w);
  if (basis != b.basis(w)) return false;
  for (const auto& x : basis) {
    if (!(ea.alpha(x) == eb.alpha(x))) return false;
    for (const auto& y : basis)
      if (!(ea.bracket(x, y) == eb.bracket(x, y))) return false;
  }
  return true;
}

const char* kHeader = "algebra t;\nmode lie;\nfamily L parity 0 degrees int;\n";

}  // namespace

TEST_CASE("shipped files agree with the built-ins") {
  for (const auto& name : builtin_names()) {
    auto parsed = load_presentation(std::string(HOMLIE_DATA_DIR) + "/" + name + ".alg");
    CHECK(parsed.name == name);
    CHECK(agree(parsed, builtin(name), Window{-6, 6}));
  }
}

TEST_CASE("serialize round trip") {
  for (const auto& name : builtin_names()) {
    auto p = builtin(name);
    const std::string text = serialize(p);
    CHECK(agree(parse_presentation(text), p, Window{-6, 6}));
    CHECK(serialize(parse_presentation(text)) == text);
  }
  CHECK(serialize(builtin("wittq")).find("qnm(m) - qnm(n)") != std::string::npos);

  auto shifted = parse_presentation(std::string(kHeader) + "bracket [L(m), L(n)] shift 1 = qbr(m - n) * L(m + n + 1);");
  const std::string text = serialize(shifted);
  CHECK(text.find("shift 1") != std::string::npos);
  CHECK(agree(parse_presentation(text), shifted, Window{-4, 4}));
  Evaluator ev(shifted);
  CHECK(ev.bracket(Generator{0, 2}, Generator{0, 0}) == Vector(Generator{0, 3}, q_bracket_number(2)));
}

TEST_CASE("declarations: accepting forms") {
  auto p = parse_presentation(
      "algebra f; mode super;\n"
      "family A parity 0 degrees {2, -1, 0};  # finite\n"
      "family B parity 1 degrees {0};\n"
      "bracket [A(m), B(n)] = 3/2 * q^-2 * B(m + n);\n"
      "alpha A(m) = 2 * A(m) - q * A(m);\n");
  CHECK(p.families[0].degrees == std::vector<int>{-1, 0, 2});
  CHECK(p.is_super());
  Evaluator ev(p);
  CHECK(ev.bracket(Generator{0, 0}, Generator{1, 0}) ==
        Vector(Generator{1, 0}, QRational(Rational(3, 2)) * QRational::q_power(-2)));
  CHECK(ev.bracket(Generator{0, -1}, Generator{1, 0}).is_zero());  // B(-1) is not a generator
  CHECK(ev.alpha(Generator{0, 2}) == Vector(Generator{0, 2}, QRational(2) - QRational::q_power(1)));
  CHECK(p.basis(Window{-6, 6}).size() == 4);
}

TEST_CASE("declarations: rejecting forms") {
  CHECK_THROWS_AS(parse_presentation("mode lie; family L parity 0 degrees int;"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation("algebra a; family L parity 0 degrees int;"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation("algebra a; mode both;"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation("algebra a; mode lie; family L parity 2 degrees int;"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation("algebra a; mode lie; family L parity 0 degrees real;"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation("algebra a; mode lie; family q parity 0 degrees int;"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation(std::string(kHeader) + "bracket [L(m), L(m)] = L(m + n);"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation(std::string(kHeader) + "bracket [L(m), K(n)] = L(m + n);"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation(std::string(kHeader) + "bracket [L(m), L(n)] = qbr(m) L(m + n);"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation(std::string(kHeader) + "bracket [L(m), L(n)] = qbr(m * n) * L(m + n);"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_presentation(std::string(kHeader) + "alpha L(n) = L(n);"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation(std::string(kHeader) + "alpha L(m) = L(m)"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation(std::string(kHeader) + "alpha L(m) = 2 $ L(m);"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation(std::string(kHeader) + "alpha L(m) = q^q * L(m);"), SyntaxError);
  try {
    parse_presentation("algebra a;\nmode lie;\nfamily L parity 0 degrees int;\nbracket [L(m), X(n)] = L(m+n);");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 16);
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(parse_presentation(std::string(kHeader) + "bracket [L(m), L(n)] = qbr(m - n) * L(m + n + 1);"),
                  ValidationError);
  CHECK_THROWS_AS(parse_presentation("algebra a; mode super; family G parity 1 degrees int;"
                                     "bracket [G(m), G(n)] = qnm(n) * G(m + n);"),
                  ValidationError);
  CHECK_THROWS_AS(parse_presentation("algebra a; mode lie; family G parity 1 degrees int;"), ValidationError);
  CHECK_THROWS_AS(parse_presentation("algebra a; mode super; family L parity 0 degrees int;"
                                     "family G parity 1 degrees int; alpha L(m) = G(m);"),
                  ValidationError);
  CHECK_THROWS_AS(parse_presentation(std::string(kHeader) + "alpha L(m) = L(m + 1);"), ValidationError);
  CHECK_THROWS_AS(parse_presentation(std::string(kHeader) + "family L parity 0 degrees int;"), ValidationError);
  CHECK_THROWS_AS(parse_presentation(std::string(kHeader) + "family x parity 0 degrees none;"), ValidationError);
  CHECK_THROWS_AS(
      parse_presentation(std::string(kHeader) + "bracket [L(m), L(n)] = L(m + n); bracket [L(n), L(m)] = L(m + n);"),
      ValidationError);
  CHECK_THROWS_AS(parse_presentation("algebra a; mode lie; family x parity 0 degrees none;"
                                     "bracket [x, x] = m * x;"),
                  ValidationError);
}

TEST_CASE("field elements") {
  CHECK(parse_qrational("(q^2 + 1 + q^-2)") == q_bracket_number(3));
  CHECK(parse_qrational("(1 - q^3)/(1 - q)") == q_brace_number(3));
  CHECK(parse_qrational("-3/2") == QRational(Rational(-3, 2)));
  CHECK(parse_qrational("qbr(2) * qnm(-1)") == q_bracket_number(2) * q_brace_number(-1));
  CHECK_THROWS_AS(parse_qrational("q +"), SyntaxError);
  CHECK_THROWS_AS(parse_qrational("m + 1"), SyntaxError);
  for (int a = -4; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      QRational x = (q_brace_number(a) + QRational(Rational(1, 3))) / (q_bracket_number(b) + QRational::q_power(a));
      CHECK(parse_qrational(x.to_string()) == x);
    }
  }
}

TEST_CASE("map documents") {
  auto p = builtin("wittsuperq");
  auto m = parse_map(p, "parity 1; degree -1;\nphi [L(m), L(n)] = (qnm(n) - qnm(m)) * G(m + n - 1);");
  CHECK(m.kind == MapSpec::Kind::Bilinear);
  CHECK(m.parity == 1);
  CHECK(m.degree == -1);
  REQUIRE(m.bilinear.size() == 1);
  auto phi = ConcreteBilinearMap::from_rules(p, m.parity, m.degree, m.bilinear);
  CHECK(check_bilinear_class(p, phi, BilinearClass::SuperBiderivation, {-4, 4}).passed());

  auto f = parse_map(p, "f L(m) = 2 * L(m); f G(m) = 2 * G(m);");
  CHECK(f.kind == MapSpec::Kind::Linear);
  CHECK(f.linear.size() == 2);
  CHECK_FALSE(f.degree.has_value());

  CHECK_THROWS_AS(parse_map(p, "parity 0;"), SyntaxError);
  CHECK_THROWS_AS(parse_map(p, "f L(m) = L(m); phi [L(m), L(n)] = L(m + n);"), SyntaxError);
  CHECK_THROWS_AS(parse_map(p, "phi [L(m), X(n)] = L(m + n);"), SyntaxError);
  CHECK_THROWS_AS(parse_map(p, "parity 2; f L(m) = L(m);"), SyntaxError);
}
