#include "doctest.h"
#include "homlie/checker.hpp"
#include "homlie/dsl.hpp"
#include "printers.hpp"

using namespace homlie;

namespace {

QRational qp(int e) { return QRational::q_power(e); }

const Window kWindow{-6, 6};

ConcreteBilinearMap inner(const AlgebraPresentation& p) {
  auto ev = std::make_shared<Evaluator>(p);
  return ConcreteBilinearMap::from_function(0, 0, [ev](const Generator& a, const Generator& b) {
    return ev->bracket(a, b);
  });
}

ConcreteBilinearMap phi_zero(const AlgebraPresentation& p) {
  const int L = p.family_index("L"), W = p.family_index("W");
  return ConcreteBilinearMap::from_function(0, 0, [L, W](const Generator& a, const Generator& b) {
    if (a.family != L || b.family != L) return Vector();
    return Vector(Generator{W, a.degree + b.degree}, q_bracket_number(b.degree - a.degree));
  });
}

ConcreteBilinearMap phi_minus_one(const AlgebraPresentation& p) {
  const int L = p.family_index("L"), G = p.family_index("G");
  return ConcreteBilinearMap::from_function(1, -1, [L, G](const Generator& a, const Generator& b) {
    if (a.family != L || b.family != L) return Vector();
    return Vector(Generator{G, a.degree + b.degree - 1}, q_brace_number(b.degree) - q_brace_number(a.degree));
  });
}

struct Example49 {
  AlgebraPresentation p = builtin("example49");
  Generator x1 = p.generator("x1"), x2 = p.generator("x2"), y = p.generator("y");

  ConcreteLinearMap D(const QRational& b, const QRational& c) const {
    const QRational lambda = qp(1);
    return ConcreteLinearMap::from_table(0, {{x1, Vector(x1, QRational(2) * c * lambda)},
                                             {x2, Vector(x1, b)},
                                             {y, Vector(y, c)}});
  }

  ConcreteBilinearMap phi(const QRational& a, const QRational& k) const {
    const QRational lambda = qp(1);
    const QRational d = (QRational(Rational(1, 2)) - lambda) * k / (lambda * lambda);
    const QRational two_d_lambda = QRational(2) * d * lambda;
    return ConcreteBilinearMap::from_table(0, {{{x1, x2}, Vector(x1, -two_d_lambda)},
                                               {{x2, x2}, Vector(x1, a)},
                                               {{x2, x1}, Vector(x1, two_d_lambda)},
                                               {{x2, y}, Vector(y, d)},
                                               {{y, x2}, Vector(y, -d)},
                                               {{y, y}, Vector(x1, k)}});
  }
};

}  // namespace

TEST_CASE("axioms of the built-ins") {
  for (const auto& name : builtin_names()) {
    auto report = check_axioms(builtin(name), kWindow);
    CHECK_MESSAGE(report.passed(), name);
    CHECK(report.instances > 0);
  }
  for (const auto& name : {"w22q", "wittq", "wittsuperq"}) {
    auto p = builtin(name);
    auto report = check_multiplicative(p, kWindow);
    CHECK_FALSE(report.passed());
    CHECK(report.witnesses.front().inputs.size() == 2);
  }
  CHECK(check_multiplicative(builtin("example49"), kWindow).passed());
}

TEST_CASE("perturbed w22q bracket fails Hom-Jacobi at (L_0, L_1, L_2)") {
  auto p = parse_presentation(
      "algebra w22q_perturbed; mode lie;\n"
      "family L parity 0 degrees int;\nfamily W parity 0 degrees int;\n"
      "bracket [L(m), L(n)] = (qbr(n - m) + 1) * L(m + n);\n"
      "bracket [L(m), W(n)] = qbr(n - m) * W(m + n);\n"
      "alpha L(m) = (q^m + q^-m) * L(m);\nalpha W(m) = (q^m + q^-m) * W(m);\n");
  auto report = check_axioms(p, kWindow);
  REQUIRE_FALSE(report.passed());
  const Generator L0{0, 0}, L1{0, 1}, L2{0, 2};
  bool found = false;
  for (const auto& w : report.witnesses) {
    if (w.identity != "hom-jacobi" || w.inputs != std::vector<Generator>{L0, L1, L2}) continue;
    found = true;
    // Independent evaluation: sum over cyclic permutations with c(m, n) = [n - m] + 1.
    auto c = [](int m, int n) { return q_bracket_number(n - m) + QRational(1); };
    auto a = [](int m) { return qp(m) + qp(-m); };
    const QRational expected = a(0) * c(1, 2) * c(0, 3) + a(1) * c(2, 0) * c(1, 2) + a(2) * c(0, 1) * c(2, 1);
    CHECK(w.lhs == Vector(Generator{0, 3}, expected));
    CHECK(w.rhs.is_zero());
  }
  CHECK(found);
}

TEST_CASE("identity map is multiplicative but breaks Hom-Jacobi of a twisted bracket") {
  auto p = parse_presentation(
      "algebra plain; mode lie; family L parity 0 degrees int;\n"
      "bracket [L(n), L(m)] = (qnm(m) - qnm(n)) * L(m + n);\n");
  CHECK(check_multiplicative(p, kWindow).passed());
  CHECK_FALSE(check_axioms(p, kWindow).passed());
}

TEST_CASE("named biderivations") {
  auto w22q = builtin("w22q");
  CHECK(check_bilinear_class(w22q, phi_zero(w22q), BilinearClass::Biderivation, kWindow).passed());
  CHECK(check_skew_symmetry(w22q, phi_zero(w22q), kWindow).passed());
  CHECK(check_bilinear_class(w22q, inner(w22q), BilinearClass::Biderivation, kWindow).passed());
  CHECK_FALSE(check_bilinear_class(w22q, phi_zero(w22q), BilinearClass::AlphaBiderivation, kWindow).passed());
  CHECK_THROWS_AS(check_bilinear_class(w22q, phi_zero(w22q), BilinearClass::SuperBiderivation, kWindow),
                  ClassModeMismatch);

  auto super = builtin("wittsuperq");
  CHECK(check_bilinear_class(super, phi_minus_one(super), BilinearClass::SuperBiderivation, kWindow).passed());
  CHECK(check_bilinear_class(super, inner(super), BilinearClass::SuperBiderivation, kWindow).passed());

  auto witt = builtin("wittq");
  CHECK(check_bilinear_class(witt, inner(witt), BilinearClass::Biderivation, kWindow).passed());
  CHECK_FALSE(check_bilinear_class(witt, inner(witt), BilinearClass::AlphaBiderivation, kWindow).passed());
}

TEST_CASE("example49 maps") {
  Example49 e;
  const Window all{0, 0};
  CHECK(check_axioms(e.p, all).passed());
  for (auto [b, c] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{3, -2}}) {
    CHECK(check_linear_class(e.p, e.D(QRational(b), QRational(c)), LinearClass::alpha_k_derivation(1), all).passed());
  }
  CHECK_FALSE(check_linear_class(e.p, e.D(QRational(0), QRational(1)), LinearClass::derivation(), all).passed());
  for (auto [a, k] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{2, 5}}) {
    auto phi = e.phi(QRational(a), QRational(k));
    CHECK(check_bilinear_class(e.p, phi, BilinearClass::AlphaSuperBiderivation, all).passed());
  }
  auto skew = check_skew_symmetry(e.p, e.phi(QRational(1), QRational(0)), all);
  REQUIRE_FALSE(skew.passed());
  CHECK(skew.witnesses.size() == 1);
  CHECK(skew.witnesses.front().inputs == std::vector<Generator>{e.x2, e.x2});
  CHECK(check_skew_symmetry(e.p, e.phi(QRational(0), QRational(1)), all).passed());
}

TEST_CASE("linear classes") {
  auto w22q = builtin("w22q");
  const int L = w22q.family_index("L"), W = w22q.family_index("W");
  for (auto [lambda, mu] : {std::pair{1, 0}, std::pair{0, 1}}) {
    auto f = ConcreteLinearMap::from_function(0, [=](const Generator& g) {
      Vector v(g, QRational(lambda));
      if (g.family == L) v += Vector(Generator{W, g.degree}, QRational(mu));
      return v;
    });
    CHECK(check_linear_class(w22q, f, LinearClass::commuting_map(), kWindow).passed());
    // phi(x, y) = [x, f(y)] is a biderivation.
    auto ev = std::make_shared<Evaluator>(w22q);
    auto phi = ConcreteBilinearMap::from_function(0, 0, [ev, f](const Generator& a, const Generator& b) {
      return bracket(*ev, Vector::basis(a), f(b));
    });
    CHECK(check_bilinear_class(w22q, phi, BilinearClass::Biderivation, kWindow).passed());
  }
  auto shift = ConcreteLinearMap::from_function(0, [](const Generator& g) { return Vector(Generator{g.family, g.degree + 1}, QRational(1)); });
  CHECK_FALSE(check_linear_class(w22q, shift, LinearClass::commuting_map(), kWindow).passed());

  auto witt = builtin("wittq");
  auto id = ConcreteLinearMap::from_function(0, [](const Generator& g) { return Vector::basis(g); });
  auto report = check_linear_class(witt, id, LinearClass::derivation(), kWindow);
  REQUIRE_FALSE(report.passed());
  const auto& w = report.witnesses.front();
  CHECK(w.rhs == w.lhs.scaled(QRational(2)));

  auto super = builtin("wittsuperq");
  const int SL = super.family_index("L"), G = super.family_index("G");
  auto odd = ConcreteLinearMap::from_function(1, [=](const Generator& g) {
    return g.family == SL ? Vector(Generator{G, g.degree - 1}, QRational(1)) : Vector();
  });
  CHECK(check_linear_class(super, odd, LinearClass::commuting_map(), kWindow).passed());
  auto ev = std::make_shared<Evaluator>(super);
  auto phi = ConcreteBilinearMap::from_function(1, -1, [ev, odd](const Generator& a, const Generator& b) {
    return bracket(*ev, odd(a), Vector::basis(b));
  });
  CHECK(check_bilinear_class(super, phi, BilinearClass::SuperBiderivation, kWindow).passed());
}

TEST_CASE("closed-form map rules and witness rendering") {
  auto w22q = builtin("w22q");
  auto probe = parse_presentation(
      "algebra probe; mode lie; family L parity 0 degrees int; family W parity 0 degrees int;\n"
      "bracket [L(m), L(n)] = qbr(n - m) * W(m + n);\n"
      "alpha L(m) = L(m) + W(m);\nalpha W(m) = W(m);\n");
  auto phi = ConcreteBilinearMap::from_rules(w22q, 0, 0, probe.bracket_rules);
  CHECK(check_bilinear_class(w22q, phi, BilinearClass::Biderivation, kWindow).passed());
  auto f = ConcreteLinearMap::from_rules(w22q, 0, probe.alpha_rules);
  CHECK(check_linear_class(w22q, f, LinearClass::commuting_map(), kWindow).passed());

  auto report = check_multiplicative(w22q, Window{-1, 1});
  REQUIRE_FALSE(report.passed());
  const std::string text = describe(w22q, report.witnesses.front());
  CHECK(text.rfind("multiplicative at (L_-1, L_0)", 0) == 0);
  CHECK(parse_bilinear_class("alpha_super_biderivation") == BilinearClass::AlphaSuperBiderivation);
  CHECK(parse_linear_class("alpha-k-derivation", 3)->k == 3);
  CHECK_FALSE(parse_bilinear_class("bogus"));
}
