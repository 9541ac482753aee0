#include "classify/polynomial.hpp"
#include "doctest.h"
#include "homlie/classify.hpp"
#include "homlie/errors.hpp"
#include "printers.hpp"

using namespace homlie;

namespace {

const MapClass kBider = BilinearClass::Biderivation;
const MapClass kSuperBider = BilinearClass::SuperBiderivation;
const CommutingOptions kScan{-2, 2, {}};

// Coefficients of a linear map on the slots of an ansatz.
Assignment table_of(const HomogeneousAnsatz& a, const ConcreteLinearMap& f) {
  Assignment out(a.size());
  for (const auto& [inputs, ids] : a.by_inputs) {
    const Vector v = f(inputs[0]);
    for (int id : ids) out[id] = v.coefficient(a.slots[id].target);
  }
  return out;
}

bool same_span(const std::vector<Assignment>& a, const std::vector<Assignment>& b) {
  std::vector<Assignment> all = a;
  all.insert(all.end(), b.begin(), b.end());
  const auto r = rank(all);
  return r == rank(a) && r == rank(b);
}

ConcreteBilinearMap induced_map(const AlgebraPresentation& p, const ConcreteLinearMap& f, bool super) {
  auto ev = std::make_shared<Evaluator>(p);
  return ConcreteBilinearMap::from_function(f.parity(), std::nullopt, [ev, f, super](const Generator& x,
                                                                                     const Generator& y) {
    return super ? bracket(*ev, f(x), Vector::basis(y)) : bracket(*ev, Vector::basis(x), f(y));
  });
}

bool is_point(const ParameterPoint& pt, const std::vector<QRational>& values) {
  if (pt.values.size() != values.size()) return false;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!pt.values[i].is_constant() || !(pt.values[i].constant == values[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("known maps pass their classes") {
  const Window w{-5, 5};
  for (const auto& name : {"w22q", "wittq"}) {
    auto p = builtin(name);
    CHECK(check_bilinear_class(p, phi_ad(p).map, BilinearClass::Biderivation, w).passed());
  }
  auto w22 = builtin("w22q");
  CHECK(check_bilinear_class(w22, phi_0(w22).map, BilinearClass::Biderivation, w).passed());
  auto ls = builtin("wittsuperq");
  CHECK(check_bilinear_class(ls, phi_ad(ls).map, BilinearClass::SuperBiderivation, w).passed());
  CHECK(check_bilinear_class(ls, phi_minus1(ls).map, BilinearClass::SuperBiderivation, w).passed());
  CHECK(known_map(ls, "phi_minus1").name == "phi_minus1");
  CHECK_THROWS_AS(known_map(ls, "phi_2"), ValidationError);
  CHECK_THROWS_AS(phi_0(builtin("wittq")), UnknownGenerator);
}

TEST_CASE("decomposition against known maps") {
  SUBCASE("w22q degree 0") {
    auto p = builtin("w22q");
    auto st = stable_solve(p, kBider, 0, 0, {-3, 3}, 2);
    auto r = decompose(st.ansatz, st.space, {phi_ad(p), phi_0(p)});
    CHECK(st.space.dim() == 2);
    CHECK(r.residual_dim == 0);
    CHECK(r.unmatched_knowns == 0);
    for (const auto& c : r.coefficients) CHECK(c.has_value());

    SolutionSpace knowns;
    knowns.unknowns = st.ansatz.size();
    knowns.basis = {restrict_known(st.ansatz, phi_ad(p).map), restrict_known(st.ansatz, phi_0(p).map)};
    auto self = decompose(st.ansatz, knowns, {phi_ad(p), phi_0(p)});
    CHECK(self.residual_dim == 0);
    REQUIRE(self.coefficients[0].has_value());
    CHECK(self.coefficients[0]->at("phi_ad") == QRational(1));
    CHECK(self.coefficients[0]->at("phi_0") == QRational(0));
    CHECK(self.coefficients[1]->at("phi_ad") == QRational(0));
    CHECK(self.coefficients[1]->at("phi_0") == QRational(1));

    CHECK_THROWS_AS(decompose(st.ansatz, st.space, {phi_ad(p), phi_ad(p)}), DependentKnowns);
    auto partial = decompose(st.ansatz, st.space, {phi_ad(p)});
    CHECK(partial.residual_dim == 1);
  }
  SUBCASE("wittq") {
    auto p = builtin("wittq");
    auto st = stable_solve(p, kBider, 0, 0, {-3, 3}, 2);
    auto r = decompose(st.ansatz, st.space, {phi_ad(p)});
    CHECK(r.residual_dim == 0);
    CHECK(r.unmatched_knowns == 0);
  }
  SUBCASE("wittsuperq odd degree -1") {
    auto p = builtin("wittsuperq");
    auto st = stable_solve(p, kSuperBider, -1, 1, {-3, 3}, 2);
    auto r = decompose(st.ansatz, st.space, {phi_minus1(p)});
    CHECK(st.space.dim() == 1);
    CHECK(r.residual_dim == 0);
    CHECK(r.unmatched_knowns == 0);
  }
}

TEST_CASE("commuting maps") {
  const Window w{-4, 4};
  SUBCASE("w22q") {
    auto p = builtin("w22q");
    auto fam = solve_commuting_maps(p, 0, w, 2, kScan);
    REQUIRE(fam.size() == 2);
    CHECK(fam.degrees == std::vector<int>{0, 0});
    const int L = p.family_index("L"), W = p.family_index("W");
    auto id = ConcreteLinearMap::from_function(0, [](const Generator& g) { return Vector::basis(g); });
    auto lw = ConcreteLinearMap::from_function(0, [L, W](const Generator& g) {
      return g.family == L ? Vector(Generator{W, g.degree}, QRational(1)) : Vector();
    });
    CHECK(same_span(fam.basis, {table_of(fam.ansatz, id), table_of(fam.ansatz, lw)}));
    CHECK(fam.describe(p) == std::vector<std::string>{"f(L_m) = lambda L_m + mu W_m", "f(W_m) = lambda W_m"});
    for (std::size_t i = 0; i < fam.size(); ++i)
      CHECK(check_bilinear_class(p, induced_map(p, fam.basis_map(i), false), BilinearClass::Biderivation, w).passed());
    CHECK(solve_commuting_maps(p, 1, w, 2, kScan).size() == 0);
  }
  SUBCASE("wittq") {
    auto p = builtin("wittq");
    auto fam = solve_commuting_maps(p, 0, w, 2, kScan);
    REQUIRE(fam.size() == 1);
    CHECK(fam.describe(p) == std::vector<std::string>{"f(L_m) = lambda L_m"});
  }
  SUBCASE("wittsuperq") {
    auto p = builtin("wittsuperq");
    auto even = solve_commuting_maps(p, 0, w, 2, kScan);
    REQUIRE(even.size() == 1);
    CHECK(even.describe(p) == std::vector<std::string>{"f(L_m) = lambda L_m", "f(G_m) = lambda G_m"});
    auto odd = solve_commuting_maps(p, 1, w, 2, kScan);
    REQUIRE(odd.size() == 1);
    CHECK(odd.degrees == std::vector<int>{-1});
    CHECK(odd.describe(p) == std::vector<std::string>{"f(L_m) = lambda G_{m-1}", "f(G_m) = 0"});
    for (const auto* fam : {&even, &odd})
      CHECK(check_bilinear_class(p, induced_map(p, fam->basis_map(0), true), BilinearClass::SuperBiderivation, w)
                .passed());
  }
}

TEST_CASE("corollaries") {
  const Window w{-4, 4};
  auto p = builtin("w22q");
  auto fam = solve_commuting_maps(p, 0, w, 2, kScan);
  REQUIRE(fam.size() == 2);
  auto aut = corollary_check(p, fam, CorollaryProperty::Automorphism, w);
  REQUIRE(aut.points.size() == 2);
  CHECK(aut.constraints > 0);
  for (const auto& pt : aut.points) {
    CHECK((is_point(pt, {QRational(0), QRational(0)}) || is_point(pt, {QRational(1), QRational(0)})));
    CHECK(pt.admissible == is_point(pt, {QRational(1), QRational(0)}));
  }
  REQUIRE(aut.admissible().size() == 1);
  CHECK(to_string(aut.admissible()[0], aut.parameters) == "lambda = 1, mu = 0");

  auto der = corollary_check(p, fam, CorollaryProperty::Derivation, w);
  REQUIRE(der.points.size() == 1);
  CHECK(is_point(der.points[0], {QRational(0), QRational(0)}));

  auto ls = builtin("wittsuperq");
  for (int parity : {0, 1}) {
    auto f = solve_commuting_maps(ls, parity, w, 2, kScan);
    auto r = corollary_check(ls, f, CorollaryProperty::SuperDerivation, w);
    REQUIRE(r.points.size() == 1);
    CHECK(is_point(r.points[0], {QRational(0)}));
    auto a = corollary_check(ls, f, CorollaryProperty::Automorphism, w);
    CHECK(a.admissible().size() == (parity == 0 ? 1u : 0u));
  }
  CHECK(parse_corollary_property("super_derivation") == CorollaryProperty::SuperDerivation);
  CHECK_FALSE(parse_corollary_property("endomorphism").has_value());
}

TEST_CASE("quadratic constraint solver") {
  using detail::Poly;
  const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1), one = Poly::constant(2, QRational(1));
  auto solve = [&](std::vector<Poly> cs) {
    std::vector<std::vector<Poly>> out;
    detail::solve_system(std::move(cs), {x, y}, out);
    return out;
  };
  // x^2 = x, y = 2xy
  auto s = solve({x * x - x, y - x * y * QRational(2)});
  CHECK(s.size() == 2);
  // (x - 1)(y + x) = 0 with y = 3
  auto t = solve({(x - one) * (y + x), y - one * QRational(3)});
  REQUIRE(t.size() == 2);
  // a free parameter survives
  auto u = solve({x * x - x * QRational(4)});
  REQUIRE(u.size() == 2);
  CHECK(u[0][1] == y);
  CHECK(solve({x - x + one}).empty());
  CHECK_THROWS_AS(solve({x * x * x - one}), NonQuadraticConstraint);
  CHECK_THROWS_AS(solve({x * x - one * QRational(2)}), NonQuadraticConstraint);
}
