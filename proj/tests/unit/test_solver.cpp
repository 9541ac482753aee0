#include <set>

#include "../support/dense_oracle.hpp"
#include "../support/reference_rows.hpp"
#include "doctest.h"
#include "homlie/errors.hpp"
#include "homlie/solver.hpp"
#include "printers.hpp"

using namespace homlie;

namespace {

const MapClass kBider = BilinearClass::Biderivation;
const MapClass kSuperBider = BilinearClass::SuperBiderivation;

QRational ratio_of(const Assignment& a, const Assignment& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) return a[i] / b[i];
  return QRational(0);
}

}  // namespace

TEST_CASE("ansatz sizes") {
  CHECK(build_ansatz(builtin("wittq"), kBider, 0, 0, {-3, 3}).size() == 49);
  // 4 family pairs, 49 degree pairs, 2 target families
  CHECK(build_ansatz(builtin("w22q"), kBider, 0, 0, {-3, 3}).size() == 392);

  auto p = builtin("wittsuperq");
  auto a = build_ansatz(p, kSuperBider, -1, 1, {-3, 3});
  CHECK(a.size() == 4 * 49);
  std::set<std::tuple<std::string, std::string, std::string>> shapes;
  for (const auto& slot : a.slots) {
    shapes.insert({p.families[slot.inputs[0].family].name, p.families[slot.inputs[1].family].name,
                   p.families[slot.target.family].name});
    CHECK(slot.target.degree == slot.inputs[0].degree + slot.inputs[1].degree - 1);
  }
  CHECK(shapes == std::set<std::tuple<std::string, std::string, std::string>>{
                      {"L", "L", "G"}, {"L", "G", "L"}, {"G", "L", "L"}, {"G", "G", "G"}});
  for (int id = 0; id < static_cast<int>(a.size()); ++id) CHECK(a.slots_for(a.slots[id].inputs).size() == 1);

  auto e = builtin("example49");
  CHECK(build_ansatz(e, MapClass(LinearClass::alpha_k_derivation(1)), 0, 0, {0, 0}).size() == 5);

  CHECK_THROWS_AS(build_ansatz(builtin("wittq"), kSuperBider, 0, 0, {-2, 2}), ClassModeMismatch);
  CHECK(parse_map_class("alpha_super_biderivation").has_value());
  CHECK(kind_of(*parse_map_class("commuting-map")) == MapKind::Linear);
  CHECK_FALSE(parse_map_class("nonsense").has_value());
}

TEST_CASE("nullspace of small systems") {
  ConstraintSystem empty;
  empty.unknowns = 3;
  auto s = nullspace(empty);
  REQUIRE(s.dim() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(s.basis[i][j] == QRational(i == j ? 1 : 0));

  ConstraintSystem one;
  one.unknowns = 2;
  one.rows.push_back(LinearForm::unknown(0) - LinearForm::unknown(1));
  for (bool prefilter : {true, false}) {
    auto t = nullspace(one, {prefilter, 1});
    REQUIRE(t.dim() == 1);
    CHECK(t.basis[0][0] == t.basis[0][1]);
    CHECK_FALSE(t.basis[0][0].is_zero());
  }

  // q x0 - x1 = 0, (q - 1) x1 = 0
  ConstraintSystem two;
  two.unknowns = 3;
  two.rows.push_back(LinearForm::unknown(0, QRational::q_power(1)) - LinearForm::unknown(1));
  two.rows.push_back(LinearForm::unknown(1, QRational::q_power(1) - QRational(1)));
  auto u = nullspace(two);
  REQUIRE(u.dim() == 1);
  CHECK(u.basis[0] == Assignment{QRational(0), QRational(0), QRational(1)});
}

TEST_CASE("wittq biderivations of degree 1 vanish on [-4, 4]") {
  auto p = builtin("wittq");
  auto a = build_ansatz(p, kBider, 1, 0, {-4, 4});
  auto sys = build_system(p, a);
  CHECK(sys.rows.size() == sys.provenance.size());
  CHECK(nullspace(sys).dim() == 0);
  CHECK(nullspace(sys, {false, 1}).dim() == 0);
  CHECK(oracle::dense_nullity(sys, Rational(2)) == 0);
}

TEST_CASE("window nullspaces agree with a dense oracle at q = 2") {
  struct Case {
    const char* algebra;
    MapClass cls;
    int s, parity;
  };
  const std::vector<Case> cases{{"wittq", kBider, 0, 0},
                                {"wittq", kBider, -1, 0},
                                {"w22q", kBider, 0, 0},
                                {"wittsuperq", kSuperBider, -1, 1},
                                {"wittsuperq", kSuperBider, 0, 0},
                                {"wittq", MapClass(LinearClass::commuting_map()), 0, 0}};
  for (const auto& c : cases) {
    auto p = builtin(c.algebra);
    auto a = build_ansatz(p, c.cls, c.s, c.parity, {-2, 2});
    auto sys = build_system(p, a);
    auto space = nullspace(sys);
    CAPTURE(c.algebra);
    CAPTURE(c.s);
    CHECK(space.dim() == oracle::dense_nullity(sys, Rational(2)));
    for (const auto& v : space.basis) {
      for (const auto& row : sys.rows) CHECK(row.evaluate([&](int id) { return v[id]; }).is_zero());
      CHECK(check_solution(p, a, v).passed());
    }
  }
}

TEST_CASE("stable solutions") {
  SUBCASE("wittq inner") {
    auto p = builtin("wittq");
    auto st = stable_solve(p, kBider, 0, 0, {-4, 4}, 2);
    REQUIRE(st.space.dim() == 1);
    CHECK(st.enlarged_dim == 1);
    const auto& v = st.space.basis[0];
    Evaluator ev(p);
    Assignment ad(st.ansatz.size());
    for (std::size_t id = 0; id < ad.size(); ++id) {
      const auto& slot = st.ansatz.slots[id];
      ad[id] = ev.bracket(slot.inputs[0], slot.inputs[1]).coefficient(slot.target);
    }
    const QRational r = ratio_of(v, ad);
    REQUIRE_FALSE(r.is_zero());
    for (std::size_t id = 0; id < ad.size(); ++id) CHECK(v[id] == r * ad[id]);
    CHECK(check_solution(p, st.ansatz, v).passed());
  }
  SUBCASE("w22q degree 0") {
    auto p = builtin("w22q");
    auto st = stable_solve(p, kBider, 0, 0, {-3, 3}, 2, {true, {}});
    CHECK(st.space.dim() == 2);
    CHECK(st.window_dim >= 2);
    for (const auto& v : st.space.basis) CHECK(check_solution(p, st.ansatz, v).passed());
  }
  SUBCASE("wittsuperq odd degree 0") {
    auto st = stable_solve(builtin("wittsuperq"), kSuperBider, 0, 1, {-3, 3}, 2);
    CHECK(st.space.dim() == 0);
  }
  SUBCASE("prefilter does not change the result") {
    auto p = builtin("wittsuperq");
    auto a = stable_solve(p, kSuperBider, -1, 1, {-3, 3}, 2);
    auto b = stable_solve(p, kSuperBider, -1, 1, {-3, 3}, 2, {false, {false, 1}});
    CHECK(a.space.basis == b.space.basis);
    CHECK(a.space.dim() == 1);
  }
  CHECK_THROWS_AS(stable_solve(builtin("wittq"), kBider, 0, 0, {-2, 2}, 0), std::invalid_argument);
}

TEST_CASE("a mixed-degree solve is the direct sum of the homogeneous solves") {
  for (const char* name : {"wittq", "w22q", "wittsuperq"}) {
    auto p = builtin(name);
    const MapClass cls = p.is_super() ? kSuperBider : kBider;
    const Window w{-2, 2};
    for (int parity : {0, 1}) {
      if (parity == 1 && !p.is_super()) continue;
      std::size_t sum = 0;
      for (int s = -2; s <= 2; ++s) sum += nullspace(build_system(p, build_ansatz(p, cls, s, parity, w))).dim();
      auto mixed = build_ansatz(p, cls, std::vector<int>{-2, -1, 0, 1, 2}, parity, w);
      CAPTURE(name);
      CHECK(nullspace(build_system(p, mixed)).dim() == sum);
    }
  }
}

TEST_CASE("restriction to a smaller window") {
  auto p = builtin("wittq");
  auto big = build_ansatz(p, kBider, 0, 0, {-3, 3});
  auto small = build_ansatz(p, kBider, 0, 0, {-1, 1});
  Assignment x(big.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = QRational(static_cast<long>(i));
  auto r = restrict_assignment(big, x, small);
  REQUIRE(r.size() == 9);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& ids = big.slots_for(small.slots[i].inputs);
    REQUIRE(ids.size() == 1);
    CHECK(r[i] == x[ids[0]]);
  }
}

TEST_CASE("generated rows match the displayed coefficient equations") {
  struct Built {
    AlgebraPresentation p;
    HomogeneousAnsatz a;
    std::unique_ptr<reference::RowIndex> index;
  };
  std::map<std::tuple<std::string, std::string, int>, std::unique_ptr<Built>> cache;
  for (const auto& fam : reference::families()) {
    const int s = fam.parity == 1 ? -1 : 0;
    auto& b = cache[{fam.algebra, to_string(fam.cls), fam.parity}];
    if (!b) {
      b = std::make_unique<Built>();
      b->p = builtin(fam.algebra);
      b->a = build_ansatz(b->p, fam.cls, s, fam.parity, {-4, 4});
      b->index = std::make_unique<reference::RowIndex>(b->p, b->a);
    }
    auto r = reference::compare(*b->index, fam, 1, 2, -1, s);
    CAPTURE(fam.label);
    CAPTURE(r.detail);
    CHECK(r.matched);
  }
}
