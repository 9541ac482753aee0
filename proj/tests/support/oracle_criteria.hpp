#pragma once

// Criteria 8 and 12, which compare the solver against the oracles in this directory.

#include <map>
#include <memory>
#include <tuple>

#include "dense_oracle.hpp"
#include "homlie/parallel.hpp"
#include "homlie/reproduce.hpp"
#include "reference_rows.hpp"

namespace homlie::oracle {

inline CriterionResult generated_rows(SuiteContext& ctx) {
  CriterionResult r{8, "generated rows match the displayed equations", true, {}};
  struct Built {
    AlgebraPresentation p;
    HomogeneousAnsatz a;
    std::unique_ptr<reference::RowIndex> index;
  };
  const std::vector<std::tuple<int, int, int>> points{{1, 2, -1}, {0, 1, 2},  {2, -1, 1},
                                                      {-1, 3, -2}, {2, 3, -1}, {-2, 1, 3}};
  const auto fams = reference::families();
  std::map<std::tuple<std::string, std::string, int>, std::unique_ptr<Built>> cache;
  for (const auto& fam : fams) {
    auto& b = cache[{fam.algebra, to_string(fam.cls), fam.parity}];
    if (b) continue;
    b = std::make_unique<Built>();
    b->p = builtin(fam.algebra);
  }
  // Build one ansatz and row index per class, in parallel.
  std::vector<Built*> todo;
  for (auto& [key, b] : cache) todo.push_back(b.get());
  std::vector<std::tuple<std::string, std::string, int>> keys;
  for (auto& [key, b] : cache) keys.push_back(key);
  parallel_for(todo.size(), ctx.config.threads, [&](std::size_t i) {
    const auto& fam = *std::find_if(fams.begin(), fams.end(), [&](const reference::Family& f) {
      return std::make_tuple(f.algebra, to_string(f.cls), f.parity) == keys[i];
    });
    const int s = fam.parity == 1 ? -1 : 0;
    todo[i]->a = build_ansatz(todo[i]->p, fam.cls, s, fam.parity, {-6, 6});
    todo[i]->index = std::make_unique<reference::RowIndex>(todo[i]->p, todo[i]->a);
  });
  for (const auto& fam : fams) {
    const int s = fam.parity == 1 ? -1 : 0;
    const auto& b = cache[{fam.algebra, to_string(fam.cls), fam.parity}];
    std::size_t matched = 0;
    std::string bad;
    for (const auto& [m, n, p] : points) {
      const auto out = reference::compare(*b->index, fam, m, n, p, s);
      if (out.matched) {
        ++matched;
      } else if (out.detail != "degenerate instance") {
        bad += " (" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) + "): " + out.detail;
      }
    }
    const bool ok = matched >= 3 && bad.empty();
    r.passed = r.passed && ok;
    r.details.push_back(std::string(ok ? "ok   " : "FAIL ") + "(" + fam.label + ") " + fam.algebra + ": " +
                        std::to_string(matched) + " instantiations match" + bad);
  }
  return r;
}

inline CriterionResult dense_agreement(SuiteContext& ctx) {
  CriterionResult r{12, "dense oracle agreement", true, {}};
  struct Case {
    std::string algebra;
    MapClass cls;
    int parity;
    int s;
  };
  const MapClass bider = BilinearClass::Biderivation, super = BilinearClass::SuperBiderivation,
                 abider = BilinearClass::AlphaBiderivation, asuper = BilinearClass::AlphaSuperBiderivation,
                 commuting = LinearClass::commuting_map(), der = LinearClass::derivation(),
                 sder = LinearClass::super_derivation(), ader = LinearClass::alpha_k_derivation(1);
  std::vector<Case> cases;
  for (int s = -2; s <= 2; ++s) {
    for (const char* a : {"w22q", "wittq"})
      for (const auto& cls : {bider, abider, commuting, der, ader}) cases.push_back({a, cls, 0, s});
    for (int parity : {0, 1})
      for (const auto& cls : {super, asuper, commuting, sder, ader}) cases.push_back({"wittsuperq", cls, parity, s});
  }
  const Window w{-2, 2};
  std::vector<std::string> lines(cases.size());
  std::vector<char> ok(cases.size());
  parallel_for(cases.size(), ctx.config.threads, [&](std::size_t i) {
    const auto& c = cases[i];
    const auto p = builtin(c.algebra);
    const auto a = build_ansatz(p, c.cls, c.s, c.parity, w);
    const auto sys = build_system(p, a);
    const auto space = nullspace(sys);
    ctx.log.record(c.algebra + " " + to_string(c.cls) + " parity " + std::to_string(c.parity) + " s=" +
                       std::to_string(c.s) + " window [-2,2]",
                   p, a, space.basis);
    const std::size_t at2 = dense_nullity(sys, Rational(2));
    std::string line = c.algebra + " " + to_string(c.cls) + " parity " + std::to_string(c.parity) + " s=" +
                       std::to_string(c.s) + ": symbolic " + std::to_string(space.dim()) + ", q=2 " +
                       std::to_string(at2);
    bool good = at2 == space.dim();
    if (!good) {
      const std::size_t at3 = dense_nullity(sys, Rational(3));
      line += ", q=3 " + std::to_string(at3);
      good = at3 == space.dim();
    }
    ok[i] = good;
    lines[i] = std::move(line);
  });
  for (std::size_t i = 0; i < cases.size(); ++i) {
    r.passed = r.passed && ok[i];
    r.details.push_back(std::string(ok[i] ? "ok   " : "FAIL ") + lines[i]);
  }
  return r;
}

/// All twelve criteria.
inline std::vector<Criterion> all_criteria() {
  auto out = paper_criteria();
  out.push_back({8, "generated rows match the displayed equations", generated_rows});
  out.push_back({12, "dense oracle agreement", dense_agreement});
  return out;
}

}  // namespace homlie::oracle
