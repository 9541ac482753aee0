#include "homlie/reproduce.hpp"

#include <algorithm>
#include <map>

#include "homlie/parallel.hpp"

namespace homlie {

void SolveLog::record(std::string label, const AlgebraPresentation& p, const HomogeneousAnsatz& a,
                      const std::vector<Assignment>& basis) {
  std::lock_guard lock(mutex_);
  entries_.push_back({std::move(label), p, a, basis});
}

std::vector<SolveLog::Entry> SolveLog::entries() const {
  std::lock_guard lock(mutex_);
  return entries_;
}

namespace {

const MapClass kBider = BilinearClass::Biderivation;
const MapClass kSuperBider = BilinearClass::SuperBiderivation;

struct Check {
  CriterionResult& r;
  void operator()(bool ok, std::string line) {
    r.details.push_back((ok ? "ok   " : "FAIL ") + std::move(line));
    if (!ok) r.passed = false;
  }
};

CriterionResult start(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.passed = true;
  return r;
}

std::vector<int> scan(const SuiteConfig& c) {
  std::vector<int> out;
  for (int s = c.s_lo; s <= c.s_hi; ++s) out.push_back(s);
  return out;
}

// Stable dimension for every scanned s; records the bases.
struct ScanEntry {
  int s = 0;
  StableSolution st;
};

std::vector<ScanEntry> stable_scan(SuiteContext& ctx, const std::string& algebra, const MapClass& cls, int parity) {
  const auto p = builtin(algebra);
  const auto degrees = scan(ctx.config);
  std::vector<ScanEntry> out(degrees.size());
  parallel_for(degrees.size(), ctx.config.threads, [&](std::size_t i) {
    out[i].s = degrees[i];
    out[i].st = stable_solve(p, cls, degrees[i], parity, ctx.config.window, ctx.config.delta);
    ctx.log.record(algebra + " " + to_string(cls) + " parity " + std::to_string(parity) + " s=" +
                       std::to_string(degrees[i]),
                   p, out[i].st.ansatz, out[i].st.space.basis);
  });
  return out;
}

std::string dims_line(const std::string& what, const std::vector<ScanEntry>& entries) {
  std::string s = what + " stable dims";
  for (const auto& e : entries) s += " s=" + std::to_string(e.s) + ":" + std::to_string(e.st.space.dim());
  return s;
}

// Expected dimension at `at`, zero elsewhere; decomposition against the knowns at `at`.
void classified_scan(Check& check, SuiteContext& ctx, const std::string& algebra, const MapClass& cls, int parity, int at,
             std::size_t dim, const std::vector<std::string>& knowns) {
  const auto p = builtin(algebra);
  const auto entries = stable_scan(ctx, algebra, cls, parity);
  bool dims_ok = true;
  for (const auto& e : entries) dims_ok = dims_ok && e.st.space.dim() == (e.s == at ? dim : 0);
  const std::string what = algebra + " " + to_string(cls) + " parity " + std::to_string(parity);
  check(dims_ok, dims_line(what, entries));
  for (const auto& e : entries) {
    if (e.s != at) continue;
    std::vector<KnownMap> ks;
    for (const auto& k : knowns) ks.push_back(known_map(p, k));
    const auto rep = decompose(e.st.ansatz, e.st.space, ks);
    std::string names;
    for (const auto& k : knowns) names += (names.empty() ? "" : ", ") + k;
    check(rep.residual_dim == 0 && rep.unmatched_knowns == 0,
          what + " s=" + std::to_string(at) + " against {" + names + "}: residual_dim " +
              std::to_string(rep.residual_dim) + ", unmatched " + std::to_string(rep.unmatched_knowns));
  }
  if (std::none_of(entries.begin(), entries.end(), [&](const ScanEntry& e) { return e.s == at; }))
    check(false, what + ": degree " + std::to_string(at) + " outside the scan range");
}

CriterionResult axioms(SuiteContext& ctx) {
  auto r = start(1, "axioms and non-multiplicativity");
  Check check{r};
  for (const char* name : {"w22q", "wittq", "wittsuperq"}) {
    const auto p = builtin(name);
    const auto ax = check_axioms(p, ctx.config.window);
    check(ax.passed(), std::string(name) + " axioms on the window: " + std::to_string(ax.instances) + " instances, " +
                           std::to_string(ax.witnesses.size()) + " failures");
    const auto mul = check_multiplicative(p, ctx.config.window);
    std::string line = std::string(name) + " not multiplicative";
    if (!mul.passed()) line += ", witness " + describe(p, mul.witnesses.front());
    check(!mul.passed(), line);
  }
  const auto e = builtin("example49");
  const auto ax = check_axioms(e, {0, 0});
  check(ax.passed(), "example49 axioms on the whole basis: " + std::to_string(ax.instances) + " instances");
  return r;
}

CriterionResult qnumbers(SuiteContext&) {
  auto r = start(2, "q-number identities");
  Check check{r};
  const auto qp = [](int e) { return QRational::q_power(e); };
  const auto br = q_bracket_number;
  const auto bc = q_brace_number;
  std::map<std::string, std::size_t> failures{{"[-n] = -[n]", 0},
                                              {"q^n[m] - q^m[n] = [m-n], q^-n[m] + q^m[n] = [m+n]", 0},
                                              {"{n+1} = 1 + q{n} = {n} + q^n", 0},
                                              {"{n+m} = {n} + q^n{m}, q^n{-n} = -{n}", 0}};
  auto it = failures.begin();
  auto& odd = it++->second;
  auto& bracket_add = it++->second;
  auto& brace_step = it++->second;
  auto& brace_add = it->second;
  for (int m = -8; m <= 8; ++m) {
    if (!(br(-m) == -br(m))) ++odd;
    if (!(bc(m + 1) == QRational(1) + qp(1) * bc(m)) || !(bc(m + 1) == bc(m) + qp(m))) ++brace_step;
    if (!(qp(m) * bc(-m) == -bc(m))) ++brace_add;
    for (int n = -8; n <= 8; ++n) {
      if (!(qp(n) * br(m) - qp(m) * br(n) == br(m - n))) ++bracket_add;
      if (!(qp(-n) * br(m) + qp(m) * br(n) == br(m + n))) ++bracket_add;
      if (!(bc(n + m) == bc(n) + qp(n) * bc(m))) ++brace_add;
    }
  }
  for (const auto& [name, n] : failures) check(n == 0, name + " for m, n in [-8, 8]");
  return r;
}

CriterionResult w22q_scan(SuiteContext& ctx) {
  auto r = start(3, "w22q biderivations");
  Check check{r};
  classified_scan(check, ctx, "w22q", kBider, 0, 0, 2, {"phi_ad", "phi_0"});
  return r;
}

CriterionResult wittq_scan(SuiteContext& ctx) {
  auto r = start(4, "wittq biderivations");
  Check check{r};
  classified_scan(check, ctx, "wittq", kBider, 0, 0, 1, {"phi_ad"});
  return r;
}

CriterionResult wittsuperq_scan(SuiteContext& ctx) {
  auto r = start(5, "wittsuperq super-biderivations");
  Check check{r};
  classified_scan(check, ctx, "wittsuperq", kSuperBider, 0, 0, 1, {"phi_ad"});
  classified_scan(check, ctx, "wittsuperq", kSuperBider, 1, -1, 1, {"phi_minus1"});
  return r;
}

CriterionResult alpha_classes(SuiteContext& ctx) {
  auto r = start(6, "alpha classes vanish");
  Check check{r};
  struct Case {
    const char* algebra;
    MapClass cls;
    int parity;
  };
  const MapClass alpha_der = LinearClass::alpha_k_derivation(1);
  const std::vector<Case> cases{{"w22q", alpha_der, 0},
                                {"w22q", BilinearClass::AlphaBiderivation, 0},
                                {"wittq", alpha_der, 0},
                                {"wittq", BilinearClass::AlphaBiderivation, 0},
                                {"wittsuperq", alpha_der, 0},
                                {"wittsuperq", alpha_der, 1},
                                {"wittsuperq", BilinearClass::AlphaSuperBiderivation, 0},
                                {"wittsuperq", BilinearClass::AlphaSuperBiderivation, 1}};
  for (const auto& c : cases) {
    const auto entries = stable_scan(ctx, c.algebra, c.cls, c.parity);
    bool zero = true;
    for (const auto& e : entries) zero = zero && e.st.space.dim() == 0;
    check(zero, dims_line(std::string(c.algebra) + " " + to_string(c.cls) + " parity " + std::to_string(c.parity),
                          entries));
  }
  return r;
}

CriterionResult example49(SuiteContext&) {
  auto r = start(7, "example49 maps");
  Check check{r};
  const auto p = builtin("example49");
  const Window all{0, 0};
  const Generator x1 = p.generator("x1"), x2 = p.generator("x2"), y = p.generator("y");
  const QRational lambda = QRational::q_power(1);
  auto D = [&](int b, int c) {
    return ConcreteLinearMap::from_table(0, {{x1, Vector(x1, QRational(2 * c) * lambda)},
                                             {x2, Vector(x1, QRational(b))},
                                             {y, Vector(y, QRational(c))}});
  };
  auto phi = [&](int a, int k) {
    const QRational d = (QRational(Rational(1, 2)) - lambda) * QRational(k) / (lambda * lambda);
    const QRational t = QRational(2) * d * lambda;
    return ConcreteBilinearMap::from_table(0, {{{x1, x2}, Vector(x1, -t)},
                                               {{x2, x2}, Vector(x1, QRational(a))},
                                               {{x2, x1}, Vector(x1, t)},
                                               {{x2, y}, Vector(y, d)},
                                               {{y, x2}, Vector(y, -d)},
                                               {{y, y}, Vector(x1, QRational(k))}});
  };
  check(check_axioms(p, all).passed(), "axioms");
  for (auto [b, c] : {std::pair{1, 0}, std::pair{0, 1}}) {
    const bool ok = check_linear_class(p, D(b, c), LinearClass::alpha_k_derivation(1), all).passed();
    check(ok, "D with (b,c) = (" + std::to_string(b) + "," + std::to_string(c) + ") is an alpha-super-derivation");
  }
  for (auto [a, k] : {std::pair{1, 0}, std::pair{0, 1}}) {
    const bool ok = check_bilinear_class(p, phi(a, k), BilinearClass::AlphaSuperBiderivation, all).passed();
    check(ok, "phi with (a,k) = (" + std::to_string(a) + "," + std::to_string(k) + ") is an alpha-super-biderivation");
  }
  const auto skew = check_skew_symmetry(p, phi(1, 0), all);
  bool at_x2 = false;
  for (const auto& w : skew.witnesses) at_x2 = at_x2 || w.inputs == std::vector<Generator>{x2, x2};
  check(at_x2, "phi with a = 1 is not skew-symmetric at (x2, x2)");
  return r;
}

// Coefficient table of a linear map on the slots of an ansatz.
Assignment table_of(const HomogeneousAnsatz& a, const ConcreteLinearMap& f) {
  Assignment out(a.size());
  for (const auto& [inputs, ids] : a.by_inputs) {
    const Vector v = f(inputs[0]);
    for (int id : ids) out[static_cast<std::size_t>(id)] = v.coefficient(a.slots[static_cast<std::size_t>(id)].target);
  }
  return out;
}

bool same_span(const std::vector<Assignment>& a, const std::vector<Assignment>& b) {
  std::vector<Assignment> all = a;
  all.insert(all.end(), b.begin(), b.end());
  const auto r = rank(all);
  return r == rank(a) && r == rank(b);
}

// phi(x,y) = [x, f(y)], or [f(x), y] in the super case.
ConcreteBilinearMap induced_map(const AlgebraPresentation& p, const ConcreteLinearMap& f) {
  auto ev = std::make_shared<Evaluator>(p);
  const bool super = p.is_super();
  return ConcreteBilinearMap::from_function(f.parity(), std::nullopt, [ev, f, super](const Generator& x,
                                                                                     const Generator& y) {
    return super ? bracket(*ev, f(x), Vector::basis(y)) : bracket(*ev, Vector::basis(x), f(y));
  });
}

struct FamilyCase {
  const char* algebra;
  int parity;
  // Expected basis maps, as rules on generators.
  std::vector<ConcreteLinearMap> expected;
  std::string shape;
};

std::vector<FamilyCase> family_cases() {
  auto identity = ConcreteLinearMap::from_function(0, [](const Generator& g) { return Vector::basis(g); });
  const auto w22q = builtin("w22q");
  const int L = w22q.family_index("L"), W = w22q.family_index("W");
  auto l_to_w = ConcreteLinearMap::from_function(0, [L, W](const Generator& g) {
    return g.family == L ? Vector(Generator{W, g.degree}, QRational(1)) : Vector();
  });
  const auto ls = builtin("wittsuperq");
  const int SL = ls.family_index("L"), SG = ls.family_index("G");
  auto l_to_g = ConcreteLinearMap::from_function(1, [SL, SG](const Generator& g) {
    return g.family == SL ? Vector(Generator{SG, g.degree - 1}, QRational(1)) : Vector();
  });
  return {{"w22q", 0, {identity, l_to_w}, "f(L_m) = lambda L_m + mu W_m, f(W_m) = lambda W_m"},
          {"wittq", 0, {identity}, "f = lambda id"},
          {"wittsuperq", 0, {identity}, "f = lambda id"},
          {"wittsuperq", 1, {l_to_g}, "f(L_m) = lambda G_{m-1}, f(G_m) = 0"}};
}

CriterionResult commuting(SuiteContext& ctx) {
  auto r = start(9, "commuting maps");
  Check check{r};
  const auto cases = family_cases();
  std::vector<CommutingFamily> fams(cases.size());
  parallel_for(cases.size(), ctx.config.threads, [&](std::size_t i) {
    const auto p = builtin(cases[i].algebra);
    fams[i] = solve_commuting_maps(p, cases[i].parity, ctx.config.window, ctx.config.delta,
                                   {ctx.config.s_lo, ctx.config.s_hi, {}});
    ctx.log.record(std::string(cases[i].algebra) + " commuting-map parity " + std::to_string(cases[i].parity), p,
                   fams[i].ansatz, fams[i].basis);
  });
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    const auto& fam = fams[i];
    const auto p = builtin(c.algebra);
    std::vector<Assignment> want;
    for (const auto& f : c.expected) want.push_back(table_of(fam.ansatz, f));
    std::string got;
    for (const auto& line : fam.describe(p)) got += (got.empty() ? "" : ", ") + line;
    const std::string what = std::string(c.algebra) + " parity " + std::to_string(c.parity);
    check(fam.size() == c.expected.size() && same_span(fam.basis, want),
          what + ": " + std::to_string(fam.size()) + " parameter(s), " + got + " (expected " + c.shape + ")");
    const BilinearClass cls = p.is_super() ? BilinearClass::SuperBiderivation : BilinearClass::Biderivation;
    bool round_trip = true;
    for (std::size_t k = 0; k < fam.size(); ++k)
      round_trip = round_trip && check_bilinear_class(p, induced_map(p, fam.basis_map(k)), cls, ctx.config.window).passed();
    check(round_trip, what + ": every basis instance gives a " + to_string(cls) + " through f");
  }
  return r;
}

CriterionResult corollaries(SuiteContext& ctx) {
  auto r = start(10, "commuting automorphisms and derivations");
  Check check{r};
  struct Case {
    const char* algebra;
    int parity;
    CorollaryProperty property;
    bool identity;  // expect exactly the identity; otherwise exactly zero
  };
  const std::vector<Case> cases{{"w22q", 0, CorollaryProperty::Automorphism, true},
                                {"w22q", 0, CorollaryProperty::Derivation, false},
                                {"wittq", 0, CorollaryProperty::Automorphism, true},
                                {"wittq", 0, CorollaryProperty::Derivation, false},
                                {"wittsuperq", 0, CorollaryProperty::Automorphism, true},
                                {"wittsuperq", 0, CorollaryProperty::SuperDerivation, false},
                                {"wittsuperq", 1, CorollaryProperty::SuperDerivation, false}};
  std::vector<std::string> lines(cases.size());
  std::vector<char> ok(cases.size());
  parallel_for(cases.size(), ctx.config.threads, [&](std::size_t i) {
    const auto& c = cases[i];
    const auto p = builtin(c.algebra);
    const auto fam = solve_commuting_maps(p, c.parity, ctx.config.window, ctx.config.delta,
                                          {ctx.config.s_lo, ctx.config.s_hi, {}});
    const auto rep = corollary_check(p, fam, c.property, ctx.config.window);
    const auto adm = rep.admissible();
    bool good = adm.size() == 1 && adm[0].values.size() == fam.size();
    if (good) {
      const auto f = fam.instance([&] {
        std::vector<QRational> v;
        for (const auto& pv : adm[0].values) v.push_back(pv.constant);
        return v;
      }());
      for (const auto& pv : adm[0].values) good = good && pv.is_constant();
      for (const auto& g : p.basis(ctx.config.window)) {
        const Vector want = c.identity ? Vector::basis(g) : Vector();
        good = good && f(g) == want;
      }
    }
    std::string pts;
    for (const auto& pt : rep.points)
      pts += std::string(pts.empty() ? "" : "; ") + to_string(pt, rep.parameters) + (pt.admissible ? "" : " (excluded)");
    ok[i] = good;
    lines[i] = std::string(c.algebra) + " parity " + std::to_string(c.parity) + " " + to_string(c.property) +
               ": {" + pts + "} -> " + (c.identity ? "identity" : "zero") + " map only";
  });
  for (std::size_t i = 0; i < cases.size(); ++i) check(ok[i], lines[i]);
  return r;
}

CriterionResult soundness(SuiteContext& ctx) {
  auto r = start(11, "solver soundness");
  Check check{r};
  const auto entries = ctx.log.entries();
  std::vector<std::size_t> failures(entries.size()), counts(entries.size());
  parallel_for(entries.size(), ctx.config.threads, [&](std::size_t i) {
    for (const auto& v : entries[i].basis) {
      ++counts[i];
      if (!check_solution(entries[i].algebra, entries[i].ansatz, v).passed()) ++failures[i];
    }
  });
  std::size_t total = 0, failed = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    total += counts[i];
    failed += failures[i];
    if (failures[i]) check(false, entries[i].label + ": " + std::to_string(failures[i]) + " basis element(s) fail");
  }
  check(failed == 0 && !entries.empty(), std::to_string(total) + " basis elements from " +
                                             std::to_string(entries.size()) + " solved systems pass the checker");
  return r;
}

}  // namespace

std::vector<Criterion> paper_criteria() {
  return {{1, "axioms and non-multiplicativity", axioms},
          {2, "q-number identities", qnumbers},
          {3, "w22q biderivations", w22q_scan},
          {4, "wittq biderivations", wittq_scan},
          {5, "wittsuperq super-biderivations", wittsuperq_scan},
          {6, "alpha classes vanish", alpha_classes},
          {7, "example49 maps", example49},
          {9, "commuting maps", commuting},
          {10, "commuting automorphisms and derivations", corollaries},
          {11, "solver soundness", soundness, true}};
}

std::vector<CriterionResult> run_suite(const std::vector<Criterion>& criteria, SuiteContext& ctx) {
  std::vector<CriterionResult> out;
  for (bool last : {false, true})
    for (const auto& c : criteria) {
      if (c.last != last) continue;
      try {
        out.push_back(c.run(ctx));
      } catch (const std::exception& e) {
        CriterionResult r;
        r.id = c.id;
        r.name = c.name;
        r.details.push_back(std::string("FAIL error: ") + e.what());
        out.push_back(std::move(r));
      }
      out.back().id = c.id;
      out.back().name = c.name;
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::string summary_line(const CriterionResult& r) {
  return "criterion " + std::to_string(r.id) + " [" + r.name + "]: " + (r.passed ? "PASS" : "FAIL");
}

}  // namespace homlie
