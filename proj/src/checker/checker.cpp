#include "homlie/checker.hpp"

#include <algorithm>
#include <cctype>

#include "common/identities.hpp"
#include "homlie/errors.hpp"

namespace homlie {

namespace {

using detail::sign;

bool inside(const AlgebraPresentation& p, const Vector& v, const Window& w) {
  for (const auto& [g, c] : v.terms())
    if (!p.in_window(g, w)) return false;
  return true;
}

std::string normalize_name(std::string s) {
  for (auto& ch : s) {
    if (ch == '_') ch = '-';
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return s;
}

void sort_witnesses(std::vector<Witness>& ws) {
  std::stable_sort(ws.begin(), ws.end(), [](const Witness& a, const Witness& b) {
    if (a.inputs != b.inputs) return a.inputs < b.inputs;
    return a.identity < b.identity;
  });
}

// Records each instance and keeps those whose sides differ.
struct Collector {
  CheckReport report;

  void operator()(const std::string& name, std::vector<Generator> inputs, const Vector& lhs, const Vector& rhs) {
    ++report.instances;
    if (!(lhs == rhs)) report.witnesses.push_back({name, std::move(inputs), lhs, rhs});
  }

  CheckReport finish() {
    sort_witnesses(report.witnesses);
    return std::move(report);
  }
};

Vector evaluate_terms(const AlgebraPresentation& p, const std::vector<RuleTerm>& terms, long m, long n) {
  Vector out;
  for (const auto& t : terms) {
    Generator target{t.target, static_cast<int>(t.degree(m, n))};
    if (!p.contains(target)) continue;
    out.push(target, t.coeff.evaluate(m, n));
  }
  out.normalize();
  return out;
}

}  // namespace

bool is_super_class(BilinearClass c) {
  return c == BilinearClass::SuperBiderivation || c == BilinearClass::AlphaSuperBiderivation;
}

bool has_inner_alpha(BilinearClass c) {
  return c == BilinearClass::Biderivation || c == BilinearClass::SuperBiderivation;
}

std::string to_string(BilinearClass c) {
  switch (c) {
    case BilinearClass::Biderivation: return "biderivation";
    case BilinearClass::SuperBiderivation: return "super-biderivation";
    case BilinearClass::AlphaBiderivation: return "alpha-biderivation";
    case BilinearClass::AlphaSuperBiderivation: return "alpha-super-biderivation";
  }
  return "";
}

std::string to_string(const LinearClass& c) {
  switch (c.kind) {
    case LinearClassKind::Derivation: return "derivation";
    case LinearClassKind::SuperDerivation: return "super-derivation";
    case LinearClassKind::AlphaKDerivation: return "alpha-k-derivation(" + std::to_string(c.k) + ")";
    case LinearClassKind::CommutingMap: return "commuting-map";
  }
  return "";
}

std::optional<BilinearClass> parse_bilinear_class(const std::string& s) {
  const std::string n = normalize_name(s);
  if (n == "biderivation") return BilinearClass::Biderivation;
  if (n == "super-biderivation") return BilinearClass::SuperBiderivation;
  if (n == "alpha-biderivation") return BilinearClass::AlphaBiderivation;
  if (n == "alpha-super-biderivation") return BilinearClass::AlphaSuperBiderivation;
  return std::nullopt;
}

std::optional<LinearClass> parse_linear_class(const std::string& s, int k) {
  const std::string n = normalize_name(s);
  if (n == "derivation") return LinearClass::derivation();
  if (n == "super-derivation") return LinearClass::super_derivation();
  if (n == "alpha-k-derivation" || n == "alpha-derivation" || n == "alpha-super-derivation")
    return LinearClass::alpha_k_derivation(k);
  if (n == "commuting-map") return LinearClass::commuting_map();
  return std::nullopt;
}

void CheckReport::merge(CheckReport other) {
  instances += other.instances;
  for (auto& w : other.witnesses) witnesses.push_back(std::move(w));
  sort_witnesses(witnesses);
}

ConcreteLinearMap ConcreteLinearMap::from_table(int parity, std::map<Generator, Vector> table) {
  return {parity, [table = std::move(table)](const Generator& g) {
            auto it = table.find(g);
            return it == table.end() ? Vector() : it->second;
          }};
}

ConcreteLinearMap ConcreteLinearMap::from_rules(const AlgebraPresentation& p, int parity, std::vector<AlphaRule> rules) {
  return {parity, [p, rules = std::move(rules)](const Generator& g) {
            for (const auto& r : rules)
              if (r.family == g.family) return evaluate_terms(p, r.terms, g.degree, 0);
            return Vector();
          }};
}

ConcreteBilinearMap ConcreteBilinearMap::from_table(int parity,
                                                    std::map<std::pair<Generator, Generator>, Vector> table) {
  return {parity, std::nullopt, [table = std::move(table)](const Generator& a, const Generator& b) {
            auto it = table.find({a, b});
            return it == table.end() ? Vector() : it->second;
          }};
}

ConcreteBilinearMap ConcreteBilinearMap::from_rules(const AlgebraPresentation& p, int parity,
                                                    std::optional<int> degree, std::vector<BracketRule> rules) {
  return {parity, degree, [p, rules = std::move(rules)](const Generator& a, const Generator& b) {
            for (const auto& r : rules) {
              if (r.left != a.family || r.right != b.family) continue;
              const long m = r.left_var_is_m ? a.degree : b.degree;
              const long n = r.left_var_is_m ? b.degree : a.degree;
              return evaluate_terms(p, r.terms, m, n);
            }
            return Vector();
          }};
}

CheckReport check_axioms(const AlgebraPresentation& p, const Window& w) {
  Evaluator ev(p);
  const auto basis = p.basis(w);
  const bool super = p.is_super();
  Collector out;
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      const Vector& xy = ev.bracket(x, y);
      if (!inside(p, xy, w)) continue;
      out("skew", {x, y}, xy, ev.bracket(y, x).scaled(-sign(ev.parity(x) * ev.parity(y))));
    }
  }
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      for (const auto& z : basis) {
        const Vector& xy = ev.bracket(x, y);
        const Vector& yz = ev.bracket(y, z);
        const Vector& zx = ev.bracket(z, x);
        const Vector& xz = ev.bracket(x, z);
        if (!inside(p, xy, w) || !inside(p, yz, w) || !inside(p, zx, w) || !inside(p, xz, w)) continue;
        const int px = ev.parity(x), py = ev.parity(y), pz = ev.parity(z);
        const Vector ax = Vector::basis(x), ay = Vector::basis(y), az = Vector::basis(z);
        Vector sum = bracket(ev, alpha_apply(ev, ax), yz);
        Vector t2 = bracket(ev, alpha_apply(ev, az), xy);
        Vector t3 = bracket(ev, alpha_apply(ev, ay), zx);
        if (super) {
          sum = sum.scaled(sign(px * pz));
          t2 = t2.scaled(sign(pz * py));
          t3 = t3.scaled(sign(py * px));
        }
        sum += t2;
        sum += t3;
        out(super ? "super-hom-jacobi" : "hom-jacobi", {x, y, z}, sum, Vector());
        if (super) {
          Vector lhs = bracket(ev, alpha_apply(ev, ax), yz);
          Vector rhs = bracket(ev, xy, alpha_apply(ev, az));
          rhs += bracket(ev, alpha_apply(ev, ay), xz).scaled(sign(px * py));
          out("jac", {x, y, z}, lhs, rhs);
        }
      }
    }
  }
  return out.finish();
}

CheckReport check_multiplicative(const AlgebraPresentation& p, const Window& w) {
  Evaluator ev(p);
  const auto basis = p.basis(w);
  Collector out;
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      const Vector& xy = ev.bracket(x, y);
      if (!inside(p, xy, w)) continue;
      out("multiplicative", {x, y}, alpha_apply(ev, xy), bracket(ev, ev.alpha(x), ev.alpha(y)));
    }
  }
  return out.finish();
}

CheckReport check_bilinear_class(const AlgebraPresentation& p, const ConcreteBilinearMap& phi, BilinearClass cls,
                                 const Window& w) {
  if (is_super_class(cls) && !p.is_super())
    throw ClassModeMismatch(to_string(cls) + " requires a super presentation");
  Evaluator ev(p);
  const auto basis = p.basis(w);
  std::map<std::pair<Generator, Generator>, Vector> table;
  for (const auto& a : basis)
    for (const auto& b : basis) table.emplace(std::make_pair(a, b), phi(a, b));
  auto domain = [&](const Generator& a, const Generator& b) -> const Vector* {
    auto it = table.find({a, b});
    return it == table.end() ? nullptr : &it->second;
  };
  Collector out;
  detail::bilinear_instances<QRational>(ev, basis, {is_super_class(cls), has_inner_alpha(cls), phi.parity()}, domain,
                                        std::ref(out));
  return out.finish();
}

CheckReport check_linear_class(const AlgebraPresentation& p, const ConcreteLinearMap& f, const LinearClass& cls,
                               const Window& w) {
  Evaluator ev(p);
  const auto basis = p.basis(w);
  std::map<Generator, Vector> table;
  for (const auto& g : basis) table.emplace(g, f(g));
  auto domain = [&](const Generator& g) -> const Vector* {
    auto it = table.find(g);
    return it == table.end() ? nullptr : &it->second;
  };
  Collector out;
  switch (cls.kind) {
    case LinearClassKind::Derivation:
    case LinearClassKind::SuperDerivation:
      detail::derivation_instances<QRational>(ev, basis, {0, f.parity()}, domain, std::ref(out));
      break;
    case LinearClassKind::AlphaKDerivation:
      detail::derivation_instances<QRational>(ev, basis, {cls.k, f.parity()}, domain, std::ref(out));
      break;
    case LinearClassKind::CommutingMap:
      detail::commuting_instances<QRational>(ev, basis, p.is_super(), domain, std::ref(out));
      break;
  }
  return out.finish();
}

CheckReport check_skew_symmetry(const AlgebraPresentation& p, const ConcreteBilinearMap& phi, const Window& w) {
  const auto basis = p.basis(w);
  Collector out;
  for (const auto& x : basis)
    for (const auto& y : basis)
      out("skew", {x, y}, phi(x, y), phi(y, x).scaled(-sign(p.parity(x) * p.parity(y))));
  return out.finish();
}

std::string describe(const AlgebraPresentation& p, const Witness& w) {
  std::string s = w.identity + " at (";
  for (std::size_t i = 0; i < w.inputs.size(); ++i) {
    if (i) s += ", ";
    s += p.generator_name(w.inputs[i]);
  }
  return s + "): lhs = " + p.vector_name(w.lhs) + ", rhs = " + p.vector_name(w.rhs);
}

}  // namespace homlie
