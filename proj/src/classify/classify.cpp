#include "homlie/classify.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>

#include "classify/polynomial.hpp"
#include "homlie/errors.hpp"

namespace homlie {

namespace {

using detail::Poly;

const char* const kParameterNames[] = {"lambda", "mu", "nu", "rho", "sigma", "tau", "kappa", "eta"};

std::string parameter_name(std::size_t i) {
  constexpr std::size_t n = sizeof(kParameterNames) / sizeof(kParameterNames[0]);
  return i < n ? kParameterNames[i] : "t" + std::to_string(i);
}

ConcreteLinearMap combination(const HomogeneousAnsatz& a, const std::vector<Assignment>& basis,
                              const std::vector<QRational>& values, int parity) {
  Assignment x(a.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!values[i].is_zero())
      for (std::size_t k = 0; k < x.size(); ++k)
        if (!basis[i][k].is_zero()) x[k] += values[i] * basis[i][k];
  auto m = to_linear_map(a, x);
  return ConcreteLinearMap(parity, [m](const Generator& g) { return m(g); });
}

bool inside(const AlgebraPresentation& p, const Vector& v, const Window& w) {
  for (const auto& [g, c] : v.terms())
    if (!p.in_window(g, w)) return false;
  return true;
}

// The images of the window basis are linearly independent.
bool injective_on(const AlgebraPresentation& p, const ConcreteLinearMap& f, const Window& w) {
  const auto basis = p.basis(w);
  std::map<Generator, std::size_t> coord;
  std::vector<Vector> images;
  for (const auto& g : basis) {
    images.push_back(f(g));
    for (const auto& [t, c] : images.back().terms()) coord.emplace(t, 0);
  }
  std::size_t i = 0;
  for (auto& [g, k] : coord) k = i++;
  std::vector<Assignment> rows;
  for (const auto& v : images) {
    Assignment a(coord.size());
    for (const auto& [t, c] : v.terms()) a[coord.at(t)] = c;
    rows.push_back(std::move(a));
  }
  return rank(rows) == basis.size();
}

std::string coefficient_text(const QRational& c) {
  const std::string s = c.to_string();
  if (c.is_constant() || s.front() == '(') return s;
  return "(" + s + ")";
}

std::string shifted(const std::string& family, int shift) {
  if (shift == 0) return family + "_m";
  return family + "_{m" + (shift > 0 ? "+" : "-") + std::to_string(std::abs(shift)) + "}";
}

}  // namespace

KnownMap phi_ad(const AlgebraPresentation& p) {
  auto ev = std::make_shared<Evaluator>(p);
  return {"phi_ad", ConcreteBilinearMap::from_function(0, 0, [ev](const Generator& a, const Generator& b) {
            return ev->bracket(a, b);
          })};
}

KnownMap phi_0(const AlgebraPresentation& p) {
  const int L = p.family_index("L"), W = p.family_index("W");
  return {"phi_0", ConcreteBilinearMap::from_function(0, 0, [L, W](const Generator& a, const Generator& b) {
            if (a.family != L || b.family != L) return Vector();
            return Vector(Generator{W, a.degree + b.degree}, q_bracket_number(b.degree - a.degree));
          })};
}

KnownMap phi_minus1(const AlgebraPresentation& p) {
  const int L = p.family_index("L"), G = p.family_index("G");
  return {"phi_minus1", ConcreteBilinearMap::from_function(1, -1, [L, G](const Generator& a, const Generator& b) {
            if (a.family != L || b.family != L) return Vector();
            return Vector(Generator{G, a.degree + b.degree - 1}, q_brace_number(b.degree) - q_brace_number(a.degree));
          })};
}

KnownMap known_map(const AlgebraPresentation& p, const std::string& name) {
  if (name == "phi_ad") return phi_ad(p);
  if (name == "phi_0") return phi_0(p);
  if (name == "phi_minus1") return phi_minus1(p);
  throw ValidationError("unknown map '" + name + "' (expected phi_ad, phi_0 or phi_minus1)");
}

Assignment restrict_known(const HomogeneousAnsatz& a, const ConcreteBilinearMap& phi) {
  Assignment out(a.size());
  for (const auto& [inputs, ids] : a.by_inputs) {
    if (inputs.size() != 2 || ids.empty()) continue;
    const Vector v = phi(inputs[0], inputs[1]);
    for (int id : ids) out[static_cast<std::size_t>(id)] = v.coefficient(a.slots[static_cast<std::size_t>(id)].target);
  }
  return out;
}

DecompositionReport decompose(const HomogeneousAnsatz& a, const SolutionSpace& space,
                              const std::vector<KnownMap>& knowns) {
  DecompositionReport out;
  std::vector<Assignment> K;
  for (const auto& k : knowns) {
    out.knowns.push_back(k.name);
    K.push_back(restrict_known(a, k.map));
  }
  const std::size_t rk = rank(K);
  if (rk < K.size()) throw DependentKnowns("the known maps are linearly dependent on the window");

  std::vector<Assignment> all = K;
  all.insert(all.end(), space.basis.begin(), space.basis.end());
  out.residual_dim = rank(all) - rk;
  // dim(space) + dim(K) - dim(space + K) = dim(intersection)
  const std::size_t meet = space.dim() + rk - rank(all);
  out.unmatched_knowns = rk - meet;

  // v = sum_j c_j K_j: nullspace of [K_1 ... K_k, -v] with a nonzero last entry.
  for (const auto& v : space.basis) {
    ConstraintSystem sys;
    sys.unknowns = K.size() + 1;
    for (std::size_t id = 0; id < a.size(); ++id) {
      LinearForm f;
      for (std::size_t j = 0; j < K.size(); ++j)
        if (!K[j][id].is_zero()) f += LinearForm::unknown(static_cast<int>(j), K[j][id]);
      if (!v[id].is_zero()) f += LinearForm::unknown(static_cast<int>(K.size()), -v[id]);
      if (!f.is_zero()) sys.rows.push_back(std::move(f));
    }
    std::optional<std::map<std::string, QRational>> coeffs;
    for (const auto& sol : nullspace(sys).basis) {
      const QRational t = sol.back();
      if (t.is_zero()) continue;
      std::map<std::string, QRational> c;
      for (std::size_t j = 0; j < K.size(); ++j) c[knowns[j].name] = sol[j] / t;
      coeffs = std::move(c);
    }
    out.coefficients.push_back(std::move(coeffs));
  }
  return out;
}

ConcreteLinearMap CommutingFamily::instance(const std::vector<QRational>& values) const {
  if (values.size() != basis.size()) throw ValidationError("expected one value per parameter");
  return combination(ansatz, basis, values, parity);
}

ConcreteLinearMap CommutingFamily::basis_map(std::size_t i) const {
  std::vector<QRational> values(basis.size());
  values.at(i) = QRational(1);
  return instance(values);
}

std::vector<std::string> CommutingFamily::describe(const AlgebraPresentation& p) const {
  std::vector<std::string> out;
  const auto gens = p.basis(ansatz.window);
  for (std::size_t f = 0; f < p.families.size(); ++f) {
    const std::string& name = p.families[f].name;
    std::string line = "f(" + (p.is_graded() ? name + "_m" : name) + ") = ";
    std::string rhs;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto map = basis_map(i);
      // (target family, shift) -> coefficient, when it does not depend on m
      std::map<std::pair<int, int>, std::optional<QRational>> terms;
      bool any = false;
      for (const auto& g : gens) {
        if (g.family != static_cast<int>(f)) continue;
        const Vector v = map(g);
        for (const auto& [t, c] : v.terms()) {
          auto key = std::make_pair(t.family, t.degree - g.degree);
          auto it = terms.find(key);
          if (it == terms.end())
            terms.emplace(key, c);
          else if (it->second && !(*it->second == c))
            it->second.reset();
          any = true;
        }
      }
      if (!any) continue;
      for (const auto& [key, c] : terms) {
        const std::string& target = p.families[static_cast<std::size_t>(key.first)].name;
        std::string term = c ? (c->is_one() ? "" : coefficient_text(*c) + " ") : "c_m ";
        term += parameters[i] + " " + (p.is_graded() ? shifted(target, key.second) : target);
        rhs += (rhs.empty() ? "" : " + ") + term;
      }
    }
    out.push_back(line + (rhs.empty() ? "0" : rhs));
  }
  return out;
}

CommutingFamily solve_commuting_maps(const AlgebraPresentation& p, int parity, const Window& w, int delta,
                                     const CommutingOptions& opts) {
  const MapClass cls = LinearClass::commuting_map();
  CommutingFamily out;
  out.parity = parity;
  std::vector<std::pair<HomogeneousAnsatz, Assignment>> found;
  std::vector<int> degrees;
  const int lo = p.is_graded() ? opts.s_lo : 0, hi = p.is_graded() ? opts.s_hi : 0;
  for (int s = lo; s <= hi; ++s) {
    auto st = stable_solve(p, cls, s, parity, w, delta, opts.stable);
    if (st.space.dim() == 0) continue;
    degrees.push_back(s);
    for (auto& v : st.space.basis) {
      found.emplace_back(st.ansatz, std::move(v));
      out.degrees.push_back(s);
    }
  }
  out.ansatz = build_ansatz(p, cls, degrees, parity, w);
  for (std::size_t i = 0; i < found.size(); ++i) {
    out.basis.push_back(restrict_assignment(found[i].first, found[i].second, out.ansatz));
    out.parameters.push_back(parameter_name(i));
  }
  return out;
}

std::string to_string(CorollaryProperty c) {
  switch (c) {
    case CorollaryProperty::Automorphism: return "automorphism";
    case CorollaryProperty::Derivation: return "derivation";
    case CorollaryProperty::SuperDerivation: return "super-derivation";
  }
  return "";
}

std::optional<CorollaryProperty> parse_corollary_property(const std::string& s) {
  std::string n = s;
  for (auto& ch : n) {
    if (ch == '_') ch = '-';
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  if (n == "automorphism") return CorollaryProperty::Automorphism;
  if (n == "derivation") return CorollaryProperty::Derivation;
  if (n == "super-derivation") return CorollaryProperty::SuperDerivation;
  return std::nullopt;
}

std::vector<ParameterPoint> CorollaryReport::admissible() const {
  std::vector<ParameterPoint> out;
  for (const auto& pt : points)
    if (pt.admissible) out.push_back(pt);
  return out;
}

CorollaryReport corollary_check(const AlgebraPresentation& p, const CommutingFamily& family, CorollaryProperty property,
                                const Window& w) {
  CorollaryReport out;
  out.property = property;
  out.parameters = family.parameters;
  const std::size_t k = family.size();
  Evaluator ev(p);
  const auto basis = p.basis(w);
  std::vector<std::map<Generator, Vector>> image(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto f = family.basis_map(i);
    for (const auto& g : basis) image[i].emplace(g, f(g));
  }
  auto apply = [&](std::size_t i, const Vector& v) {
    Vector r;
    for (const auto& [g, c] : v.terms())
      for (const auto& [t, ct] : image[i].at(g).terms()) r.push(t, c * ct);
    r.normalize();
    return r;
  };
  auto lie = [&](const Vector& x, const Vector& y) { return bracket(ev, x, y); };

  // Each constraint: target generator -> polynomial in the parameters.
  std::map<std::string, Poly> constraints;
  auto collect = [&](std::map<Generator, Poly>& acc) {
    for (auto& [g, poly] : acc) {
      if (poly.is_zero()) continue;
      Poly m = poly.monic();
      constraints.emplace(m.key(), std::move(m));
    }
  };
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      const Vector& xy = ev.bracket(x, y);
      if (!inside(p, xy, w)) continue;
      std::map<Generator, Poly> acc;
      auto add = [&](const Vector& v, const Poly& mono) {
        for (const auto& [t, c] : v.terms()) {
          auto it = acc.try_emplace(t, Poly(k)).first;
          it->second += mono * c;
        }
      };
      for (std::size_t i = 0; i < k; ++i) add(apply(i, xy), Poly::variable(k, i));
      const Vector bx = Vector::basis(x), by = Vector::basis(y);
      for (std::size_t i = 0; i < k; ++i) {
        const Poly li = Poly::variable(k, i);
        const Vector& fx = image[i].at(x);
        if (property == CorollaryProperty::Automorphism) {
          for (std::size_t j = 0; j < k; ++j) add(lie(fx, image[j].at(y)), (li * Poly::variable(k, j)) * QRational(-1));
        } else {
          const int sign = (family.parity * p.parity(x)) % 2 == 0 ? 1 : -1;
          add(lie(fx, by), li * QRational(-1));
          add(lie(bx, image[i].at(y)), li * QRational(-sign));
        }
      }
      collect(acc);
    }
  }
  out.constraints = constraints.size();

  std::vector<Poly> cs;
  for (auto& [key, c] : constraints) cs.push_back(std::move(c));
  std::vector<Poly> value;
  for (std::size_t i = 0; i < k; ++i) value.push_back(Poly::variable(k, i));
  std::vector<std::vector<Poly>> solutions;
  detail::solve_system(std::move(cs), std::move(value), solutions);

  for (const auto& sol : solutions) {
    ParameterPoint pt;
    std::vector<QRational> generic(k);
    for (std::size_t i = 0; i < k; ++i) {
      ParameterValue v;
      for (const auto& [m, c] : sol[i].terms()) {
        const auto it = std::find(m.begin(), m.end(), 1);
        if (it == m.end())
          v.constant = c;
        else
          v.free[static_cast<int>(it - m.begin())] = c;
      }
      // Free parameters at distinct sample values.
      generic[i] = v.constant;
      for (const auto& [j, c] : v.free) generic[i] += c * QRational(static_cast<long>(2 * j + 3));
      pt.values.push_back(std::move(v));
    }
    if (property == CorollaryProperty::Automorphism) pt.admissible = injective_on(p, family.instance(generic), w);
    out.points.push_back(std::move(pt));
  }
  return out;
}

std::string to_string(const ParameterPoint& point, const std::vector<std::string>& parameters) {
  std::ostringstream os;
  for (std::size_t i = 0; i < point.values.size(); ++i) {
    if (i) os << ", ";
    os << parameters[i] << " = ";
    const auto& v = point.values[i];
    if (v.free.size() == 1 && v.free.begin()->first == static_cast<int>(i) && v.constant.is_zero() &&
        v.free.begin()->second.is_one()) {
      os << "free";
      continue;
    }
    std::string s;
    if (!v.constant.is_zero() || v.free.empty()) s = v.constant.to_string();
    for (const auto& [j, c] : v.free)
      s += (s.empty() ? "" : " + ") + (c.is_one() ? "" : coefficient_text(c) + " ") + parameters[static_cast<std::size_t>(j)];
    os << s;
  }
  return os.str();
}

}  // namespace homlie
