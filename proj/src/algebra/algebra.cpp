#include "homlie/algebra.hpp"

#include <algorithm>
#include <set>

namespace homlie {

bool Family::has_degree(int d) const {
  switch (domain) {
    case Domain::AllIntegers:
      return true;
    case Domain::Finite:
      return std::binary_search(degrees.begin(), degrees.end(), d);
    case Domain::Ungraded:
      return d == 0;
  }
  return false;
}

std::optional<int> AlgebraPresentation::find_family(const std::string& family) const {
  for (std::size_t i = 0; i < families.size(); ++i)
    if (families[i].name == family) return static_cast<int>(i);
  return std::nullopt;
}

int AlgebraPresentation::family_index(const std::string& family) const {
  auto idx = find_family(family);
  if (!idx) throw UnknownGenerator("unknown family '" + family + "' in algebra " + name);
  return *idx;
}

Generator AlgebraPresentation::generator(const std::string& family, int degree) const {
  Generator g{family_index(family), degree};
  if (!contains(g)) throw UnknownGenerator("no generator " + generator_name(g) + " in algebra " + name);
  return g;
}

bool AlgebraPresentation::is_graded() const {
  return std::any_of(families.begin(), families.end(),
                     [](const Family& f) { return f.domain != Family::Domain::Ungraded; });
}

bool AlgebraPresentation::contains(const Generator& g) const {
  if (g.family < 0 || g.family >= static_cast<int>(families.size())) return false;
  return families[static_cast<std::size_t>(g.family)].has_degree(g.degree);
}

std::vector<Generator> AlgebraPresentation::basis(const Window& w) const {
  std::vector<Generator> out;
  for (std::size_t f = 0; f < families.size(); ++f) {
    const Family& fam = families[f];
    const int idx = static_cast<int>(f);
    switch (fam.domain) {
      case Family::Domain::AllIntegers:
        for (int d = w.lo; d <= w.hi; ++d) out.push_back({idx, d});
        break;
      case Family::Domain::Finite:
        for (int d : fam.degrees)
          if (w.contains(d)) out.push_back({idx, d});
        break;
      case Family::Domain::Ungraded:
        out.push_back({idx, 0});
        break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool AlgebraPresentation::in_window(const Generator& g, const Window& w) const {
  if (!contains(g)) return false;
  if (families[static_cast<std::size_t>(g.family)].domain == Family::Domain::Ungraded) return true;
  return w.contains(g.degree);
}

std::string AlgebraPresentation::generator_name(const Generator& g) const {
  std::string fam = g.family >= 0 && g.family < static_cast<int>(families.size())
                        ? families[static_cast<std::size_t>(g.family)].name
                        : "?" + std::to_string(g.family);
  if (g.family >= 0 && g.family < static_cast<int>(families.size()) &&
      families[static_cast<std::size_t>(g.family)].domain == Family::Domain::Ungraded)
    return fam;
  return fam + "_" + std::to_string(g.degree);
}

std::string AlgebraPresentation::vector_name(const Vector& v) const {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [g, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += c.to_string() + "*";
    out += generator_name(g);
  }
  return out;
}

namespace {

std::string rule_label(const AlgebraPresentation& p, const BracketRule& r) {
  return "[" + p.families[static_cast<std::size_t>(r.left)].name + ", " +
         p.families[static_cast<std::size_t>(r.right)].name + "]";
}

}  // namespace

void AlgebraPresentation::validate() const {
  const int nf = static_cast<int>(families.size());
  if (nf == 0) throw ValidationError("algebra " + name + " declares no families");
  std::set<std::string> names;
  bool graded = false, ungraded = false;
  for (const auto& f : families) {
    if (!names.insert(f.name).second) throw ValidationError("family " + f.name + " declared twice");
    if (f.parity != 0 && f.parity != 1) throw ValidationError("family " + f.name + " has parity outside {0, 1}");
    if (mode == SymmetryMode::Lie && f.parity == 1)
      throw ValidationError("mode: family " + f.name + " is odd but the algebra is declared mode lie");
    (f.domain == Family::Domain::Ungraded ? ungraded : graded) = true;
    if (f.domain == Family::Domain::Finite && !std::is_sorted(f.degrees.begin(), f.degrees.end()))
      throw ValidationError("family " + f.name + " lists degrees out of order");
  }
  if (graded && ungraded) throw ValidationError("grading: graded and ungraded families cannot be mixed");

  auto check_family = [nf](int f, const std::string& where) {
    if (f < 0 || f >= nf) throw ValidationError(where + " refers to an undeclared family");
  };
  std::set<std::pair<int, int>> seen;
  for (const auto& r : bracket_rules) {
    check_family(r.left, "bracket rule");
    check_family(r.right, "bracket rule");
    const std::string label = rule_label(*this, r);
    if (!seen.insert({r.left, r.right}).second) throw ValidationError("bracket rule " + label + " declared twice");
    const int target_parity = (families[static_cast<std::size_t>(r.left)].parity +
                               families[static_cast<std::size_t>(r.right)].parity) % 2;
    for (const auto& t : r.terms) {
      check_family(t.target, "bracket rule " + label);
      const Family& tf = families[static_cast<std::size_t>(t.target)];
      if (tf.parity != target_parity)
        throw ValidationError("parity: bracket rule " + label + " targets " + tf.name + " of parity " +
                              std::to_string(tf.parity) + " but needs parity " + std::to_string(target_parity));
      if (graded) {
        const Affine expected{r.shift, 1, 1};
        if (!(t.degree == expected))
          throw ValidationError("grading: bracket rule " + label + " target degree " + t.degree.to_string() +
                                " is not " + expected.to_string());
      } else {
        if (!(t.degree == Affine{}) || t.coeff.uses_degree_vars())
          throw ValidationError("grading: bracket rule " + label + " uses degree variables in an ungraded algebra");
      }
    }
  }
  std::set<int> alpha_seen;
  for (const auto& a : alpha_rules) {
    check_family(a.family, "alpha rule");
    const Family& f = families[static_cast<std::size_t>(a.family)];
    if (!alpha_seen.insert(a.family).second) throw ValidationError("alpha rule for " + f.name + " declared twice");
    for (const auto& t : a.terms) {
      check_family(t.target, "alpha rule for " + f.name);
      const Family& tf = families[static_cast<std::size_t>(t.target)];
      if (tf.parity != f.parity)
        throw ValidationError("alpha evenness: alpha(" + f.name + ") has a component in " + tf.name +
                              " of different parity");
      if (graded && !(t.degree == Affine{0, 1, 0}))
        throw ValidationError("grading: alpha(" + f.name + ") must preserve the degree m");
      if (!graded && (!(t.degree == Affine{}) || t.coeff.uses_degree_vars()))
        throw ValidationError("grading: alpha(" + f.name + ") uses degree variables in an ungraded algebra");
    }
  }
}

namespace {

CoeffExpr q_pow(const Affine& e) { return CoeffExpr::pow(CoeffExpr::q(), e); }
CoeffExpr lit(long v) { return CoeffExpr::integer(v); }

const Affine kM{0, 1, 0};
const Affine kN{0, 0, 1};
const Affine kMN{0, 1, 1};

AlgebraPresentation make_w22q() {
  AlgebraPresentation p;
  p.name = "w22q";
  p.mode = SymmetryMode::Lie;
  p.families = {{"L", 0, Family::Domain::AllIntegers, {}}, {"W", 0, Family::Domain::AllIntegers, {}}};
  const CoeffExpr c = CoeffExpr::qbr(kN - kM);
  p.bracket_rules.push_back({0, 0, true, 0, {{c, 0, kMN}}});
  p.bracket_rules.push_back({0, 1, true, 0, {{c, 1, kMN}}});
  const CoeffExpr a = q_pow(kM) + q_pow(-kM);
  p.alpha_rules.push_back({0, {{a, 0, kM}}});
  p.alpha_rules.push_back({1, {{a, 1, kM}}});
  return p;
}

AlgebraPresentation make_wittq() {
  AlgebraPresentation p;
  p.name = "wittq";
  p.mode = SymmetryMode::Lie;
  p.families = {{"L", 0, Family::Domain::AllIntegers, {}}};
  // [L(n), L(m)] = ({m} - {n}) L(m+n)
  p.bracket_rules.push_back({0, 0, false, 0, {{CoeffExpr::qnm(kM) - CoeffExpr::qnm(kN), 0, kMN}}});
  p.alpha_rules.push_back({0, {{lit(1) + q_pow(kM), 0, kM}}});
  return p;
}

AlgebraPresentation make_wittsuperq() {
  AlgebraPresentation p;
  p.name = "wittsuperq";
  p.mode = SymmetryMode::Super;
  p.families = {{"L", 0, Family::Domain::AllIntegers, {}}, {"G", 1, Family::Domain::AllIntegers, {}}};
  p.bracket_rules.push_back({0, 0, false, 0, {{CoeffExpr::qnm(kM) - CoeffExpr::qnm(kN), 0, kMN}}});
  // [L(n), G(m)] = ({m+1} - {n}) G(m+n)
  p.bracket_rules.push_back(
      {0, 1, false, 0, {{CoeffExpr::qnm(kM + Affine{1, 0, 0}) - CoeffExpr::qnm(kN), 1, kMN}}});
  p.alpha_rules.push_back({0, {{lit(1) + q_pow(kM), 0, kM}}});
  p.alpha_rules.push_back({1, {{lit(1) + q_pow(kM + Affine{1, 0, 0}), 1, kM}}});
  return p;
}

AlgebraPresentation make_example49() {
  AlgebraPresentation p;
  p.name = "example49";
  p.mode = SymmetryMode::Super;
  p.families = {{"x1", 0, Family::Domain::Ungraded, {}},
                {"x2", 0, Family::Domain::Ungraded, {}},
                {"y", 1, Family::Domain::Ungraded, {}}};
  const Affine zero{};
  const CoeffExpr lambda2 = q_pow(Affine{2, 0, 0});
  p.bracket_rules.push_back({0, 1, true, 0, {{lambda2, 0, zero}}});
  p.bracket_rules.push_back({1, 2, true, 0, {{-CoeffExpr::q() / lit(2), 2, zero}}});
  p.bracket_rules.push_back({2, 2, true, 0, {{lambda2, 0, zero}}});
  p.alpha_rules.push_back({0, {{lambda2, 0, zero}}});
  p.alpha_rules.push_back({1, {{lit(1), 1, zero}}});
  p.alpha_rules.push_back({2, {{CoeffExpr::q(), 2, zero}}});
  return p;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"w22q", "wittq", "wittsuperq", "example49"};
  return names;
}

AlgebraPresentation builtin(const std::string& name) {
  AlgebraPresentation p;
  if (name == "w22q") {
    p = make_w22q();
  } else if (name == "wittq") {
    p = make_wittq();
  } else if (name == "wittsuperq") {
    p = make_wittsuperq();
  } else if (name == "example49") {
    p = make_example49();
  } else {
    throw UnknownBuiltin(name);
  }
  p.validate();
  return p;
}

Evaluator::Evaluator(const AlgebraPresentation& p) : p_(&p) {
  const std::size_t nf = p.families.size();
  for (const auto& f : p.families) parities_.push_back(f.parity);
  table_.assign(nf * nf, {});
  for (const auto& r : p.bracket_rules) table_[static_cast<std::size_t>(r.left) * nf + static_cast<std::size_t>(r.right)] = {&r, false};
  for (const auto& r : p.bracket_rules) {
    Resolved& mirror = table_[static_cast<std::size_t>(r.right) * nf + static_cast<std::size_t>(r.left)];
    if (!mirror.rule) mirror = {&r, true};
  }
  alpha_table_.assign(nf, nullptr);
  for (const auto& a : p.alpha_rules) alpha_table_[static_cast<std::size_t>(a.family)] = &a;
}

void Evaluator::require(const Generator& g) const {
  if (!p_->contains(g)) throw UnknownGenerator("generator " + p_->generator_name(g) + " is not in algebra " + p_->name);
}

Vector Evaluator::evaluate_rule(const BracketRule& rule, int left_degree, int right_degree) const {
  const long m = rule.left_var_is_m ? left_degree : right_degree;
  const long n = rule.left_var_is_m ? right_degree : left_degree;
  Vector out;
  for (const auto& t : rule.terms) {
    Generator target{t.target, static_cast<int>(t.degree(m, n))};
    if (!p_->contains(target)) continue;
    out.push(target, t.coeff.evaluate(m, n));
  }
  out.normalize();
  return out;
}

const Vector& Evaluator::bracket(const Generator& a, const Generator& b) {
  const Key key{a.family, a.degree, b.family, b.degree};
  auto it = bracket_cache_.find(key);
  if (it != bracket_cache_.end()) return it->second;
  require(a);
  require(b);
  const Resolved& r = table_[static_cast<std::size_t>(a.family) * p_->families.size() + static_cast<std::size_t>(b.family)];
  Vector v;
  if (r.rule && !r.mirrored) {
    v = evaluate_rule(*r.rule, a.degree, b.degree);
  } else if (r.rule) {
    v = evaluate_rule(*r.rule, b.degree, a.degree);
    const bool both_odd = p_->is_super() && parity(a) == 1 && parity(b) == 1;
    if (!both_odd) v = -v;
  }
  return bracket_cache_.emplace(key, std::move(v)).first->second;
}

const Vector& Evaluator::alpha(const Generator& a) {
  const Key key{a.family, a.degree, 0, 0};
  auto it = alpha_cache_.find(key);
  if (it != alpha_cache_.end()) return it->second;
  require(a);
  Vector v;
  if (const AlphaRule* rule = alpha_table_[static_cast<std::size_t>(a.family)]) {
    for (const auto& t : rule->terms) {
      Generator target{t.target, static_cast<int>(t.degree(a.degree, 0))};
      if (!p_->contains(target)) continue;
      v.push(target, t.coeff.evaluate(a.degree, 0));
    }
    v.normalize();
  } else {
    v = Vector(a, QRational(1));
  }
  return alpha_cache_.emplace(key, std::move(v)).first->second;
}

Vector Evaluator::alpha_power(const Generator& a, int k) {
  Vector v = Vector::basis(a);
  for (int i = 0; i < k; ++i) v = alpha_apply(*this, v);
  return v;
}

}  // namespace homlie
