#include "homlie/solver.hpp"

#include <random>
#include <stdexcept>
#include <unordered_map>

#include "common/identities.hpp"
#include "homlie/errors.hpp"
#include "solver/elimination.hpp"

namespace homlie {

namespace {

using detail::LaurentRing;
using detail::ModP;
using detail::ModRing;
using detail::SparseElimination;
using detail::SparseRow;

std::uint64_t key_of(const Generator& a, const Generator& b) {
  auto part = [](const Generator& g) {
    return (static_cast<std::uint64_t>(g.family) << 20) | static_cast<std::uint64_t>(g.degree + (1 << 19));
  };
  return (part(a) << 32) | part(b);
}

std::uint64_t key_of(const Generator& a) { return key_of(a, Generator{0, 0}); }

std::vector<int> ansatz_degrees(const AlgebraPresentation& p, std::vector<int> degrees) {
  if (!p.is_graded()) return {0};
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  return degrees;
}

// Clears denominators: a primitive row with integer Laurent coefficients.
SparseRow<LaurentPoly> integer_row(const LinearForm& f) {
  LaurentPoly l(1);
  for (const auto& [id, c] : f.entries()) {
    if (c.den().is_one()) continue;
    const LaurentPoly g = gcd(l, c.den());
    l = *divide_exact(l * c.den(), g);
  }
  SparseRow<LaurentPoly> row;
  row.reserve(f.size());
  Integer dl = 1;
  for (const auto& [id, c] : f.entries()) {
    LaurentPoly v = c.den().is_one() ? c.num() * l : c.num() * *divide_exact(l, c.den());
    const Integer d = denominator_lcm(v);
    mpz_lcm(dl.get_mpz_t(), dl.get_mpz_t(), d.get_mpz_t());
    row.push_back({id, std::move(v)});
  }
  if (dl != 1)
    for (auto& e : row) e.val = e.val.scaled(Rational(dl));
  return row;
}

class PowerTable {
 public:
  explicit PowerTable(ModP q0) : q0_(q0), inv_(q0.inverse()) {}

  ModP operator()(int e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    const ModP v = e >= 0 ? q0_.pow(static_cast<std::uint64_t>(e)) : inv_.pow(static_cast<std::uint64_t>(-e));
    return cache_.emplace(e, v).first->second;
  }

 private:
  ModP q0_, inv_;
  std::unordered_map<int, ModP> cache_;
};

ModP specialize_mod(const LaurentPoly& x, PowerTable& pw) {
  ModP acc;
  for (const auto& t : x.terms()) acc = acc + ModP::from_integer(t.coeff.get_num()) * pw(t.exp);
  return acc;
}

struct ExactResult {
  std::vector<int> free_cols;
  std::vector<std::vector<std::pair<int, QRational>>> expr;
};

ExactResult exact_solve(std::size_t ncols, const std::vector<SparseRow<LaurentPoly>>& rows,
                        const std::vector<char>* fixed_zero) {
  SparseElimination<LaurentRing> elim(ncols, LaurentRing{});
  for (const auto& r : rows) {
    if (!fixed_zero) {
      elim.add_row(r);
      continue;
    }
    SparseRow<LaurentPoly> kept;
    for (const auto& e : r)
      if (!(*fixed_zero)[static_cast<std::size_t>(e.col)]) kept.push_back(e);
    elim.add_row(std::move(kept));
  }
  elim.run();
  ExactResult out;
  out.expr = detail::solve_columns<QRational>(
      ncols, elim.pivots(), [](const LaurentPoly& x) { return QRational(x); }, &out.free_cols, fixed_zero);
  return out;
}

std::vector<Assignment> basis_from(std::size_t ncols, const ExactResult& r) {
  std::unordered_map<int, std::size_t> index;
  for (std::size_t k = 0; k < r.free_cols.size(); ++k) index[r.free_cols[k]] = k;
  std::vector<Assignment> basis(r.free_cols.size(), Assignment(ncols));
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& [f, v] : r.expr[c]) basis[index.at(f)][c] = v;
  return basis;
}

// Calls sink(equation, inputs, target, form) for every nonzero coefficient of every defining equation.
template <class Ev, class Sink>
void instantiate(const AlgebraPresentation& p, Ev& ev, const HomogeneousAnsatz& a, const Window& w, Sink&& sink) {
  using S = typename Ev::Scalar;
  using Form = BasicLinearForm<S>;
  using FVec = BasicVector<Form>;
  const auto basis = p.basis(w);
  std::unordered_map<std::uint64_t, FVec> table;
  for (const auto& [inputs, ids] : a.by_inputs) {
    bool inside = true;
    for (const auto& g : inputs) inside = inside && p.in_window(g, w);
    if (!inside) continue;
    FVec v;
    for (int id : ids) v.push(a.slots[static_cast<std::size_t>(id)].target, Form::unknown(id));
    v.normalize();
    table.emplace(inputs.size() == 2 ? key_of(inputs[0], inputs[1]) : key_of(inputs[0]), std::move(v));
  }
  auto phi = [&](const Generator& x, const Generator& y) -> const FVec* {
    auto it = table.find(key_of(x, y));
    return it == table.end() ? nullptr : &it->second;
  };
  auto f = [&](const Generator& x) -> const FVec* {
    auto it = table.find(key_of(x));
    return it == table.end() ? nullptr : &it->second;
  };
  auto emit = [&](const std::string& name, const std::vector<Generator>& inputs, const FVec& lhs, const FVec& rhs) {
    FVec diff = lhs - rhs;
    for (auto& [g, form] : diff.terms())
      if (!form.is_zero()) sink(name, inputs, g, form);
  };

  if (const auto* b = std::get_if<BilinearClass>(&a.cls)) {
    detail::bilinear_instances<Form>(ev, basis, {is_super_class(*b), has_inner_alpha(*b), a.parity}, phi, emit);
  } else {
    const auto& l = std::get<LinearClass>(a.cls);
    switch (l.kind) {
      case LinearClassKind::Derivation:
      case LinearClassKind::SuperDerivation:
        detail::derivation_instances<Form>(ev, basis, {0, a.parity}, f, emit);
        break;
      case LinearClassKind::AlphaKDerivation:
        detail::derivation_instances<Form>(ev, basis, {l.k, a.parity}, f, emit);
        break;
      case LinearClassKind::CommutingMap:
        detail::commuting_instances<Form>(ev, basis, p.is_super(), f, emit);
        break;
    }
  }
}

struct BadSpecialization {};

// The algebra with q specialized to a residue modulo ModP::P.
class ModEvaluator {
 public:
  using Scalar = ModP;
  using Vec = BasicVector<ModP>;

  ModEvaluator(const AlgebraPresentation& p, ModP q0) : ev_(p), pw_(q0) {}

  int parity(const Generator& g) const { return ev_.parity(g); }
  const Vec& bracket(const Generator& a, const Generator& b) {
    const std::uint64_t k = key_of(a, b);
    auto it = brackets_.find(k);
    if (it != brackets_.end()) return it->second;
    return brackets_.emplace(k, specialize(ev_.bracket(a, b))).first->second;
  }
  const Vec& alpha(const Generator& a) {
    const std::uint64_t k = key_of(a);
    auto it = alphas_.find(k);
    if (it != alphas_.end()) return it->second;
    return alphas_.emplace(k, specialize(ev_.alpha(a))).first->second;
  }
  Vec alpha_power(const Generator& a, int k) {
    Vec v = Vec::basis(a);
    for (int i = 0; i < k; ++i) v = detail::twist(*this, v);
    return v;
  }

 private:
  Vec specialize(const Vector& x) {
    Vec out;
    for (const auto& [g, c] : x.terms()) {
      const ModP d = value(c.den());
      if (d.is_zero()) throw BadSpecialization{};
      out.push(g, value(c.num()) / d);
    }
    out.normalize();
    return out;
  }
  ModP value(const LaurentPoly& x) {
    ModP acc;
    for (const auto& t : x.terms()) acc += ModP::from_rational(t.coeff) * pw_(t.exp);
    return acc;
  }

  Evaluator ev_;
  PowerTable pw_;
  std::unordered_map<std::uint64_t, Vec> brackets_, alphas_;
};

struct ModularBound {
  std::size_t nullity = 0;
  std::vector<char> zero;  // columns forced to zero at the specialization
};

ModularBound bound_from(std::size_t n, SparseElimination<ModRing>& mod) {
  mod.run();
  std::vector<int> free_mod;
  const auto expr = detail::solve_columns<ModP>(n, mod.pivots(), [](const ModP& x) { return x; }, &free_mod);
  ModularBound out;
  out.nullity = free_mod.size();
  out.zero.assign(n, 0);
  for (std::size_t c = 0; c < n; ++c) out.zero[c] = expr[c].empty() ? 1 : 0;
  return out;
}

ModP random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(2, ModP::P - 2);
  return ModP(pick(rng));
}

// Nullity of the system of a at a random specialization, built without exact arithmetic.
ModularBound modular_bound(const AlgebraPresentation& p, const HomogeneousAnsatz& a, unsigned long seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    try {
      ModEvaluator ev(p, random_point(rng));
      SparseElimination<ModRing> mod(a.size(), ModRing{});
      instantiate(p, ev, a, a.window,
                  [&](const std::string&, const std::vector<Generator>&, const Generator&, const BasicLinearForm<ModP>& f) {
                    SparseRow<ModP> row;
                    row.reserve(f.size());
                    for (const auto& [id, c] : f.entries()) row.push_back({id, c});
                    mod.add_row(std::move(row));
                  });
      return bound_from(a.size(), mod);
    } catch (const BadSpecialization&) {
    }
  }
}

// Exact nullspace given a specialized bound; see nullspace().
SolutionSpace exact_nullspace(std::size_t n, const std::vector<SparseRow<LaurentPoly>>& rows,
                              const ModularBound* bound) {
  SolutionSpace out;
  out.unknowns = n;
  if (bound) {
    // The nullity at a specialization bounds the generic nullity from above.
    if (bound->nullity == 0) return out;
    ExactResult reduced = exact_solve(n, rows, &bound->zero);
    if (reduced.free_cols.size() == bound->nullity) {
      out.basis = basis_from(n, reduced);
      return out;
    }
    if (reduced.free_cols.size() > bound->nullity)
      throw std::logic_error("nullspace: exact nullity exceeds the specialized bound");
  }
  out.basis = basis_from(n, exact_solve(n, rows, nullptr));
  return out;
}

}  // namespace

MapKind kind_of(const MapClass& cls) { return cls.index() == 0 ? MapKind::Bilinear : MapKind::Linear; }

std::string to_string(const MapClass& cls) {
  return std::visit([](const auto& c) { return homlie::to_string(c); }, cls);
}

std::optional<MapClass> parse_map_class(const std::string& s, int k) {
  if (auto b = parse_bilinear_class(s)) return MapClass(*b);
  if (auto l = parse_linear_class(s, k)) return MapClass(*l);
  return std::nullopt;
}

const std::vector<int>& HomogeneousAnsatz::slots_for(const std::vector<Generator>& inputs) const {
  static const std::vector<int> none;
  auto it = by_inputs.find(inputs);
  return it == by_inputs.end() ? none : it->second;
}

HomogeneousAnsatz build_ansatz(const AlgebraPresentation& p, const MapClass& cls, int s, int parity, const Window& w) {
  return build_ansatz(p, cls, std::vector<int>{s}, parity, w);
}

HomogeneousAnsatz build_ansatz(const AlgebraPresentation& p, const MapClass& cls, std::vector<int> degrees, int parity,
                               const Window& w) {
  if (const auto* b = std::get_if<BilinearClass>(&cls); b && is_super_class(*b) && !p.is_super())
    throw ClassModeMismatch(to_string(*b) + " requires a super presentation");
  HomogeneousAnsatz a;
  a.cls = cls;
  a.degrees = ansatz_degrees(p, std::move(degrees));
  a.parity = parity;
  a.window = w;
  const auto basis = p.basis(w);
  const int nf = static_cast<int>(p.families.size());
  const bool graded = p.is_graded();

  auto add_targets = [&](std::vector<Generator> inputs, int input_parity, int input_degree) {
    std::vector<int>& ids = a.by_inputs[inputs];
    for (int ft = 0; ft < nf; ++ft) {
      if (p.families[static_cast<std::size_t>(ft)].parity != (input_parity + parity) % 2) continue;
      for (int s : a.degrees) {
        Generator target{ft, graded ? input_degree + s : 0};
        if (!p.contains(target)) continue;
        ids.push_back(static_cast<int>(a.slots.size()));
        a.slots.push_back({inputs, target});
      }
    }
  };

  if (kind_of(cls) == MapKind::Bilinear) {
    for (int fa = 0; fa < nf; ++fa)
      for (int fb = 0; fb < nf; ++fb)
        for (const auto& x : basis) {
          if (x.family != fa) continue;
          for (const auto& y : basis)
            if (y.family == fb) add_targets({x, y}, p.parity(x) + p.parity(y), x.degree + y.degree);
        }
  } else {
    for (int fa = 0; fa < nf; ++fa)
      for (const auto& x : basis)
        if (x.family == fa) add_targets({x}, p.parity(x), x.degree);
  }
  return a;
}

ConstraintSystem build_system(const AlgebraPresentation& p, const HomogeneousAnsatz& a) {
  return build_system(p, a, a.window);
}

ConstraintSystem build_system(const AlgebraPresentation& p, const HomogeneousAnsatz& a, const Window& w) {
  Evaluator ev(p);
  ConstraintSystem sys;
  sys.unknowns = a.size();
  instantiate(p, ev, a, w, [&](const std::string& name, const std::vector<Generator>& inputs, const Generator& g,
                               const LinearForm& form) {
    sys.rows.push_back(form);
    sys.provenance.push_back({name, inputs, g});
  });
  return sys;
}

SolutionSpace nullspace(const ConstraintSystem& sys, const NullspaceOptions& opts) {
  const std::size_t n = sys.unknowns;
  std::vector<SparseRow<LaurentPoly>> rows;
  rows.reserve(sys.rows.size());
  for (const auto& f : sys.rows) rows.push_back(integer_row(f));
  if (!opts.modular_prefilter) return exact_nullspace(n, rows, nullptr);

  std::mt19937_64 rng(opts.seed);
  PowerTable pw(random_point(rng));
  SparseElimination<ModRing> mod(n, ModRing{});
  for (const auto& r : rows) {
    SparseRow<ModP> m;
    m.reserve(r.size());
    for (const auto& e : r) {
      const ModP v = specialize_mod(e.val, pw);
      if (!v.is_zero()) m.push_back({e.col, v});
    }
    mod.add_row(std::move(m));
  }
  const ModularBound bound = bound_from(n, mod);
  return exact_nullspace(n, rows, &bound);
}

std::vector<Assignment> span_basis(std::vector<Assignment> vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = vectors.front().size();
  SparseElimination<LaurentRing> elim(n, LaurentRing{});
  for (const auto& v : vectors) {
    LinearForm f;
    for (std::size_t c = 0; c < n; ++c)
      if (!v[c].is_zero()) f += LinearForm::unknown(static_cast<int>(c), v[c]);
    elim.add_row(integer_row(f));
  }
  elim.run();
  const auto& pivots = elim.pivots();
  // Reduce to a basis with a unit at each pivot column and zeros at the other pivot columns.
  std::vector<std::map<int, QRational>> rows(pivots.size());
  for (std::size_t i = pivots.size(); i-- > 0;) {
    auto& row = rows[i];
    for (const auto& e : pivots[i].row) row.emplace(e.col, QRational(e.val));
    for (std::size_t k = i + 1; k < pivots.size(); ++k) {
      auto it = row.find(pivots[k].col);
      if (it == row.end()) continue;
      const QRational c = it->second;
      for (const auto& [col, v] : rows[k]) {
        QRational& slot = row[col];
        slot -= c * v;
        if (slot.is_zero()) row.erase(col);
      }
    }
    const QRational inv = row.at(pivots[i].col).inverse();
    for (auto& [col, v] : row) v *= inv;
  }
  std::vector<std::size_t> order(pivots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a].col < pivots[b].col; });
  std::vector<Assignment> out;
  for (std::size_t i : order) {
    Assignment v(n);
    for (const auto& [col, c] : rows[i]) v[static_cast<std::size_t>(col)] = c;
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const std::vector<Assignment>& vectors) { return span_basis(vectors).size(); }

Assignment restrict_assignment(const HomogeneousAnsatz& from, const Assignment& x, const HomogeneousAnsatz& to) {
  Assignment out(to.size());
  for (const auto& [inputs, ids] : to.by_inputs) {
    const auto& src = from.slots_for(inputs);
    std::size_t j = 0;
    for (int id : ids) {
      const Generator& target = to.slots[static_cast<std::size_t>(id)].target;
      while (j < src.size() && from.slots[static_cast<std::size_t>(src[j])].target < target) ++j;
      if (j < src.size() && from.slots[static_cast<std::size_t>(src[j])].target == target)
        out[static_cast<std::size_t>(id)] = x[static_cast<std::size_t>(src[j])];
    }
  }
  return out;
}

StableSolution stable_solve(const AlgebraPresentation& p, const MapClass& cls, int s, int parity, const Window& w,
                            int delta, const StableOptions& opts) {
  return stable_solve(p, cls, std::vector<int>{s}, parity, w, delta, opts);
}

StableSolution stable_solve(const AlgebraPresentation& p, const MapClass& cls, std::vector<int> degrees, int parity,
                            const Window& w, int delta, const StableOptions& opts) {
  if (delta < 1) throw std::invalid_argument("stable_solve: delta must be positive");
  StableSolution out;
  out.ansatz = build_ansatz(p, cls, degrees, parity, w);
  const Window big = p.is_graded() ? w.enlarged(delta) : w;
  const HomogeneousAnsatz enlarged = build_ansatz(p, cls, degrees, parity, big);
  if (opts.window_nullity) out.window_dim = nullspace(build_system(p, out.ansatz), opts.nullspace).dim();
  out.space.unknowns = out.ansatz.size();

  std::optional<ModularBound> bound;
  if (opts.nullspace.modular_prefilter) {
    bound = modular_bound(p, enlarged, opts.nullspace.seed);
    if (bound->nullity == 0) return out;
  }
  const ConstraintSystem wide_sys = build_system(p, enlarged);
  std::vector<SparseRow<LaurentPoly>> rows;
  rows.reserve(wide_sys.rows.size());
  for (const auto& f : wide_sys.rows) rows.push_back(integer_row(f));
  const SolutionSpace wide = exact_nullspace(enlarged.size(), rows, bound ? &*bound : nullptr);
  out.enlarged_dim = wide.dim();

  std::vector<Assignment> restricted;
  for (const auto& v : wide.basis) restricted.push_back(restrict_assignment(enlarged, v, out.ansatz));
  std::vector<Assignment> basis = span_basis(std::move(restricted));
  if (basis.empty()) return out;

  // Intersect with the solutions on w.
  const ConstraintSystem local = build_system(p, out.ansatz);
  ConstraintSystem combo;
  combo.unknowns = basis.size();
  for (const auto& row : local.rows) {
    LinearForm f;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      QRational v = row.evaluate([&](int id) { return basis[j][static_cast<std::size_t>(id)]; });
      if (!v.is_zero()) f += LinearForm::unknown(static_cast<int>(j), v);
    }
    if (!f.is_zero()) combo.rows.push_back(std::move(f));
  }
  if (!combo.rows.empty()) {
    std::vector<Assignment> kept;
    for (const auto& c : nullspace(combo, opts.nullspace).basis) {
      Assignment v(out.ansatz.size());
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (!c[j].is_zero())
          for (std::size_t k = 0; k < v.size(); ++k) v[k] += c[j] * basis[j][k];
      kept.push_back(std::move(v));
    }
    basis = span_basis(std::move(kept));
  }
  out.space.basis = std::move(basis);
  return out;
}

ConcreteBilinearMap to_bilinear_map(const HomogeneousAnsatz& a, const Assignment& x) {
  std::map<std::pair<Generator, Generator>, Vector> table;
  for (const auto& [inputs, ids] : a.by_inputs) {
    if (inputs.size() != 2) continue;
    Vector v;
    for (int id : ids) {
      const QRational& c = x[static_cast<std::size_t>(id)];
      if (!c.is_zero()) v.push(a.slots[static_cast<std::size_t>(id)].target, c);
    }
    v.normalize();
    if (!v.is_zero()) table.emplace(std::make_pair(inputs[0], inputs[1]), std::move(v));
  }
  auto m = ConcreteBilinearMap::from_table(a.parity, std::move(table));
  const std::optional<int> degree = a.degrees.size() == 1 ? std::optional<int>(a.degrees.front()) : std::nullopt;
  return ConcreteBilinearMap(a.parity, degree, [m](const Generator& g, const Generator& h) { return m(g, h); });
}

ConcreteLinearMap to_linear_map(const HomogeneousAnsatz& a, const Assignment& x) {
  std::map<Generator, Vector> table;
  for (const auto& [inputs, ids] : a.by_inputs) {
    if (inputs.size() != 1) continue;
    Vector v;
    for (int id : ids) {
      const QRational& c = x[static_cast<std::size_t>(id)];
      if (!c.is_zero()) v.push(a.slots[static_cast<std::size_t>(id)].target, c);
    }
    v.normalize();
    if (!v.is_zero()) table.emplace(inputs[0], std::move(v));
  }
  return ConcreteLinearMap::from_table(a.parity, std::move(table));
}

CheckReport check_solution(const AlgebraPresentation& p, const HomogeneousAnsatz& a, const Assignment& x) {
  if (const auto* b = std::get_if<BilinearClass>(&a.cls)) return check_bilinear_class(p, to_bilinear_map(a, x), *b, a.window);
  return check_linear_class(p, to_linear_map(a, x), std::get<LinearClass>(a.cls), a.window);
}

}  // namespace homlie
