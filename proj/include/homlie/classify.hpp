#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homlie/solver.hpp"

namespace homlie {

/// A named bilinear map of fixed parity and degree.
struct KnownMap {
  std::string name;
  ConcreteBilinearMap map;
};

/// phi_ad(x, y) = [x, y].
KnownMap phi_ad(const AlgebraPresentation& p);
/// phi_0(L_m, L_n) = [n - m] W_{m+n}, zero on the other pairs. Needs families L and W.
KnownMap phi_0(const AlgebraPresentation& p);
/// phi_minus1(L_m, L_n) = ({n} - {m}) G_{m+n-1}, zero on the other pairs. Needs families L and G.
KnownMap phi_minus1(const AlgebraPresentation& p);
/// By name: "phi_ad", "phi_0" or "phi_minus1".
KnownMap known_map(const AlgebraPresentation& p, const std::string& name);

/// Coefficient table of a bilinear map on the slots of an ansatz.
Assignment restrict_known(const HomogeneousAnsatz& a, const ConcreteBilinearMap& phi);

struct DecompositionReport {
  std::vector<std::string> knowns;
  /// Per basis vector of the space: coefficients on the knowns, or nullopt outside their span.
  std::vector<std::optional<std::map<std::string, QRational>>> coefficients;
  /// dim(span(space + knowns)) - dim(span(knowns))
  std::size_t residual_dim = 0;
  /// dim(span(knowns)) - dim(space intersected with span(knowns))
  std::size_t unmatched_knowns = 0;
};

/// Throws DependentKnowns when the restricted knowns are linearly dependent.
DecompositionReport decompose(const HomogeneousAnsatz& a, const SolutionSpace& space,
                              const std::vector<KnownMap>& knowns);

struct CommutingOptions {
  int s_lo = -4;
  int s_hi = 4;
  StableOptions stable;
};

/// Linear commuting maps of one parity: each parameter scales one basis map.
struct CommutingFamily {
  int parity = 0;
  std::vector<std::string> parameters;
  HomogeneousAnsatz ansatz;  // all degrees that carry solutions
  std::vector<Assignment> basis;
  std::vector<int> degrees;  // degree of each basis map

  std::size_t size() const { return basis.size(); }
  /// sum_i values[i] * basis[i]
  ConcreteLinearMap instance(const std::vector<QRational>& values) const;
  ConcreteLinearMap basis_map(std::size_t i) const;
  /// One line per family of generators, e.g. "f(L_m) = lambda L_m + mu W_m".
  std::vector<std::string> describe(const AlgebraPresentation& p) const;
};

/// Stable solutions of the commuting-map conditions for every degree in the scan range.
CommutingFamily solve_commuting_maps(const AlgebraPresentation& p, int parity, const Window& w, int delta,
                                     const CommutingOptions& opts = {});

enum class CorollaryProperty { Automorphism, Derivation, SuperDerivation };

std::string to_string(CorollaryProperty c);
std::optional<CorollaryProperty> parse_corollary_property(const std::string& s);

/// Value of a parameter: constant plus a combination of the free parameters.
struct ParameterValue {
  QRational constant;
  std::map<int, QRational> free;  // parameter index -> coefficient

  bool is_constant() const { return free.empty(); }
};

struct ParameterPoint {
  std::vector<ParameterValue> values;  // one per parameter
  /// For automorphisms: the map is injective on the window for generic free parameters.
  bool admissible = true;
};

struct CorollaryReport {
  CorollaryProperty property = CorollaryProperty::Automorphism;
  std::vector<std::string> parameters;
  std::size_t constraints = 0;
  /// All solutions of the collected constraints, admissible or not.
  std::vector<ParameterPoint> points;

  std::vector<ParameterPoint> admissible() const;
};

/**
 * Substitutes the family into f([x,y]) = [f(x), f(y)] (automorphism) or
 * f([x,y]) = [f(x), y] + (-1)^{|f||x|} [x, f(y)] on interior pairs and solves
 * the resulting constraints of degree at most 2 in the parameters.
 * Throws NonQuadraticConstraint when a constraint cannot be split into linear factors.
 */
CorollaryReport corollary_check(const AlgebraPresentation& p, const CommutingFamily& family, CorollaryProperty property,
                                const Window& w);

std::string to_string(const ParameterPoint& point, const std::vector<std::string>& parameters);

}  // namespace homlie
