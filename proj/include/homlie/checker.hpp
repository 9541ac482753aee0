#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homlie/algebra.hpp"

namespace homlie {

enum class BilinearClass { Biderivation, SuperBiderivation, AlphaBiderivation, AlphaSuperBiderivation };

enum class LinearClassKind { Derivation, SuperDerivation, AlphaKDerivation, CommutingMap };

struct LinearClass {
  LinearClassKind kind = LinearClassKind::Derivation;
  int k = 0;  // AlphaKDerivation only

  static LinearClass derivation() { return {LinearClassKind::Derivation, 0}; }
  static LinearClass super_derivation() { return {LinearClassKind::SuperDerivation, 0}; }
  static LinearClass alpha_k_derivation(int k) { return {LinearClassKind::AlphaKDerivation, k}; }
  static LinearClass commuting_map() { return {LinearClassKind::CommutingMap, 0}; }
};

bool is_super_class(BilinearClass c);
bool has_inner_alpha(BilinearClass c);
std::string to_string(BilinearClass c);
std::string to_string(const LinearClass& c);
/// Accepts the CLI spellings, e.g. "super-biderivation", "alpha_k_derivation".
std::optional<BilinearClass> parse_bilinear_class(const std::string& s);
std::optional<LinearClass> parse_linear_class(const std::string& s, int k = 1);

struct Witness {
  std::string identity;
  std::vector<Generator> inputs;
  Vector lhs;
  Vector rhs;
};

struct CheckReport {
  std::vector<Witness> witnesses;
  std::size_t instances = 0;

  bool passed() const { return witnesses.empty(); }
  void merge(CheckReport other);
};

/// Linear map given on basis elements.
class ConcreteLinearMap {
 public:
  using Rule = std::function<Vector(const Generator&)>;

  ConcreteLinearMap() = default;
  ConcreteLinearMap(int parity, Rule rule) : parity_(parity), rule_(std::move(rule)) {}

  /// Generators missing from the table map to zero.
  static ConcreteLinearMap from_table(int parity, std::map<Generator, Vector> table);
  static ConcreteLinearMap from_function(int parity, Rule rule) { return {parity, std::move(rule)}; }
  /// Closed form per family: each alpha-style rule sends F(m) to its terms.
  static ConcreteLinearMap from_rules(const AlgebraPresentation& p, int parity, std::vector<AlphaRule> rules);

  int parity() const { return parity_; }
  Vector operator()(const Generator& g) const { return rule_ ? rule_(g) : Vector(); }

 private:
  int parity_ = 0;
  Rule rule_;
};

/// Bilinear map given on pairs of basis elements.
class ConcreteBilinearMap {
 public:
  using Rule = std::function<Vector(const Generator&, const Generator&)>;

  ConcreteBilinearMap() = default;
  ConcreteBilinearMap(int parity, std::optional<int> degree, Rule rule)
      : parity_(parity), degree_(degree), rule_(std::move(rule)) {}

  static ConcreteBilinearMap from_table(int parity, std::map<std::pair<Generator, Generator>, Vector> table);
  static ConcreteBilinearMap from_function(int parity, std::optional<int> degree, Rule rule) {
    return {parity, degree, std::move(rule)};
  }
  /// Closed form per family pair, written like bracket rules; unlisted pairs map to zero.
  static ConcreteBilinearMap from_rules(const AlgebraPresentation& p, int parity, std::optional<int> degree,
                                        std::vector<BracketRule> rules);

  int parity() const { return parity_; }
  std::optional<int> degree() const { return degree_; }
  Vector operator()(const Generator& a, const Generator& b) const { return rule_ ? rule_(a, b) : Vector(); }

 private:
  int parity_ = 0;
  std::optional<int> degree_;
  Rule rule_;
};

/// Skew-symmetry on window pairs and the Hom-Jacobi identity on window triples.
CheckReport check_axioms(const AlgebraPresentation& p, const Window& w);

/// alpha([x,y]) = [alpha(x), alpha(y)] on window pairs.
CheckReport check_multiplicative(const AlgebraPresentation& p, const Window& w);

/// Throws ClassModeMismatch for a super class on a lie presentation.
CheckReport check_bilinear_class(const AlgebraPresentation& p, const ConcreteBilinearMap& phi, BilinearClass cls,
                                 const Window& w);

CheckReport check_linear_class(const AlgebraPresentation& p, const ConcreteLinearMap& f, const LinearClass& cls,
                               const Window& w);

/// phi(x,y) = -(-1)^{|x||y|} phi(y,x) on window pairs.
CheckReport check_skew_symmetry(const AlgebraPresentation& p, const ConcreteBilinearMap& phi, const Window& w);

/// Human-readable summary of a witness.
std::string describe(const AlgebraPresentation& p, const Witness& w);

}  // namespace homlie
