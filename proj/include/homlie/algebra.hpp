#pragma once

#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "homlie/coeff_expr.hpp"
#include "homlie/errors.hpp"
#include "homlie/vector.hpp"

namespace homlie {

enum class SymmetryMode { Lie, Super };

struct Family {
  enum class Domain { AllIntegers, Finite, Ungraded };

  std::string name;
  int parity = 0;
  Domain domain = Domain::AllIntegers;
  std::vector<int> degrees;  // Finite only, sorted

  bool has_degree(int d) const;
};

struct Window {
  int lo = -6;
  int hi = 6;

  bool contains(int d) const { return lo <= d && d <= hi; }
  Window enlarged(int delta) const { return {lo - delta, hi + delta}; }
  std::string to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }
};

/// One summand coeff * Target(degree) of a rule's right-hand side.
struct RuleTerm {
  CoeffExpr coeff;
  int target = 0;
  Affine degree;
};

/**
 * [Left(v0), Right(v1)] = sum of terms, where v0 and v1 are the variables m
 * and n in the order they appear on the left (left_var_is_m says which).
 */
struct BracketRule {
  int left = 0;
  int right = 0;
  bool left_var_is_m = true;
  int shift = 0;
  std::vector<RuleTerm> terms;
};

/// alpha(F(m)) = sum of terms, written in the variable m.
struct AlphaRule {
  int family = 0;
  std::vector<RuleTerm> terms;
};

class AlgebraPresentation {
 public:
  std::string name;
  SymmetryMode mode = SymmetryMode::Lie;
  std::vector<Family> families;
  std::vector<BracketRule> bracket_rules;
  std::vector<AlphaRule> alpha_rules;

  /// Throws ValidationError naming the failed invariant and the rule.
  void validate() const;

  std::optional<int> find_family(const std::string& family) const;
  int family_index(const std::string& family) const;  // throws UnknownGenerator
  Generator generator(const std::string& family, int degree = 0) const;

  bool is_graded() const;
  bool is_super() const { return mode == SymmetryMode::Super; }
  int parity(const Generator& g) const { return families.at(static_cast<std::size_t>(g.family)).parity; }
  bool contains(const Generator& g) const;

  /// Basis elements inside the window (the whole basis for ungraded presentations).
  std::vector<Generator> basis(const Window& w) const;
  bool in_window(const Generator& g, const Window& w) const;

  std::string generator_name(const Generator& g) const;
  std::string vector_name(const Vector& v) const;
};

/// Built-in presentations: "w22q", "wittq", "wittsuperq", "example49".
AlgebraPresentation builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

/**
 * Memoizing evaluator of bracket and alpha on basis elements.
 * Not thread-safe; use one evaluator per thread.
 */
class Evaluator {
 public:
  using Scalar = QRational;
  using Vec = Vector;

  explicit Evaluator(const AlgebraPresentation& p);

  const AlgebraPresentation& presentation() const { return *p_; }
  int parity(const Generator& g) const { return parities_[static_cast<std::size_t>(g.family)]; }

  const Vector& bracket(const Generator& a, const Generator& b);
  const Vector& alpha(const Generator& a);

  /// alpha applied k times.
  Vector alpha_power(const Generator& a, int k);

 private:
  struct Key {
    int fa, da, fb, db;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = static_cast<std::size_t>(k.fa);
      h = h * 131 + static_cast<std::size_t>(k.da + 100000);
      h = h * 131 + static_cast<std::size_t>(k.fb);
      h = h * 131 + static_cast<std::size_t>(k.db + 100000);
      return h;
    }
  };
  struct Resolved {
    const BracketRule* rule = nullptr;
    bool mirrored = false;
  };

  void require(const Generator& g) const;
  Vector evaluate_rule(const BracketRule& rule, int left_degree, int right_degree) const;

  const AlgebraPresentation* p_;
  std::vector<int> parities_;
  std::vector<Resolved> table_;
  std::vector<const AlphaRule*> alpha_table_;
  std::unordered_map<Key, Vector, KeyHash> bracket_cache_;
  std::unordered_map<Key, Vector, KeyHash> alpha_cache_;
};

/// Bilinear extension of the bracket.
template <class A, class B>
auto bracket(Evaluator& ev, const BasicVector<A>& x, const BasicVector<B>& y) {
  using C = decltype(std::declval<A>() * std::declval<B>());
  BasicVector<C> out;
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms())
      for (const auto& [gt, ct] : ev.bracket(gx, gy).terms()) {
        // Multiply the scalars first so a form coefficient is scaled only once.
        if constexpr (std::is_same_v<A, QRational>)
          out.push(gt, (cx * ct) * cy);
        else
          out.push(gt, cx * (cy * ct));
      }
  out.normalize();
  return out;
}

/// Linear extension of alpha.
template <class A>
BasicVector<A> alpha_apply(Evaluator& ev, const BasicVector<A>& x) {
  BasicVector<A> out;
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gt, ct] : ev.alpha(gx).terms()) out.push(gt, cx * ct);
  out.normalize();
  return out;
}

inline Vector bracket(const AlgebraPresentation& p, const Vector& x, const Vector& y) {
  Evaluator ev(p);
  return bracket(ev, x, y);
}

inline Vector alpha_apply(const AlgebraPresentation& p, const Vector& x) {
  Evaluator ev(p);
  return alpha_apply(ev, x);
}

}  // namespace homlie
