#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homlie/checker.hpp"

namespace homlie {

enum class MapKind { Bilinear, Linear };

using MapClass = std::variant<BilinearClass, LinearClass>;

MapKind kind_of(const MapClass& cls);
std::string to_string(const MapClass& cls);
/// Bilinear names first, then linear ones; k is used by alpha-k-derivation.
std::optional<MapClass> parse_map_class(const std::string& s, int k = 1);

/// One unknown coefficient: the coefficient of target in the map evaluated at inputs.
struct Slot {
  std::vector<Generator> inputs;
  Generator target;
};

/**
 * Unknown map of fixed parity whose components shift the grading by one of
 * the given degrees. Unknown ids are the indices into slots, ordered by
 * (input families, input degrees, target family, target degree).
 */
struct HomogeneousAnsatz {
  MapClass cls;
  std::vector<int> degrees;
  int parity = 0;
  Window window;
  std::vector<Slot> slots;

  MapKind kind() const { return kind_of(cls); }
  std::size_t size() const { return slots.size(); }
  /// Unknown ids whose inputs are exactly these generators.
  const std::vector<int>& slots_for(const std::vector<Generator>& inputs) const;

  std::map<std::vector<Generator>, std::vector<int>> by_inputs;
};

/// Throws ClassModeMismatch for a super bilinear class on a lie presentation.
HomogeneousAnsatz build_ansatz(const AlgebraPresentation& p, const MapClass& cls, int s, int parity, const Window& w);
HomogeneousAnsatz build_ansatz(const AlgebraPresentation& p, const MapClass& cls, std::vector<int> degrees, int parity,
                               const Window& w);

struct Provenance {
  std::string equation;
  std::vector<Generator> inputs;
  Generator target;
};

struct ConstraintSystem {
  std::size_t unknowns = 0;
  std::vector<LinearForm> rows;
  std::vector<Provenance> provenance;
};

/// Defining equations of the ansatz class on all instances whose map arguments lie in w.
ConstraintSystem build_system(const AlgebraPresentation& p, const HomogeneousAnsatz& a, const Window& w);
ConstraintSystem build_system(const AlgebraPresentation& p, const HomogeneousAnsatz& a);

/// Dense coefficient vector indexed by unknown id.
using Assignment = std::vector<QRational>;

struct SolutionSpace {
  std::size_t unknowns = 0;
  std::vector<Assignment> basis;

  std::size_t dim() const { return basis.size(); }
};

struct NullspaceOptions {
  /// Rank bound at a random specialization modulo a prime; skips exact work when the bound is 0.
  bool modular_prefilter = true;
  unsigned long seed = 1;
};

SolutionSpace nullspace(const ConstraintSystem& sys, const NullspaceOptions& opts = {});

/// Reduced row echelon basis of the span.
std::vector<Assignment> span_basis(std::vector<Assignment> vectors);
std::size_t rank(const std::vector<Assignment>& vectors);

/// Solutions on w that extend to solutions on w enlarged by delta.
struct StableSolution {
  HomogeneousAnsatz ansatz;  // on w
  SolutionSpace space;
  std::size_t window_dim = 0;    // nullity on w
  std::size_t enlarged_dim = 0;  // nullity on the enlarged window
};

struct StableOptions {
  /// Also solve the system on w alone and report its nullity.
  bool window_nullity = false;
  NullspaceOptions nullspace;
};

StableSolution stable_solve(const AlgebraPresentation& p, const MapClass& cls, int s, int parity, const Window& w,
                            int delta, const StableOptions& opts = {});
StableSolution stable_solve(const AlgebraPresentation& p, const MapClass& cls, std::vector<int> degrees, int parity,
                            const Window& w, int delta, const StableOptions& opts = {});

/// Unknowns not listed in the ansatz are zero; arguments outside the window map to zero.
ConcreteBilinearMap to_bilinear_map(const HomogeneousAnsatz& a, const Assignment& x);
ConcreteLinearMap to_linear_map(const HomogeneousAnsatz& a, const Assignment& x);

/// Restriction of an assignment on a larger ansatz to the slots of a smaller one.
Assignment restrict_assignment(const HomogeneousAnsatz& from, const Assignment& x, const HomogeneousAnsatz& to);

/// Checks a solution against its class with the checker.
CheckReport check_solution(const AlgebraPresentation& p, const HomogeneousAnsatz& a, const Assignment& x);

}  // namespace homlie
