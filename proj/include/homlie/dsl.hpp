#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlie/algebra.hpp"

namespace homlie {

/**
 * Parses a presentation document:
 *
 *   algebra wittq;
 *   mode lie;
 *   family L parity 0 degrees int;
 *   bracket [L(n), L(m)] = (qnm(m) - qnm(n)) * L(m + n);
 *   alpha L(m) = (1 + q^m) * L(m);
 *
 * Throws SyntaxError or ValidationError.
 */
AlgebraPresentation parse_presentation(const std::string& text);

/// Reads and parses a .alg file.
AlgebraPresentation load_presentation(const std::string& path);

/// Built-in name or path to a .alg file.
AlgebraPresentation resolve_algebra(const std::string& name_or_path);

std::string serialize(const AlgebraPresentation& p);

/// A concrete map written against a presentation.
struct MapSpec {
  enum class Kind { Bilinear, Linear };
  Kind kind = Kind::Bilinear;
  int parity = 0;
  std::optional<int> degree;
  std::vector<BracketRule> bilinear;
  std::vector<AlphaRule> linear;
};

/**
 * Parses a map document:
 *
 *   parity 1;
 *   degree -1;
 *   phi [L(m), L(n)] = (qnm(n) - qnm(m)) * G(m + n - 1);
 *
 * or, for a linear map, rules "f L(m) = ...;". Unlisted pairs map to zero.
 */
MapSpec parse_map(const AlgebraPresentation& p, const std::string& text);
MapSpec load_map(const AlgebraPresentation& p, const std::string& path);

/// Coefficient expression over q, m, n.
CoeffExpr parse_coeff_expr(const std::string& text);

/// Element of Q(q) in the rendering produced by QRational::to_string.
QRational parse_qrational(const std::string& text);

}  // namespace homlie
