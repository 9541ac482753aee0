#pragma once

// Dense Gaussian elimination over Q at a numeric value of q.

#include <cstddef>
#include <vector>

#include "homlie/solver.hpp"

namespace homlie::oracle {

inline std::size_t dense_rank(std::vector<std::vector<Rational>> a, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Nullity of the system with q set to q0.
inline std::size_t dense_nullity(const ConstraintSystem& sys, const Rational& q0) {
  std::vector<std::vector<Rational>> a;
  a.reserve(sys.rows.size());
  for (const auto& row : sys.rows) {
    std::vector<Rational> dense(sys.unknowns);
    for (const auto& [id, c] : row.entries()) dense[static_cast<std::size_t>(id)] = specialize(c, q0);
    a.push_back(std::move(dense));
  }
  return sys.unknowns - dense_rank(std::move(a), sys.unknowns);
}

}  // namespace homlie::oracle
