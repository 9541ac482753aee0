#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homlie/qrational.hpp"

namespace homlie {

/// c + a*m + b*n with integer coefficients.
struct Affine {
  long c = 0;
  long m = 0;
  long n = 0;

  long operator()(long mv, long nv) const { return c + m * mv + n * nv; }
  bool is_constant() const { return m == 0 && n == 0; }
  bool operator==(const Affine&) const = default;

  Affine operator+(const Affine& o) const { return {c + o.c, m + o.m, n + o.n}; }
  Affine operator-(const Affine& o) const { return {c - o.c, m - o.m, n - o.n}; }
  Affine operator-() const { return {-c, -m, -n}; }
  Affine scaled(long k) const { return {c * k, m * k, n * k}; }

  std::string to_string() const;
};

/**
 * Structure-constant expression in q and the degree variables m, n.
 * Immutable; nodes are shared.
 */
class CoeffExpr {
 public:
  enum class Kind { Integer, Q, VarM, VarN, Add, Sub, Mul, Div, Neg, Pow, Qbr, Qnm };

  CoeffExpr();  // the integer 0

  static CoeffExpr integer(const Integer& v);
  static CoeffExpr q();
  static CoeffExpr var_m();
  static CoeffExpr var_n();
  static CoeffExpr pow(const CoeffExpr& base, const Affine& exponent);
  static CoeffExpr qbr(const Affine& arg);
  static CoeffExpr qnm(const Affine& arg);

  friend CoeffExpr operator+(const CoeffExpr& a, const CoeffExpr& b);
  friend CoeffExpr operator-(const CoeffExpr& a, const CoeffExpr& b);
  friend CoeffExpr operator*(const CoeffExpr& a, const CoeffExpr& b);
  friend CoeffExpr operator/(const CoeffExpr& a, const CoeffExpr& b);
  friend CoeffExpr operator-(const CoeffExpr& a);

  Kind kind() const;
  bool uses_degree_vars() const;

  /// Throws DivisionByZero when a subexpression divides by zero.
  QRational evaluate(long m, long n) const;

  /// Fully parenthesized where needed; parseable by the presentation parser.
  std::string to_string() const;

  struct Node;

 private:
  explicit CoeffExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static std::string render(const Node& node, int parent_prec);

  std::shared_ptr<const Node> node_;
};

}  // namespace homlie
