#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "homlie/errors.hpp"
#include "homlie/laurent.hpp"

namespace homlie {

/**
 * Element of Q(q).
 *
 * Stored as num/den where den is a primitive integer polynomial with a
 * nonzero, positive constant term and gcd(num, den) = 1 over Q[q].
 * Laurent polynomials have den == 1. Equality is structural.
 */
class QRational {
 public:
  QRational() : den_(1) {}
  QRational(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRational(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRational(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRational(const LaurentPoly& num, const LaurentPoly& den);

  static QRational q_power(int exp) { return QRational(LaurentPoly::monomial(exp)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }

  QRational inverse() const;
  QRational pow(int e) const;

  QRational& operator+=(const QRational& b);
  QRational& operator-=(const QRational& b);
  QRational& operator*=(const QRational& b);
  QRational& operator/=(const QRational& b);

  friend QRational operator+(QRational a, const QRational& b) { return a += b; }
  friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
  friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
  friend QRational operator/(QRational a, const QRational& b) { return a /= b; }
  friend QRational operator-(const QRational& a);

  bool operator==(const QRational& b) const { return num_ == b.num_ && den_ == b.den_; }
  bool operator!=(const QRational& b) const { return !(*this == b); }

  std::size_t hash() const { return num_.hash() * 1000003u ^ den_.hash(); }

  /// "(q + q^-1)", "(q^3 - 1)/(q - 1)"; constants render bare, e.g. "-3/2".
  std::string to_string() const;

 private:
  struct Canonical {};
  QRational(LaurentPoly num, LaurentPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// [n] = (q^n - q^-n)/(q - q^-1).
QRational q_bracket_number(int n);

/// {n} = (1 - q^n)/(1 - q).
QRational q_brace_number(int n);

/// Exact value at q = q0. Throws ForbiddenSpecialization or PoleAtPoint.
Rational specialize(const QRational& x, const Rational& q0);

}  // namespace homlie

template <>
struct std::hash<homlie::QRational> {
  std::size_t operator()(const homlie::QRational& x) const noexcept { return x.hash(); }
};
