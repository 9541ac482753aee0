#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homlie {

using Integer = mpz_class;
using Rational = mpq_class;

/**
 * Sparse Laurent polynomial in q with rational coefficients.
 *
 * Terms are kept sorted by strictly increasing exponent and no stored
 * coefficient is zero, so the zero polynomial is the empty term list and
 * two polynomials are equal iff their term lists are identical.
 */
class LaurentPoly {
 public:
  struct Term {
    int exp;
    Rational coeff;

    bool operator==(const Term& other) const {
      return exp == other.exp && coeff == other.coeff;
    }
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& c);

  static LaurentPoly monomial(int exp, const Rational& coeff = 1);
  /// Builds from arbitrary (possibly repeated, unsorted, zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Lowest / highest exponent. Undefined for the zero polynomial.
  int low_degree() const { return terms_.front().exp; }
  int high_degree() const { return terms_.back().exp; }
  int degree_span() const { return is_zero() ? 0 : high_degree() - low_degree(); }

  Rational coefficient(int exp) const;
  /// True when every coefficient is an integer.
  bool is_integral() const;

  LaurentPoly shifted(int by) const;
  LaurentPoly scaled(const Rational& c) const;
  Rational evaluate(const Rational& q0) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);

  bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }
  bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

  std::size_t hash() const;

  /// Renders in descending exponent order, e.g. "q^2 + 1 + q^-2".
  std::string to_string() const;

 private:
  explicit LaurentPoly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
  static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, int sign);

  std::vector<Term> terms_;
};

/// Quotient a / b when b divides a exactly in Q[q, q^-1]; nullopt otherwise.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Monic-free normalized gcd in Q[q, q^-1]: integer coefficients with content 1,
/// lowest exponent 0 and positive leading coefficient. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Least common multiple of the coefficient denominators.
Integer denominator_lcm(const LaurentPoly& p);

/// gcd of the coefficient numerators (for an integral polynomial).
Integer integer_content(const LaurentPoly& p);

}  // namespace homlie
