#pragma once

// Dense univariate polynomials over Z, used internally for gcd computations.

#include <gmpxx.h>

#include <vector>

namespace homlie::detail {

/// Coefficients in ascending order; the zero polynomial is empty and the
/// leading coefficient of a nonzero polynomial is nonzero.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p);
mpz_class content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);

/// Exact division over Z. Returns false when b does not divide a.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly* quotient);

/// gcd over Q[q] normalized to a primitive integer polynomial with positive
/// leading coefficient. Inputs need not be primitive.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

}  // namespace homlie::detail
