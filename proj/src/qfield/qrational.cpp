#include "homlie/qrational.hpp"

namespace homlie {

QRational::QRational(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  canonicalize();
}

void QRational::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    const auto& t = den_.terms()[0];
    num_ = num_.scaled(1 / t.coeff).shifted(-t.exp);
    den_ = LaurentPoly(1);
    return;
  }
  // Move the q-power of den into num.
  const int low = den_.low_degree();
  if (low != 0) {
    num_ = num_.shifted(-low);
    den_ = den_.shifted(-low);
  }
  // Cancel the common factor; gcd handles negative exponents of num.
  LaurentPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
    const int l = den_.low_degree();
    if (l != 0) {
      num_ = num_.shifted(-l);
      den_ = den_.shifted(-l);
    }
  }
  // Make den primitive integral with a positive constant term.
  const Integer dl = denominator_lcm(den_);
  LaurentPoly d = den_.scaled(Rational(dl));
  Rational scale(integer_content(d), dl);
  scale.canonicalize();
  if (den_.terms()[0].coeff < 0) scale = -scale;
  if (scale != 1) {
    num_ = num_.scaled(1 / scale);
    den_ = den_.scaled(1 / scale);
  }
  if (den_.is_monomial()) den_ = LaurentPoly(1);
}

QRational QRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return QRational(den_, num_);
}

QRational QRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QRational result(1);
  QRational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

QRational& QRational::operator+=(const QRational& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  if (den_.is_one() && b.den_.is_one()) {
    num_ += b.num_;
    return *this;
  }
  if (den_ == b.den_) {
    num_ += b.num_;
    canonicalize();
    return *this;
  }
  num_ = num_ * b.den_ + b.num_ * den_;
  den_ = den_ * b.den_;
  canonicalize();
  return *this;
}

QRational& QRational::operator-=(const QRational& b) { return *this += -b; }

QRational& QRational::operator*=(const QRational& b) {
  if (is_zero()) return *this;
  if (b.is_zero()) return *this = QRational();
  if (b.is_one()) return *this;
  if (is_one()) return *this = b;
  if (den_.is_one() && b.den_.is_one()) {
    num_ *= b.num_;
    return *this;
  }
  num_ *= b.num_;
  den_ *= b.den_;
  canonicalize();
  return *this;
}

QRational& QRational::operator/=(const QRational& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (b.is_laurent() && b.num_.is_monomial()) {
    const auto& t = b.num_.terms()[0];
    num_ = num_.scaled(1 / t.coeff).shifted(-t.exp);
    return *this;
  }
  return *this *= b.inverse();
}

QRational operator-(const QRational& a) { return QRational(-a.num_, a.den_, QRational::Canonical{}); }

std::string QRational::to_string() const {
  if (is_constant()) return num_.to_string();
  if (den_.is_one()) return "(" + num_.to_string() + ")";
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRational q_bracket_number(int n) {
  if (n == 0) return {};
  const int a = n < 0 ? -n : n;
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(a));
  for (int k = a - 1; k >= 0; --k) terms.push_back({a - 1 - 2 * k, Rational(n < 0 ? -1 : 1)});
  return QRational(LaurentPoly::from_terms(std::move(terms)));
}

QRational q_brace_number(int n) {
  if (n == 0) return {};
  std::vector<LaurentPoly::Term> terms;
  if (n > 0) {
    for (int k = 0; k < n; ++k) terms.push_back({k, Rational(1)});
  } else {
    for (int k = n; k < 0; ++k) terms.push_back({k, Rational(-1)});
  }
  return QRational(LaurentPoly::from_terms(std::move(terms)));
}

Rational specialize(const QRational& x, const Rational& q0) {
  if (q0 == 0 || q0 == 1 || q0 == -1) throw ForbiddenSpecialization(q0.get_str());
  const Rational d = x.den().evaluate(q0);
  if (d == 0) throw PoleAtPoint(q0.get_str());
  return x.num().evaluate(q0) / d;
}

}  // namespace homlie
