#pragma once

// Polynomials in a few parameters over Q(q), and a solver for systems whose
// equations have degree at most 2 and split into linear factors.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homlie/errors.hpp"
#include "homlie/qrational.hpp"

namespace homlie::detail {

class Poly {
 public:
  using Monomial = std::vector<int>;  // exponent per variable

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const QRational& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }
  static Poly variable(std::size_t nvars, std::size_t i, const QRational& c = QRational(1)) {
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, QRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total(m));
    return d;
  }
  int degree_in(std::size_t v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
  }
  std::vector<std::size_t> variables() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nvars_; ++v)
      if (degree_in(v) > 0) out.push_back(v);
    return out;
  }
  QRational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QRational(0) : it->second;
  }
  QRational constant_term() const { return coefficient(Monomial(nvars_, 0)); }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(a.nvars_);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        out.add(m, ca * cb);
      }
    return out;
  }
  friend Poly operator*(Poly a, const QRational& c) {
    if (c.is_zero()) return Poly(a.nvars_);
    for (auto& [m, x] : a.terms_) x *= c;
    return a;
  }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  /// Replaces variable v by e.
  Poly substitute(std::size_t v, const Poly& e) const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      rest[v] = 0;
      Poly t(nvars_);
      t.terms_[rest] = c;
      for (int k = 0; k < m[v]; ++k) t = t * e;
      out += t;
    }
    return out;
  }

  /// Scaled so the first coefficient is 1.
  Poly monic() const {
    if (terms_.empty()) return *this;
    return *this * terms_.begin()->second.inverse();
  }

  std::string key() const {
    std::string s;
    for (const auto& [m, c] : terms_) {
      for (int e : m) s += std::to_string(e) + ",";
      s += ":" + c.to_string() + ";";
    }
    return s;
  }

 private:
  static int total(const Monomial& m) {
    int t = 0;
    for (int e : m) t += e;
    return t;
  }
  void add(const Monomial& m, const QRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::size_t nvars_ = 0;
  std::map<Monomial, QRational> terms_;
};

inline std::optional<Rational> rational_sqrt(const QRational& x) {
  if (!x.is_constant()) return std::nullopt;
  Rational r = x.num().coefficient(0);
  if (r < 0) return std::nullopt;
  r.canonicalize();
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  return Rational(n, d);
}

inline Poly monomial(std::size_t n, const Poly::Monomial& m, const QRational& k) {
  Poly t = Poly::constant(n, k);
  for (std::size_t v = 0; v < n; ++v)
    for (int e = 0; e < m[v]; ++e) t = t * Poly::variable(n, v);
  return t;
}

// Linear factors of a degree-2 polynomial, or nullopt.
inline std::optional<std::vector<Poly>> linear_factors(const Poly& c) {
  const std::size_t n = c.nvars();
  // A variable of degree 1: c = x L + R with L, R free of x.
  for (std::size_t x : c.variables()) {
    if (c.degree_in(x) != 1) continue;
    Poly L(n), R(n);
    for (const auto& [m, k] : c.terms()) {
      Poly::Monomial rest = m;
      rest[x] = 0;
      (m[x] == 1 ? L : R) += monomial(n, rest, k);
    }
    if (L.degree() != 1) continue;  // L constant: c is linear in x with a quadratic remainder
    if (R.is_zero()) return std::vector<Poly>{Poly::variable(n, x), L};
    // R = a L with a linear: divide in a variable y of L.
    const std::size_t y = L.variables().front();
    Poly::Monomial my(n, 0);
    my[y] = 1;
    const QRational ly = L.coefficient(my);
    const Poly L0 = L - Poly::variable(n, y, ly);
    Poly r2(n), r1(n), r0(n);
    for (const auto& [m, k] : R.terms()) {
      Poly::Monomial rest = m;
      rest[y] = 0;
      (m[y] == 2 ? r2 : m[y] == 1 ? r1 : r0) += monomial(n, rest, k);
    }
    const Poly a1 = r2 * ly.inverse();
    const Poly a0 = (r1 - a1 * L0) * ly.inverse();
    if (a1.degree() > 0 || a0.degree() > 1 || !(r0 - a0 * L0).is_zero()) continue;
    return std::vector<Poly>{Poly::variable(n, x) + a1 * Poly::variable(n, y) + a0, L};
  }
  // Univariate a x^2 + b x + d.
  const auto vars = c.variables();
  if (vars.size() == 1) {
    const std::size_t x = vars.front();
    Poly::Monomial m1(n, 0), m2(n, 0);
    m1[x] = 1;
    m2[x] = 2;
    const QRational a = c.coefficient(m2), b = c.coefficient(m1), d = c.constant_term();
    const auto root = rational_sqrt(b * b - QRational(4) * a * d);
    if (!root) return std::nullopt;
    std::vector<Poly> out;
    for (int sgn : {1, -1}) {
      const QRational r = (-b + QRational(Rational(*root * sgn))) / (QRational(2) * a);
      out.push_back(Poly::variable(n, x) - Poly::constant(n, r));
    }
    return out;
  }
  return std::nullopt;
}

/// Solutions of c = 0 for all constraints; value[i] is parameter i in terms of the free parameters.
inline void solve_system(std::vector<Poly> cs, std::vector<Poly> value, std::vector<std::vector<Poly>>& out) {
  std::vector<Poly> kept;
  std::map<std::string, bool> seen;
  for (auto& c : cs) {
    if (c.is_zero()) continue;
    if (c.degree() == 0) return;  // inconsistent
    if (c.degree() > 2) throw NonQuadraticConstraint("constraint of degree " + std::to_string(c.degree()));
    Poly m = c.monic();
    if (seen.emplace(m.key(), true).second) kept.push_back(std::move(m));
  }
  if (kept.empty()) {
    for (const auto& v : out)
      if (v == value) return;
    out.push_back(std::move(value));
    return;
  }
  auto substitute = [&](std::size_t x, const Poly& e) {
    std::vector<Poly> next;
    for (const auto& c : kept) next.push_back(c.substitute(x, e));
    std::vector<Poly> v2;
    for (const auto& v : value) v2.push_back(v.substitute(x, e));
    solve_system(std::move(next), std::move(v2), out);
  };
  // Linear constraints first.
  for (const auto& c : kept) {
    if (c.degree() != 1) continue;
    const std::size_t x = c.variables().front();
    Poly::Monomial mx(c.nvars(), 0);
    mx[x] = 1;
    const QRational a = c.coefficient(mx);
    substitute(x, (Poly::variable(c.nvars(), x, a) - c) * a.inverse());
    return;
  }
  // A variable entering linearly with a constant coefficient.
  for (const auto& c : kept) {
    for (std::size_t x : c.variables()) {
      if (c.degree_in(x) != 1) continue;
      Poly::Monomial mx(c.nvars(), 0);
      mx[x] = 1;
      const QRational a = c.coefficient(mx);
      bool only_constant = !a.is_zero();
      for (const auto& [m, k] : c.terms())
        if (m[x] == 1 && m != mx) only_constant = false;
      if (!only_constant) continue;
      const Poly e = (Poly::variable(c.nvars(), x, a) - c) * a.inverse();
      bool low = true;
      for (const auto& other : kept)
        if (other.substitute(x, e).degree() > 2) low = false;
      if (!low) continue;
      substitute(x, e);
      return;
    }
  }
  // Split a quadratic into linear factors and branch.
  for (const auto& c : kept) {
    auto factors = linear_factors(c);
    if (!factors) continue;
    for (const auto& f : *factors) {
      std::vector<Poly> next = kept;
      next.push_back(f);
      solve_system(std::move(next), value, out);
    }
    return;
  }
  throw NonQuadraticConstraint("constraint does not split into linear factors: " + kept.front().key());
}

}  // namespace homlie::detail
