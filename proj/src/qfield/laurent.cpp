#include "homlie/laurent.hpp"

#include <algorithm>
#include <functional>

#include "zpoly.hpp"

namespace homlie {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({0, Rational(c)});
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) {
    terms_.push_back({0, c});
    terms_.back().coeff.canonicalize();
  }
}

LaurentPoly LaurentPoly::monomial(int exp, const Rational& coeff) {
  LaurentPoly p;
  if (coeff != 0) {
    p.terms_.push_back({exp, coeff});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    t.coeff.canonicalize();
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return LaurentPoly(std::move(out));
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

Rational LaurentPoly::coefficient(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

bool LaurentPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.get_den() == 1; });
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly p = *this;
  if (by != 0)
    for (auto& t : p.terms_) t.exp += by;
  return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  if (c != 1)
    for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Rational LaurentPoly::evaluate(const Rational& q0) const {
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational power;
    const unsigned long e = static_cast<unsigned long>(t.exp < 0 ? -static_cast<long>(t.exp) : t.exp);
    mpz_pow_ui(power.get_num_mpz_t(), q0.get_num_mpz_t(), e);
    mpz_pow_ui(power.get_den_mpz_t(), q0.get_den_mpz_t(), e);
    if (t.exp < 0) {
      power = 1 / power;
    } else {
      power.canonicalize();
    }
    acc += t.coeff * power;
  }
  return acc;
}

LaurentPoly LaurentPoly::combine(const LaurentPoly& a, const LaurentPoly& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
      out.push_back(*i++);
    } else if (i == a.terms_.end() || j->exp < i->exp) {
      out.push_back({j->exp, sign > 0 ? j->coeff : Rational(-j->coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->coeff + j->coeff) : Rational(i->coeff - j->coeff);
      if (c != 0) out.push_back({i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  return *this = combine(*this, other, +1);
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  return *this = combine(*this, other, -1);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.terms_.size() == 1) return b.scaled(a.terms_[0].coeff).shifted(a.terms_[0].exp);
  if (b.terms_.size() == 1) return a.scaled(b.terms_[0].coeff).shifted(b.terms_[0].exp);

  const int low = a.low_degree() + b.low_degree();
  const std::size_t range = static_cast<std::size_t>(a.high_degree() + b.high_degree() - low) + 1;
  std::vector<Rational> dense(range);
  std::vector<char> used(range, 0);
  Rational prod;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      const std::size_t k = static_cast<std::size_t>(s.exp + t.exp - low);
      mpq_mul(prod.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
      dense[k] += prod;
      used[k] = 1;
    }
  }
  std::vector<LaurentPoly::Term> out;
  for (std::size_t k = 0; k < range; ++k)
    if (used[k] && dense[k] != 0) out.push_back({static_cast<int>(k) + low, std::move(dense[k])});
  return LaurentPoly(std::move(out));
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly p = a;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& t : terms_) {
    mix(std::hash<int>{}(t.exp));
    mix(mpz_get_ui(t.coeff.get_num_mpz_t()) ^ (mpz_sgn(t.coeff.get_num_mpz_t()) < 0 ? 0x5555u : 0u));
    mix(mpz_get_ui(t.coeff.get_den_mpz_t()));
  }
  return h;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string power;
    if (it->exp == 1) {
      power = "q";
    } else if (it->exp != 0) {
      power = "q^" + std::to_string(it->exp);
    }
    if (power.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += power;
    } else {
      out += c.get_str() + "*" + power;
    }
  }
  return out;
}

namespace {

// Shifted so that the lowest exponent is zero, denominators cleared.
detail::ZPoly to_zpoly(const LaurentPoly& p) {
  detail::ZPoly out;
  if (p.is_zero()) return out;
  const Integer den = denominator_lcm(p);
  const int low = p.low_degree();
  out.resize(static_cast<std::size_t>(p.high_degree() - low) + 1);
  for (const auto& t : p.terms()) {
    mpz_class& c = out[static_cast<std::size_t>(t.exp - low)];
    mpz_divexact(c.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    c *= t.coeff.get_num();
  }
  return out;
}

LaurentPoly from_zpoly(const detail::ZPoly& p, int low) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) terms.push_back({static_cast<int>(i) + low, Rational(p[i])});
  return LaurentPoly::from_terms(std::move(terms));
}

// Dense long division over Q with non-negative exponents.
bool divide_dense(std::vector<Rational> a, const std::vector<Rational>& b, std::vector<Rational>* quotient) {
  if (a.size() < b.size()) {
    for (const auto& c : a)
      if (c != 0) return false;
    quotient->clear();
    return true;
  }
  std::vector<Rational> quo(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  Rational t;
  for (std::size_t i = quo.size(); i-- > 0;) {
    const Rational& top = a[i + b.size() - 1];
    if (top == 0) continue;
    quo[i] = top / lead;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), quo[i].get_mpq_t(), b[j].get_mpq_t());
      a[i + j] -= t;
    }
  }
  for (const auto& c : a)
    if (c != 0) return false;
  *quotient = std::move(quo);
  return true;
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly{};
  if (b.is_monomial()) return a.scaled(1 / b.terms()[0].coeff).shifted(-b.low_degree());
  auto densify = [](const LaurentPoly& p) {
    std::vector<Rational> v(static_cast<std::size_t>(p.degree_span()) + 1);
    for (const auto& t : p.terms()) v[static_cast<std::size_t>(t.exp - p.low_degree())] = t.coeff;
    return v;
  };
  std::vector<Rational> quo;
  if (!divide_dense(densify(a), densify(b), &quo)) return std::nullopt;
  std::vector<LaurentPoly::Term> terms;
  const int low = a.low_degree() - b.low_degree();
  for (std::size_t i = 0; i < quo.size(); ++i)
    if (quo[i] != 0) terms.push_back({static_cast<int>(i) + low, std::move(quo[i])});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return from_zpoly(detail::gcd(to_zpoly(a), to_zpoly(b)), 0);
}

Integer denominator_lcm(const LaurentPoly& p) {
  Integer l = 1;
  for (const auto& t : p.terms())
    if (t.coeff.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  return l;
}

Integer integer_content(const LaurentPoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace homlie
