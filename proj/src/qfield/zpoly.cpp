#include "zpoly.hpp"

#include <algorithm>
#include <utility>

namespace homlie::detail {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.empty()) return p;
  mpz_class g = content(p);
  if (p.back() < 0) g = -g;
  ZPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(out[i].get_mpz_t(), p[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly* quotient) {
  if (b.empty()) return false;
  if (a.empty()) {
    if (quotient) quotient->clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  ZPoly rem = a;
  ZPoly quo(a.size() - b.size() + 1);
  const mpz_class& lead = b.back();
  mpz_class t;
  for (std::size_t i = quo.size(); i-- > 0;) {
    mpz_class& top = rem[i + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
    mpz_divexact(quo[i].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) {
      t = quo[i] * b[j];
      rem[i + j] -= t;
    }
  }
  for (const auto& c : rem)
    if (c != 0) return false;
  if (quotient) *quotient = std::move(quo);
  return true;
}

namespace {

mpz_class max_norm(const ZPoly& p) {
  mpz_class m = 0;
  for (const auto& c : p) {
    mpz_class a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

mpz_class eval(const ZPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= x;
    acc += p[i];
  }
  return acc;
}

// Symmetric xi-adic expansion of an integer into polynomial coefficients.
ZPoly expand(mpz_class value, const mpz_class& xi) {
  ZPoly out;
  mpz_class half = xi / 2;
  while (value != 0) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    out.push_back(r);
    value -= r;
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), xi.get_mpz_t());
  }
  return out;
}

ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lead = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    mpz_class top = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lead;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= top * b[j];
    trim(a);
  }
  return a;
}

ZPoly gcd_prs(ZPoly a, ZPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

bool gcd_heuristic(const ZPoly& a, const ZPoly& b, ZPoly* out) {
  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  const std::size_t max_deg = std::max(a.size(), b.size());
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * max_deg > 20000) return false;
    mpz_class ga = eval(a, xi);
    mpz_class gb = eval(b, xi);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    ZPoly cand = primitive_part(expand(g, xi));
    if (!cand.empty() && divide_exact(a, cand, nullptr) && divide_exact(b, cand, nullptr)) {
      *out = std::move(cand);
      return true;
    }
    xi = xi * 73794 / 27011;
  }
  return false;
}

}  // namespace

ZPoly gcd(const ZPoly& a_in, const ZPoly& b_in) {
  if (a_in.empty()) return primitive_part(b_in);
  if (b_in.empty()) return primitive_part(a_in);
  ZPoly a = primitive_part(a_in);
  ZPoly b = primitive_part(b_in);
  // Common power of q.
  std::size_t za = 0, zb = 0;
  while (a[za] == 0) ++za;
  while (b[zb] == 0) ++zb;
  const std::size_t z = std::min(za, zb);
  if (za) a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(za));
  if (zb) b.erase(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(zb));

  ZPoly g;
  if (a.size() == 1 || b.size() == 1) {
    g = {1};
  } else if (a == b) {
    g = a;
  } else if (divide_exact(a, b, nullptr)) {
    g = b;
  } else if (divide_exact(b, a, nullptr)) {
    g = a;
  } else if (!gcd_heuristic(a, b, &g)) {
    g = gcd_prs(a, b);
  }
  if (z) g.insert(g.begin(), z, mpz_class(0));
  return g;
}

}  // namespace homlie::detail
