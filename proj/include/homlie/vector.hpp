#pragma once

#include <algorithm>
#include <compare>
#include <utility>
#include <vector>

#include "homlie/qrational.hpp"

namespace homlie {

/// Basis element: family index into a presentation and degree (0 when ungraded).
struct Generator {
  int family = 0;
  int degree = 0;

  auto operator<=>(const Generator&) const = default;
  bool operator==(const Generator&) const = default;
};

/// Sparse linear form sum c_i * u_i over unknown ids, sorted by id.
template <class S>
class BasicLinearForm {
 public:
  using Entry = std::pair<int, S>;

  BasicLinearForm() = default;
  static BasicLinearForm unknown(int id, S c = S(1)) {
    BasicLinearForm f;
    if (!c.is_zero()) f.entries_.emplace_back(id, std::move(c));
    return f;
  }

  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  BasicLinearForm& operator+=(const BasicLinearForm& o) {
    if (o.entries_.empty()) return *this;
    if (entries_.empty()) return *this = o;
    std::vector<Entry> out;
    out.reserve(entries_.size() + o.entries_.size());
    auto i = entries_.begin();
    auto j = o.entries_.begin();
    while (i != entries_.end() || j != o.entries_.end()) {
      if (j == o.entries_.end() || (i != entries_.end() && i->first < j->first)) {
        out.push_back(std::move(*i++));
      } else if (i == entries_.end() || j->first < i->first) {
        out.push_back(*j++);
      } else {
        S c = i->second + j->second;
        if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    entries_ = std::move(out);
    return *this;
  }

  BasicLinearForm& operator-=(const BasicLinearForm& o) { return *this += -o; }
  friend BasicLinearForm operator+(BasicLinearForm a, const BasicLinearForm& b) { return a += b; }
  friend BasicLinearForm operator-(BasicLinearForm a, const BasicLinearForm& b) { return a -= b; }

  friend BasicLinearForm operator*(BasicLinearForm f, const S& c) {
    if (c.is_zero()) return {};
    if (!c.is_one())
      for (auto& e : f.entries_) e.second *= c;
    return f;
  }
  friend BasicLinearForm operator*(const S& c, BasicLinearForm f) { return std::move(f) * c; }
  friend BasicLinearForm operator-(BasicLinearForm f) {
    for (auto& e : f.entries_) e.second = -e.second;
    return f;
  }

  bool operator==(const BasicLinearForm& o) const { return entries_ == o.entries_; }

  /// Value under an assignment of the unknowns.
  template <class Assignment>
  S evaluate(const Assignment& value) const {
    S acc{};
    for (const auto& [id, c] : entries_) acc += c * value(id);
    return acc;
  }

 private:
  std::vector<Entry> entries_;
};

using LinearForm = BasicLinearForm<QRational>;

/// Finite linear combination of generators with coefficients in C.
template <class C>
class BasicVector {
 public:
  using Term = std::pair<Generator, C>;

  BasicVector() = default;
  BasicVector(Generator g, C c) {
    if (!c.is_zero()) terms_.emplace_back(g, std::move(c));
  }
  static BasicVector basis(Generator g) { return BasicVector(g, C(1)); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coefficient(const Generator& g) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                               [](const Term& t, const Generator& k) { return t.first < k; });
    if (it != terms_.end() && it->first == g) return it->second;
    return C();
  }

  /// Appends without restoring canonical form; call normalize() afterwards.
  void push(Generator g, C c) { terms_.emplace_back(g, std::move(c)); }

  void normalize() {
    if (terms_.size() <= 1) {
      if (!terms_.empty() && terms_[0].second.is_zero()) terms_.clear();
      return;
    }
    std::stable_sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  BasicVector& operator+=(const BasicVector& o) {
    for (const auto& t : o.terms_) terms_.push_back(t);
    normalize();
    return *this;
  }
  BasicVector& operator-=(const BasicVector& o) {
    for (const auto& t : o.terms_) terms_.emplace_back(t.first, -t.second);
    normalize();
    return *this;
  }
  friend BasicVector operator+(BasicVector a, const BasicVector& b) { return a += b; }
  friend BasicVector operator-(BasicVector a, const BasicVector& b) { return a -= b; }
  friend BasicVector operator-(BasicVector a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }

  template <class S>
  auto scaled(const S& s) const {
    using R = decltype(std::declval<C>() * s);
    BasicVector<R> out;
    for (const auto& [g, c] : terms_) out.push(g, c * s);
    out.normalize();
    return out;
  }

  bool operator==(const BasicVector& o) const { return terms_ == o.terms_; }

 private:
  std::vector<Term> terms_;
};

using Vector = BasicVector<QRational>;
using FormVector = BasicVector<LinearForm>;

}  // namespace homlie
