#pragma once

// Sparse Gaussian elimination with Markowitz-style pivoting, generic over the
// coefficient ring, plus back substitution into a field.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "homlie/laurent.hpp"
#include "homlie/qrational.hpp"

namespace homlie::detail {

template <class T>
struct SparseEntry {
  int col;
  T val;

  bool operator==(const SparseEntry& o) const { return col == o.col && val == o.val; }
};

template <class T>
using SparseRow = std::vector<SparseEntry<T>>;

/**
 * Ring policy requirements:
 *   T; bool is_zero(const T&); T mul(const T&, const T&); T sub(const T&, const T&); T neg(const T&);
 *   std::pair<T, T> multipliers(const T& target, const T& pivot)  -> (a, b) with a*target - b*pivot = 0
 *   void normalize(SparseRow<T>&); std::size_t hash(const T&); std::pair<long, long> weight(const T&)
 */
template <class Ring>
class SparseElimination {
 public:
  using T = typename Ring::T;
  using Row = SparseRow<T>;

  struct Pivot {
    int col;
    Row row;
  };

  SparseElimination(std::size_t ncols, Ring ring) : ring_(std::move(ring)), col_rows_(ncols), col_count_(ncols, 0) {}

  /// Adds a row (entries sorted by column); zero rows and duplicates are dropped.
  void add_row(Row r) {
    ring_.normalize(r);
    if (r.empty()) return;
    std::size_t h = 0;
    for (const auto& e : r) h = h * 1000003u ^ (static_cast<std::size_t>(e.col) * 7919u + ring_.hash(e.val));
    auto& bucket = seen_[h];
    for (int idx : bucket)
      if (rows_[static_cast<std::size_t>(idx)] == r) return;
    bucket.push_back(static_cast<int>(rows_.size()));
    rows_.push_back(std::move(r));
  }

  std::size_t row_count() const { return rows_.size(); }

  void run() {
    seen_.clear();
    alive_.assign(rows_.size(), true);
    keys_.resize(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      attach(static_cast<int>(i), nullptr);
      enqueue(static_cast<int>(i));
    }
    while (!queue_.empty()) {
      const int i = std::get<3>(*queue_.begin());
      queue_.erase(queue_.begin());
      Row& r = rows_[static_cast<std::size_t>(i)];
      const int c = choose_column(r);
      detach(i);
      alive_[static_cast<std::size_t>(i)] = false;
      std::vector<int> touched = std::move(col_rows_[static_cast<std::size_t>(c)]);
      col_rows_[static_cast<std::size_t>(c)].clear();
      const T& pv = find(r, c)->val;
      for (int s : touched) {
        if (s == i || !alive_[static_cast<std::size_t>(s)]) continue;
        Row& target = rows_[static_cast<std::size_t>(s)];
        auto it = find(target, c);
        if (it == target.end()) continue;
        queue_.erase(keys_[static_cast<std::size_t>(s)]);
        detach(s);
        Row old = std::move(target);
        target = reduce(old, it->val, r, pv, c);
        ring_.normalize(target);
        if (target.empty()) {
          alive_[static_cast<std::size_t>(s)] = false;
          continue;
        }
        attach(s, &old);
        enqueue(s);
      }
      pivots_.push_back({c, std::move(r)});
      r = Row();
    }
  }

  const std::vector<Pivot>& pivots() const { return pivots_; }

 private:
  using Key = std::tuple<std::size_t, long, long, int>;

  static typename Row::const_iterator find(const Row& r, int c) {
    auto it = std::lower_bound(r.begin(), r.end(), c, [](const SparseEntry<T>& e, int col) { return e.col < col; });
    return (it != r.end() && it->col == c) ? it : r.end();
  }

  void enqueue(int i) {
    const Row& r = rows_[static_cast<std::size_t>(i)];
    long terms = 0, span = 0;
    for (const auto& e : r) {
      auto [t, s] = ring_.weight(e.val);
      terms += t;
      span += s;
    }
    keys_[static_cast<std::size_t>(i)] = Key{r.size(), terms, span, i};
    queue_.insert(keys_[static_cast<std::size_t>(i)]);
  }

  // Registers the columns of row i; columns already present in old keep their index entry.
  void attach(int i, const Row* old) {
    for (const auto& e : rows_[static_cast<std::size_t>(i)]) {
      ++col_count_[static_cast<std::size_t>(e.col)];
      if (!old || find(*old, e.col) == old->end()) col_rows_[static_cast<std::size_t>(e.col)].push_back(i);
    }
  }

  void detach(int i) {
    for (const auto& e : rows_[static_cast<std::size_t>(i)]) --col_count_[static_cast<std::size_t>(e.col)];
  }

  int choose_column(const Row& r) const {
    int best = r.front().col;
    auto best_key = std::make_tuple(col_count_[static_cast<std::size_t>(best)], ring_.weight(r.front().val), best);
    for (const auto& e : r) {
      auto key = std::make_tuple(col_count_[static_cast<std::size_t>(e.col)], ring_.weight(e.val), e.col);
      if (key < best_key) {
        best_key = key;
        best = e.col;
      }
    }
    return best;
  }

  // a*target - b*pivot with the column c removed.
  Row reduce(const Row& target, const T& tc, const Row& pivot, const T& pc, int c) const {
    auto [a, b] = ring_.multipliers(tc, pc);
    Row out;
    out.reserve(target.size() + pivot.size());
    auto i = target.begin();
    auto j = pivot.begin();
    while (i != target.end() || j != pivot.end()) {
      if (j == pivot.end() || (i != target.end() && i->col < j->col)) {
        if (i->col != c) out.push_back({i->col, ring_.mul(a, i->val)});
        ++i;
      } else if (i == target.end() || j->col < i->col) {
        if (j->col != c) out.push_back({j->col, ring_.neg(ring_.mul(b, j->val))});
        ++j;
      } else {
        if (i->col != c) {
          T v = ring_.sub(ring_.mul(a, i->val), ring_.mul(b, j->val));
          if (!ring_.is_zero(v)) out.push_back({i->col, std::move(v)});
        }
        ++i;
        ++j;
      }
    }
    return out;
  }

  Ring ring_;
  std::vector<Row> rows_;
  std::vector<bool> alive_;
  std::vector<Key> keys_;
  std::set<Key> queue_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<long> col_count_;
  std::unordered_map<std::size_t, std::vector<int>> seen_;
  std::vector<Pivot> pivots_;
};

/// Integer Laurent polynomials, fraction free.
struct LaurentRing {
  using T = LaurentPoly;

  bool is_zero(const T& x) const { return x.is_zero(); }
  T mul(const T& a, const T& b) const {
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    return a * b;
  }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  std::size_t hash(const T& x) const { return x.hash(); }
  std::pair<long, long> weight(const T& x) const {
    return {static_cast<long>(x.term_count()), static_cast<long>(x.degree_span())};
  }

  std::pair<T, T> multipliers(const T& target, const T& pivot) const {
    const Integer ci = integer_content(target), cp = integer_content(pivot);
    Integer g;
    mpz_gcd(g.get_mpz_t(), ci.get_mpz_t(), cp.get_mpz_t());
    const Rational inv(Integer(1), g);
    if (target.is_monomial() || pivot.is_monomial()) {
      // Monomials are units up to their integer coefficient.
      return {pivot.scaled(inv), target.scaled(inv)};
    }
    const LaurentPoly G = gcd(target, pivot);
    if (G.is_constant()) return {pivot.scaled(inv), target.scaled(inv)};
    return {divide_exact(pivot, G)->scaled(inv), divide_exact(target, G)->scaled(inv)};
  }

  // Divides out the polynomial content, integer content and power of q.
  void normalize(SparseRow<T>& row) const {
    if (row.empty()) return;
    if (row.size() == 1) {
      row.front().val = LaurentPoly(1);
      return;
    }
    bool has_monomial = false;
    for (const auto& e : row) has_monomial = has_monomial || e.val.is_monomial();
    if (!has_monomial) {
      LaurentPoly common = row.front().val;
      for (std::size_t k = 1; k < row.size() && !common.is_constant(); ++k) common = gcd(common, row[k].val);
      if (!common.is_constant())
        for (auto& e : row) e.val = *divide_exact(e.val, common);
    }
    Integer content = 0;
    int low = row.front().val.low_degree();
    for (const auto& e : row) {
      const Integer c = integer_content(e.val);
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      low = std::min(low, e.val.low_degree());
    }
    Rational scale(Integer(1), content);
    if (row.front().val.terms().back().coeff < 0) scale = -scale;
    if (scale == 1 && low == 0) return;
    for (auto& e : row) e.val = e.val.scaled(scale).shifted(-low);
  }
};

/// Arithmetic modulo the Mersenne prime 2^61 - 1.
struct ModP {
  static constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;
  std::uint64_t v = 0;

  ModP() = default;
  explicit ModP(std::uint64_t x) : v(x % P) {}
  static ModP from_integer(const Integer& z) {
    return ModP(mpz_fdiv_ui(z.get_mpz_t(), P));
  }

  static ModP from_rational(const Rational& r) {
    return from_integer(r.get_num()) / from_integer(r.get_den());
  }

  bool is_zero() const { return v == 0; }
  bool is_one() const { return v == 1; }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  friend ModP operator+(ModP a, ModP b) { return ModP(a.v + b.v >= P ? a.v + b.v - P : a.v + b.v); }
  friend ModP operator-(ModP a, ModP b) { return ModP(a.v >= b.v ? a.v - b.v : a.v + P - b.v); }
  friend ModP operator-(ModP a) { return ModP(a.v == 0 ? 0 : P - a.v); }
  friend ModP operator*(ModP a, ModP b) {
    unsigned __int128 x = static_cast<unsigned __int128>(a.v) * b.v;
    std::uint64_t lo = static_cast<std::uint64_t>(x & P), hi = static_cast<std::uint64_t>(x >> 61);
    std::uint64_t s = lo + hi;
    return ModP(s >= P ? s - P : s);
  }
  ModP pow(std::uint64_t e) const {
    ModP r(1), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
  ModP inverse() const { return pow(P - 2); }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  bool operator==(const ModP& o) const { return v == o.v; }
};

struct ModRing {
  using T = ModP;

  bool is_zero(const T& x) const { return x.is_zero(); }
  T mul(const T& a, const T& b) const { return a * b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  std::size_t hash(const T& x) const { return std::hash<std::uint64_t>()(x.v); }
  std::pair<long, long> weight(const T&) const { return {1, 0}; }
  // Rows are kept monic in their first entry.
  std::pair<T, T> multipliers(const T& target, const T& pivot) const { return {T(1), target / pivot}; }
  void normalize(SparseRow<T>& row) const {
    if (row.empty()) return;
    const T inv = row.front().val.inverse();
    for (auto& e : row) e.val = e.val * inv;
  }
};

/**
 * Expresses every column as a combination of the free (non-pivot) columns.
 * conv maps a ring element into the field F. Returns, per column, sparse
 * (free column, coefficient) pairs; free columns map to themselves and
 * columns in fixed_zero are neither free nor solved for.
 */
template <class F, class Pivots, class Conv>
std::vector<std::vector<std::pair<int, F>>> solve_columns(std::size_t ncols, const Pivots& pivots, Conv conv,
                                                         std::vector<int>* free_cols,
                                                         const std::vector<char>* fixed_zero = nullptr) {
  std::vector<char> is_pivot(ncols, 0);
  for (const auto& pv : pivots) is_pivot[static_cast<std::size_t>(pv.col)] = 1;
  std::vector<std::vector<std::pair<int, F>>> expr(ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    if (fixed_zero && (*fixed_zero)[c]) continue;
    if (!is_pivot[c]) {
      expr[c].emplace_back(static_cast<int>(c), F(1));
      if (free_cols) free_cols->push_back(static_cast<int>(c));
    }
  }
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    F pv;
    std::vector<std::pair<int, F>> acc;
    for (const auto& e : it->row) {
      if (e.col == it->col) {
        pv = conv(e.val);
        continue;
      }
      const auto& dep = expr[static_cast<std::size_t>(e.col)];
      if (dep.empty()) continue;
      const F v = conv(e.val);
      for (const auto& [f, c] : dep) acc.emplace_back(f, v * c);
    }
    std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    auto& out = expr[static_cast<std::size_t>(it->col)];
    for (std::size_t k = 0; k < acc.size();) {
      F sum = acc[k].second;
      std::size_t l = k + 1;
      for (; l < acc.size() && acc[l].first == acc[k].first; ++l) sum = sum + acc[l].second;
      if (!sum.is_zero()) out.emplace_back(acc[k].first, -sum / pv);
      k = l;
    }
  }
  return expr;
}

}  // namespace homlie::detail
