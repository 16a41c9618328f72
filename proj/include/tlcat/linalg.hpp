#pragma once

// Exact linear algebra over a field F (Rational or RatFunc) and fraction-free
// determinants over DeltaPoly.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coeffring.hpp"

namespace tlcat {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
using SparseVec = std::map<std::size_t, F>;

/// Incremental row echelon form over F. Rows are kept with the pivot as the
/// smallest column and normalized to 1 there.
template <class F>
class SparseReducer {
 public:
  explicit SparseReducer(std::size_t columns) : columns_(columns) {}

  /// Reduces `row` against the current pivots; stores it if independent.
  /// Returns true iff the rank grew.
  bool add(SparseVec<F> row) {
    reduce(row);
    if (row.empty()) return false;
    const std::size_t pc = row.begin()->first;
    const F inv = F(1) / row.begin()->second;
    for (auto& [c, v] : row) v = v * inv;
    pivots_.emplace(pc, std::move(row));
    return true;
  }

  void reduce(SparseVec<F>& row) const {
    auto it = row.begin();
    while (it != row.end()) {
      auto piv = pivots_.find(it->first);
      if (piv == pivots_.end()) {
        ++it;
        continue;
      }
      const F factor = it->second;
      const std::size_t col = it->first;
      for (const auto& [c, v] : piv->second) {
        auto slot = row.find(c);
        if (slot == row.end()) {
          row.emplace(c, -(factor * v));
        } else {
          slot->second = slot->second - factor * v;
          if (is_zero(slot->second)) row.erase(slot);
        }
      }
      it = row.upper_bound(col);
    }
  }

  std::size_t rank() const { return pivots_.size(); }
  std::size_t columns() const { return columns_; }
  bool is_pivot(std::size_t c) const { return pivots_.count(c) != 0; }

  /// Basis of the null space of the accumulated rows, one dense vector each,
  /// ordered by free column.
  std::vector<std::vector<F>> kernel() const {
    // Back-substitute into reduced row echelon form.
    std::map<std::size_t, SparseVec<F>> rref;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      SparseVec<F> row = it->second;
      const std::size_t pc = it->first;
      for (auto jt = std::next(row.begin()); jt != row.end();) {
        auto later = rref.find(jt->first);
        if (later == rref.end()) {
          ++jt;
          continue;
        }
        const F factor = jt->second;
        const std::size_t col = jt->first;
        for (const auto& [c, v] : later->second) {
          auto slot = row.find(c);
          if (slot == row.end()) {
            row.emplace(c, -(factor * v));
          } else {
            slot->second = slot->second - factor * v;
            if (is_zero(slot->second)) row.erase(slot);
          }
        }
        jt = row.upper_bound(col);
      }
      rref.emplace(pc, std::move(row));
    }
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < columns_; ++f) {
      if (rref.count(f)) continue;
      std::vector<F> v(columns_, F(0));
      v[f] = F(1);
      for (const auto& [pc, row] : rref) {
        auto hit = row.find(f);
        if (hit != row.end()) v[pc] = -hit->second;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t columns_;
  std::map<std::size_t, SparseVec<F>> pivots_;
};

template <class F>
std::size_t rank(const Matrix<F>& m) {
  if (m.empty()) return 0;
  SparseReducer<F> red(m.front().size());
  for (const auto& row : m) {
    SparseVec<F> s;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!is_zero(row[c])) s.emplace(c, row[c]);
    }
    red.add(std::move(s));
  }
  return red.rank();
}

namespace detail {
inline DeltaPoly exact_div(const DeltaPoly& a, const DeltaPoly& b) { return poly_exact_div(a, b); }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline bool ring_zero(const DeltaPoly& a) { return a.is_zero(); }
inline bool ring_zero(const Rational& a) { return a == 0; }
}  // namespace detail

/// Fraction-free (Bareiss) determinant with row pivoting. R is DeltaPoly or Rational.
template <class R>
R bareiss_det(Matrix<R> m) {
  const std::size_t n = m.size();
  if (n == 0) return R{1};
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  bool negate = false;
  R prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::ring_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && detail::ring_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return R{0};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = detail::exact_div(num, prev);
      }
      m[i][k] = R{0};
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? R(-det) : det;
}

/// Quotient of the free space on `size` symbols by relations of the form
/// a*u = b*v and u = 0. Each connected component contributes one dimension
/// unless it contains a killed symbol or a cycle with inconsistent weights.
template <class F>
class MonomialQuotient {
 public:
  explicit MonomialQuotient(std::size_t size) : parent_(size), weight_(size, F(1)), dead_(size, 0) {
    for (std::size_t i = 0; i < size; ++i) parent_[i] = i;
  }

  /// Root of x and w with x = w * root in the quotient.
  std::pair<std::size_t, F> find(std::size_t x) {
    F w(1);
    std::vector<std::size_t> path;
    while (parent_[x] != x) {
      path.push_back(x);
      x = parent_[x];
    }
    // Compress: recompute weights from the root downward.
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const std::size_t node = *it;
      const std::size_t par = parent_[node];
      if (par != x) weight_[node] = weight_[node] * weight_[par];
      parent_[node] = x;
    }
    if (!path.empty()) w = weight_[path.front()];
    return {x, w};
  }

  void kill(std::size_t u) { dead_[find(u).first] = 1; }

  /// Imposes a*u = b*v.
  void relate(std::size_t u, const F& a, std::size_t v, const F& b) {
    const bool za = is_zero(a), zb = is_zero(b);
    if (za && zb) return;
    if (za) return kill(v);
    if (zb) return kill(u);
    auto [ru, wu] = find(u);
    auto [rv, wv] = find(v);
    const F lambda = b / a;  // u = lambda * v
    if (ru == rv) {
      if (wu != lambda * wv) dead_[ru] = 1;
      return;
    }
    // ru = (lambda * wv / wu) * rv
    parent_[ru] = rv;
    weight_[ru] = lambda * wv / wu;
    if (dead_[ru]) dead_[rv] = 1;
  }

  std::size_t dimension() {
    std::size_t d = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      if (parent_[i] == i && !dead_[i]) ++d;
    }
    return d;
  }

  /// Whether symbol u survives as a nonzero class.
  bool alive(std::size_t u) { return !dead_[find(u).first]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<F> weight_;
  std::vector<char> dead_;
};

}  // namespace tlcat
