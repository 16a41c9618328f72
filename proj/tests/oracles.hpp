#pragma once

// Independent reference implementations used only by the tests. They consume
// the public arc/cap lists and never touch the library's position encoding.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <tlcat/cellmod.hpp>
#include <tlcat/diagrams.hpp>

namespace oracle {

using Q = mpq_class;
using Pair = std::pair<int, int>;

// All perfect matchings of points 0..n-1, crossing ones included.
inline void all_matchings(int n, std::vector<int>& used, std::vector<Pair>& cur, std::vector<std::vector<Pair>>& out) {
  int first = -1;
  for (int i = 0; i < n; ++i) {
    if (!used[static_cast<std::size_t>(i)]) {
      first = i;
      break;
    }
  }
  if (first < 0) {
    out.push_back(cur);
    return;
  }
  used[static_cast<std::size_t>(first)] = 1;
  for (int j = first + 1; j < n; ++j) {
    if (used[static_cast<std::size_t>(j)]) continue;
    used[static_cast<std::size_t>(j)] = 1;
    cur.push_back({first, j});
    all_matchings(n, used, cur, out);
    cur.pop_back();
    used[static_cast<std::size_t>(j)] = 0;
  }
  used[static_cast<std::size_t>(first)] = 0;
}

inline bool crosses(Pair a, Pair b) {
  if (a.first > a.second) std::swap(a.first, a.second);
  if (b.first > b.second) std::swap(b.first, b.second);
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

inline bool noncrossing(const std::vector<Pair>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (crosses(m[i], m[j])) return false;
    }
  }
  return true;
}

/// Number of non-crossing perfect matchings of n points on a circle, by filtering all matchings.
inline std::size_t count_noncrossing(int n) {
  if (n % 2) return 0;
  std::vector<int> used(static_cast<std::size_t>(n), 0);
  std::vector<Pair> cur;
  std::vector<std::vector<Pair>> all;
  all_matchings(n, used, cur, all);
  return static_cast<std::size_t>(std::count_if(all.begin(), all.end(), noncrossing));
}

inline std::size_t catalan_recurrence(int n) {
  std::vector<std::size_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
  }
  return c[static_cast<std::size_t>(n)];
}

inline std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return c;
}

// Cap diagrams by brute force: every point is a defect or paired with a later
// point; keep non-crossing ones with no defect under a cap.
inline std::vector<std::vector<Pair>> cap_diagrams(int n, int r) {
  std::vector<std::vector<Pair>> out;
  std::vector<int> state(static_cast<std::size_t>(n), -2);  // -2 unset, -1 defect, else partner
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<Pair> caps;
      for (int a = 0; a < n; ++a) {
        const int b = state[static_cast<std::size_t>(a)];
        if (b > a) caps.push_back({a + 1, b + 1});
      }
      if (static_cast<int>(caps.size()) != r || !noncrossing(caps)) return;
      for (const auto& [a, b] : caps) {
        for (int d = a + 1; d < b; ++d) {
          if (state[static_cast<std::size_t>(d - 1)] == -1) return;
        }
      }
      out.push_back(caps);
      return;
    }
    if (state[static_cast<std::size_t>(i)] != -2) {
      rec(i + 1);
      return;
    }
    state[static_cast<std::size_t>(i)] = -1;
    rec(i + 1);
    for (int j = i + 1; j < n; ++j) {
      if (state[static_cast<std::size_t>(j)] != -2) continue;
      state[static_cast<std::size_t>(i)] = j;
      state[static_cast<std::size_t>(j)] = i;
      rec(i + 1);
      state[static_cast<std::size_t>(j)] = -2;
    }
    state[static_cast<std::size_t>(i)] = -2;
  };
  rec(0);
  return out;
}

struct Glued {
  unsigned loops = 0;
  std::set<std::pair<tlcat::Endpoint, tlcat::Endpoint>> arcs;  // sorted endpoint pairs
};

/// Stacks g on top of f by tracing a graph whose nodes are (layer, side, index).
inline Glued glue(const tlcat::PlanarDiagram& f, const tlcat::PlanarDiagram& g) {
  using tlcat::Endpoint;
  using tlcat::Side;
  // Node ids: f.B_i -> 0..m-1, middle row -> m..m+n-1, g.T_j -> m+n..m+n+p-1.
  const int m = f.bot(), n = f.top(), p = g.top();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m + n + p));
  auto fid = [&](const Endpoint& e) { return e.side == Side::B ? e.index - 1 : m + e.index - 1; };
  auto gid = [&](const Endpoint& e) { return e.side == Side::B ? m + e.index - 1 : m + n + e.index - 1; };
  for (const auto& [a, b] : f.arcs()) {
    adj[static_cast<std::size_t>(fid(a))].push_back(fid(b));
    adj[static_cast<std::size_t>(fid(b))].push_back(fid(a));
  }
  for (const auto& [a, b] : g.arcs()) {
    adj[static_cast<std::size_t>(gid(a))].push_back(gid(b));
    adj[static_cast<std::size_t>(gid(b))].push_back(gid(a));
  }
  auto outer = [&](int v) { return v < m || v >= m + n; };
  auto as_endpoint = [&](int v) { return v < m ? Endpoint{Side::B, v + 1} : Endpoint{Side::T, v - m - n + 1}; };
  std::vector<int> seen(adj.size(), 0);
  Glued out;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::vector<int> comp, stack{v};
    seen[static_cast<std::size_t>(v)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : adj[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::vector<int> ends;
    for (int u : comp) {
      if (outer(u)) ends.push_back(u);
    }
    if (ends.empty()) {
      ++out.loops;
    } else {
      auto a = as_endpoint(ends[0]), b = as_endpoint(ends[1]);
      if (b < a) std::swap(a, b);
      out.arcs.insert({a, b});
    }
  }
  return out;
}

inline std::set<std::pair<tlcat::Endpoint, tlcat::Endpoint>> arc_set(const tlcat::PlanarDiagram& d) {
  std::set<std::pair<tlcat::Endpoint, tlcat::Endpoint>> s;
  for (auto [a, b] : d.arcs()) {
    if (b < a) std::swap(a, b);
    s.insert({a, b});
  }
  return s;
}

/// Pairing of two cap diagrams on n points: loop count, or nullopt when two
/// defects of the same diagram are joined.
inline std::optional<unsigned> pairing(int n, const std::vector<Pair>& x, const std::vector<Pair>& y) {
  std::vector<int> px(static_cast<std::size_t>(n) + 1, 0), py(static_cast<std::size_t>(n) + 1, 0);
  for (auto [a, b] : x) px[static_cast<std::size_t>(a)] = b, px[static_cast<std::size_t>(b)] = a;
  for (auto [a, b] : y) py[static_cast<std::size_t>(a)] = b, py[static_cast<std::size_t>(b)] = a;
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  unsigned loops = 0;
  // Paths start at a defect of x; they must end at a defect of y.
  for (int s = 1; s <= n; ++s) {
    if (px[static_cast<std::size_t>(s)] != 0) continue;
    int v = s;
    bool use_y = true;
    while (true) {
      seen[static_cast<std::size_t>(v)] = 1;
      const int next = use_y ? py[static_cast<std::size_t>(v)] : px[static_cast<std::size_t>(v)];
      if (next == 0) {
        if (!use_y) return std::nullopt;  // ended on a defect of x
        break;
      }
      v = next;
      use_y = !use_y;
    }
  }
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    if (py[static_cast<std::size_t>(s)] == 0) return std::nullopt;  // defect of y left over
    int v = s;
    bool use_y = true;
    while (!seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = 1;
      v = use_y ? py[static_cast<std::size_t>(v)] : px[static_cast<std::size_t>(v)];
      use_y = !use_y;
    }
    ++loops;
  }
  return loops;
}

inline Q qpow(const Q& q, unsigned k) {
  Q r = 1;
  for (unsigned i = 0; i < k; ++i) r *= q;
  return r;
}

/// Determinant over Q by plain Gaussian elimination with row swaps.
inline Q det(std::vector<std::vector<Q>> a) {
  const std::size_t n = a.size();
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

inline std::size_t rank(std::vector<std::vector<Q>> a) {
  std::size_t rk = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rk || a[r][c] == 0) continue;
      const Q f = a[r][c] / a[rk][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rk][k];
    }
    ++rk;
  }
  return rk;
}

/// Gram matrix of the (n, r) cell at delta = q from the brute-force pairing.
inline std::vector<std::vector<Q>> gram_at(int n, int r, const Q& q) {
  const auto caps = cap_diagrams(n, r);
  std::vector<std::vector<Q>> g(caps.size(), std::vector<Q>(caps.size(), 0));
  for (std::size_t i = 0; i < caps.size(); ++i) {
    for (std::size_t j = 0; j < caps.size(); ++j) {
      if (auto l = pairing(n, caps[i], caps[j])) g[i][j] = qpow(q, *l);
    }
  }
  return g;
}

/// Schoolbook division of polynomials with rational coefficients, lowest degree first.
inline std::pair<std::vector<Q>, std::vector<Q>> poly_div(std::vector<Q> a, const std::vector<Q>& b) {
  auto trim = [](std::vector<Q>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  std::vector<Q> quot;
  const std::size_t db = b.size() - 1;
  if (a.size() >= b.size()) quot.assign(a.size() - db, 0);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Q c = a.back() / b.back();
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(quot);
  return {quot, a};
}

}  // namespace oracle
