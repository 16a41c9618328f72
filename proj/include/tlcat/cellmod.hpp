#pragma once

// Cell modules of Temperley-Lieb algebras via cap diagrams, the bilinear form
// on them, Gram determinants and the semisimplicity/quasi-heredity tests.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coeffring.hpp"
#include "diagrams.hpp"
#include "linalg.hpp"

namespace tlcat {

using Cap = std::pair<int, int>;  // 1-based, first < second

/// (n, r)-cap diagram: r non-crossing caps on n points, no defect under a cap.
class CapDiagram {
 public:
  CapDiagram() = default;

  CapDiagram(int n, const std::vector<Cap>& caps) : n_(n), partner_(static_cast<std::size_t>(n), -1) {
    if (n < 0) throw std::invalid_argument("negative point count");
    for (auto [i, j] : caps) {
      if (i > j) std::swap(i, j);
      if (i < 1 || j > n || i == j) throw std::invalid_argument("cap endpoint out of range");
      if (partner_[i - 1] != -1 || partner_[j - 1] != -1) throw std::invalid_argument("caps share an endpoint");
      partner_[i - 1] = j - 1;
      partner_[j - 1] = i - 1;
    }
    validate();
  }

  static CapDiagram all_defects(int n) { return CapDiagram(n, {}); }

  /// Top row of a diagram read as a cap diagram: its T-T arcs are the caps.
  static CapDiagram top_half(const PlanarDiagram& d) {
    std::vector<Cap> caps;
    for (const auto& [a, b] : d.arcs()) {
      if (a.side == Side::T && b.side == Side::T) caps.emplace_back(a.index, b.index);
    }
    return CapDiagram(d.top(), caps);
  }

  /// Bottom row read as a cap diagram.
  static CapDiagram bottom_half(const PlanarDiagram& d) {
    std::vector<Cap> caps;
    for (const auto& [a, b] : d.arcs()) {
      if (a.side == Side::B && b.side == Side::B) caps.emplace_back(a.index, b.index);
    }
    return CapDiagram(d.bot(), caps);
  }

  int n() const { return n_; }
  int r() const { return static_cast<int>(std::count_if(partner_.begin(), partner_.end(), [](int p) { return p >= 0; })) / 2; }
  int defect_count() const { return n_ - 2 * r(); }
  const std::vector<int>& partner() const { return partner_; }

  std::vector<Cap> caps() const {
    std::vector<Cap> out;
    for (int i = 0; i < n_; ++i) {
      const int j = partner_[static_cast<std::size_t>(i)];
      if (j > i) out.emplace_back(i + 1, j + 1);
    }
    return out;
  }

  std::vector<int> defects() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) {
      if (partner_[static_cast<std::size_t>(i)] < 0) out.push_back(i + 1);
    }
    return out;
  }

  /// The cap diagram as a (d, n)-diagram: caps on top, k-th defect joined to B_k.
  PlanarDiagram as_diagram() const {
    std::vector<Arc> arcs;
    for (auto [i, j] : caps()) arcs.push_back({{Side::T, i}, {Side::T, j}});
    int k = 0;
    for (int i : defects()) arcs.push_back({{Side::B, ++k}, {Side::T, i}});
    return PlanarDiagram::from_arcs(defect_count(), n_, arcs);
  }

  friend bool operator==(const CapDiagram&, const CapDiagram&) = default;
  /// Canonical order: point count, then lexicographic on the sorted cap list.
  friend bool operator<(const CapDiagram& a, const CapDiagram& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.caps() < b.caps();
  }

 private:
  void validate() const {
    int depth = 0;
    for (int i = 0; i < n_; ++i) {
      const int j = partner_[static_cast<std::size_t>(i)];
      if (j < 0) {
        if (depth != 0) throw std::invalid_argument("defect enclosed by a cap");
      } else if (j > i) {
        ++depth;
      } else {
        --depth;
      }
    }
    // Nesting: caps must close in stack order.
    std::vector<int> stack;
    for (int i = 0; i < n_; ++i) {
      const int j = partner_[static_cast<std::size_t>(i)];
      if (j < 0) continue;
      if (j > i) {
        stack.push_back(i);
      } else {
        if (stack.empty() || stack.back() != j) throw std::invalid_argument("caps cross");
        stack.pop_back();
      }
    }
  }

  int n_ = 0;
  std::vector<int> partner_;
};

struct CapDiagramHash {
  std::size_t operator()(const CapDiagram& c) const noexcept {
    std::size_t h = static_cast<std::size_t>(c.n());
    for (int v : c.partner()) h = h * 131u + static_cast<std::size_t>(v + 1);
    return h;
  }
};

inline int defects(int n, int r) { return n - 2 * r; }

inline bool valid_label(int n, int r) { return n >= 0 && r >= 0 && 2 * r <= n; }

namespace detail {

inline void caps_rec(int n, int pos, int caps_left, std::vector<int>& stack, std::vector<Cap>& cur,
                     std::vector<std::vector<Cap>>& out) {
  const int remaining = n - pos;
  const int open = static_cast<int>(stack.size());
  if (remaining == 0) {
    if (open == 0 && caps_left == 0) out.push_back(cur);
    return;
  }
  // Points still needed: close every open cap and place every unopened cap.
  if (open + 2 * caps_left > remaining) return;
  if (open == 0 && remaining > 2 * caps_left) {
    caps_rec(n, pos + 1, caps_left, stack, cur, out);  // defect
  }
  if (caps_left > 0) {
    stack.push_back(pos + 1);
    caps_rec(n, pos + 1, caps_left - 1, stack, cur, out);
    stack.pop_back();
  }
  if (open > 0) {
    const int i = stack.back();
    stack.pop_back();
    cur.emplace_back(i, pos + 1);
    caps_rec(n, pos + 1, caps_left, stack, cur, out);
    cur.pop_back();
    stack.push_back(i);
  }
}

}  // namespace detail

/// Basis of the cell module of TL_n with r caps, in canonical order.
inline std::vector<CapDiagram> enumerate_caps(int n, int r) {
  std::vector<CapDiagram> out;
  if (!valid_label(n, r)) return out;
  std::vector<std::vector<Cap>> raw;
  std::vector<int> stack;
  std::vector<Cap> cur;
  detail::caps_rec(n, 0, r, stack, cur, raw);
  for (auto& c : raw) std::sort(c.begin(), c.end());
  std::sort(raw.begin(), raw.end());
  out.reserve(raw.size());
  for (const auto& c : raw) out.emplace_back(n, c);
  return out;
}

/// Draws the caps hanging from a row of n points; defects are stubs.
inline std::string render_cap(const CapDiagram& c) {
  std::vector<int> partner(static_cast<std::size_t>(c.n()), -1);
  for (auto [i, j] : c.caps()) {
    partner[static_cast<std::size_t>(c.n() - i)] = c.n() - j;
    partner[static_cast<std::size_t>(c.n() - j)] = c.n() - i;
  }
  return detail::render_partial(0, c.n(), partner);
}

/// Position lookup into a canonical basis.
class CapIndex {
 public:
  CapIndex() = default;
  explicit CapIndex(std::vector<CapDiagram> basis) : basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) pos_.emplace(basis_[i], i);
  }
  CapIndex(int n, int r) : CapIndex(enumerate_caps(n, r)) {}
  std::size_t size() const { return basis_.size(); }
  const std::vector<CapDiagram>& basis() const { return basis_; }
  const CapDiagram& operator[](std::size_t i) const { return basis_[i]; }
  std::optional<std::size_t> find(const CapDiagram& c) const {
    auto it = pos_.find(c);
    if (it == pos_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t at(const CapDiagram& c) const {
    auto i = find(c);
    if (!i) throw std::out_of_range("cap diagram not in basis");
    return *i;
  }

 private:
  std::vector<CapDiagram> basis_;
  std::unordered_map<CapDiagram, std::size_t, CapDiagramHash> pos_;
};

/// delta^loops times a cap diagram.
struct ScaledCap {
  unsigned loops = 0;
  CapDiagram cap;
  friend bool operator==(const ScaledCap&, const ScaledCap&) = default;
};

/// Glues x beneath a and reads off a's top row, without truncation. The number
/// of caps can grow when a joins two defects of x.
inline ScaledCap act_raw(const PlanarDiagram& a, const CapDiagram& x) {
  if (a.bot() != x.n()) throw std::invalid_argument("arity mismatch");
  const ScaledDiagram g = compose(x.as_diagram(), a);
  return {g.loops, CapDiagram::top_half(g.diagram)};
}

/// Cell action modulo lower cells: zero when the cap count rises. `a` may be
/// rectangular (bot = x.n), giving the map Hom(n, m) x Cell(n) -> Cell(m).
inline std::optional<ScaledCap> act(const PlanarDiagram& a, const CapDiagram& x) {
  if (a.bot() != x.n()) throw std::invalid_argument("arity mismatch");
  const ScaledDiagram g = compose(x.as_diagram(), a);
  if (g.diagram.through_strands() < x.defect_count()) return std::nullopt;
  return ScaledCap{g.loops, CapDiagram::top_half(g.diagram)};
}

/// Sparse element of a cell module over F.
template <class F>
struct CellVector {
  int n = 0;
  int r = 0;
  std::map<std::vector<Cap>, F> coeffs;  // keyed by sorted cap list

  void add(const CapDiagram& c, const F& v) {
    if (is_zero(v)) return;
    auto key = c.caps();
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
      coeffs.emplace(std::move(key), v);
    } else {
      it->second = it->second + v;
      if (is_zero(it->second)) coeffs.erase(it);
    }
  }
  bool is_zero_vector() const { return coeffs.empty(); }
  friend bool operator==(const CellVector&, const CellVector&) = default;
};

template <class F>
CellVector<F> act_vector(const PlanarDiagram& a, const CellVector<F>& v, const LoopParam<F>& param) {
  CellVector<F> out;
  out.n = a.top();
  out.r = v.r + (a.top() - a.bot()) / 2;
  for (const auto& [caps, c] : v.coeffs) {
    auto res = act(a, CapDiagram(v.n, caps));
    if (res) out.add(res->cap, c * param.delta_pow(res->loops));
  }
  return out;
}

/// Basis diagram C_{S,T}: S on the top row, T on the bottom row, defects joined
/// in order.
inline PlanarDiagram assemble(const CapDiagram& S, const CapDiagram& T) {
  if (S.defect_count() != T.defect_count()) throw std::invalid_argument("defect-count mismatch");
  std::vector<Arc> arcs;
  for (auto [i, j] : S.caps()) arcs.push_back({{Side::T, i}, {Side::T, j}});
  for (auto [i, j] : T.caps()) arcs.push_back({{Side::B, i}, {Side::B, j}});
  const auto ds = S.defects(), dt = T.defects();
  for (std::size_t k = 0; k < ds.size(); ++k) arcs.push_back({{Side::B, dt[k]}, {Side::T, ds[k]}});
  return PlanarDiagram::from_arcs(T.n(), S.n(), arcs);
}

struct Decomposition {
  CapDiagram S;  // top half
  CapDiagram T;  // bottom half
  int r = 0;
};

inline Decomposition decompose(const PlanarDiagram& d) {
  Decomposition out{CapDiagram::top_half(d), CapDiagram::bottom_half(d), 0};
  out.r = out.S.r();
  return out;
}

/// phi(T, X) as a power of delta, or nullopt when it vanishes modulo lower cells.
inline std::optional<unsigned> gram_pair_loops(const CapDiagram& T, const CapDiagram& X) {
  if (T.n() != X.n() || T.r() != X.r()) throw std::invalid_argument("gram pair of mismatched cap diagrams");
  const ScaledDiagram g = compose(X.as_diagram(), involution(T.as_diagram()));
  if (g.diagram.through_strands() != X.defect_count()) return std::nullopt;
  return g.loops;
}

template <class F>
F gram_pair(const CapDiagram& T, const CapDiagram& X, const LoopParam<F>& param) {
  auto l = gram_pair_loops(T, X);
  return l ? param.delta_pow(*l) : F(0);
}

/// Entries of the Gram matrix as delta-powers (nullopt = 0), canonical basis order.
inline std::vector<std::vector<std::optional<unsigned>>> gram_loops(int n, int r) {
  const auto basis = enumerate_caps(n, r);
  std::vector<std::vector<std::optional<unsigned>>> g(basis.size(), std::vector<std::optional<unsigned>>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      g[i][j] = gram_pair_loops(basis[i], basis[j]);
      g[j][i] = g[i][j];
    }
  }
  return g;
}

template <class F>
Matrix<F> gram_matrix(int n, int r, const LoopParam<F>& param) {
  const auto loops = gram_loops(n, r);
  Matrix<F> m(loops.size(), std::vector<F>(loops.size(), F(0)));
  for (std::size_t i = 0; i < loops.size(); ++i) {
    for (std::size_t j = 0; j < loops.size(); ++j) {
      if (loops[i][j]) m[i][j] = param.delta_pow(*loops[i][j]);
    }
  }
  return m;
}

inline Matrix<DeltaPoly> gram_matrix_poly(int n, int r) {
  const auto loops = gram_loops(n, r);
  Matrix<DeltaPoly> m(loops.size(), std::vector<DeltaPoly>(loops.size()));
  for (std::size_t i = 0; i < loops.size(); ++i) {
    for (std::size_t j = 0; j < loops.size(); ++j) {
      if (loops[i][j]) m[i][j] = DeltaPoly::monomial(*loops[i][j]);
    }
  }
  return m;
}

/// Gram determinant as a polynomial in delta. Empty cells give 1.
inline DeltaPoly gram_det(int n, int r) {
  if (!valid_label(n, r)) throw std::invalid_argument("cell label out of range");
  return bareiss_det(gram_matrix_poly(n, r));
}

inline std::size_t radical_dim(int n, int r, const Rational& q) {
  const auto g = gram_matrix(n, r, Numeric(q));
  return g.size() - rank(g);
}

struct DetEntry {
  int r = 0;
  DeltaPoly det;        // generic determinant
  std::string value;    // printed value in the session's mode
  bool nonzero = false;
};

struct Certificate {
  int n = 0;
  std::string mode;
  bool holds = false;
  std::vector<DetEntry> entries;
  std::optional<int> witness;  // first failing label
};

template <class F>
Certificate is_semisimple(int n, const LoopParam<F>& param) {
  Certificate c{n, param.describe(), true, {}, std::nullopt};
  for (int r = 0; 2 * r <= n; ++r) {
    DetEntry e{r, gram_det(n, r), {}, false};
    if constexpr (LoopParam<F>::generic) {
      e.nonzero = !e.det.is_zero();
      e.value = to_string(e.det);
    } else {
      const Rational v = specialize(e.det, param.value);
      e.nonzero = v != 0;
      e.value = v.get_str();
    }
    if (!e.nonzero && c.holds) {
      c.holds = false;
      c.witness = r;
    }
    c.entries.push_back(std::move(e));
  }
  return c;
}

/// Quasi-hereditary iff every form phi_(n,r) has a nonzero entry.
template <class F>
Certificate is_quasi_hereditary(int n, const LoopParam<F>& param) {
  Certificate c{n, param.describe(), true, {}, std::nullopt};
  for (int r = 0; 2 * r <= n; ++r) {
    const auto loops = gram_loops(n, r);
    bool nonzero = false;
    for (const auto& row : loops) {
      for (const auto& e : row) {
        if (e && !is_zero(param.delta_pow(*e))) nonzero = true;
      }
    }
    DetEntry e{r, DeltaPoly{}, nonzero ? "nonzero" : "0", nonzero};
    if (!nonzero && c.holds) {
      c.holds = false;
      c.witness = r;
    }
    c.entries.push_back(std::move(e));
  }
  return c;
}

}  // namespace tlcat
