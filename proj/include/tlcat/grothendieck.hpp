#pragma once

// Grothendieck groups of the Temperley-Lieb tower: walled cap diagrams,
// the filtration of restricted cell modules, structure constants of the
// induction product, the restriction coproduct and the Mackey comparison.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cellmod.hpp"
#include "diagrams.hpp"
#include "homsolve.hpp"
#include "tower.hpp"

namespace tlcat {

/// Grade n and cell label r of a class [Delta_n(r)].
using CellClass = std::pair<int, int>;

/// Integer combination of classes [Delta_n(r)].
struct G0Vector {
  std::map<CellClass, std::int64_t> terms;

  static G0Vector cell(int n, int r) {
    if (!valid_label(n, r)) throw std::invalid_argument("cell label out of range");
    G0Vector v;
    v.terms[{n, r}] = 1;
    return v;
  }
  void add(int n, int r, std::int64_t k) {
    if (k == 0) return;
    if (!valid_label(n, r)) throw std::invalid_argument("cell label out of range");
    auto& slot = terms[{n, r}];
    slot += k;
    if (slot == 0) terms.erase({n, r});
  }
  std::int64_t coeff(int n, int r) const {
    auto it = terms.find({n, r});
    return it == terms.end() ? 0 : it->second;
  }
  G0Vector& operator+=(const G0Vector& o) {
    for (const auto& [c, k] : o.terms) add(c.first, c.second, k);
    return *this;
  }
  friend G0Vector operator+(G0Vector a, const G0Vector& b) { return a += b; }
  friend G0Vector operator-(G0Vector a, const G0Vector& b) {
    for (const auto& [c, k] : b.terms) a.add(c.first, c.second, -k);
    return a;
  }
  friend bool operator==(const G0Vector&, const G0Vector&) = default;
};

/// Element of a k-fold tensor power of G0: each key lists one class per factor.
struct G0Tensor {
  std::map<std::vector<CellClass>, std::int64_t> terms;

  void add(const std::vector<CellClass>& key, std::int64_t k) {
    if (k == 0) return;
    auto& slot = terms[key];
    slot += k;
    if (slot == 0) terms.erase(key);
  }
  friend bool operator==(const G0Tensor&, const G0Tensor&) = default;
};

// ---------------------------------------------------------------------------
// Walled cap diagrams

struct TripleIndex {
  int s = 0;   // arcs crossing the wall
  int lm = 0;  // caps left of the wall
  int ln = 0;  // caps right of the wall
  friend bool operator==(const TripleIndex&, const TripleIndex&) = default;
  friend auto operator<=>(const TripleIndex&, const TripleIndex&) = default;
};

/// Filtration order: s ascending, then l_m descending, then l_n descending.
struct FiltrationLess {
  bool operator()(const TripleIndex& a, const TripleIndex& b) const {
    if (a.s != b.s) return a.s < b.s;
    if (a.lm != b.lm) return a.lm > b.lm;
    return a.ln > b.ln;
  }
};

struct WalledCapDiagram {
  int m = 0;
  int n = 0;
  CapDiagram cap;  // on m + n points, wall between m and m + 1

  TripleIndex triple() const {
    TripleIndex t;
    for (auto [i, j] : cap.caps()) {
      if (j <= m) {
        ++t.lm;
      } else if (i > m) {
        ++t.ln;
      } else {
        ++t.s;
      }
    }
    return t;
  }
  friend bool operator==(const WalledCapDiagram&, const WalledCapDiagram&) = default;
};

/// Draws a walled cap diagram as an (m, n)-diagram: points 1..m on the top row
/// left to right, points m+1..m+n on the bottom row right to left.
inline std::string render_walled(const WalledCapDiagram& w) {
  const int m = w.m, n = w.n;
  auto pos = [&](int point) { return point <= m ? n + (m - point) : n - (point - m); };
  std::vector<int> partner(static_cast<std::size_t>(m + n), -1);
  for (auto [i, j] : w.cap.caps()) {
    partner[static_cast<std::size_t>(pos(i))] = pos(j);
    partner[static_cast<std::size_t>(pos(j))] = pos(i);
  }
  return detail::render_partial(n, m, partner);
}

inline std::vector<std::pair<WalledCapDiagram, TripleIndex>> enumerate_walled(int m, int n, int r) {
  std::vector<std::pair<WalledCapDiagram, TripleIndex>> out;
  for (auto& c : enumerate_caps(m + n, r)) {
    WalledCapDiagram w{m, n, std::move(c)};
    const TripleIndex t = w.triple();
    out.emplace_back(std::move(w), t);
  }
  return out;
}

inline std::set<TripleIndex> walled_triples(int m, int n, int r) {
  std::set<TripleIndex> out;
  for (const auto& [w, t] : enumerate_walled(m, n, r)) out.insert(t);
  return out;
}

struct ScaledWalled {
  unsigned loops = 0;
  WalledCapDiagram walled;
};

/// The diagram a (x) b glued on top of w, read without truncation.
inline ScaledWalled walled_action_raw(const PlanarDiagram& a, const PlanarDiagram& b, const WalledCapDiagram& w) {
  if (a.bot() != w.m || a.top() != w.m || b.bot() != w.n || b.top() != w.n) throw std::invalid_argument("arity mismatch");
  ScaledCap s = act_raw(juxtapose(a, b), w.cap);
  return {s.loops, WalledCapDiagram{w.m, w.n, std::move(s.cap)}};
}

/// The action on the restricted cell module (zero when the cap count rises).
inline std::optional<ScaledWalled> walled_action(const PlanarDiagram& a, const PlanarDiagram& b,
                                                 const WalledCapDiagram& w) {
  if (a.bot() != w.m || a.top() != w.m || b.bot() != w.n || b.top() != w.n) throw std::invalid_argument("arity mismatch");
  auto s = act(juxtapose(a, b), w.cap);
  if (!s) return std::nullopt;
  return ScaledWalled{s->loops, WalledCapDiagram{w.m, w.n, std::move(s->cap)}};
}

/// Joins the s rightmost defects of u to the s leftmost defects of v, nested.
inline WalledCapDiagram sigma_add_through(const CapDiagram& u, const CapDiagram& v, int s) {
  const auto du = u.defects(), dv = v.defects();
  if (s < 0 || s > static_cast<int>(du.size()) || s > static_cast<int>(dv.size())) {
    throw std::invalid_argument("cannot add through strings");
  }
  const int m = u.n();
  std::vector<Cap> caps = u.caps();
  for (auto [i, j] : v.caps()) caps.emplace_back(m + i, m + j);
  for (int k = 0; k < s; ++k) caps.emplace_back(du[du.size() - 1 - static_cast<std::size_t>(k)], m + dv[static_cast<std::size_t>(k)]);
  return WalledCapDiagram{m, v.n(), CapDiagram(m + v.n(), caps)};
}

struct Layer {
  TripleIndex triple;
  std::size_t dim = 0;        // |caps(m, l_m)| * |caps(n, l_n)|
  std::size_t count = 0;      // walled diagrams carrying this triple
};

/// Layers of the filtration of Delta_{m+n}(r) restricted to TL_m x TL_n, in
/// filtration order.
inline std::vector<Layer> composition_series(int m, int n, int r) {
  if (m < 0 || n < 0 || !valid_label(m + n, r)) throw std::invalid_argument("cell label out of range");
  std::map<TripleIndex, std::size_t, FiltrationLess> counts;
  for (const auto& [w, t] : enumerate_walled(m, n, r)) ++counts[t];
  std::vector<Layer> out;
  for (const auto& [t, c] : counts) {
    out.push_back({t, enumerate_caps(m, t.lm).size() * enumerate_caps(n, t.ln).size(), c});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure constants a^{(m|n)}_{(p,q,r)}

enum class Method { Closed, Walled, Hom };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::Closed:
      return "closed";
    case Method::Walled:
      return "walled";
    case Method::Hom:
      return "hom";
  }
  return "?";
}

inline int struct_const_closed(int m, int n, int p, int q, int r) {
  if (m < 0 || n < 0 || !valid_label(m, p) || !valid_label(n, q) || !valid_label(m + n, r)) return 0;
  const int s = r - p - q;
  return (s >= 0 && m - s >= 2 * p && n - s >= 2 * q) ? 1 : 0;
}

inline int struct_const_walled(int m, int n, int p, int q, int r) {
  if (m < 0 || n < 0 || !valid_label(m, p) || !valid_label(n, q) || !valid_label(m + n, r)) return 0;
  const int s = r - p - q;
  if (s < 0) return 0;
  return walled_triples(m, n, r).count(TripleIndex{s, p, q}) ? 1 : 0;
}

template <class F>
int struct_const_hom(int m, int n, int p, int q, int r, const LoopParam<F>& param) {
  if (m < 0 || n < 0 || !valid_label(m, p) || !valid_label(n, q) || !valid_label(m + n, r)) return 0;
  return static_cast<int>(
      hom_dim(tensor_rep(cell_rep(m, p), cell_rep(n, q)), restrict_rep(cell_rep(m + n, r), m, n), param));
}

inline int struct_const(int m, int n, int p, int q, int r, Method method = Method::Closed) {
  switch (method) {
    case Method::Closed:
      return struct_const_closed(m, n, p, q, r);
    case Method::Walled:
      return struct_const_walled(m, n, p, q, r);
    case Method::Hom:
      return struct_const_hom(m, n, p, q, r, Generic{});
  }
  return 0;
}

/// Induction product, extended bilinearly over all terms.
inline G0Vector product(const G0Vector& x, const G0Vector& y, Method method = Method::Closed) {
  G0Vector out;
  for (const auto& [cx, kx] : x.terms) {
    for (const auto& [cy, ky] : y.terms) {
      const int m = cx.first, n = cy.first;
      for (int r = 0; 2 * r <= m + n; ++r) {
        const int a = struct_const(m, n, cx.second, cy.second, r, method);
        if (a) out.add(m + n, r, kx * ky * a);
      }
    }
  }
  return out;
}

inline G0Vector unit() { return G0Vector::cell(0, 0); }

inline std::int64_t counit(const G0Vector& x) { return x.coeff(0, 0); }

/// Restriction coproduct: one term [Delta_k(l_k)] (x) [Delta_l(l_l)] for each
/// triple realized by a (k|l, r)-walled cap diagram.
inline G0Tensor coproduct(const G0Vector& x) {
  G0Tensor out;
  for (const auto& [c, k] : x.terms) {
    const auto [n, r] = c;
    for (int a = 0; a <= n; ++a) {
      for (const auto& t : walled_triples(a, n - a, r)) out.add({{a, t.lm}, {n - a, t.ln}}, k);
    }
  }
  return out;
}

/// Applies the coproduct to factor `pos` of every term.
inline G0Tensor coproduct_at(const G0Tensor& x, std::size_t pos) {
  G0Tensor out;
  for (const auto& [key, k] : x.terms) {
    const G0Tensor d = coproduct(G0Vector::cell(key[pos].first, key[pos].second));
    for (const auto& [pair, kk] : d.terms) {
      std::vector<CellClass> nk(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(pos));
      nk.insert(nk.end(), pair.begin(), pair.end());
      nk.insert(nk.end(), key.begin() + static_cast<std::ptrdiff_t>(pos) + 1, key.end());
      out.add(nk, k * kk);
    }
  }
  return out;
}

inline G0Tensor as_tensor(const G0Vector& x) {
  G0Tensor t;
  for (const auto& [c, k] : x.terms) t.add({c}, k);
  return t;
}

/// The (k|l) component of the coproduct as a matrix of classes.
inline G0Tensor coproduct_component(const G0Vector& x, int k) {
  G0Tensor out;
  for (const auto& [key, v] : coproduct(x).terms) {
    if (key[0].first == k) out.add(key, v);
  }
  return out;
}

struct MackeyReport {
  int n = 0, p = 0;
  G0Vector left;   // Res_{n|1} Ind (Delta_n(p) (x) Delta_1(0)), as classes at grade n
  G0Vector right;  // sum over t + s = 1 of twisted inductions, at grade n
  G0Vector left_by_rules;
  bool equal = false;
  G0Vector difference;  // right - left
};

/// Both sides of the Mackey-type identity for M = Delta_n(p), N = Delta_1(0), k = 1.
inline MackeyReport mackey_check(int n, int p) {
  if (n < 1 || !valid_label(n, p)) throw std::invalid_argument("cell label out of range");
  MackeyReport rep;
  rep.n = n;
  rep.p = p;
  const G0Vector M = G0Vector::cell(n, p);
  const G0Vector N = G0Vector::cell(1, 0);

  // Left: restrict the product to TL_n x TL_1 and drop the trivial TL_1 factor.
  for (const auto& [key, k] : coproduct_component(product(M, N), n).terms) {
    rep.left.add(key[0].first, key[0].second, k);
  }
  for (const auto& [r, k] : ind_cell(n, p).labels) {
    for (const auto& [rr, kk] : res_cell(n + 1, r).labels) rep.left_by_rules.add(n, rr, k * kk);
  }

  // Right, t = 0: M itself. t = 1: Res M to TL_{n-1} x TL_1, then the TL_1
  // factor of M is merged with N and induced back up to TL_n.
  rep.right += M;
  for (const auto& [key, k] : coproduct_component(M, n - 1).terms) {
    const G0Vector part = product(G0Vector::cell(key[0].first, key[0].second), N);
    for (const auto& [c, kk] : part.terms) rep.right.add(c.first, c.second, k * kk);
  }
  rep.equal = rep.left == rep.right;
  rep.difference = rep.right - rep.left;
  return rep;
}

}  // namespace tlcat
