#pragma once

// Restriction and induction along TL_{n-1} < TL_n < TL_{n+1}, and checks of
// the tower axioms on the Temperley-Lieb category.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cellmod.hpp"
#include "diagrams.hpp"
#include "homsolve.hpp"
#include "linalg.hpp"

namespace tlcat {

/// Cell labels (cap counts) at level n with multiplicities.
struct SupportSet {
  int n = 0;
  std::map<int, int> labels;

  void add(int r, int mult = 1) {
    if (!valid_label(n, r) || mult == 0) return;
    labels[r] += mult;
  }
  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

inline SupportSet res_cell(int n, int p) {
  if (n < 1 || !valid_label(n, p)) throw std::invalid_argument("cell label out of range");
  SupportSet s{n - 1, {}};
  s.add(p);
  s.add(p - 1);
  return s;
}

inline SupportSet ind_cell(int n, int p) {
  if (!valid_label(n, p)) throw std::invalid_argument("cell label out of range");
  SupportSet s{n + 1, {}};
  s.add(p + 1);
  s.add(p);
  return s;
}

/// Res of Delta_n(p) to TL_{n-1} decomposed by the intertwiner solver.
template <class F>
SupportSet res_cell_solver(int n, int p, const LoopParam<F>& param) {
  if (n < 1 || !valid_label(n, p)) throw std::invalid_argument("cell label out of range");
  const ModuleRep res = restrict_rep(cell_rep(n, p), n - 1, 1);
  SupportSet s{n - 1, {}};
  for (const auto& m : decompose_semisimple(res, param)) s.add(m.labels[0], static_cast<int>(m.mult));
  return s;
}

/// Ind of Delta_n(p) via Frobenius reciprocity:
/// [Ind : Delta_{n+1}(r)] = dim hom_{TL_n}(Delta_n(p), Res Delta_{n+1}(r)).
template <class F>
SupportSet ind_cell_frobenius(int n, int p, const LoopParam<F>& param) {
  if (!valid_label(n, p)) throw std::invalid_argument("cell label out of range");
  const ModuleRep src = tensor_rep(cell_rep(n, p), cell_rep(1, 0));
  SupportSet s{n + 1, {}};
  for (int r = 0; 2 * r <= n + 1; ++r) {
    s.add(r, static_cast<int>(hom_dim(src, restrict_rep(cell_rep(n + 1, r), n, 1), param)));
  }
  return s;
}

namespace detail {

struct TensorQuotient {
  std::size_t dim = 0;
  bool alpha_well_defined = true;
  std::set<std::size_t> alpha_hits;  // target basis indices reached by pure tensors
};

// dim of Hom(n, m) (x)_{TL_n} Delta_n(p), where `left` lists diagrams with
// bot = n, together with the gluing map a (x) x -> act(a, x) into `target`.
template <class F>
TensorQuotient balanced_tensor(const std::vector<PlanarDiagram>& left, int n, int p, const CapIndex* target,
                               const LoopParam<F>& param) {
  const CapIndex cells(n, p);
  std::unordered_map<PlanarDiagram, std::size_t, PlanarDiagramHash> index;
  for (std::size_t i = 0; i < left.size(); ++i) index.emplace(left[i], i);
  const std::size_t dx = cells.size();
  auto node = [&](std::size_t a, std::size_t x) { return a * dx + x; };
  MonomialQuotient<F> q(left.size() * dx);
  TensorQuotient out;

  // alpha on a pure tensor: (loops, target index) or zero.
  auto alpha = [&](const PlanarDiagram& a, const CapDiagram& x) -> std::optional<MonoEntry> {
    auto res = act(a, x);
    if (!res) return std::nullopt;
    return MonoEntry{target->at(res->cap), res->loops};
  };

  for (std::size_t ai = 0; ai < left.size(); ++ai) {
    const PlanarDiagram& a = left[ai];
    for (int i = 1; i < n; ++i) {
      const PlanarDiagram c_cell = PlanarDiagram::generator(n, i);
      const ScaledDiagram ac = compose(PlanarDiagram::generator(a.bot(), i), a);  // a . c
      const std::size_t aci = index.at(ac.diagram);
      for (std::size_t xi = 0; xi < dx; ++xi) {
        const auto cx = act(c_cell, cells[xi]);  // c . x
        const F lhs = param.delta_pow(ac.loops);
        if (cx) {
          q.relate(node(aci, xi), lhs, node(ai, cells.at(cx->cap)), param.delta_pow(cx->loops));
        } else {
          q.relate(node(aci, xi), lhs, node(aci, xi), F(0));
        }
        if (target) {
          // alpha((a c) (x) x) must equal alpha(a (x) (c x)).
          auto l = alpha(ac.diagram, cells[xi]);
          std::optional<MonoEntry> r;
          if (cx) r = alpha(a, cx->cap);
          F lv = l ? F(lhs * param.delta_pow(l->loops)) : F(0);
          F rv = (cx && r) ? F(param.delta_pow(cx->loops) * param.delta_pow(r->loops)) : F(0);
          const bool same_row = !l || !r || l->row == r->row;
          if (lv != rv || (!is_zero(lv) && !same_row)) out.alpha_well_defined = false;
        }
      }
    }
  }
  out.dim = q.dimension();
  if (target) {
    for (std::size_t ai = 0; ai < left.size(); ++ai) {
      for (std::size_t xi = 0; xi < dx; ++xi) {
        auto v = alpha(left[ai], cells[xi]);
        if (v && !is_zero(param.delta_pow(v->loops))) out.alpha_hits.insert(v->row);
      }
    }
  }
  return out;
}

}  // namespace detail

/// dim TL_{n+1} (x)_{TL_n} Delta_n(p).
template <class F>
std::size_t induced_dim(int n, int p, const LoopParam<F>& param) {
  if (!valid_label(n, p)) throw std::invalid_argument("cell label out of range");
  return detail::balanced_tensor(enumerate_diagrams(n + 1, n + 1), n, p, nullptr, param).dim;
}

struct AlphaReport {
  int m = 0, n = 0, r = 0;
  int target_r = 0;
  std::size_t tensor_dim = 0;
  std::size_t target_dim = 0;
  bool well_defined = false;
  bool surjective = false;
  bool ok = false;
};

/// Hom(n, m) (x)_{TL_n} Delta_n(r) -> Delta_m(r + (m - n)/2) by gluing.
template <class F>
AlphaReport alpha_iso_check(int m, int n, int r, const LoopParam<F>& param) {
  if (m < 0 || n < 0 || (m - n) % 2 != 0) throw std::invalid_argument("m and n must have equal parity");
  const int target_r = r + (m - n) / 2;
  if (!valid_label(n, r) || !valid_label(m, target_r)) throw std::invalid_argument("cell label out of range");
  const CapIndex target(m, target_r);
  const auto t = detail::balanced_tensor(enumerate_diagrams(n, m), n, r, &target, param);
  AlphaReport rep{m, n, r, target_r, t.dim, target.size(), t.alpha_well_defined, t.alpha_hits.size() == target.size(),
                  false};
  rep.ok = rep.well_defined && rep.surjective && rep.tensor_dim == rep.target_dim;
  return rep;
}

struct Eq1Report {
  AlphaReport alpha;
  SupportSet support;
  SupportSet expected;
  bool ok = false;
};

/// Ind Delta_n(p) computed as Res to TL_{n+1} of Hom(n, n+2) (x)_{TL_n} Delta_n(p),
/// the latter identified with Delta_{n+2}(p+1) by alpha.
template <class F>
Eq1Report eq1_route(int n, int p, const LoopParam<F>& param) {
  Eq1Report rep;
  rep.alpha = alpha_iso_check(n + 2, n, p, param);
  const ModuleRep res = restrict_rep(cell_rep(n + 2, p + 1), n + 1, 1);
  rep.support = SupportSet{n + 1, {}};
  for (const auto& m : decompose_semisimple(res, param)) rep.support.add(m.labels[0], static_cast<int>(m.mult));
  rep.expected = ind_cell(n, p);
  rep.ok = rep.alpha.ok && rep.support == rep.expected;
  return rep;
}

struct MoritaReport {
  int m = 0, n = 0;
  std::size_t rank_onto_small = 0;  // Hom(n->m) x Hom(m->n) composed into End(m)
  std::size_t dim_small = 0;
  std::size_t rank_onto_large = 0;  // Hom(m->n) x Hom(n->m) composed into End(n)
  std::size_t dim_large = 0;
  bool surjective = false;
};

/// Rank of the composition pairings between End(m) and End(n), m <= n.
/// Composition through the larger object covers End(m); the other direction
/// only reaches diagrams with at most m through strands.
template <class F>
MoritaReport morita_rho_rank(int m, int n, const LoopParam<F>& param) {
  if (m < 0 || m > n || (n - m) % 2 != 0) throw std::invalid_argument("need m <= n of equal parity");
  const auto up = enumerate_diagrams(m, n), down = enumerate_diagrams(n, m);
  auto rank_into = [&](int k, bool small) {
    const auto basis = enumerate_diagrams(k, k);
    std::unordered_map<PlanarDiagram, std::size_t, PlanarDiagramHash> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    SparseReducer<F> red(basis.size());
    for (const auto& f : up) {
      for (const auto& g : down) {
        const ScaledDiagram c = small ? compose(f, g) : compose(g, f);
        const F v = param.delta_pow(c.loops);
        if (is_zero(v)) continue;
        red.add(SparseVec<F>{{index.at(c.diagram), v}});
        if (red.rank() == basis.size()) return red.rank();
      }
    }
    return red.rank();
  };
  MoritaReport rep{m, n, 0, catalan(m), 0, catalan(n), false};
  rep.rank_onto_small = rank_into(m, true);
  rep.rank_onto_large = rank_into(n, false);
  rep.surjective = rep.rank_onto_small == rep.dim_small;
  return rep;
}

struct AxiomReport {
  std::string axiom;
  int n = 0;
  bool pass = false;
  std::string witness;
  std::vector<std::string> failures;
};

/// Moving the rightmost bottom point of an (n-1, n-1)-diagram to the top-right
/// corner keeps the cyclic order, so the partner table carries over unchanged.
inline PlanarDiagram bend(const PlanarDiagram& d) {
  if (d.bot() != d.top() || d.bot() < 1) throw std::invalid_argument("bend needs a square diagram");
  return PlanarDiagram(d.bot() - 1, d.top() + 1, d.partner());
}

inline AxiomReport check_A2(int n) {
  if (n < 2) throw std::invalid_argument("check_A2 needs n >= 2");
  AxiomReport rep{"A2", n, true, {}, {}};
  const auto basis = enumerate_diagrams(n - 1, n - 1);
  const auto target = enumerate_diagrams(n - 2, n);
  if (basis.size() != catalan(n - 1) || target.size() != catalan(n - 1)) {
    rep.failures.push_back("|Hom(n-2, n)| differs from dim TL_{n-1}");
  }
  std::set<PlanarDiagram> image;
  for (const auto& d : basis) image.insert(bend(d));
  if (image != std::set<PlanarDiagram>(target.begin(), target.end())) {
    rep.failures.push_back("bending is not a bijection onto Hom(n-2, n)");
  }
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& d = basis[k];
    for (int i = 1; i <= n - 2; ++i) {
      const ScaledDiagram lhs = compose(bend(d), PlanarDiagram::generator(n, i));
      const ScaledDiagram rhs = compose(d, PlanarDiagram::generator(n - 1, i));
      if (lhs.loops != rhs.loops || !(lhs.diagram == bend(rhs.diagram))) {
        rep.failures.push_back("left e" + std::to_string(i) + " on basis diagram " + std::to_string(k));
      }
    }
    for (int i = 1; i <= n - 3; ++i) {
      const ScaledDiagram lhs = compose(PlanarDiagram::generator(n - 2, i), bend(d));
      const ScaledDiagram rhs = compose(PlanarDiagram::generator(n - 1, i), d);
      if (lhs.loops != rhs.loops || !(lhs.diagram == bend(rhs.diagram))) {
        rep.failures.push_back("right e" + std::to_string(i) + " on basis diagram " + std::to_string(k));
      }
    }
  }
  rep.pass = rep.failures.empty();
  rep.witness = std::to_string(basis.size()) + " diagrams bent, " + std::to_string(n - 2) + " left and " +
                std::to_string(std::max(0, n - 3)) + " right generators checked";
  return rep;
}

/// The cell of TL_n with m - 2*lam defects restricts into cells with one defect
/// more or one fewer. `solver_bound` enables the intertwiner cross-check up to that n.
template <class F>
AxiomReport check_A3(int m, int n, int lam, const LoopParam<F>& param, int solver_bound = 8) {
  if (m > n || (n - m) % 2 != 0 || !valid_label(m, lam) || n < 1) {
    throw std::invalid_argument("check_A3 needs m <= n, n - m even, lam valid at m");
  }
  AxiomReport rep{"A3", n, true, {}, {}};
  const int d = m - 2 * lam;
  const int r_n = (n - d) / 2;
  const SupportSet supp = res_cell(n, r_n);
  std::string seen;
  for (const auto& [r, mult] : supp.labels) {
    const int dd = (n - 1) - 2 * r;
    seen += (seen.empty() ? "" : ",") + std::to_string(dd);
    if (dd != d - 1 && dd != d + 1) rep.failures.push_back("defect label " + std::to_string(dd) + " outside {d-1, d+1}");
  }
  if (n <= solver_bound && !(res_cell_solver(n, r_n, param) == supp)) {
    rep.failures.push_back("restriction rule disagrees with the solver");
  }
  rep.pass = rep.failures.empty();
  rep.witness = "defects " + std::to_string(d) + " -> {" + seen + "}";
  return rep;
}

template <class F>
AxiomReport check_A4(int n, int lam, const LoopParam<F>& param) {
  if (n < 1 || !valid_label(n, lam)) throw std::invalid_argument("check_A4 needs n >= 1 and lam valid at n");
  AxiomReport rep{"A4", n, false, {}, {}};
  for (int mu = 0; 2 * mu <= n - 1; ++mu) {
    if (!ind_cell(n - 1, mu).labels.count(lam)) continue;
    const std::size_t h = hom_dim(tensor_rep(cell_rep(n - 1, mu), cell_rep(1, 0)),
                                  restrict_rep(cell_rep(n, lam), n - 1, 1), param);
    if (h >= 1) {
      rep.pass = true;
      rep.witness = "mu=" + std::to_string(mu) + " hom_dim=" + std::to_string(h);
      return rep;
    }
  }
  rep.failures.push_back("no witness");
  return rep;
}

struct TowerReport {
  int max_n = 0;
  std::vector<AxiomReport> checks;
  std::vector<MoritaReport> morita;
  bool pass = true;
};

template <class F>
TowerReport tower_axioms(int max_n, const LoopParam<F>& param) {
  TowerReport rep;
  rep.max_n = max_n;
  for (int n = 2; n <= max_n; ++n) rep.checks.push_back(check_A2(n));
  for (int n = 1; n <= max_n; ++n) {
    for (int m = n % 2; m <= n; m += 2) {
      for (int lam = 0; 2 * lam <= m; ++lam) rep.checks.push_back(check_A3(m, n, lam, param));
    }
    for (int lam = 0; 2 * lam <= n; ++lam) rep.checks.push_back(check_A4(n, lam, param));
  }
  for (int n = 0; n <= max_n; ++n) {
    for (int m = n % 2; m <= n; m += 2) rep.morita.push_back(morita_rho_rank(m, n, param));
  }
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  for (const auto& r : rep.morita) rep.pass = rep.pass && r.surjective;
  return rep;
}

}  // namespace tlcat
