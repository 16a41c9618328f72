#pragma once

// Aggregated invariant suites. A mutation can be injected to confirm that the
// suites notice a broken implementation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cellmod.hpp"
#include "diagrams.hpp"
#include "grothendieck.hpp"
#include "homsolve.hpp"
#include "tower.hpp"

namespace tlcat {

enum class Mutation { None, ClosedFormulaTypo, DropLoop, ResRuleShift };

inline Mutation parse_mutation(const std::string& s) {
  if (s.empty() || s == "none") return Mutation::None;
  if (s == "closed-formula-typo") return Mutation::ClosedFormulaTypo;
  if (s == "drop-loop") return Mutation::DropLoop;
  if (s == "res-rule-shift") return Mutation::ResRuleShift;
  throw std::invalid_argument("unknown mutation '" + s + "'");
}

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures = {};  // first few witnesses only
  bool pass() const { return failed == 0; }

  void expect(bool ok, const std::function<std::string()>& witness) {
    ++checks;
    if (ok) return;
    if (++failed <= 5) failures.push_back(witness());
  }
};

struct VerifyReport {
  int max_n = 0;
  std::string mutation;
  std::vector<SuiteResult> suites;
  bool pass() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass(); });
  }
};

namespace detail {

inline std::string cell_name(int n, int r) { return "(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

inline std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return c;
}

/// Nonzero test for the generic Gram determinant of a large cell: a nonzero
/// value at delta = 3 modulo some prime proves the polynomial nonzero. Falls
/// back to the exact determinant if every residue vanishes.
inline bool gram_det_nonzero(int n, int r) {
  if (n <= 8) return !gram_det(n, r).is_zero();
  const auto loops = gram_loops(n, r);
  const std::size_t d = loops.size();
  for (const std::uint64_t p : {2147483647ULL, 2147483629ULL}) {
    std::vector<std::vector<std::uint64_t>> m(d, std::vector<std::uint64_t>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (!loops[i][j]) continue;
        std::uint64_t v = 1;
        for (unsigned k = 0; k < *loops[i][j]; ++k) v = v * 3 % p;
        m[i][j] = v;
      }
    }
    auto inv = [p](std::uint64_t a) {
      std::uint64_t res = 1, e = p - 2;
      for (; e; e >>= 1, a = a * a % p) {
        if (e & 1) res = res * a % p;
      }
      return res;
    };
    bool singular = false;
    for (std::size_t c = 0; c < d && !singular; ++c) {
      std::size_t piv = c;
      while (piv < d && m[piv][c] == 0) ++piv;
      if (piv == d) {
        singular = true;
        break;
      }
      std::swap(m[piv], m[c]);
      const std::uint64_t ic = inv(m[c][c]);
      for (std::size_t i = c + 1; i < d; ++i) {
        if (m[i][c] == 0) continue;
        const std::uint64_t f = m[i][c] * ic % p;
        for (std::size_t j = c; j < d; ++j) m[i][j] = (m[i][j] + (p - f) * m[c][j]) % p;
      }
    }
    if (!singular) return true;
  }
  return !gram_det(n, r).is_zero();
}

inline SuiteResult suite_diagrams(int max_n) {
  SuiteResult s{"diagrams"};
  for (int n = 0; n <= max_n; ++n) {
    const auto basis = enumerate_diagrams(n, n);
    s.expect(basis.size() == catalan(n), [&] { return "|TL_" + std::to_string(n) + "| != Catalan"; });
  }
  const int k = std::min(max_n, 3);
  if (k < 1) return s;
  const auto basis = enumerate_diagrams(k, k);
  for (const auto& f : basis) {
    for (const auto& g : basis) {
      const ScaledDiagram fg = compose(f, g);
      const ScaledDiagram star = compose(involution(g), involution(f));
      s.expect(star.loops == fg.loops && star.diagram == involution(fg.diagram),
               [&] { return "involution does not reverse composition in TL_" + std::to_string(k); });
      for (const auto& h : basis) {
        const ScaledDiagram l1 = compose(fg.diagram, h), r0 = compose(g, h);
        const ScaledDiagram r1 = compose(f, r0.diagram);
        s.expect(l1.loops + fg.loops == r1.loops + r0.loops && l1.diagram == r1.diagram,
                 [&] { return "composition is not associative in TL_" + std::to_string(k); });
      }
    }
  }
  return s;
}

inline SuiteResult suite_cellmod(int max_n, Mutation mut) {
  SuiteResult s{"cellmod"};
  auto act_m = [&](const PlanarDiagram& a, const CapDiagram& x) {
    auto r = act(a, x);
    if (r && mut == Mutation::DropLoop && r->loops > 0) --r->loops;
    return r;
  };
  for (int n = 0; n <= max_n; ++n) {
    std::size_t total = 0;
    for (int r = 0; 2 * r <= n; ++r) {
      const auto caps = enumerate_caps(n, r);
      total += caps.size() * caps.size();
      s.expect(caps.size() == binom(n, r) - binom(n, r - 1), [&] { return "cell dimension " + cell_name(n, r); });
      s.expect(gram_det_nonzero(n, r), [&] { return "generic Gram determinant vanishes at " + cell_name(n, r); });
      if (n > 6) continue;
      for (const auto& S : caps) {
        for (const auto& T : caps) {
          s.expect(gram_pair_loops(S, T) == gram_pair_loops(T, S), [&] { return "phi not symmetric at " + cell_name(n, r); });
          const auto d = decompose(assemble(S, T));
          s.expect(d.S == S && d.T == T, [&] { return "assemble/decompose round trip at " + cell_name(n, r); });
          for (const auto& U : caps) {
            // C_{S,T} acting on C_U is phi(T, U) C_S.
            const auto lhs = act_m(assemble(S, T), U);
            const auto phi = gram_pair_loops(T, U);
            const bool ok = phi ? (lhs && lhs->cap == S && lhs->loops == *phi) : !lhs;
            s.expect(ok, [&] { return "C_{S,T} C_U != phi(T,U) C_S at " + cell_name(n, r); });
          }
        }
      }
      // Contravariance under the generators: phi(e x, y) = phi(x, e y).
      for (int i = 1; i < n; ++i) {
        const auto e = PlanarDiagram::generator(n, i);
        for (const auto& x : caps) {
          for (const auto& y : caps) {
            const auto ex = act_m(e, x), ey = act_m(e, y);
            std::optional<unsigned> l, r2;
            if (ex) {
              if (auto p = gram_pair_loops(ex->cap, y)) l = *p + ex->loops;
            }
            if (ey) {
              if (auto p = gram_pair_loops(x, ey->cap)) r2 = *p + ey->loops;
            }
            s.expect(l == r2, [&] { return "phi not contravariant for e" + std::to_string(i) + " at " + cell_name(n, r); });
          }
        }
      }
    }
    s.expect(total == catalan(n), [&] { return "sum of squared cell dimensions != Catalan at n=" + std::to_string(n); });
  }
  // Module law act(ab, x) = act(a, act(b, x)) on TL_3 and TL_4.
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    const auto basis = enumerate_diagrams(n, n);
    for (int r = 0; 2 * r <= n; ++r) {
      for (const auto& x : enumerate_caps(n, r)) {
        for (const auto& a : basis) {
          for (const auto& b : basis) {
            const ScaledDiagram ab = multiply(a, b);
            auto lhs = act_m(ab.diagram, x);
            if (lhs) lhs->loops += ab.loops;
            std::optional<ScaledCap> rhs;
            if (auto bx = act_m(b, x)) {
              if (auto abx = act_m(a, bx->cap)) rhs = ScaledCap{abx->loops + bx->loops, abx->cap};
            }
            s.expect(lhs == rhs, [&] { return "act is not a module action at " + cell_name(n, r); });
          }
        }
      }
    }
  }
  return s;
}

template <class F>
SuiteResult suite_homsolve(int max_n, const LoopParam<F>& param) {
  SuiteResult s{"homsolve"};
  for (int n = 0; n <= std::min(max_n, 5); ++n) {
    for (int r = 0; 2 * r <= n; ++r) {
      const ModuleRep c = cell_rep(n, r);
      auto audit = audit_rep(c);
      s.expect(!audit, [&] { return *audit; });
      for (int r2 = 0; 2 * r2 <= n; ++r2) {
        const auto h = hom_space(c, cell_rep(n, r2), param);
        s.expect(h.dim() == (r == r2 ? 1u : 0u), [&] { return "dim hom" + cell_name(n, r) + "->" + cell_name(n, r2); });
        for (const auto& H : h.basis) {
          s.expect(check_intertwiner(c, cell_rep(n, r2), H, param), [&] { return "hom basis element fails re-substitution"; });
        }
      }
    }
  }
  return s;
}

template <class F>
SuiteResult suite_tower(int max_n, const LoopParam<F>& param, Mutation mut) {
  SuiteResult s{"tower"};
  auto res_rule = [&](int n, int p) {
    if (mut != Mutation::ResRuleShift) return res_cell(n, p);
    SupportSet t{n - 1, {}};
    t.add(p);
    t.add(p + 1);
    return t;
  };
  const int hb = std::min(max_n, 6);
  for (int n = 1; n <= hb; ++n) {
    for (int p = 0; 2 * p <= n; ++p) {
      s.expect(res_rule(n, p) == res_cell_solver(n, p, param), [&] { return "restriction rule at " + cell_name(n, p); });
      s.expect(ind_cell(n, p) == ind_cell_frobenius(n, p, param), [&] { return "induction rule at " + cell_name(n, p); });
      std::size_t ind_sum = 0;
      for (const auto& [r, k] : ind_cell(n, p).labels) ind_sum += static_cast<std::size_t>(k) * enumerate_caps(n + 1, r).size();
      if (n <= 5) {
        s.expect(induced_dim(n, p, param) == ind_sum, [&] { return "dim TL_{n+1} (x) Delta at " + cell_name(n, p); });
      }
      s.expect(eq1_route(n, p, param).ok, [&] { return "Hom(n, n+2) induction route at " + cell_name(n, p); });
    }
  }
  for (int n = 1; n <= max_n; ++n) {
    for (int p = 0; 2 * p <= n; ++p) {
      std::size_t sum = 0;
      for (const auto& [r, k] : res_rule(n, p).labels) sum += static_cast<std::size_t>(k) * enumerate_caps(n - 1, r).size();
      s.expect(sum == enumerate_caps(n, p).size(), [&] { return "restriction dimension count at " + cell_name(n, p); });
    }
  }
  const TowerReport axioms = tower_axioms(hb, param);
  for (const auto& c : axioms.checks) {
    s.expect(c.pass, [&] { return c.axiom + " at n=" + std::to_string(c.n) + ": " + (c.failures.empty() ? "" : c.failures[0]); });
  }
  for (const auto& m : axioms.morita) {
    s.expect(m.surjective, [&] { return "composition pairing not onto End(" + std::to_string(m.m) + ")"; });
  }
  return s;
}

template <class F>
SuiteResult suite_grothendieck(int max_n, const LoopParam<F>& param, Mutation mut) {
  SuiteResult s{"grothendieck"};
  auto closed = [&](int m, int n, int p, int q, int r) {
    if (mut != Mutation::ClosedFormulaTypo) return struct_const_closed(m, n, p, q, r);
    if (!valid_label(m, p) || !valid_label(n, q) || !valid_label(m + n, r)) return 0;
    const int sv = r - p - q;
    return (sv >= 0 && m - sv >= 2 * p && m - sv >= 2 * q) ? 1 : 0;
  };
  for (int total = 0; total <= max_n; ++total) {
    for (int m = 0; m <= total; ++m) {
      const int n = total - m;
      for (int r = 0; 2 * r <= total; ++r) {
        std::size_t dim_sum = 0;
        for (int p = 0; 2 * p <= m; ++p) {
          for (int q = 0; 2 * q <= n; ++q) {
            const int c = closed(m, n, p, q, r);
            const int w = struct_const_walled(m, n, p, q, r);
            s.expect(c == w, [&] {
              return "a^(" + std::to_string(m) + "|" + std::to_string(n) + ")_(" + std::to_string(p) + "," +
                     std::to_string(q) + "," + std::to_string(r) + "): closed " + std::to_string(c) + " vs walled " +
                     std::to_string(w);
            });
            if (total <= 7) {
              const int h = struct_const_hom(m, n, p, q, r, param);
              s.expect(h == w, [&] { return "hom method disagrees with walled oracle"; });
            }
            dim_sum += static_cast<std::size_t>(w) * enumerate_caps(m, p).size() * enumerate_caps(n, q).size();
          }
        }
        s.expect(dim_sum == enumerate_caps(total, r).size(), [&] { return "restriction dimension identity"; });
      }
      // Action monotonicity and filtration closure on generators.
      if (total > 7) continue;
      std::vector<std::pair<PlanarDiagram, PlanarDiagram>> gens;
      for (int i = 1; i < m; ++i) gens.push_back({PlanarDiagram::generator(m, i), PlanarDiagram::identity(n)});
      for (int i = 1; i < n; ++i) gens.push_back({PlanarDiagram::identity(m), PlanarDiagram::generator(n, i)});
      for (int r = 0; 2 * r <= total; ++r) {
        for (const auto& [w, t] : enumerate_walled(m, n, r)) {
          for (const auto& [a, b] : gens) {
            const TripleIndex t2 = walled_action_raw(a, b, w).walled.triple();
            s.expect(t2.s <= t.s && t2.lm >= t.lm && t2.ln >= t.ln, [&] { return "through strings increased"; });
            if (auto tr = walled_action(a, b, w)) {
              s.expect(!FiltrationLess{}(t, tr->walled.triple()), [&] { return "filtration not preserved"; });
            }
          }
        }
      }
    }
  }
  // Algebra and coalgebra laws on grades <= min(max_n, 4).
  const int g = std::min(max_n, 4);
  std::vector<G0Vector> classes;
  for (int n = 0; n <= g; ++n) {
    for (int r = 0; 2 * r <= n; ++r) classes.push_back(G0Vector::cell(n, r));
  }
  for (const auto& x : classes) {
    s.expect(product(unit(), x) == x && product(x, unit()) == x, [&] { return "unit law"; });
    const G0Tensor dx = coproduct(x);
    s.expect(coproduct_at(dx, 0) == coproduct_at(dx, 1), [&] { return "coassociativity"; });
    G0Vector counit_left;
    for (const auto& [key, k] : dx.terms) {
      if (key[0] == CellClass{0, 0}) counit_left.add(key[1].first, key[1].second, k);
    }
    s.expect(counit_left == x, [&] { return "counit law"; });
    for (const auto& y : classes) {
      for (const auto& z : classes) {
        if (x.terms.begin()->first.first + y.terms.begin()->first.first + z.terms.begin()->first.first > g) continue;
        s.expect(product(product(x, y), z) == product(x, product(y, z)), [&] { return "associativity"; });
      }
    }
  }
  for (int n = 2; n <= max_n; ++n) {
    for (int p = 1; 2 * p < n; ++p) {
      const MackeyReport mr = mackey_check(n, p);
      s.expect(!mr.equal && mr.difference == G0Vector::cell(n, p) && mr.left == mr.left_by_rules,
               [&] { return "Mackey comparison at " + cell_name(n, p); });
    }
  }
  return s;
}

}  // namespace detail

template <class F>
VerifyReport verify_all(int max_n, const LoopParam<F>& param, Mutation mut = Mutation::None) {
  if (max_n < 0) throw std::invalid_argument("max_n must be non-negative");
  VerifyReport rep;
  rep.max_n = max_n;
  switch (mut) {
    case Mutation::None:
      rep.mutation = "none";
      break;
    case Mutation::ClosedFormulaTypo:
      rep.mutation = "closed-formula-typo";
      break;
    case Mutation::DropLoop:
      rep.mutation = "drop-loop";
      break;
    case Mutation::ResRuleShift:
      rep.mutation = "res-rule-shift";
      break;
  }
  // Suites share no state; run them concurrently and collect in a fixed order.
  std::vector<std::future<SuiteResult>> jobs;
  jobs.push_back(std::async(std::launch::async, [=] { return detail::suite_diagrams(max_n); }));
  jobs.push_back(std::async(std::launch::async, [=] { return detail::suite_cellmod(max_n, mut); }));
  jobs.push_back(std::async(std::launch::async, [=, &param] { return detail::suite_homsolve(max_n, param); }));
  jobs.push_back(std::async(std::launch::async, [=, &param] { return detail::suite_tower(max_n, param, mut); }));
  jobs.push_back(std::async(std::launch::async, [=, &param] { return detail::suite_grothendieck(max_n, param, mut); }));
  for (auto& j : jobs) rep.suites.push_back(j.get());
  return rep;
}

}  // namespace tlcat
