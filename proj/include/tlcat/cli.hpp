#pragma once

// Command-line front end. `run` takes argv without the program name and never
// calls exit(), so tests can drive it in-process.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cellmod.hpp"
#include "diagrams.hpp"
#include "grothendieck.hpp"
#include "homsolve.hpp"
#include "serialize.hpp"
#include "tower.hpp"
#include "verify.hpp"

namespace tlcat::cli {

inline constexpr int kHardMaxN = 14;

enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2 };

struct SessionConfig {
  bool generic = true;
  Rational delta = 1;
  bool json = false;
  bool render = false;
  int max_n = kHardMaxN;
};

/// Bad parameters; reported with exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline int sweep_bound_from_env() {
  const char* v = std::getenv("TLCAT_MAX_N");
  if (!v || !*v) return kHardMaxN;
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw UsageError("TLCAT_MAX_N is not an integer");
  }
  if (n < 0 || n > kHardMaxN) throw UsageError("TLCAT_MAX_N must lie in [0, 14]");
  return n;
}

namespace detail {

inline void need_bound(const SessionConfig& cfg, int n, const std::string& what) {
  if (n < 0) throw UsageError(what + " must be non-negative");
  if (n > cfg.max_n) throw UsageError(what + " = " + std::to_string(n) + " exceeds the sweep bound " + std::to_string(cfg.max_n));
}

inline void need_label(int n, int r, const std::string& what) {
  if (!valid_label(n, r)) throw UsageError(what + ": label " + std::to_string(r) + " out of range for n = " + std::to_string(n));
}

template <class Fn>
decltype(auto) with_param(const SessionConfig& cfg, Fn&& fn) {
  if (cfg.generic) return fn(Generic{});
  return fn(Numeric{cfg.delta});
}

template <class F>
std::string scalar_text(const F& v) {
  if constexpr (std::is_same_v<F, Rational>) {
    return rational_to_string(v);
  } else {
    return to_string(v);
  }
}

template <class F>
Json scalar_json(const F& v) {
  return to_json(v);
}

inline std::string mode_name(const SessionConfig& cfg) {
  return cfg.generic ? "generic" : "delta=" + rational_to_string(cfg.delta);
}

inline std::string endpoint_text(const Endpoint& e) { return (e.side == Side::B ? "B" : "T") + std::to_string(e.index); }

inline std::string arcs_text(const PlanarDiagram& d) {
  std::string s;
  for (const auto& [a, b] : d.arcs()) {
    if (!s.empty()) s += ' ';
    s += endpoint_text(a) + "-" + endpoint_text(b);
  }
  return s.empty() ? "(empty)" : s;
}

inline std::string caps_text(const CapDiagram& c) {
  std::string s;
  for (auto [i, j] : c.caps()) s += "{" + std::to_string(i) + "," + std::to_string(j) + "}";
  return s.empty() ? "{}" : s;
}

inline std::string class_text(const CellClass& c) {
  return "[Δ" + std::to_string(c.first) + "(" + std::to_string(c.second) + ")]";
}

inline std::string g0_text(const G0Vector& v) {
  if (v.terms.empty()) return "0";
  std::string s;
  for (const auto& [c, k] : v.terms) {
    if (!s.empty()) s += k < 0 ? " - " : " + ";
    else if (k < 0) s += "-";
    const auto a = k < 0 ? -k : k;
    if (a != 1) s += std::to_string(a);
    s += class_text(c);
  }
  return s;
}

inline std::string tensor_text(const G0Tensor& t) {
  if (t.terms.empty()) return "0";
  std::string s;
  for (const auto& [key, k] : t.terms) {
    if (!s.empty()) s += k < 0 ? " - " : " + ";
    else if (k < 0) s += "-";
    const auto a = k < 0 ? -k : k;
    if (a != 1) s += std::to_string(a);
    for (std::size_t i = 0; i < key.size(); ++i) s += (i ? "⊗" : "") + class_text(key[i]);
  }
  return s;
}

inline std::string support_text(const SupportSet& s) {
  G0Vector v;
  for (const auto& [r, k] : s.labels) v.add(s.n, r, k);
  return g0_text(v);
}

inline std::string triple_text(const TripleIndex& t) {
  return "W(" + std::to_string(t.s) + "," + std::to_string(t.lm) + "," + std::to_string(t.ln) + ")";
}

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace detail

/// Parses argv (without the program name), dispatches, and returns the exit code.
/// Files of the golden corpus, name -> exact contents.
inline std::vector<std::pair<std::string, std::string>> golden_corpus() {
  std::vector<std::pair<std::string, std::string>> files;
  const auto cupcap = PlanarDiagram::from_arcs(3, 3, {{{Side::T, 1}, {Side::T, 2}}, {{Side::T, 3}, {Side::B, 1}}, {{Side::B, 2}, {Side::B, 3}}});
  files.emplace_back("cup_cap_3.txt", render_ascii(cupcap) + "\n");
  const WalledCapDiagram w{6, 5, CapDiagram(11, {{3, 8}, {4, 5}, {6, 7}, {10, 11}})};
  files.emplace_back("walled_6_5.txt", render_walled(w) + "\n");
  return files;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  SessionConfig cfg;
  std::string delta_text;

  CLI::App app{"Temperley-Lieb cellular category toolkit", "tlcat"};
  app.require_subcommand(1);
  auto* delta_opt = app.add_option("--delta", delta_text, "specialize the loop parameter to a rational p/q");
  auto* generic_flag = app.add_flag("--generic", "treat the loop parameter as an indeterminate (default)");
  delta_opt->excludes(generic_flag);
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_flag("--render", cfg.render, "draw diagrams");

  std::function<int()> action;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // diagrams -------------------------------------------------------------------
  CLI::App* diagrams = sub(&app, "diagrams", "planar diagrams");
  diagrams->require_subcommand(1);
  int bot = 0, top = 0;
  CLI::App* d_enum = sub(diagrams, "enumerate", "basis of Hom(bot, top)");
  d_enum->add_option("--bot", bot)->required();
  d_enum->add_option("--top", top)->required();
  d_enum->callback([&] {
    action = [&] {
      need_bound(cfg, (bot + top + 1) / 2, "(bot+top)/2");
      need_bound(cfg, bot, "--bot");
      need_bound(cfg, top, "--top");
      const auto basis = enumerate_diagrams(bot, top);
      if (cfg.json) {
        Json list = Json::array();
        for (const auto& d : basis) {
          Json j = to_json(d);
          if (cfg.render) j["render"] = render_ascii(d);
          list.push_back(j);
        }
        print_json(out, Json{{"bot", bot}, {"top", top}, {"count", basis.size()}, {"diagrams", list}});
      } else {
        out << "Hom(" << bot << "," << top << "): " << basis.size() << " diagram" << (basis.size() == 1 ? "" : "s") << "\n";
        for (std::size_t i = 0; i < basis.size(); ++i) {
          out << "[" << i + 1 << "] " << arcs_text(basis[i]) << "\n";
          if (cfg.render) out << render_ascii(basis[i]) << "\n";
        }
      }
      return kOk;
    };
  });

  std::string f_text, g_text, d_text;
  CLI::App* d_comp = sub(diagrams, "compose", "stack --upper on top of --lower");
  d_comp->add_option("--lower", f_text, "diagram JSON (bottom factor)")->required();
  d_comp->add_option("--upper", g_text, "diagram JSON (top factor)")->required();
  d_comp->callback([&] {
    action = [&] {
      const PlanarDiagram f = diagram_from_json(Json::parse(f_text));
      const PlanarDiagram g = diagram_from_json(Json::parse(g_text));
      const ScaledDiagram c = compose(f, g);
      const std::string coeff = with_param(cfg, [&](const auto& param) { return scalar_text(param.delta_pow(c.loops)); });
      if (cfg.json) {
        Json j{{"loops", c.loops}, {"coefficient", coeff}, {"diagram", to_json(c.diagram)}};
        if (cfg.render) j["render"] = render_ascii(c.diagram);
        print_json(out, j);
      } else {
        out << "loops: " << c.loops << "\ncoefficient: " << coeff << "\ndiagram: " << arcs_text(c.diagram) << "\n";
        if (cfg.render) out << render_ascii(c.diagram) << "\n";
      }
      return kOk;
    };
  });

  CLI::App* d_render = sub(diagrams, "render", "draw a diagram given as JSON");
  d_render->add_option("--diagram", d_text)->required();
  d_render->callback([&] {
    action = [&] {
      const PlanarDiagram d = diagram_from_json(Json::parse(d_text));
      if (cfg.json) {
        print_json(out, Json{{"diagram", to_json(d)}, {"render", render_ascii(d)}});
      } else {
        out << render_ascii(d) << "\n";
      }
      return kOk;
    };
  });

  // gram -----------------------------------------------------------------------
  int n = 0, r = 0, p = 0, q = 0, m = 0;
  bool want_det = false, want_radical = false;
  CLI::App* gram = sub(&app, "gram", "Gram matrix of the cell form");
  gram->add_option("--n", n)->required();
  gram->add_option("--r", r)->required();
  auto* det_flag = gram->add_flag("--det", want_det, "determinant only");
  gram->add_flag("--radical", want_radical, "dimension of the radical")->excludes(det_flag);
  gram->callback([&] {
    action = [&] {
      need_bound(cfg, n, "--n");
      need_label(n, r, "gram");
      const auto caps = enumerate_caps(n, r);
      if (want_det) {
        const DeltaPoly det = gram_det(n, r);
        const std::string text = cfg.generic ? to_string(det) : rational_to_string(specialize(det, cfg.delta));
        if (cfg.json) {
          Json j{{"n", n}, {"r", r}, {"mode", mode_name(cfg)}, {"det", text}};
          j["value"] = cfg.generic ? to_json(det) : to_json(specialize(det, cfg.delta));
          print_json(out, j);
        } else {
          out << text << "\n";
        }
        return kOk;
      }
      if (want_radical) {
        const std::size_t rad = with_param(cfg, [&](const auto& param) {
          return caps.size() - rank(gram_matrix(n, r, param));
        });
        if (cfg.json) {
          print_json(out, Json{{"n", n}, {"r", r}, {"mode", mode_name(cfg)}, {"dim", caps.size()}, {"radical_dim", rad}});
        } else {
          out << rad << "\n";
        }
        return kOk;
      }
      with_param(cfg, [&](const auto& param) {
        const auto g = gram_matrix(n, r, param);
        if (cfg.json) {
          Json basis = Json::array();
          for (const auto& c : caps) basis.push_back(to_json(c));
          print_json(out, Json{{"n", n}, {"r", r}, {"mode", mode_name(cfg)}, {"basis", basis}, {"matrix", matrix_json(g)}});
        } else {
          out << "basis:";
          for (const auto& c : caps) out << " " << caps_text(c);
          out << "\n";
          for (const auto& row : g) {
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "\t" : "") << scalar_text(row[j]);
            out << "\n";
          }
          if (cfg.render) {
            for (const auto& c : caps) out << render_cap(c) << "\n";
          }
        }
      });
      return kOk;
    };
  });

  // certify --------------------------------------------------------------------
  bool quasi = false;
  CLI::App* certify = sub(&app, "certify", "semisimplicity certificate for TL_n");
  certify->add_option("--n", n)->required();
  certify->add_flag("--quasi-hereditary", quasi, "certify quasi-heredity instead");
  certify->callback([&] {
    action = [&] {
      need_bound(cfg, n, "--n");
      const Certificate c = with_param(cfg, [&](const auto& param) {
        return quasi ? is_quasi_hereditary(n, param) : is_semisimple(n, param);
      });
      if (cfg.json) {
        print_json(out, to_json(c));
      } else {
        out << (quasi ? "quasi-hereditary" : "semisimple") << "(TL_" << n << ", " << c.mode
            << "): " << (c.holds ? "yes" : "no") << "\n";
        for (const auto& e : c.entries) out << "  det G(" << n << "," << e.r << ") = " << e.value << "\n";
        if (c.witness) out << "  witness: label " << *c.witness << "\n";
      }
      return kOk;
    };
  });

  // hom / decompose ------------------------------------------------------------
  std::string src_spec, dst_spec;
  auto check_rep = [&](const ModuleRep& M) {
    need_bound(cfg, M.total(), "module size");
    if (M.dim > 5000) throw UsageError("module " + M.name + " is too large for the dense solver");
  };
  CLI::App* hom = sub(&app, "hom", "intertwiner space between two modules");
  hom->add_option("--source", src_spec)->required();
  hom->add_option("--target", dst_spec)->required();
  hom->callback([&] {
    action = [&] {
      const ModuleRep M = parse_module_spec(src_spec), N = parse_module_spec(dst_spec);
      check_rep(M);
      check_rep(N);
      if (M.total() != N.total()) {
        throw UsageError("modules live over algebras of different sizes (" + std::to_string(M.total()) + " vs " +
                         std::to_string(N.total()) + ")");
      }
      if (M.factors != N.factors) throw UsageError("modules are over different algebras");
      with_param(cfg, [&](const auto& param) {
        const auto h = hom_space(M, N, param);
        if (cfg.json) {
          Json basis = Json::array();
          for (const auto& b : h.basis) basis.push_back(matrix_json(b));
          print_json(out, Json{{"source", M.name},
                               {"target", N.name},
                               {"mode", mode_name(cfg)},
                               {"source_dim", h.source_dim},
                               {"target_dim", h.target_dim},
                               {"dim", h.dim()},
                               {"basis", basis}});
        } else {
          out << "dim Hom(" << M.name << ", " << N.name << ") = " << h.dim() << "\n";
        }
      });
      return kOk;
    };
  });

  std::string mod_spec;
  CLI::App* decomp = sub(&app, "decompose", "multiplicities of cell modules in a semisimple module");
  decomp->add_option("--module", mod_spec)->required();
  decomp->callback([&] {
    action = [&] {
      const ModuleRep M = parse_module_spec(mod_spec);
      check_rep(M);
      const auto mult = with_param(cfg, [&](const auto& param) { return decompose_semisimple(M, param); });
      if (cfg.json) {
        Json terms = Json::array();
        for (const auto& t : mult) terms.push_back(Json{{"labels", t.labels}, {"mult", t.mult}, {"dim", t.simple_dim}});
        print_json(out, Json{{"module", M.name}, {"factors", M.factors}, {"dim", M.dim}, {"terms", terms}});
      } else {
        out << M.name << " =";
        bool first = true;
        for (const auto& t : mult) {
          if (t.mult == 0) continue;
          out << (first ? " " : " ⊕ ");
          first = false;
          if (t.mult != 1) out << t.mult << "·";
          out << "Δ(";
          for (std::size_t i = 0; i < t.labels.size(); ++i) {
            out << (i ? "," : "") << M.factors[i] << ":" << t.labels[i];
          }
          out << ")";
        }
        if (first) out << " 0";
        out << "\n";
      }
      return kOk;
    };
  });

  // tower ----------------------------------------------------------------------
  CLI::App* tower = sub(&app, "tower", "tower structure of TL_n inside TL_{n+1}");
  tower->require_subcommand(1);
  bool use_solver = false;
  auto rule_cmd = [&](const std::string& name, bool restrict) {
    CLI::App* c = sub(tower, name, restrict ? "restriction rule" : "induction rule");
    c->add_option("--n", n)->required();
    c->add_option("--p", p)->required();
    c->add_flag("--solver", use_solver, "also compute the decomposition with the intertwiner solver");
    c->callback([&, restrict, name] {
      action = [&, restrict, name] {
        need_bound(cfg, restrict ? n : n + 1, restrict ? "--n" : "--n + 1");
        need_label(n, p, name);
        if (restrict && n < 1) throw UsageError("restriction needs n >= 1");
        const SupportSet rule = restrict ? res_cell(n, p) : ind_cell(n, p);
        std::optional<SupportSet> solved;
        if (use_solver) {
          if (n > 7) throw UsageError("--solver is limited to n <= 7");
          solved = with_param(cfg, [&](const auto& param) {
            return restrict ? res_cell_solver(n, p, param) : ind_cell_frobenius(n, p, param);
          });
        }
        const bool agree = !solved || *solved == rule;
        if (cfg.json) {
          Json j{{"n", n}, {"p", p}, {"rule", to_json(rule)}};
          if (solved) {
            j["solver"] = to_json(*solved);
            j["agree"] = agree;
          }
          print_json(out, j);
        } else {
          out << (restrict ? "Res " : "Ind ") << class_text({n, p}) << " = " << support_text(rule) << "\n";
          if (solved) out << "solver: " << support_text(*solved) << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
        }
        return agree ? kOk : kViolation;
      };
    });
  };
  rule_cmd("res", true);
  rule_cmd("ind", false);

  int max_n_arg = 6;
  CLI::App* t_axioms = sub(tower, "axioms", "check the tower axioms up to --max-n");
  t_axioms->add_option("--max-n", max_n_arg)->required();
  t_axioms->callback([&] {
    action = [&] {
      need_bound(cfg, max_n_arg, "--max-n");
      if (max_n_arg > 8) throw UsageError("tower axioms are limited to --max-n <= 8");
      const TowerReport rep = with_param(cfg, [&](const auto& param) { return tower_axioms(max_n_arg, param); });
      if (cfg.json) {
        print_json(out, to_json(rep));
      } else {
        for (const auto& c : rep.checks) {
          out << c.axiom << " n=" << c.n << ": " << (c.pass ? "pass" : "FAIL") << "  " << c.witness << "\n";
          for (const auto& f : c.failures) out << "    " << f << "\n";
        }
        for (const auto& mr : rep.morita) {
          out << "morita " << mr.m << "<" << mr.n << ": rank " << mr.rank_onto_small << "/" << mr.dim_small
              << " (other direction " << mr.rank_onto_large << "/" << mr.dim_large << ")"
              << (mr.surjective ? "" : " FAIL") << "\n";
        }
        out << (rep.pass ? "all axioms hold" : "axiom check FAILED") << "\n";
      }
      return rep.pass ? kOk : kViolation;
    };
  });

  CLI::App* t_eq1 = sub(tower, "eq1", "induction computed through Hom(n, n+2)");
  t_eq1->add_option("--n", n)->required();
  t_eq1->add_option("--p", p)->required();
  t_eq1->callback([&] {
    action = [&] {
      need_bound(cfg, n + 2, "--n + 2");
      need_label(n, p, "eq1");
      if (n > 8) throw UsageError("eq1 is limited to n <= 8");
      const Eq1Report rep = with_param(cfg, [&](const auto& param) { return eq1_route(n, p, param); });
      if (cfg.json) {
        print_json(out, Json{{"n", n},
                             {"p", p},
                             {"alpha", to_json(rep.alpha)},
                             {"support", to_json(rep.support)},
                             {"expected", to_json(rep.expected)},
                             {"ok", rep.ok}});
      } else {
        out << "via Hom(" << n << "," << n + 2 << "): " << support_text(rep.support) << "\n";
        out << "induction rule: " << support_text(rep.expected) << "\n";
        out << (rep.ok ? "agree" : "DISAGREE") << "\n";
      }
      return rep.ok ? kOk : kViolation;
    };
  });

  CLI::App* t_alpha = sub(tower, "alpha", "gluing map Hom(n,m) ⊗ Δ_n(r) -> Δ_m");
  t_alpha->add_option("--m", m)->required();
  t_alpha->add_option("--n", n)->required();
  t_alpha->add_option("--r", r)->required();
  t_alpha->callback([&] {
    action = [&] {
      need_bound(cfg, m, "--m");
      need_bound(cfg, n, "--n");
      if (m > 9 || n > 9) throw UsageError("alpha is limited to m, n <= 9");
      if ((m - n) % 2 != 0) throw UsageError("m and n must have equal parity");
      need_label(n, r, "alpha");
      need_label(m, r + (m - n) / 2, "alpha target");
      const AlphaReport rep = with_param(cfg, [&](const auto& param) { return alpha_iso_check(m, n, r, param); });
      if (cfg.json) {
        print_json(out, to_json(rep));
      } else {
        out << "Hom(" << n << "," << m << ") ⊗ Δ" << n << "(" << r << ") -> Δ" << m << "(" << rep.target_r
            << "): dim " << rep.tensor_dim << " -> " << rep.target_dim << ", well-defined "
            << (rep.well_defined ? "yes" : "no") << ", surjective " << (rep.surjective ? "yes" : "no") << "\n";
      }
      return rep.ok ? kOk : kViolation;
    };
  });

  CLI::App* t_morita = sub(tower, "morita", "rank of the composition pairing");
  t_morita->add_option("--m", m)->required();
  t_morita->add_option("--n", n)->required();
  t_morita->callback([&] {
    action = [&] {
      need_bound(cfg, n, "--n");
      if (n > 9) throw UsageError("morita is limited to n <= 9");
      if (m < 0 || m > n || (n - m) % 2 != 0) throw UsageError("need 0 <= m <= n with equal parity");
      const MoritaReport rep = with_param(cfg, [&](const auto& param) { return morita_rho_rank(m, n, param); });
      if (cfg.json) {
        print_json(out, to_json(rep));
      } else {
        out << "Hom(" << n << "," << m << ") x Hom(" << m << "," << n << ") -> End(" << m
            << "): rank " << rep.rank_onto_small << " of " << rep.dim_small << "\n";
        out << "Hom(" << m << "," << n << ") x Hom(" << n << "," << m << ") -> End(" << n
            << "): rank " << rep.rank_onto_large << " of " << rep.dim_large << "\n";
      }
      return rep.surjective ? kOk : kViolation;
    };
  });

  // g0 -------------------------------------------------------------------------
  CLI::App* g0 = sub(&app, "g0", "Grothendieck group operations");
  g0->require_subcommand(1);
  std::string method_text = "closed";
  CLI::App* g_prod = sub(g0, "product", "[Δ_m(p)]·[Δ_n(q)]");
  g_prod->add_option("--m", m)->required();
  g_prod->add_option("--p", p)->required();
  g_prod->add_option("--n", n)->required();
  g_prod->add_option("--q", q)->required();
  g_prod->add_option("--method", method_text)->check(CLI::IsMember({"closed", "walled", "hom", "all"}));
  g_prod->callback([&] {
    action = [&] {
      need_bound(cfg, m + n, "--m + --n");
      need_label(m, p, "product");
      need_label(n, q, "product");
      std::vector<Method> methods;
      if (method_text == "all") {
        methods = {Method::Closed, Method::Walled, Method::Hom};
      } else {
        methods = {method_text == "closed" ? Method::Closed : method_text == "walled" ? Method::Walled : Method::Hom};
      }
      for (auto mt : methods) {
        if (mt == Method::Hom && m + n > 8) throw UsageError("the hom method is limited to m + n <= 8");
      }
      const G0Vector x = G0Vector::cell(m, p), y = G0Vector::cell(n, q);
      std::vector<std::pair<Method, G0Vector>> results;
      for (auto mt : methods) {
        if (mt == Method::Hom) {
          G0Vector v;
          with_param(cfg, [&](const auto& param) {
            for (int rr = 0; 2 * rr <= m + n; ++rr) v.add(m + n, rr, struct_const_hom(m, n, p, q, rr, param));
          });
          results.emplace_back(mt, v);
        } else {
          results.emplace_back(mt, product(x, y, mt));
        }
      }
      bool agree = true;
      for (const auto& [mt, v] : results) agree = agree && v == results.front().second;
      if (cfg.json) {
        Json j{{"m", m}, {"p", p}, {"n", n}, {"q", q}};
        Json per = Json::object();
        for (const auto& [mt, v] : results) per[to_string(mt)] = to_json(v);
        j["results"] = per;
        j["agree"] = agree;
        print_json(out, j);
      } else {
        for (const auto& [mt, v] : results) {
          out << class_text({m, p}) << "·" << class_text({n, q}) << " = " << g0_text(v);
          if (results.size() > 1) out << "  (" << to_string(mt) << ")";
          out << "\n";
        }
        if (!agree) out << "methods DISAGREE\n";
      }
      return agree ? kOk : kViolation;
    };
  });

  CLI::App* g_coprod = sub(g0, "coproduct", "restriction coproduct of [Δ_n(r)]");
  g_coprod->add_option("--n", n)->required();
  g_coprod->add_option("--r", r)->required();
  g_coprod->callback([&] {
    action = [&] {
      need_bound(cfg, n, "--n");
      need_label(n, r, "coproduct");
      const G0Tensor t = coproduct(G0Vector::cell(n, r));
      if (cfg.json) {
        print_json(out, Json{{"n", n}, {"r", r}, {"coproduct", to_json(t)}});
      } else {
        out << "Δ" << class_text({n, r}) << " = " << tensor_text(t) << "\n";
      }
      return kOk;
    };
  });

  CLI::App* g_mackey = sub(g0, "mackey", "compare both sides of the Mackey identity");
  g_mackey->add_option("--n", n)->required();
  g_mackey->add_option("--p", p)->required();
  g_mackey->callback([&] {
    action = [&] {
      need_bound(cfg, n + 1, "--n + 1");
      if (n < 1) throw UsageError("mackey needs n >= 1");
      need_label(n, p, "mackey");
      const MackeyReport rep = mackey_check(n, p);
      if (cfg.json) {
        print_json(out, to_json(rep));
      } else {
        out << "left:       " << g0_text(rep.left) << "\n";
        out << "right:      " << g0_text(rep.right) << "\n";
        out << "difference: " << g0_text(rep.difference) << "\n";
        out << (rep.equal ? "equal" : "not equal") << "\n";
      }
      return kOk;
    };
  });

  CLI::App* g_series = sub(g0, "series", "filtration of Δ_{m+n}(r) restricted to TL_m x TL_n");
  g_series->add_option("--m", m)->required();
  g_series->add_option("--n", n)->required();
  g_series->add_option("--r", r)->required();
  g_series->callback([&] {
    action = [&] {
      need_bound(cfg, m + n, "--m + --n");
      if (m < 0 || n < 0) throw UsageError("sizes must be non-negative");
      need_label(m + n, r, "series");
      const auto layers = composition_series(m, n, r);
      std::size_t total = 0;
      for (const auto& l : layers) total += l.dim;
      if (cfg.json) {
        Json j{{"m", m}, {"n", n}, {"r", r}, {"layers", to_json(layers)}, {"total", total}};
        if (cfg.render) {
          Json pics = Json::array();
          for (const auto& [w, t] : enumerate_walled(m, n, r)) pics.push_back(Json{{"triple", to_json(t)}, {"render", render_walled(w)}});
          j["walled"] = pics;
        }
        print_json(out, j);
      } else {
        out << "layer      dim\n";
        for (const auto& l : layers) out << triple_text(l.triple) << "  " << l.dim << "\n";
        out << "total      " << total << "\n";
        if (cfg.render) {
          for (const auto& [w, t] : enumerate_walled(m, n, r)) out << triple_text(t) << "\n" << render_walled(w) << "\n";
        }
      }
      return kOk;
    };
  });

  // golden ---------------------------------------------------------------------
  std::string golden_dir;
  bool golden_check = false;
  CLI::App* golden = sub(&app, "golden", "write or check the golden-file corpus");
  golden->add_option("--out", golden_dir, "corpus directory")->required();
  golden->add_flag("--check", golden_check, "compare instead of writing");
  golden->callback([&] {
    action = [&] {
      int status = kOk;
      for (const auto& [name, text] : golden_corpus()) {
        const std::filesystem::path path = std::filesystem::path(golden_dir) / name;
        if (golden_check) {
          std::ifstream in(path, std::ios::binary);
          std::stringstream ss;
          ss << in.rdbuf();
          const bool same = in.is_open() && ss.str() == text;
          out << name << ": " << (same ? "ok" : "DIFFERS") << "\n";
          if (!same) status = kViolation;
        } else {
          std::filesystem::create_directories(path.parent_path());
          std::ofstream(path, std::ios::binary) << text;
          out << "wrote " << path.string() << "\n";
        }
      }
      return status;
    };
  });

  // verify ---------------------------------------------------------------------
  int verify_n = 5;
  std::string inject;
  CLI::App* verify = sub(&app, "verify", "run every invariant suite");
  verify->add_option("--max-n", verify_n);
  verify->add_option("--inject", inject, "deliberately break one component")
      ->check(CLI::IsMember({"closed-formula-typo", "drop-loop", "res-rule-shift"}));
  verify->callback([&] {
    action = [&] {
      need_bound(cfg, verify_n, "--max-n");
      const Mutation mut = parse_mutation(inject);
      const VerifyReport rep = with_param(cfg, [&](const auto& param) { return verify_all(verify_n, param, mut); });
      if (cfg.json) {
        print_json(out, to_json(rep));
      } else {
        for (const auto& s : rep.suites) {
          out << s.name << ": " << (s.pass() ? "pass" : "FAIL") << " (" << s.checks << " checks";
          if (s.failed) out << ", " << s.failed << " failed";
          out << ")\n";
          for (const auto& f : s.failures) out << "    " << f << "\n";
        }
        out << (rep.pass() ? "all suites pass" : "verification FAILED") << "\n";
      }
      return rep.pass() ? kOk : kViolation;
    };
  });

  try {
    cfg.max_n = sweep_bound_from_env();
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    if (!delta_text.empty()) {
      try {
        cfg.delta = parse_rational(delta_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--delta: ") + e.what());
      }
      cfg.generic = false;
    }
    if (!action) throw UsageError("missing subcommand");
    return action();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const Json::exception& e) {
    err << "error: bad JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kViolation;
  }
}

}  // namespace tlcat::cli
