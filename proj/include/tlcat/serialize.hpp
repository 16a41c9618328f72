#pragma once

// JSON encodings. Rationals are always "p/q" strings; generic scalars are
// {"num": [...], "den": [...]} coefficient lists, lowest degree first.

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "cellmod.hpp"
#include "coeffring.hpp"
#include "diagrams.hpp"
#include "grothendieck.hpp"
#include "homsolve.hpp"
#include "tower.hpp"
#include "verify.hpp"

namespace tlcat {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return rational_to_string(q); }

inline Json to_json(const DeltaPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_to_string(c));
  return a;
}

inline Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline DeltaPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(parse_rational(e.get<std::string>()));
  return DeltaPoly(std::move(c));
}

inline RatFunc ratfunc_from_json(const Json& j) {
  return ratfunc_normalize(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

inline Json to_json(const PlanarDiagram& d) {
  Json arcs = Json::array();
  auto ep = [](const Endpoint& e) { return Json::array({e.side == Side::B ? "B" : "T", e.index}); };
  for (const auto& [a, b] : d.arcs()) arcs.push_back(Json::array({ep(a), ep(b)}));
  return Json{{"bot", d.bot()}, {"top", d.top()}, {"arcs", arcs}};
}

inline PlanarDiagram diagram_from_json(const Json& j) {
  const int bot = j.at("bot").get<int>(), top = j.at("top").get<int>();
  std::vector<Arc> arcs;
  for (const auto& arc : j.at("arcs")) {
    if (!arc.is_array() || arc.size() != 2) throw std::invalid_argument("arc must have two endpoints");
    Endpoint e[2];
    for (int k = 0; k < 2; ++k) {
      const auto& p = arc[static_cast<std::size_t>(k)];
      const std::string side = p.at(0).get<std::string>();
      if (side != "B" && side != "T") throw std::invalid_argument("endpoint side must be B or T");
      e[k] = Endpoint{side == "B" ? Side::B : Side::T, p.at(1).get<int>()};
    }
    arcs.push_back({e[0], e[1]});
  }
  return PlanarDiagram::from_arcs(bot, top, arcs);
}

inline Json to_json(const CapDiagram& c) {
  Json caps = Json::array();
  for (auto [i, j] : c.caps()) caps.push_back(Json::array({i, j}));
  return Json{{"n", c.n()}, {"caps", caps}};
}

inline Json to_json(const TripleIndex& t) { return Json{{"s", t.s}, {"l_m", t.lm}, {"l_n", t.ln}}; }

inline Json to_json(const G0Vector& v) {
  Json terms = Json::array();
  for (const auto& [c, k] : v.terms) terms.push_back(Json{{"grade", c.first}, {"label", c.second}, {"mult", k}});
  return Json{{"terms", terms}};
}

inline Json to_json(const G0Tensor& t) {
  Json terms = Json::array();
  for (const auto& [key, k] : t.terms) {
    Json factors = Json::array();
    for (const auto& c : key) factors.push_back(Json{{"grade", c.first}, {"label", c.second}});
    terms.push_back(Json{{"factors", factors}, {"mult", k}});
  }
  return Json{{"terms", terms}};
}

inline Json to_json(const SupportSet& s) {
  Json labels = Json::array();
  for (const auto& [r, k] : s.labels) labels.push_back(Json{{"label", r}, {"mult", k}});
  return Json{{"n", s.n}, {"labels", labels}};
}

inline Json to_json(const Certificate& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries) entries.push_back(Json{{"r", e.r}, {"value", e.value}, {"nonzero", e.nonzero}});
  Json j{{"n", c.n}, {"mode", c.mode}, {"holds", c.holds}, {"entries", entries}};
  j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
  return j;
}

inline Json to_json(const AxiomReport& r) {
  Json j{{"axiom", r.axiom}, {"n", r.n}, {"pass", r.pass}, {"witness", r.witness}};
  j["failures"] = r.failures;
  return j;
}

inline Json to_json(const MoritaReport& r) {
  return Json{{"m", r.m},
              {"n", r.n},
              {"rank_onto_small", r.rank_onto_small},
              {"dim_small", r.dim_small},
              {"rank_onto_large", r.rank_onto_large},
              {"dim_large", r.dim_large},
              {"surjective", r.surjective}};
}

inline Json to_json(const AlphaReport& r) {
  return Json{{"m", r.m},
              {"n", r.n},
              {"r", r.r},
              {"target_r", r.target_r},
              {"tensor_dim", r.tensor_dim},
              {"target_dim", r.target_dim},
              {"well_defined", r.well_defined},
              {"surjective", r.surjective},
              {"ok", r.ok}};
}

inline Json to_json(const TowerReport& r) {
  Json checks = Json::array(), morita = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  for (const auto& m : r.morita) morita.push_back(to_json(m));
  return Json{{"max_n", r.max_n}, {"pass", r.pass}, {"checks", checks}, {"morita", morita}};
}

inline Json to_json(const std::vector<Layer>& layers) {
  Json a = Json::array();
  for (const auto& l : layers) a.push_back(Json{{"triple", to_json(l.triple)}, {"dim", l.dim}, {"count", l.count}});
  return a;
}

inline Json to_json(const MackeyReport& r) {
  return Json{{"n", r.n},         {"p", r.p},         {"left", to_json(r.left)}, {"right", to_json(r.right)},
              {"equal", r.equal}, {"difference", to_json(r.difference)}};
}

inline Json to_json(const VerifyReport& r) {
  Json suites = Json::array();
  for (const auto& s : r.suites) {
    suites.push_back(Json{{"name", s.name}, {"pass", s.pass()}, {"checks", s.checks}, {"failed", s.failed}, {"failures", s.failures}});
  }
  return Json{{"max_n", r.max_n}, {"mutation", r.mutation}, {"pass", r.pass()}, {"suites", suites}};
}

template <class F>
Json matrix_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace tlcat
