#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <tlcat/diagrams.hpp>
#include <tlcat/grothendieck.hpp>
#include <tlcat/serialize.hpp>

#include "oracles.hpp"

using namespace tlcat;

namespace {

PlanarDiagram cupcap_left() {
  return PlanarDiagram::from_arcs(3, 3, {{{Side::T, 1}, {Side::T, 2}}, {{Side::T, 3}, {Side::B, 1}}, {{Side::B, 2}, {Side::B, 3}}});
}

PlanarDiagram cupcap_right() {
  return PlanarDiagram::from_arcs(3, 3, {{{Side::T, 2}, {Side::T, 3}}, {{Side::T, 1}, {Side::B, 1}}, {{Side::B, 2}, {Side::B, 3}}});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Enumerate, CatalanAgainstBruteForceMatchings) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(enumerate_diagrams(n, n).size(), oracle::count_noncrossing(2 * n)) << n;
  }
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(enumerate_diagrams(n, n).size(), oracle::catalan_recurrence(n));
}

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(enumerate_diagrams(0, 2).size(), 1u);
  EXPECT_EQ(enumerate_diagrams(3, 3).size(), 5u);
  // Every non-crossing matching of 6 points survives the (2,4) split.
  EXPECT_EQ(enumerate_diagrams(2, 4).size(), oracle::count_noncrossing(6));
  EXPECT_EQ(enumerate_diagrams(2, 4).size(), 5u);
  EXPECT_TRUE(enumerate_diagrams(1, 2).empty());
  EXPECT_TRUE(enumerate_diagrams(0, 0).size() == 1u);
}

TEST(Enumerate, DuplicateFreeAndValid) {
  for (int b = 0; b <= 5; ++b) {
    for (int t = b % 2; t <= 5; t += 2) {
      const auto basis = enumerate_diagrams(b, t);
      std::set<PlanarDiagram> seen(basis.begin(), basis.end());
      EXPECT_EQ(seen.size(), basis.size());
      for (const auto& d : basis) {
        EXPECT_NO_THROW(PlanarDiagram::from_arcs(b, t, d.arcs()));
        EXPECT_TRUE(oracle::noncrossing([&] {
          std::vector<oracle::Pair> v;
          for (auto [a, c] : d.arcs()) v.push_back({PlanarDiagram::position(b, t, a), PlanarDiagram::position(b, t, c)});
          return v;
        }()));
      }
    }
  }
}

TEST(FromArcs, RejectsBadInput) {
  EXPECT_THROW(PlanarDiagram::from_arcs(2, 2, {{{Side::B, 1}, {Side::T, 2}}, {{Side::B, 2}, {Side::T, 1}}}), std::invalid_argument);
  EXPECT_THROW(PlanarDiagram::from_arcs(2, 0, {{{Side::B, 1}, {Side::B, 3}}}), std::invalid_argument);
  EXPECT_THROW(PlanarDiagram::from_arcs(2, 2, {{{Side::B, 1}, {Side::T, 1}}}), std::invalid_argument);
  EXPECT_THROW(PlanarDiagram::from_arcs(1, 0, {}), std::invalid_argument);
}

TEST(Compose, LoopRemovingProduct) {
  const ScaledDiagram c = compose(cupcap_right(), cupcap_left());
  EXPECT_EQ(c.loops, 1u);
  EXPECT_EQ(c.diagram, cupcap_left());
  // Same result from the brute-force tracer.
  const auto g = oracle::glue(cupcap_right(), cupcap_left());
  EXPECT_EQ(g.loops, 1u);
  EXPECT_EQ(g.arcs, oracle::arc_set(cupcap_left()));
}

TEST(Compose, AgreesWithBruteGluing) {
  for (int m = 0; m <= 4; ++m) {
    for (int n = m % 2; n <= 4; n += 2) {
      for (int p = n % 2; p <= 4; p += 2) {
        for (const auto& f : enumerate_diagrams(m, n)) {
          for (const auto& g : enumerate_diagrams(n, p)) {
            const ScaledDiagram c = compose(f, g);
            const auto o = oracle::glue(f, g);
            ASSERT_EQ(c.loops, o.loops);
            ASSERT_EQ(oracle::arc_set(c.diagram), o.arcs);
          }
        }
      }
    }
  }
}

TEST(Compose, GeneratorRelations) {
  const auto e1 = PlanarDiagram::generator(3, 1), e2 = PlanarDiagram::generator(3, 2);
  const ScaledDiagram ee = multiply(e1, e1);
  EXPECT_EQ(ee.loops, 1u);
  EXPECT_EQ(ee.diagram, e1);
  const ScaledDiagram a = multiply(e1, e2);
  const ScaledDiagram b = multiply(a.diagram, e1);
  EXPECT_EQ(a.loops + b.loops, 0u);
  EXPECT_EQ(b.diagram, e1);
  for (const auto& f : enumerate_diagrams(3, 3)) {
    const ScaledDiagram i = compose(PlanarDiagram::identity(3), f);
    EXPECT_EQ(i.loops, 0u);
    EXPECT_EQ(i.diagram, f);
  }
  EXPECT_THROW(compose(PlanarDiagram::identity(2), PlanarDiagram::identity(3)), std::invalid_argument);
}

TEST(Compose, Associative) {
  const auto basis = enumerate_diagrams(4, 4);
  for (const auto& f : basis) {
    for (const auto& g : basis) {
      const ScaledDiagram fg = compose(f, g);
      for (const auto& h : basis) {
        const ScaledDiagram l = compose(fg.diagram, h);
        const ScaledDiagram gh = compose(g, h);
        const ScaledDiagram r = compose(f, gh.diagram);
        ASSERT_EQ(l.loops + fg.loops, r.loops + gh.loops);
        ASSERT_EQ(l.diagram, r.diagram);
      }
    }
  }
}

TEST(Involution, AntiMultiplicative) {
  EXPECT_EQ(involution(PlanarDiagram::identity(4)), PlanarDiagram::identity(4));
  const PlanarDiagram cup = enumerate_diagrams(0, 2)[0];
  const PlanarDiagram cap = involution(cup);
  EXPECT_EQ(cap.bot(), 2);
  EXPECT_EQ(cap.top(), 0);
  const auto basis = enumerate_diagrams(3, 3);
  for (const auto& f : basis) {
    EXPECT_EQ(involution(involution(f)), f);
    for (const auto& g : basis) {
      const ScaledDiagram a = compose(f, g), b = compose(involution(g), involution(f));
      EXPECT_EQ(a.loops, b.loops);
      EXPECT_EQ(involution(a.diagram), b.diagram);
    }
  }
}

TEST(Juxtapose, IdentityAndAssociativity) {
  EXPECT_EQ(juxtapose(PlanarDiagram::identity(2), PlanarDiagram::identity(3)), PlanarDiagram::identity(5));
  std::mt19937 rng(7);
  const auto b2 = enumerate_diagrams(2, 2), b3 = enumerate_diagrams(3, 3), b13 = enumerate_diagrams(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& f = b2[rng() % b2.size()];
    const auto& g = b3[rng() % b3.size()];
    const auto& h = b13[rng() % b13.size()];
    EXPECT_EQ(juxtapose(juxtapose(f, g), h), juxtapose(f, juxtapose(g, h)));
  }
  // Juxtaposition is an algebra map TL_2 x TL_3 -> TL_5.
  for (const auto& f : b2) {
    for (const auto& f2 : b2) {
      for (const auto& g : b3) {
        const auto& g2 = b3[(static_cast<std::size_t>(g.partner()[0]) + 1) % b3.size()];
        const ScaledDiagram lhs = compose(juxtapose(f, g), juxtapose(f2, g2));
        const ScaledDiagram a = compose(f, f2), b = compose(g, g2);
        EXPECT_EQ(lhs.loops, a.loops + b.loops);
        EXPECT_EQ(lhs.diagram, juxtapose(a.diagram, b.diagram));
      }
    }
  }
}

TEST(Split, InvertsJuxtapose) {
  for (const auto& f : enumerate_diagrams(2, 4)) {
    for (const auto& g : enumerate_diagrams(3, 1)) {
      const auto s = split(juxtapose(f, g), 2, 4);
      ASSERT_TRUE(s.has_value());
      EXPECT_EQ(s->first, f);
      EXPECT_EQ(s->second, g);
    }
  }
  EXPECT_FALSE(split(PlanarDiagram::generator(4, 2), 2, 2).has_value());
}

TEST(Json, RoundTrip) {
  for (int b = 0; b <= 4; ++b) {
    for (int t = b % 2; t <= 4; t += 2) {
      for (const auto& d : enumerate_diagrams(b, t)) {
        const Json j = to_json(d);
        EXPECT_EQ(diagram_from_json(Json::parse(j.dump())), d);
      }
    }
  }
  EXPECT_EQ(to_json(cupcap_left()).dump(), R"({"bot":3,"top":3,"arcs":[[["B",1],["T",3]],[["B",2],["B",3]],[["T",1],["T",2]]]})");
}

TEST(Render, Basics) {
  EXPECT_EQ(render_ascii(PlanarDiagram::identity(1)), "•\n│\n•");
  EXPECT_EQ(render_ascii(enumerate_diagrams(0, 2)[0]), "• •\n╰─╯");
  EXPECT_EQ(render_ascii(cupcap_left()) + "\n", read_file(std::string(TLCAT_GOLDEN_DIR) + "/cup_cap_3.txt"));
}

TEST(Render, WalledGolden) {
  const WalledCapDiagram w{6, 5, CapDiagram(11, {{3, 8}, {4, 5}, {6, 7}, {10, 11}})};
  EXPECT_EQ(render_walled(w) + "\n", read_file(std::string(TLCAT_GOLDEN_DIR) + "/walled_6_5.txt"));
}
