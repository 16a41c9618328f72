#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <tlcat/cellmod.hpp>

#include "oracles.hpp"

using namespace tlcat;

namespace {

std::vector<oracle::Pair> caps_of(const CapDiagram& c) { return c.caps(); }

}  // namespace

TEST(Caps, DimensionsMatchBruteForceAndFormula) {
  for (int n = 0; n <= 8; ++n) {
    for (int r = 0; 2 * r <= n; ++r) {
      const auto caps = enumerate_caps(n, r);
      auto brute = oracle::cap_diagrams(n, r);
      std::vector<std::vector<oracle::Pair>> got;
      for (const auto& c : caps) got.push_back(caps_of(c));
      std::sort(brute.begin(), brute.end());
      EXPECT_EQ(got, brute) << n << "," << r;  // also pins the lexicographic order
    }
  }
  for (int n = 0; n <= 12; ++n) {
    for (int r = 0; 2 * r <= n; ++r) {
      EXPECT_EQ(enumerate_caps(n, r).size(), oracle::binom(n, r) - oracle::binom(n, r - 1));
    }
  }
  EXPECT_TRUE(enumerate_caps(3, 2).empty());
  EXPECT_EQ(defects(7, 2), 3);
}

TEST(Caps, RejectsEnclosedDefect) {
  EXPECT_THROW(CapDiagram(3, {{1, 3}}), std::invalid_argument);
  EXPECT_THROW(CapDiagram(4, {{1, 3}, {2, 4}}), std::invalid_argument);
  EXPECT_NO_THROW(CapDiagram(4, {{1, 4}, {2, 3}}));
}

TEST(Assemble, BijectionWithDiagramBasis) {
  for (int n = 0; n <= 10; ++n) {
    std::size_t total = 0;
    for (int r = 0; 2 * r <= n; ++r) total += enumerate_caps(n, r).size() * enumerate_caps(n, r).size();
    EXPECT_EQ(total, catalan(n));
  }
  for (int n = 0; n <= 6; ++n) {
    std::set<PlanarDiagram> seen;
    for (int r = 0; 2 * r <= n; ++r) {
      for (const auto& S : enumerate_caps(n, r)) {
        for (const auto& T : enumerate_caps(n, r)) {
          const PlanarDiagram d = assemble(S, T);
          EXPECT_TRUE(seen.insert(d).second);
          const Decomposition dc = decompose(d);
          EXPECT_EQ(dc.S, S);
          EXPECT_EQ(dc.T, T);
          EXPECT_EQ(dc.r, r);
        }
      }
    }
    EXPECT_EQ(seen.size(), catalan(n));
  }
}

TEST(Act, TruncationAndRawAction) {
  const CapDiagram x = CapDiagram::all_defects(2);
  EXPECT_FALSE(act(PlanarDiagram::generator(2, 1), x).has_value());
  const ScaledCap raw = act_raw(PlanarDiagram::generator(2, 1), x);
  EXPECT_EQ(raw.cap, CapDiagram(2, {{1, 2}}));
  const CapDiagram y(2, {{1, 2}});
  const auto e = act(PlanarDiagram::generator(2, 1), y);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->loops, 1u);
  EXPECT_EQ(e->cap, y);
}

TEST(Act, ModuleLawExhaustiveTL3SampledTL5) {
  auto check = [](const PlanarDiagram& a, const PlanarDiagram& b, const CapDiagram& x) {
    const ScaledDiagram ab = multiply(a, b);
    auto lhs = act(ab.diagram, x);
    if (lhs) lhs->loops += ab.loops;
    std::optional<ScaledCap> rhs;
    if (auto bx = act(b, x)) {
      if (auto abx = act(a, bx->cap)) rhs = ScaledCap{abx->loops + bx->loops, abx->cap};
    }
    return lhs == rhs;
  };
  const auto b3 = enumerate_diagrams(3, 3);
  for (int r = 0; r <= 1; ++r) {
    for (const auto& x : enumerate_caps(3, r)) {
      for (const auto& a : b3) {
        for (const auto& b : b3) EXPECT_TRUE(check(a, b, x));
      }
    }
  }
  std::mt19937 rng(11);
  for (int n = 4; n <= 5; ++n) {
    const auto basis = enumerate_diagrams(n, n);
    for (int trial = 0; trial < 400; ++trial) {
      const int r = static_cast<int>(rng() % static_cast<unsigned>(n / 2 + 1));
      const auto caps = enumerate_caps(n, r);
      const auto& x = caps[rng() % caps.size()];
      EXPECT_TRUE(check(basis[rng() % basis.size()], basis[rng() % basis.size()], x));
    }
  }
}

TEST(Form, EntriesMatchBruteForcePairing) {
  for (int n = 0; n <= 8; ++n) {
    for (int r = 0; 2 * r <= n; ++r) {
      const auto loops = gram_loops(n, r);
      const auto caps = enumerate_caps(n, r);
      for (std::size_t i = 0; i < caps.size(); ++i) {
        for (std::size_t j = 0; j < caps.size(); ++j) {
          ASSERT_EQ(loops[i][j], oracle::pairing(n, caps[i].caps(), caps[j].caps())) << n << "," << r;
          ASSERT_EQ(loops[i][j], loops[j][i]);
        }
      }
    }
  }
}

TEST(Form, Contravariant) {
  for (int n = 2; n <= 6; ++n) {
    for (int r = 0; 2 * r <= n; ++r) {
      const auto caps = enumerate_caps(n, r);
      for (int i = 1; i < n; ++i) {
        const auto e = PlanarDiagram::generator(n, i);  // self-adjoint
        for (const auto& x : caps) {
          for (const auto& y : caps) {
            const Rational q = 2;
            const Numeric p{q};
            Rational l = 0, rr = 0;
            if (auto ex = act(e, x)) l = p.delta_pow(ex->loops) * gram_pair(ex->cap, y, p);
            if (auto ey = act(involution(e), y)) rr = p.delta_pow(ey->loops) * gram_pair(x, ey->cap, p);
            EXPECT_EQ(l, rr);
          }
        }
      }
    }
  }
}

TEST(Form, CellStructureConstants) {
  // C_{S,T} acting on C_U gives phi(T, U) C_S, modulo lower cells.
  for (int n = 0; n <= 5; ++n) {
    for (int r = 0; 2 * r <= n; ++r) {
      const auto caps = enumerate_caps(n, r);
      for (const auto& S : caps) {
        for (const auto& T : caps) {
          for (const auto& U : caps) {
            const auto got = act(assemble(S, T), U);
            const auto phi = gram_pair_loops(T, U);
            if (phi) {
              ASSERT_TRUE(got.has_value());
              EXPECT_EQ(got->cap, S);
              EXPECT_EQ(got->loops, *phi);
            } else {
              EXPECT_FALSE(got.has_value());
            }
          }
        }
      }
    }
  }
}

TEST(GramDet, KnownValues) {
  EXPECT_EQ(gram_det(2, 1), DeltaPoly::delta());
  EXPECT_EQ(gram_det(3, 1), (DeltaPoly{-1, 0, 1}));
  EXPECT_EQ(gram_det(4, 1), (DeltaPoly{0, -2, 0, 1}));
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(gram_det(n, 0), DeltaPoly{1});
  EXPECT_THROW(gram_det(3, 2), std::invalid_argument);
}

TEST(GramDet, InterpolationOracle) {
  // Both sides have degree at most dim * r, so agreement on dim * r + 1 points is equality.
  for (int n = 2; n <= 7; ++n) {
    for (int r = 1; 2 * r <= n; ++r) {
      const DeltaPoly det = gram_det(n, r);
      const auto dim = static_cast<long>(enumerate_caps(n, r).size());
      for (long k = 0; k <= dim * r; ++k) {
        const oracle::Q q(k - dim * r / 2, 3);
        ASSERT_EQ(specialize(det, q), oracle::det(oracle::gram_at(n, r, q))) << n << "," << r << " at " << q;
      }
    }
  }
}

TEST(GramDet, NonzeroGenerically) {
  for (int n = 0; n <= 9; ++n) {
    for (int r = 0; 2 * r <= n; ++r) EXPECT_FALSE(gram_det(n, r).is_zero()) << n << "," << r;
  }
}

TEST(Radical, MatchesOracleRank) {
  EXPECT_EQ(radical_dim(3, 1, 1), 1u);
  for (int n = 1; n <= 7; ++n) {
    for (int r = 0; 2 * r <= n; ++r) {
      for (const oracle::Q& q : {oracle::Q(0), oracle::Q(1), oracle::Q(-1), oracle::Q(2), oracle::Q(1, 2)}) {
        const auto g = oracle::gram_at(n, r, q);
        EXPECT_EQ(radical_dim(n, r, q), g.size() - oracle::rank(g)) << n << "," << r << " at " << q;
      }
    }
  }
}

TEST(Certificate, Semisimplicity) {
  const Certificate c = is_semisimple(3, Numeric{Rational(1)});
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(*c.witness, 1);
  for (int n = 0; n <= 8; ++n) {
    EXPECT_TRUE(is_semisimple(n, Generic{}).holds) << n;
    EXPECT_TRUE(is_semisimple(n, Numeric{Rational(3)}).holds) << n;
  }
  // delta = 0 kills the form on the empty-defect cell of TL_2.
  EXPECT_FALSE(is_quasi_hereditary(2, Numeric{Rational(0)}).holds);
  EXPECT_TRUE(is_quasi_hereditary(3, Numeric{Rational(0)}).holds);
  EXPECT_TRUE(is_quasi_hereditary(4, Generic{}).holds);
}

TEST(CellVector, LinearAction) {
  const Generic g;
  CellVector<RatFunc> v;
  v.n = 3;
  v.r = 1;
  v.add(CapDiagram(3, {{1, 2}}), RatFunc(1));
  v.add(CapDiagram(3, {{2, 3}}), RatFunc(2));
  const auto w = act_vector(PlanarDiagram::generator(3, 1), v, g);
  // e1 {1,2} = delta {1,2}; e1 {2,3} = {1,2}.
  CellVector<RatFunc> expect;
  expect.n = 3;
  expect.r = 1;
  expect.add(CapDiagram(3, {{1, 2}}), RatFunc::delta() + RatFunc(2));
  EXPECT_EQ(w, expect);
}
