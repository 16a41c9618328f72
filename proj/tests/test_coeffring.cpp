#include <gtest/gtest.h>

#include <tlcat/coeffring.hpp>
#include <tlcat/linalg.hpp>

#include "oracles.hpp"

using namespace tlcat;

namespace {

std::vector<oracle::Q> coeffs_of(const DeltaPoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-3"), make_rational(-3));
  EXPECT_EQ(rational_to_string(make_rational(3, 2)), "3/2");
  EXPECT_EQ(rational_to_string(make_rational(2)), "2/1");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(DeltaPoly, Arithmetic) {
  const DeltaPoly d = DeltaPoly::delta();
  EXPECT_EQ(d * d - DeltaPoly{1}, (DeltaPoly{-1, 0, 1}));
  EXPECT_EQ((DeltaPoly{1, 1}) * (DeltaPoly{-1, 1}), (DeltaPoly{-1, 0, 1}));
  EXPECT_TRUE((d - d).is_zero());
  EXPECT_EQ(to_string(DeltaPoly{-1, 0, 1}), "δ^2 - 1");
  EXPECT_EQ(to_string(DeltaPoly{0, -2, 0, 1}), "δ^3 - 2δ");
  EXPECT_EQ(to_string(DeltaPoly{}), "0");
  EXPECT_EQ(specialize(DeltaPoly{-1, 0, 1}, make_rational(3)), make_rational(8));
}

TEST(DeltaPoly, DivisionAgreesWithSchoolbookOracle) {
  const DeltaPoly a{-1, 0, 1}, b{-1, 1};
  const auto [q, r] = poly_divmod(a, b);
  EXPECT_EQ(q, (DeltaPoly{1, 1}));
  EXPECT_TRUE(r.is_zero());
  const auto [oq, orr] = oracle::poly_div(coeffs_of(a), coeffs_of(b));
  EXPECT_EQ(coeffs_of(q), oq);
  EXPECT_TRUE(orr.empty());

  // A sweep of products plus remainders.
  for (long x = -2; x <= 2; ++x) {
    for (long y = -2; y <= 2; ++y) {
      const DeltaPoly num = DeltaPoly{x, 0, 1, y} * DeltaPoly{1, x, 2} + DeltaPoly{y, 1};
      const DeltaPoly den{x, 3, 1};
      const auto [pq, pr] = poly_divmod(num, den);
      const auto [tq, tr] = oracle::poly_div(coeffs_of(num), coeffs_of(den));
      EXPECT_EQ(coeffs_of(pq), tq);
      EXPECT_EQ(coeffs_of(pr), tr);
      EXPECT_EQ(pq * den + pr, num);
    }
  }
  EXPECT_THROW(poly_divmod(a, DeltaPoly{}), std::domain_error);
}

TEST(DeltaPoly, Gcd) {
  const DeltaPoly g = poly_gcd(DeltaPoly{-1, 0, 1}, DeltaPoly{1, 2, 1});
  EXPECT_EQ(g, (DeltaPoly{1, 1}));
}

TEST(RatFunc, NormalizesToLowestTerms) {
  const RatFunc f = ratfunc_normalize(DeltaPoly{-1, 0, 1}, DeltaPoly{-1, 1});
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.num(), (DeltaPoly{1, 1}));
  EXPECT_EQ(to_string(f), "δ + 1");
  const RatFunc g = ratfunc_normalize(DeltaPoly{2}, DeltaPoly{0, 4});
  EXPECT_EQ(to_string(g), "(1/2)/(δ)");
  EXPECT_EQ(g * RatFunc::delta(), RatFunc(make_rational(1, 2)));
  EXPECT_EQ(g.at(make_rational(2)), make_rational(1, 4));
  EXPECT_THROW(g.at(make_rational(0)), std::domain_error);
  EXPECT_EQ(RatFunc::delta().inverse() * RatFunc::delta(), RatFunc(1));
}

TEST(LoopParam, Powers) {
  EXPECT_EQ(Numeric{make_rational(3)}.delta_pow(4), make_rational(81));
  EXPECT_EQ(Generic{}.delta_pow(3), RatFunc(DeltaPoly::monomial(3)));
  EXPECT_EQ(Numeric{make_rational(0)}.delta_pow(0), make_rational(1));
}

TEST(Linalg, BareissMatchesGaussianOracle) {
  const Matrix<Rational> m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  std::vector<std::vector<oracle::Q>> o(m.begin(), m.end());
  EXPECT_EQ(bareiss_det(m), oracle::det(o));
  EXPECT_EQ(rank(m), 3u);
  const Matrix<Rational> s{{1, 2}, {2, 4}};
  EXPECT_EQ(bareiss_det(s), Rational(0));
  EXPECT_EQ(rank(s), 1u);
}

TEST(Linalg, KernelIsAnnihilated) {
  SparseReducer<Rational> red(4);
  red.add(SparseVec<Rational>{{0, 1}, {1, 1}});
  red.add(SparseVec<Rational>{{1, 1}, {2, -1}});
  EXPECT_EQ(red.rank(), 2u);
  const auto ker = red.kernel();
  ASSERT_EQ(ker.size(), 2u);
  for (const auto& v : ker) {
    EXPECT_EQ(v[0] + v[1], Rational(0));
    EXPECT_EQ(v[1] - v[2], Rational(0));
  }
}
