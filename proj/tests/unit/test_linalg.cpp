#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "jk/linalg/gf2.hpp"
#include "jk/linalg/lattice.hpp"
#include "jk/linalg/rational_space.hpp"

using namespace jk;

namespace {

IntMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (const auto& r : rows) {
    IntVector v;
    for (long x : r) v.emplace_back(x);
    m.push_back(v);
  }
  return m;
}

Integer det(const IntMatrix& m) {
  if (m.size() == 1) return m[0][0];
  Integer d = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    IntMatrix minor;
    for (std::size_t i = 1; i < m.size(); ++i) {
      IntVector row;
      for (std::size_t c = 0; c < m.size(); ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    d += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return d;
}

// gcd of all k x k minors of a 3 x 3 matrix
Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  for (unsigned rows = 0; rows < 8; ++rows)
    for (unsigned cols = 0; cols < 8; ++cols) {
      if (std::popcount(rows) != static_cast<int>(k) || std::popcount(cols) != static_cast<int>(k)) continue;
      IntMatrix sub;
      for (std::size_t i = 0; i < 3; ++i) {
        if (!(rows >> i & 1)) continue;
        IntVector row;
        for (std::size_t j = 0; j < 3; ++j)
          if (cols >> j & 1) row.push_back(m[i][j]);
        sub.push_back(row);
      }
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(det(sub))).get_mpz_t());
    }
  return g;
}

}  // namespace

TEST(Hnf, ReducesGeneratorsToEchelonBasis) {
  const IntegerLattice l = hnf(ints({{2, 0}, {0, 2}, {1, 1}}));
  EXPECT_EQ(l.basis(), ints({{1, 1}, {0, 2}}));
  EXPECT_EQ(l.rank(), 2u);
}

TEST(Hnf, MembershipMatchesCramer) {
  // full-rank generators: v = x * gens has the unique solution x_i = det(gens with row i := v) / det(gens)
  const IntMatrix gens = ints({{3, 1, 0}, {0, 2, 4}, {1, 1, 1}});
  const Integer d = det(gens);
  const IntegerLattice l = hnf(gens);
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long c = -4; c <= 4; ++c) {
        const IntVector v{Integer(a), Integer(b), Integer(c)};
        bool integral = true;
        for (std::size_t i = 0; i < 3; ++i) {
          IntMatrix m = gens;
          m[i] = v;
          integral = integral && det(m) % d == 0;
        }
        EXPECT_EQ(lattice_membership(v, l), integral) << a << " " << b << " " << c;
      }
}

TEST(Hnf, MembershipInADegenerateLattice) {
  const IntegerLattice l = hnf(ints({{2, 4, 0}, {1, 2, 0}, {0, 0, 3}}));
  EXPECT_EQ(l.rank(), 2u);
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y)
      for (long z = -4; z <= 4; ++z) {
        const bool expected = y == 2 * x && z % 3 == 0;
        EXPECT_EQ(lattice_membership(IntVector{Integer(x), Integer(y), Integer(z)}, l), expected);
      }
}

TEST(Hnf, RationalVectorsOutsideTheLattice) {
  const IntegerLattice l = hnf(ints({{1, 0}, {0, 1}}));
  EXPECT_FALSE(l.contains(RatVector{Rational(1, 2), Rational(0)}));
  EXPECT_TRUE(l.contains(RatVector{Rational(3), Rational(-2)}));
  const auto coords = l.coordinates(RatVector{Rational(3), Rational(-2)});
  ASSERT_TRUE(coords.has_value());
  EXPECT_EQ(*coords, (IntVector{3, -2}));
}

TEST(Snf, DiagonalExample) {
  EXPECT_EQ(snf_diagonal(ints({{2, 0}, {0, 3}})), (std::vector<Integer>{1, 6}));
  EXPECT_EQ(snf_diagonal(ints({{2, 4}, {4, 8}})), (std::vector<Integer>{2, 0}));
}

TEST(Snf, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(3, IntVector(3));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    const std::vector<Integer> diag = snf_diagonal(m);
    ASSERT_EQ(diag.size(), 3u);
    Integer prod = 1;
    for (std::size_t k = 1; k <= 3; ++k) {
      prod *= diag[k - 1];
      EXPECT_EQ(abs(prod), determinantal_divisor(m, k)) << "trial " << trial << " k " << k;
    }
  }
}

TEST(Snf, RelativeInvariants) {
  const IntegerLattice outer = hnf(ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  const IntegerLattice inner = hnf(ints({{2, 0, 0}, {0, 6, 0}}));
  EXPECT_EQ(relative_invariants(outer, inner), (std::vector<Integer>{2, 6, 0}));
  EXPECT_THROW(relative_invariants(inner, outer), std::exception);
  EXPECT_EQ(merge_invariants({2, 3, 1, 2}), (std::vector<Integer>{2, 6}));
}

TEST(Snf, LeftKernel) {
  const IntMatrix m = ints({{1, 2}, {2, 4}, {0, 1}});
  const IntMatrix k = integer_left_kernel(m, 2);
  ASSERT_EQ(k.size(), 1u);
  for (std::size_t c = 0; c < 2; ++c) {
    Integer s = 0;
    for (std::size_t r = 0; r < 3; ++r) s += k[0][r] * m[r][c];
    EXPECT_EQ(s, 0);
  }
}

TEST(Gf2, RankAndKernel) {
  std::vector<BitVector> rows(3, BitVector(4));
  rows[0].set(0);
  rows[0].set(1);
  rows[1].set(1);
  rows[1].set(2);
  rows[2] = rows[0] ^ rows[1];
  EXPECT_EQ(gf2_rank(rows, 4), 2u);

  Gf2Matrix m(2, 3);
  m.set(0, 0);
  m.set(0, 1);
  m.set(1, 1);
  m.set(1, 2);
  const auto ker = gf2_kernel(m);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE(m.apply(ker[0]).is_zero());
  EXPECT_EQ(ker[0].popcount(), 3u);
}

TEST(Gf2, SpanClosureOfCyclicShift) {
  Gf2Matrix shift(5, 5);
  for (std::size_t j = 0; j < 5; ++j) shift.set((j + 1) % 5, j);
  BitVector seed(5);
  seed.set(0);
  seed.set(1);
  const Mod2Subspace s = gf2_span_closure(seed, {shift});
  EXPECT_EQ(s.rank(), 4u);  // the even-weight vectors
  BitVector odd(5);
  odd.set(3);
  EXPECT_FALSE(gf2_membership(odd, s));
}

TEST(RationalSpace, Rank) {
  EXPECT_EQ(rational_rank({{Rational(1), Rational(2)}, {Rational(1, 2), Rational(1)}}), 1u);
  RationalRowSpace s(3);
  EXPECT_TRUE(s.insert({{0, Rational(1)}, {2, Rational(1, 3)}}));
  EXPECT_FALSE(s.insert({{0, Rational(3)}, {2, Rational(1)}}));
  EXPECT_TRUE(s.contains({{0, Rational(-2)}, {2, Rational(-2, 3)}}));
}
