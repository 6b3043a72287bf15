#include <gtest/gtest.h>

#include "jk/lie/render.hpp"
#include "jk/sp/sp2g_mod2.hpp"

using namespace jk;
using namespace jk::sp;

TEST(Sp, GeneratorsPreserveThePairing) {
  for (const auto& t : orbit_generators(3)) EXPECT_TRUE(t.preserves_pairing()) << t.name();
  const auto s = SpTransformation::shear(3, 1, 2) * SpTransformation::rotation(3, 3);
  EXPECT_TRUE(s.preserves_pairing());
}

TEST(Sp, RejectsNonSymplecticMatrix) {
  Gf2Matrix m = Gf2Matrix::identity(4);
  m.set(1, 0);  // a1 -> a1 + a2 alone
  EXPECT_THROW(SpTransformation(2, m, "bad"), std::exception);
}

TEST(Sp, TransvectionFormula) {
  const BitVector x = h_vector(2, "a2+a1");
  const auto t = SpTransformation::transvection(2, x, "T");
  const BitVector b1 = h_vector(2, "b1");
  EXPECT_EQ(t.matrix().apply(b1), b1 ^ x);
  const BitVector a1 = h_vector(2, "a1");
  EXPECT_EQ(t.matrix().apply(a1), a1);
}

TEST(Sp, StigmaOnABracket) {
  const auto& ctx = lie::LieContext::get(3, 3);
  const BitVector v = mod2(lie::parse_lie(ctx, "[[a1,a2],b1]"));
  EXPECT_EQ(stigma(3, v), h_vector(3, "a2"));
  EXPECT_TRUE(stigma(3, kernel_seed(3)).is_zero());
}

TEST(Sp, ShortExactSequenceDimensions) {
  const std::size_t expected_l3[] = {2, 20, 70}, expected_kernel[] = {0, 16, 64};
  for (int g = 1; g <= 3; ++g) {
    const SesReport r = verify_ses(g);
    EXPECT_EQ(r.dim_l3, expected_l3[g - 1]);
    EXPECT_EQ(r.kernel_dim, expected_kernel[g - 1]);
    EXPECT_TRUE(r.pass());
  }
}

TEST(Sp, OrbitSpansTheKernel) {
  const OrbitSpanReport r = verify_orbit_span(3);
  EXPECT_EQ(r.orbit_dim, 64u);
  EXPECT_EQ(r.kernel_dim, 64u);
  EXPECT_TRUE(r.contained);
  EXPECT_TRUE(r.serial_matches);
}

TEST(Sp, OmegaSeedIsNotInTheKernel) {
  const auto& ctx = lie::LieContext::get(3, 3);
  const OrbitSpanReport r = verify_orbit_span(3, mod2(lie::parse_lie(ctx, "[[a1,b1],a1]")));
  EXPECT_FALSE(r.contained);
}

TEST(Sp, LowerBounds) {
  for (int g = 2; g <= 8; ++g) EXPECT_TRUE(lower_bound_exponents(g).pass()) << g;
  EXPECT_EQ(lower_bound_exponents(3).bordered, 64);
  EXPECT_EQ(lower_bound_exponents(3).closed, 5);
  EXPECT_EQ(lower_bound_exponents(6).closed, 64);
}
