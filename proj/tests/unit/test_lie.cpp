#include <gtest/gtest.h>

#include "jk/errors.hpp"
#include "jk/lie/algebra.hpp"
#include "jk/lie/lyndon.hpp"
#include "jk/lie/render.hpp"
#include "jk/mcg/bch_formula.hpp"

using namespace jk;
using namespace jk::lie;

TEST(Lyndon, Recognition) {
  EXPECT_TRUE(is_lyndon({0, 0, 1}));
  EXPECT_FALSE(is_lyndon({0, 1, 0}));
  EXPECT_FALSE(is_lyndon({1, 1}));
  EXPECT_TRUE(is_lyndon({0, 1, 1}));
}

TEST(Lyndon, CountsMatchWittFormula) {
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= 5; ++d) EXPECT_EQ(static_cast<std::int64_t>(lyndon_words(n, d).size()), witt_rank(n, d));
  EXPECT_EQ(witt_rank(2, 3), 2);
  EXPECT_EQ(witt_rank(6, 3), 70);
  EXPECT_EQ(witt_rank(6, 2), 15);
  EXPECT_EQ(witt_rank(4, 4), 60);
}

TEST(Lyndon, StandardSplit) {
  const Word w{0, 0, 1};
  EXPECT_EQ(standard_split(w), 1u);  // a (ab)
}

TEST(Lie, BracketOfGenerators) {
  const LieContext& ctx = LieContext::get(2, 3);
  const LieElement a1 = LieElement::generator(ctx, 0), b1 = LieElement::generator(ctx, 2);
  EXPECT_EQ(bracket(a1, b1), -bracket(b1, a1));
  EXPECT_TRUE(bracket(a1, a1).is_zero());
  EXPECT_EQ(display(bracket(a1, b1)), "[a1,b1]");
  EXPECT_EQ(display(bracket(b1, a1)), "(-1)*[a1,b1]");
}

TEST(Lie, BracketTruncatesAboveTheContext) {
  const LieContext& ctx = LieContext::get(1, 2);
  const LieElement a = LieElement::generator(ctx, 0), b = LieElement::generator(ctx, 1);
  EXPECT_TRUE(bracket(bracket(a, b), a).is_zero());
}

TEST(Lie, ParseAndDisplayRoundTrip) {
  const LieContext& ctx = LieContext::get(3, 4);
  for (const char* text : {"a1+(-1/2)*[a1,b1]+(1/12)*[[a1,b1],b1]", "[a3,[a2,a1]]", "2*[a1,b2]-[b2,a1]", "0"}) {
    const LieElement x = parse_lie(ctx, text);
    EXPECT_EQ(parse_lie(ctx, display(x)), x) << text;
  }
  EXPECT_EQ(parse_lie(ctx, "2*[a1,b2]-[b2,a1]"), parse_lie(ctx, "3*[a1,b2]"));
}

TEST(Lie, ParseErrorsCarryOffsets) {
  const LieContext& ctx = LieContext::get(2, 3);
  try {
    parse_lie(ctx, "[a1,c2]");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 4"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_lie(ctx, "a3"), InputError);
  EXPECT_THROW(parse_lie(ctx, "[a1,b1"), InputError);
  EXPECT_THROW(parse_lie(ctx, "1/0*a1"), InputError);
}

TEST(Lie, BchMatchesClosedFormula) {
  const LieContext& ctx = LieContext::get(2, 4);
  const LieElement x = parse_lie(ctx, "a1+(1/2)*[a1,b2]"), y = parse_lie(ctx, "b1-a2+[a2,b1]");
  const LieElement closed = mcg::bch_formula(x, y, [](const LieElement& u, const LieElement& v) { return bracket(u, v); });
  EXPECT_EQ(bch(x, y), closed);
  EXPECT_EQ(bch(x, -x), LieElement(ctx));
}

TEST(Lie, ChangeContextDropsHighDegrees) {
  const LieContext& big = LieContext::get(2, 4);
  const LieContext& small = LieContext::get(2, 2);
  const LieElement x = parse_lie(big, "a1+[a1,b1]+[[a1,b1],b1]");
  EXPECT_EQ(change_context(x, small), parse_lie(small, "a1+[a1,b1]"));
  EXPECT_THROW(change_context(x, LieContext::get(3, 4)), std::exception);
}

TEST(Lie, TensorExpLogInverse) {
  const LieContext& ctx = LieContext::get(2, 4);
  const LieElement x = parse_lie(ctx, "a1-2*b2+[a1,a2]");
  EXPECT_EQ(TensorSeries::from_lie(x, 4).exp().log().to_lie(), x);
}
