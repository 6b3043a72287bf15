#include <gtest/gtest.h>

#include <random>

#include "jk/errors.hpp"
#include "jk/lie/render.hpp"
#include "jk/words/logansion.hpp"

using namespace jk;
using namespace jk::words;

TEST(Words, ParseAndPrint) {
  const GroupWord w = parse_word("a1+b2-a1-");
  EXPECT_EQ(w.size(), 3u);
  EXPECT_EQ(w.to_string(), "a1+b2-a1-");
  EXPECT_EQ(invert(w).to_string(), "a1+b2+a1-");
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_EQ((w * invert(w)).freely_reduced().size(), 0u);
  EXPECT_EQ(comm(parse_word("a1+"), parse_word("b1-")).to_string(), "a1+b1-a1-b1+");
}

TEST(Words, ParseErrors) {
  for (const char* bad : {"a1", "c1+", "a+", "a1+b", "a1*"}) EXPECT_THROW(parse_word(bad), InputError) << bad;
  try {
    parse_word("a1+b2-x");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 6"), std::string::npos) << e.what();
  }
}

TEST(Words, Abelianization) {
  EXPECT_EQ(parse_word("a1+b2-a1+").abelianization(2), (std::vector<int>{2, 0, 0, -1}));
  EXPECT_EQ(boundary_word(3).abelianization(3), std::vector<int>(6, 0));
}

TEST(Theta, DisplayedExample) {
  const auto table = LogansionTable::standard(3, 3);
  EXPECT_EQ(lie::display(table.theta(parse_word("a1+"))), "a1+(-1/2)*[a1,b1]+(1/12)*[[a1,b1],b1]");
  EXPECT_EQ(lie::display(table.theta(parse_word(""))), "0");
  EXPECT_EQ(lie::display(table.theta(parse_word("a1+a1-"))), "0");
}

TEST(Theta, SymplecticAtEveryGenus) {
  for (int g = 1; g <= 3; ++g)
    for (int n = 2; n <= 4; ++n) EXPECT_TRUE(symplectic_check(LogansionTable::standard(g, n))) << g << " " << n;
}

TEST(Theta, BeyondDegreeFourIsACapabilityError) {
  EXPECT_THROW(LogansionTable::standard(3, 5), CapabilityError);
}

TEST(Theta, GeneratorOutsideTheGenus) {
  const auto table = LogansionTable::standard(2, 3);
  EXPECT_THROW(table.theta(parse_word("a3+")), InputError);
}

TEST(Theta, MultiplicativeAndFoldAgree) {
  const auto table = LogansionTable::standard(2, 4);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 7);
  const char* letters[] = {"a1+", "a1-", "a2+", "a2-", "b1+", "b1-", "b2+", "b2-"};
  for (int trial = 0; trial < 50; ++trial) {
    std::string u, v;
    for (int i = 0; i < 4; ++i) u += letters[pick(rng)];
    for (int i = 0; i < 3; ++i) v += letters[pick(rng)];
    const GroupWord wu = parse_word(u), wv = parse_word(v);
    EXPECT_EQ(table.theta(wu * wv), lie::bch(table.theta(wu), table.theta(wv))) << u << " " << v;
    EXPECT_EQ(table.theta(wu), table.theta_fold(wu)) << u;
    EXPECT_EQ(table.theta(invert(wu)), -table.theta(wu)) << u;
  }
}
