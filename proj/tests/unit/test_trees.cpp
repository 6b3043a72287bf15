#include <gtest/gtest.h>

#include "jk/lie/lyndon.hpp"
#include "jk/lie/render.hpp"
#include "jk/mcg/invariants.hpp"
#include "jk/mcg/rvalue.hpp"
#include "jk/trees/closed.hpp"
#include "jk/trees/derivation.hpp"
#include "jk/trees/lattice.hpp"
#include "jk/trees/lcst.hpp"

using namespace jk;
using namespace jk::trees;
using lie::RootedTree;

namespace {

RootedTree leaf(lie::Letter l) { return RootedTree::leaf(l); }
RootedTree node(const RootedTree& x, const RootedTree& y) { return RootedTree::node(x, y); }

// a_i -> i-1, b_i -> g+i-1 at genus 3
constexpr lie::Letter a1 = 0, a2 = 1, a3 = 2, b1 = 3, b2 = 4, b3 = 5;

}  // namespace

TEST(Trees, JoinIsUnordered) {
  EXPECT_EQ(Join::make(leaf(a1), node(leaf(a2), leaf(a3))), Join::make(node(leaf(a2), leaf(a3)), leaf(a1)));
  EXPECT_EQ(Join::make(leaf(a1), node(leaf(a2), leaf(a3))).degree(), 1);
}

TEST(Trees, TripodIsSymplecticAndIntegral) {
  const auto& ctx = mcg::tree_context(3);
  const DerivationElement t = eta(TreeSum::single(3, Join::make(leaf(a1), node(leaf(a2), leaf(a3)))), ctx);
  EXPECT_EQ(t.degree(), 1);
  EXPECT_TRUE(t.is_integral());
  EXPECT_TRUE(t.is_symplectic());
  EXPECT_FALSE(t.is_zero());
}

TEST(Trees, EtaKillsIhx) {
  const auto& ctx = mcg::tree_context(3);
  TreeSum ihx(3);
  ihx.add(Join::make(leaf(a1), node(leaf(b1), node(leaf(a2), leaf(b3)))), 1);
  ihx.add(Join::make(leaf(a1), node(leaf(a2), node(leaf(b3), leaf(b1)))), 1);
  ihx.add(Join::make(leaf(a1), node(leaf(b3), node(leaf(b1), leaf(a2)))), 1);
  EXPECT_TRUE(eta(ihx, ctx).is_zero());
}

TEST(Trees, CanonicalTreesPresentTheSameDerivation) {
  const auto& ctx = mcg::tree_context(3);
  TreeSum p(3);
  p.add(Join::make(node(leaf(b3), leaf(a3)), node(leaf(a2), leaf(a1))), 1);
  p.add(Join::make(node(leaf(b1), leaf(a1)), node(leaf(a2), leaf(b2))), Rational(-1, 2));
  const DerivationElement d = eta(p, ctx);
  EXPECT_EQ(eta(canonical_trees(d), ctx), d);
  EXPECT_TRUE(canonical_trees(DerivationElement()).empty());
}

TEST(Trees, BracketOfTreesIsAntisymmetric) {
  TreeSum p = TreeSum::single(2, Join::make(leaf(0), node(leaf(1), leaf(2))));
  TreeSum q = TreeSum::single(2, Join::make(leaf(3), node(leaf(0), leaf(2))));
  EXPECT_EQ(bracket_trees(p, q), bracket_trees(q, p) * Rational(-1));
  EXPECT_EQ(bracket_trees(p, q).terms().begin()->first.degree(), 2);
}

TEST(Trees, SixLeafShapesHaveDegreeFour) {
  EXPECT_EQ(caterpillar6({a1, a2, a3, a3, a2, a1}).degree(), 4);
  EXPECT_EQ(spider6({a1, a2, a3, b1, b2, b3}).degree(), 4);
}

TEST(Trees, Multidegrees) {
  EXPECT_EQ(multidegrees(2, 2).size(), 3u);
  EXPECT_EQ(multidegrees(6, 6).size(), 462u);
}

TEST(Trees, Mod1Membership) {
  const auto& ctx = mcg::tree_context(3);
  const Join u = caterpillar6({a1, a2, a3, a3, a2, a1});
  const DerivationElement full = eta(TreeSum::single(3, u), ctx);
  EXPECT_TRUE(mod1_class_is_zero(full).zero);
  const DerivationElement half = eta(TreeSum::single(3, Join::make(node(leaf(a3), node(leaf(a2), leaf(a1))),
                                                                    node(leaf(a3), node(leaf(a2), leaf(a1))))),
                                     ctx) *
                                 Rational(1, 2);
  const Mod1Verdict v = mod1_class_is_zero(half);
  EXPECT_FALSE(v.zero);
  ASSERT_EQ(v.failing.size(), 1u);
  EXPECT_EQ(v.failing[0], (Multidegree{2, 2, 2, 0, 0, 0}));
}

TEST(Lcst, GenusOneIsTwoCopiesOfZ2) {
  const LcstReport r = lcst_quotient(1, 4);
  EXPECT_EQ(r.ambient_dim, 12u);
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.torsion, (std::vector<Integer>{2, 2}));
  EXPECT_EQ(static_cast<std::int64_t>(r.z2_count), lie::witt_rank(2, 3));
  EXPECT_TRUE(r.pass());
}

TEST(Lcst, SerialAndParallelAgree) {
  const LcstReport s = lcst_quotient(1, 4, kernels::Exec::Serial);
  const LcstReport p = lcst_quotient(1, 4, kernels::Exec::Parallel);
  EXPECT_EQ(s.torsion, p.torsion);
  EXPECT_EQ(s.rank, p.rank);
}

TEST(Lcst, OddDegreeHasNoTorsion) {
  const LcstReport r = lcst_quotient(1, 3);
  EXPECT_EQ(r.z2_count, 0u);
  EXPECT_TRUE(r.pass());
}

TEST(Lcst, GenusThreeComponent) {
  const LcstComponent c = lcst_component(mcg::tree_context(3), 4, {2, 2, 2, 0, 0, 0});
  std::vector<Integer> nonunit;
  for (const auto& x : c.invariants)
    if (x != 1) nonunit.push_back(x);
  EXPECT_EQ(nonunit, (std::vector<Integer>{2, 2}));
  EXPECT_EQ(c.expected_z2, 2u);
}

TEST(Closed, AOnlyWords) {
  EXPECT_EQ(static_cast<std::int64_t>(a_only_words(3, 3).size()), lie::witt_rank(3, 3));
  const auto& ctx = lie::LieContext::get(3, 3);
  EXPECT_TRUE(lbar_is_zero(lie::omega_element(ctx)));
  EXPECT_FALSE(lbar_is_zero(lie::parse_lie(ctx, "[a1,b1]")));
}

TEST(Trace, IndependentOfTheEndLeaf) {
  const Join j = Join::make(node(leaf(a1), leaf(b2)), node(leaf(a3), node(leaf(a2), leaf(a1))));
  const auto ends = mcg::end_leaves(j);
  ASSERT_GE(ends.size(), 2u);
  const mcg::Cubic first = mcg::tr3_rooted_at(j, 3, ends[0]);
  for (std::size_t e : ends) EXPECT_EQ(mcg::tr3_rooted_at(j, 3, e), first);
}
