#include <gtest/gtest.h>

#include "jk/kernels/kernels.hpp"
#include "jk/mcg/rvalue.hpp"
#include "jk/sp/sp2g_mod2.hpp"

using namespace jk;
using kernels::Exec;

TEST(Kernels, EtaRowsSerialEqualsParallel) {
  const auto& ctx = mcg::tree_context(3);
  const trees::Multidegree md{2, 2, 2, 0, 0, 0};
  const auto& basis = trees::ComponentBasis::get(ctx, 4, md);
  std::vector<trees::Join> joins;
  const std::vector<lie::Letter> leaves{0, 0, 1, 1, 2, 2};
  std::vector<lie::Letter> perm = leaves;
  do {
    joins.push_back(trees::caterpillar6(perm));
    joins.push_back(trees::spider6(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(kernels::eta_rows(basis, joins, Exec::Serial), kernels::eta_rows(basis, joins, Exec::Parallel));
}

TEST(Kernels, ComponentInvariantsSerialEqualsParallel) {
  const auto& ctx = mcg::tree_context(2);
  const auto mds = trees::multidegrees(4, 6);
  EXPECT_EQ(kernels::component_invariants(ctx, 4, mds, Exec::Serial),
            kernels::component_invariants(ctx, 4, mds, Exec::Parallel));
}

TEST(Kernels, Gf2ApplyAllSerialEqualsParallel) {
  std::vector<Gf2Matrix> actions;
  for (const auto& t : sp::orbit_generators(3)) actions.push_back(sp::act_on_L(t, 3));
  std::vector<BitVector> vectors;
  for (std::size_t i = 0; i < 70; i += 3) {
    BitVector v(70);
    v.set(i);
    v.set((i * 7 + 1) % 70);
    vectors.push_back(v);
  }
  const auto serial = kernels::gf2_apply_all(actions, vectors, Exec::Serial);
  EXPECT_EQ(serial, kernels::gf2_apply_all(actions, vectors, Exec::Parallel));
  EXPECT_EQ(serial[vectors.size() + 2], actions[1].apply(vectors[2]));
}

TEST(Kernels, BatchedClosureMatchesWorklist) {
  std::vector<Gf2Matrix> actions;
  for (const auto& t : sp::orbit_generators(3)) actions.push_back(sp::act_on_L(t, 3));
  const BitVector seed = sp::kernel_seed(3);
  const Mod2Subspace plain = gf2_span_closure(seed, actions);
  EXPECT_EQ(kernels::gf2_span_closure_batched(seed, actions, Exec::Serial).rows(), plain.rows());
  EXPECT_EQ(kernels::gf2_span_closure_batched(seed, actions, Exec::Parallel).rows(), plain.rows());
}
