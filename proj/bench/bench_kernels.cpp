#include <benchmark/benchmark.h>

#include <algorithm>

#include "jk/kernels/kernels.hpp"
#include "jk/mcg/rvalue.hpp"
#include "jk/sp/sp2g_mod2.hpp"

using namespace jk;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

std::vector<trees::Join> six_leaf_joins() {
  std::vector<trees::Join> joins;
  std::vector<lie::Letter> perm{0, 0, 1, 1, 2, 2};
  do {
    joins.push_back(trees::caterpillar6(perm));
    joins.push_back(trees::spider6(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return joins;
}

std::vector<Gf2Matrix> l3_actions() {
  std::vector<Gf2Matrix> actions;
  for (const auto& t : sp::orbit_generators(3)) actions.push_back(sp::act_on_L(t, 3));
  return actions;
}

void BM_EtaRows(benchmark::State& state) {
  const auto& basis = trees::ComponentBasis::get(mcg::tree_context(3), 4, {2, 2, 2, 0, 0, 0});
  const auto joins = six_leaf_joins();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::eta_rows(basis, joins, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(joins.size()));
}

void BM_ComponentInvariants(benchmark::State& state) {
  const auto& ctx = mcg::tree_context(2);
  const auto mds = trees::multidegrees(4, 6);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::component_invariants(ctx, 4, mds, exec_of(state)));
}

void BM_Gf2ApplyAll(benchmark::State& state) {
  const auto actions = l3_actions();
  std::vector<BitVector> vectors;
  for (std::size_t i = 0; i < 70; ++i) {
    BitVector v(70);
    v.set(i);
    v.set((5 * i + 3) % 70);
    vectors.push_back(v);
  }
  for (auto _ : state) benchmark::DoNotOptimize(kernels::gf2_apply_all(actions, vectors, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(actions.size() * vectors.size()));
}

void BM_SpanClosure(benchmark::State& state) {
  const auto actions = l3_actions();
  const BitVector seed = sp::kernel_seed(3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::gf2_span_closure_batched(seed, actions, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_EtaRows)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ComponentInvariants)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gf2ApplyAll)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SpanClosure)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
