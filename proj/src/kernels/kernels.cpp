#include "jk/kernels/kernels.hpp"

#include <exception>

#include <omp.h>

#include "jk/errors.hpp"

namespace jk::kernels {

int max_threads() { return omp_get_max_threads(); }

namespace {

// Runs body(i) for i in [0, n), rethrowing the first exception afterwards.
template <class Body>
void for_each_index(long n, Exec exec, Body body) {
  if (exec == Exec::Serial) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(jk_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

IntMatrix eta_rows(const trees::ComponentBasis& basis, const std::vector<trees::Join>& joins, Exec exec) {
  IntMatrix rows(joins.size());
  const auto& ctx = basis.context();
  for_each_index(static_cast<long>(joins.size()), exec, [&](long i) {
    const auto& j = joins[static_cast<std::size_t>(i)];
    auto d = trees::eta_join(lie::LieElement::from_tree(ctx, j.left), lie::LieElement::from_tree(ctx, j.right));
    rows[static_cast<std::size_t>(i)] = d.has_context() ? basis.integer_vector_of(d) : IntVector(basis.dim());
  });
  return rows;
}

std::vector<std::vector<Integer>> component_invariants(const lie::LieContext& ctx, int k,
                                                       const std::vector<trees::Multidegree>& mds, Exec exec) {
  std::vector<std::vector<Integer>> out(mds.size());
  for_each_index(static_cast<long>(mds.size()), exec, [&](long i) {
    const auto& md = mds[static_cast<std::size_t>(i)];
    const IntegerLattice& inner = k == 4 ? trees::lattice_eta_T4(ctx, md) : trees::lattice_eta_T(ctx, k, md);
    out[static_cast<std::size_t>(i)] = relative_invariants(trees::lattice_D_kernel(ctx, k, md), inner);
  });
  return out;
}

std::vector<BitVector> gf2_apply_all(const std::vector<Gf2Matrix>& actions, const std::vector<BitVector>& vectors,
                                     Exec exec) {
  const std::size_t nv = vectors.size();
  std::vector<BitVector> out(actions.size() * nv);
  for_each_index(static_cast<long>(out.size()), exec, [&](long idx) {
    std::size_t a = static_cast<std::size_t>(idx) / nv, v = static_cast<std::size_t>(idx) % nv;
    out[static_cast<std::size_t>(idx)] = actions[a].apply(vectors[v]);
  });
  return out;
}

Mod2Subspace gf2_span_closure_batched(const BitVector& seed, const std::vector<Gf2Matrix>& actions, Exec exec) {
  const std::size_t n = seed.dim();
  for (const auto& a : actions)
    if (a.rows() != n || a.cols() != n) throw MismatchError("span closure: action dimension mismatch");
  Mod2Subspace space(n);
  std::vector<BitVector> frontier;
  if (space.insert(seed)) frontier.push_back(seed);
  while (!frontier.empty()) {
    std::vector<BitVector> images = gf2_apply_all(actions, frontier, exec);
    std::vector<BitVector> next;
    for (auto& w : images)
      if (space.insert(w)) next.push_back(std::move(w));
    frontier = std::move(next);
  }
  return space;
}

}  // namespace jk::kernels
