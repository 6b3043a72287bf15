#pragma once

#include <vector>

#include "jk/linalg/gf2.hpp"
#include "jk/linalg/lattice.hpp"
#include "jk/trees/lattice.hpp"

// Data-parallel hot loops. Every kernel has a serial reference path selected
// by Exec::Serial; both paths return identical results in identical order.
namespace jk::kernels {

enum class Exec { Serial, Parallel };

int max_threads();

// Component coordinates of eta(j) for each Join (rows in input order).
IntMatrix eta_rows(const trees::ComponentBasis& basis, const std::vector<trees::Join>& joins, Exec exec);

// Smith invariants of D_k(H) / eta(T_k(H)) in each component (one entry per
// multidegree, in input order).
std::vector<std::vector<Integer>> component_invariants(const lie::LieContext& ctx, int k,
                                                       const std::vector<trees::Multidegree>& mds, Exec exec);

// Applies every action to every vector: result[i * vectors.size() + j] = A_i v_j.
std::vector<BitVector> gf2_apply_all(const std::vector<Gf2Matrix>& actions, const std::vector<BitVector>& vectors,
                                     Exec exec);

// Orbit-span closure where each round applies all actions to the newest batch
// in one kernel call; the insertion order is fixed, so the result matches the
// plain worklist closure.
Mod2Subspace gf2_span_closure_batched(const BitVector& seed, const std::vector<Gf2Matrix>& actions, Exec exec);

}  // namespace jk::kernels
