#pragma once

#include <cstddef>
#include <vector>

#include "jk/kernels/kernels.hpp"
#include "jk/trees/lattice.hpp"

// The cokernel of eta: T_k(H) -> D_k(H), computed component by component.
namespace jk::trees {

struct LcstComponent {
  Multidegree md;
  std::size_t dim = 0;                 // coordinates of the H (x) L_{k+1} component
  std::size_t rank = 0;                // rank of D_k(H) there
  std::vector<Integer> invariants;     // Smith diagonal of eta(T_k) inside D_k
  std::size_t expected_z2 = 0;         // Lyndon words of length k/2+1 with half the content
};

struct LcstReport {
  int genus = 0;
  int degree = 0;
  std::size_t ambient_dim = 0;
  std::size_t rank = 0;
  std::vector<LcstComponent> components;  // nonzero components only
  std::vector<Integer> torsion;           // merged chain of nonunit invariants
  std::size_t z2_count = 0;
  bool elementary_two = true;             // every invariant is 1 or 2
  std::size_t expected_z2 = 0;            // dim L_{k/2+1} for even k, else 0
  bool pass() const { return elementary_two && z2_count == expected_z2; }
};

LcstComponent lcst_component(const LieContext& ctx, int k, const Multidegree& md);
// Whole ambient space of degree k (4 by default) at the given genus.
LcstReport lcst_quotient(int genus, int k, kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace jk::trees
