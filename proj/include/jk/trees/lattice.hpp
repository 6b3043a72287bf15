#pragma once

#include <vector>

#include "jk/linalg/gf2.hpp"
#include "jk/linalg/lattice.hpp"
#include "jk/trees/derivation.hpp"

namespace jk::trees {

// Letter counts; a homogeneous piece of H (x) L_{k+1} lives in exactly one.
using Multidegree = std::vector<int>;

std::vector<Multidegree> multidegrees(int rank, int total);

// Coordinates (z, Lyndon word) of one multidegree component of H (x) L_{k+1},
// ordered by generator then word.
class ComponentBasis {
 public:
  static const ComponentBasis& get(const LieContext& ctx, int k, const Multidegree& md);

  const LieContext& context() const { return *ctx_; }
  int degree() const { return k_; }
  const Multidegree& multidegree() const { return md_; }
  std::size_t dim() const { return coords_.size(); }
  const std::vector<std::pair<Letter, BasisKey>>& coords() const { return coords_; }

  RatVector vector_of(const DerivationElement& d) const;
  IntVector integer_vector_of(const DerivationElement& d) const;
  DerivationElement element(const RatVector& v) const;

 private:
  ComponentBasis(const LieContext& ctx, int k, Multidegree md);
  const LieContext* ctx_;
  int k_;
  Multidegree md_;
  std::vector<std::pair<Letter, BasisKey>> coords_;
};

// Multidegrees on which d has a nonzero component.
std::vector<Multidegree> support(const DerivationElement& d);

// Lattice eta(T_k(H)) in one component, generated by eta(Join(z, P_w)).
const IntegerLattice& lattice_eta_T(const LieContext& ctx, int k, const Multidegree& md);
// Degree 4 through the two unrooted shapes (caterpillar and spider) over every
// coloring; must coincide with lattice_eta_T(ctx, 4, md).
const IntegerLattice& lattice_eta_T4(const LieContext& ctx, const Multidegree& md);
// eta(T_k) plus the half-symmetric elements (1/2) eta(u--u) when k is even.
const IntegerLattice& lattice_D(const LieContext& ctx, int k, const Multidegree& md);
// Integer kernel of the bracket map H (x) L_{k+1} -> L_{k+2} in the component.
IntegerLattice lattice_D_kernel(const LieContext& ctx, int k, const Multidegree& md);

// The two degree-4 generator shapes on leaves l[0..5].
Join caterpillar6(const std::vector<Letter>& l);
Join spider6(const std::vector<Letter>& l);

struct Mod1Verdict {
  bool zero = true;
  std::vector<Multidegree> failing;  // components not in eta(T_k(H))
};

// Whether d lies in eta(T_k(H)) (i.e. is zero "mod 1").
Mod1Verdict mod1_class_is_zero(const DerivationElement& d);

// Lyndon words of length m+1 with 2*content = md (the half-symmetric slots).
std::vector<BasisKey> half_slots(const LieContext& ctx, int k, const Multidegree& md);

struct VarpiResult {
  bool in_D = true;                  // false if some component is not in D_k(H)
  std::vector<Multidegree> outside;  // such components
  BitVector value;                   // over the Lyndon basis of degree k/2+1
};

// Mod-2 cokernel class of an element of D_k(H), k even, found per component
// by searching the half-symmetric coefficients.
VarpiResult varpi(const DerivationElement& d);

// d = integral + sum_i n_i (1/2) eta(u_i--u_i), with `integral` in eta(T_k(H)).
struct HalfPresentation {
  DerivationElement integral;
  std::vector<std::pair<RootedTree, Integer>> halves;
};

// Sum of n_i brack(u_i) mod 2; throws if `integral` is not in eta(T_k(H)).
BitVector varpi_presented(const HalfPresentation& p, const LieContext& ctx, int k);

// brack(u) mod 2 in the Lyndon basis.
BitVector mod2_coordinates(const LieElement& x);

}  // namespace jk::trees
