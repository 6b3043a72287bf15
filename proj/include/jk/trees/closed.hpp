#pragma once

#include <cstddef>
#include <vector>

#include "jk/linalg/gf2.hpp"
#include "jk/trees/derivation.hpp"

// Quotients used for the closed surface: Lbar = L / <<omega>>, the outer
// quotient of derivations, and the reduction H -> A = H / <b_1, ..., b_g>.
namespace jk::trees {

std::size_t lbar_rank(const LieContext& ctx, int d);
// Whether a homogeneous element lies in the ideal generated by omega.
bool lbar_is_zero(const LieElement& x);

// Whether d lies in H (x) <<omega>> + { sum_i a_i (x) [b_i, x] - b_i (x) [a_i, x] }.
bool odbar_is_zero(const DerivationElement& d);

// Lyndon words of length d over a_1..a_g only; they form a basis of L_d(A).
std::vector<lie::Word> a_only_words(int genus, int d);

// Image of a mod-2 vector over the Lyndon basis of L_d under H -> A, in the
// a_only_words basis. Basis elements containing some b_i vanish.
BitVector project_to_A_mod2(const LieContext& ctx, int d, const BitVector& v);

}  // namespace jk::trees
