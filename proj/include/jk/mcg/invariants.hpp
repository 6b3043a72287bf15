#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "jk/mcg/rvalue.hpp"
#include "jk/trees/lattice.hpp"
#include "jk/trees/tree_sum.hpp"

namespace jk::mcg {

struct Tau {
  DerivationElement value;
  bool integral = true;
};

// Johnson homomorphism tau_k as the degree-k part of r; throws "not in M[k]"
// when a lower part survives.
Tau tau(const RValue& f, int k);

struct RClass {
  DerivationElement r4;
  bool zero = true;                             // r4 lies in eta(T_4(H))
  std::vector<trees::Multidegree> failing;      // components witnessing R != 0
  Integer denominator = 1;                      // lcm of the denominators of r4
  bool power_of_two = true;
  std::optional<trees::VarpiResult> varpi;      // only for elements of M[4]
};

RClass classify_mod1(const DerivationElement& r4, bool in_m4);

// R(f) = r_4(f) mod 1 for f in the Johnson kernel.
RClass R(const RValue& f);
// r_4(f) - (1/2) tau_2(f) |> tau_2(f) mod 1, with tau_2(f) presented by
// canonical trees.
RClass R_circ(const RValue& f);

// A separating twist seen through its genus label only.
struct TwistTerm {
  int genus_label = 0;
  int exponent = 1;
};
using TwistWord = std::vector<TwistTerm>;

// d(T) = 4h(h-1), d'(T) = h(2h+1), dbar(T) = h(g-h), extended additively.
Integer d_hom(const TwistWord& w);
Integer d_prime(const TwistWord& w);
Integer d_bar(const TwistWord& w, int genus);
// -(1+2g)/12 d + (g-1)/3 d', which must agree with d_bar.
Rational d_bar_from(const Integer& d, const Integer& d_prime, int genus);

TwistWord inverse(const TwistWord& w);
// [f, k] = (f k f^-1) k^-1: conjugation keeps the genus labels.
TwistWord commutator_with(const TwistWord& k);

// Symmetric cubic tensor: sorted letter triple -> coefficient.
using Cubic = std::map<std::array<lie::Letter, 3>, Rational>;

// Morita's trace on degree-3 trees, evaluated after rooting each Join at an
// end leaf d and writing it as d--[e,[[a,b],c]].
Cubic tr3(const trees::TreeSum& t);
// Same with a caller-chosen end leaf (index into the reroot order); used to
// check that the value does not depend on the choice.
Cubic tr3_rooted_at(const trees::Join& j, int genus, std::size_t leaf);
std::vector<std::size_t> end_leaves(const trees::Join& j);

}  // namespace jk::mcg
