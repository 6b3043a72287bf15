#pragma once

#include <array>

#include "jk/mcg/rvalue.hpp"
#include "jk/words/logansion.hpp"

namespace jk::mcg {

using words::GroupWord;
using words::LogansionTable;

// Dehn twist along a separating curve, given by a based lift in pi.
struct SeparatingTwist {
  GroupWord lift;
  int exponent = 1;
};

// T_gamma T_delta^-1 for curves cobounding a subsurface, with c = gamma^-1 delta.
struct BoundingPairMap {
  GroupWord gamma;
  GroupWord c;
  int exponent = 1;
};

// eta(join(x, y)) restricted to tree degree d, for graded Lie elements.
DerivationElement eta_join_degree(const lie::LieElement& x, const lie::LieElement& y, int d);

// r = (1/2) theta(lift)--theta(lift), known through min(table degree, 4).
RValue r_twist(const SeparatingTwist& t, const LogansionTable& table);

// Degrees 1 and 2 of r from the closed formulas in gamma and c; the table
// must reach degree 3.
RValue r_bp(const BoundingPairMap& b, const LogansionTable& table);

// The same degrees as (1/2) theta(gamma)--theta(gamma) - (1/2) theta(delta)--theta(delta)
// with delta = gamma c. Entry 0 is the symmetric degree-0 part, which must vanish.
std::array<DerivationElement, 3> r_bp_two_route(const BoundingPairMap& b, const LogansionTable& table);

// Half the rank of the skew form theta_2(lift); the genus of the subsurface
// cut off by a separating curve.
int genus_of_lift(const GroupWord& lift, const LogansionTable& table);

}  // namespace jk::mcg
