#pragma once

#include "jk/linalg/rational.hpp"

namespace jk::mcg {

// Baker-Campbell-Hausdorff series through Lie words of length 4, for any type
// with +, scalar * and a bracket functor. Enough for graded algebras whose
// pieces all have degree >= 1 and which are truncated at degree 4.
template <class T, class Bracket>
T bch_formula(const T& x, const T& y, Bracket br) {
  const T xy = br(x, y);
  const T xxy = br(x, xy);
  const T yxy = br(y, xy);
  const T yxxy = br(y, xxy);
  return x + y + xy * Rational(1, 2) + xxy * Rational(1, 12) - yxy * Rational(1, 12) - yxxy * Rational(1, 24);
}

// exp(ad x) y through four-fold brackets.
template <class T, class Bracket>
T exp_ad_formula(const T& x, const T& y, Bracket br) {
  const T xy = br(x, y);
  const T xxy = br(x, xy);
  const T xxxy = br(x, xxy);
  return y + xy + xxy * Rational(1, 2) + xxxy * Rational(1, 6);
}

}  // namespace jk::mcg
