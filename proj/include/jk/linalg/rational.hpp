#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace jk {

using Integer = mpz_class;
// mpq_class keeps itself canonical after arithmetic; make_rational handles
// construction from a raw fraction.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;
using RatVector = std::vector<Rational>;

}  // namespace jk
