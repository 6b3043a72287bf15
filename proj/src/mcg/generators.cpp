#include "jk/mcg/generators.hpp"

#include "jk/errors.hpp"
#include "jk/linalg/rational_space.hpp"

namespace jk::mcg {

using lie::LieElement;

namespace {

// theta(w) over the tree context, with its degree-1 part checked if asked.
LieElement theta_tree(const GroupWord& w, const LogansionTable& table) {
  return lie::change_context(table.theta(w), tree_context(table.genus()));
}

void check_table(const LogansionTable& table, int need) {
  if (table.degree() < need)
    throw CapabilityError("logansion table of degree " + std::to_string(table.degree()) + " but degree " +
                          std::to_string(need) + " is needed");
}

}  // namespace

DerivationElement eta_join_degree(const LieElement& x, const LieElement& y, int d) {
  const LieContext& ctx = x.has_context() ? x.context() : y.context();
  DerivationElement out(ctx, d);
  for (int i = 1; i <= d + 1; ++i) {
    const int j = d + 2 - i;
    LieElement xi = x.homogeneous(i), yj = y.homogeneous(j);
    if (xi.is_zero() || yj.is_zero()) continue;
    out += trees::eta_join(xi, yj);
  }
  return out;
}

RValue r_twist(const SeparatingTwist& t, const LogansionTable& table) {
  check_table(table, 2);
  const LieElement th = theta_tree(t.lift, table);
  if (!th.homogeneous(1).is_zero()) throw InputError("twist lift " + t.lift.to_string() + " is not null-homologous");
  const int known = std::min(table.degree(), kMaxTreeDegree);
  RValue r(table.genus(), 2, known);
  for (int d = 2; d <= known; ++d) r.set_part(d, eta_join_degree(th, th, d) * Rational(1, 2));
  return power(r, t.exponent);
}

RValue r_bp(const BoundingPairMap& b, const LogansionTable& table) {
  check_table(table, 3);
  const LieElement tg = theta_tree(b.gamma, table);
  const LieElement tc = theta_tree(b.c, table);
  if (!tc.homogeneous(1).is_zero()) throw InputError("bounding pair word c is not null-homologous");
  const LieElement g1 = tg.homogeneous(1), g2 = tg.homogeneous(2);
  const LieElement c2 = tc.homogeneous(2), c3 = tc.homogeneous(3);
  RValue r(table.genus(), 1, 2);
  r.set_part(1, -eta_join_degree(g1, c2, 1));
  r.set_part(2, eta_join_degree(c2, c2, 2) * Rational(-1, 2) - eta_join_degree(g2, c2, 2) - eta_join_degree(g1, c3, 2));
  return power(r, b.exponent);
}

std::array<DerivationElement, 3> r_bp_two_route(const BoundingPairMap& b, const LogansionTable& table) {
  check_table(table, 3);
  if (b.exponent != 1) throw InputError("two-route check is for a single bounding pair map");
  const LieElement tg = theta_tree(b.gamma, table);
  const LieElement td = theta_tree(b.gamma * b.c, table);
  std::array<DerivationElement, 3> out;
  for (int d = 0; d <= 2; ++d)
    out[static_cast<std::size_t>(d)] = (eta_join_degree(tg, tg, d) - eta_join_degree(td, td, d)) * Rational(1, 2);
  return out;
}

int genus_of_lift(const GroupWord& lift, const LogansionTable& table) {
  check_table(table, 2);
  const LieElement th = table.theta(lift);
  if (!th.homogeneous(1).is_zero()) throw InputError("lift " + lift.to_string() + " is not null-homologous");
  const LieContext& ctx = table.context();
  const std::size_t n = static_cast<std::size_t>(ctx.rank());
  std::vector<RatVector> rows(n, RatVector(n, Rational(0)));
  const LieElement quadratic = th.homogeneous(2);
  for (const auto& [k, c] : quadratic.terms()) {
    const lie::Word& w = ctx.word(k);
    rows[w[0]][w[1]] = c;
    rows[w[1]][w[0]] = -c;
  }
  const std::size_t rank = rational_rank(rows);
  if (rank % 2 != 0) throw MismatchError("skew form of odd rank");
  return static_cast<int>(rank / 2);
}

}  // namespace jk::mcg
