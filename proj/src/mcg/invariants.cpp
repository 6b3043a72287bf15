#include "jk/mcg/invariants.hpp"

#include <algorithm>

#include "jk/errors.hpp"

namespace jk::mcg {

using lie::Letter;
using lie::RootedTree;

Tau tau(const RValue& f, int k) {
  for (int d = 1; d < k; ++d)
    if (!f.part(d).is_zero()) throw InputError("not in M[" + std::to_string(k) + "]: degree " + std::to_string(d) +
                                               " part survives");
  Tau t{f.part(k), true};
  t.integral = t.value.is_integral();
  return t;
}

RClass classify_mod1(const DerivationElement& r4, bool in_m4) {
  RClass out;
  out.r4 = r4;
  const LieContext& ctx = r4.context();
  for (int z = 0; z < ctx.rank(); ++z)
    for (const auto& [k, c] : r4.part(static_cast<Letter>(z)).terms()) {
      Integer l;
      mpz_lcm(l.get_mpz_t(), out.denominator.get_mpz_t(), c.get_den_mpz_t());
      out.denominator = l;
    }
  Integer q = out.denominator;
  while (q % 2 == 0) q /= 2;
  out.power_of_two = q == 1;
  trees::Mod1Verdict v = trees::mod1_class_is_zero(r4);
  out.zero = v.zero;
  out.failing = v.failing;
  if (in_m4) out.varpi = trees::varpi(r4);
  return out;
}

RClass R(const RValue& f) {
  if (!f.part(1).is_zero()) throw InputError("R needs an element of the Johnson kernel");
  const bool in_m4 = f.part(2).is_zero() && f.part(3).is_zero();
  return classify_mod1(f.part(4), in_m4);
}

RClass R_circ(const RValue& f) {
  if (!f.part(1).is_zero()) throw InputError("R_circ needs an element of the Johnson kernel");
  const trees::TreeSum p = trees::canonical_trees(f.part(2));
  DerivationElement shifted = f.part(4);
  if (!p.empty()) shifted -= trees::eta(trees::triangle(p, p), f.context()) * Rational(1, 2);
  const bool in_m4 = f.part(2).is_zero() && f.part(3).is_zero();
  return classify_mod1(shifted, in_m4);
}

namespace {

template <class F>
Integer twist_sum(const TwistWord& w, F value) {
  Integer s = 0;
  for (const auto& t : w) {
    if (t.genus_label < 0) throw InputError("negative genus label");
    s += value(Integer(t.genus_label)) * t.exponent;
  }
  return s;
}

}  // namespace

Integer d_hom(const TwistWord& w) {
  return twist_sum(w, [](const Integer& h) -> Integer { return 4 * h * (h - 1); });
}

Integer d_prime(const TwistWord& w) {
  return twist_sum(w, [](const Integer& h) -> Integer { return h * (2 * h + 1); });
}

Integer d_bar(const TwistWord& w, int genus) {
  return twist_sum(w, [genus](const Integer& h) -> Integer { return h * (genus - h); });
}

Rational d_bar_from(const Integer& d, const Integer& d_prime, int genus) {
  return make_rational(-(1 + 2 * genus), 12) * d + make_rational(genus - 1, 3) * d_prime;
}

TwistWord inverse(const TwistWord& w) {
  TwistWord out(w.rbegin(), w.rend());
  for (auto& t : out) t.exponent = -t.exponent;
  return out;
}

TwistWord commutator_with(const TwistWord& k) {
  TwistWord out = k;
  const TwistWord inv = inverse(k);
  out.insert(out.end(), inv.begin(), inv.end());
  return out;
}

namespace {

std::array<Letter, 3> sorted(Letter x, Letter y, Letter z) {
  std::array<Letter, 3> t{x, y, z};
  std::sort(t.begin(), t.end());
  return t;
}

void add(Cubic& out, const std::array<Letter, 3>& key, const Rational& c) {
  if (sgn(c) == 0) return;
  Rational& slot = out[key];
  slot += c;
  if (sgn(slot) == 0) out.erase(key);
}

// Contribution of d--[e,[[a,b],c]] with the given weight.
void trace_term(Cubic& out, int g, Letter a, Letter b, Letter c, Letter d, Letter e, const Rational& w) {
  using trees::omega;
  add(out, sorted(b, c, d), w * 2 * omega(e, a, g));
  add(out, sorted(e, c, b), w * 2 * omega(a, d, g));
  add(out, sorted(a, c, e), w * 2 * omega(d, b, g));
  add(out, sorted(d, c, a), w * 2 * omega(b, e, g));
}

bool caterpillar_at(const RootedTree& t) {
  auto [p, q] = t.children();
  return p.is_leaf() || q.is_leaf();
}

void trace_rooted(Cubic& out, int g, Letter d, const RootedTree& t, const Rational& weight) {
  auto [p, q] = t.children();
  Rational w = weight;
  RootedTree e = p, s = q;
  if (!p.is_leaf()) {
    e = q;
    s = p;
    w = -w;
  }
  auto [s1, s2] = s.children();
  RootedTree ab = s1, c = s2;
  if (s1.is_leaf()) {
    ab = s2;
    c = s1;
    w = -w;
  }
  auto [a, b] = ab.children();
  trace_term(out, g, a.letter(), b.letter(), c.letter(), d, e.letter(), w);
}

}  // namespace

std::vector<std::size_t> end_leaves(const trees::Join& j) {
  if (j.degree() != 3) throw InputError("Tr3 is defined on degree-3 trees");
  std::vector<std::size_t> out;
  const auto rooted = trees::reroot(j);
  for (std::size_t i = 0; i < rooted.size(); ++i)
    if (caterpillar_at(rooted[i].second)) out.push_back(i);
  return out;
}

Cubic tr3_rooted_at(const trees::Join& j, int genus, std::size_t leaf) {
  const auto rooted = trees::reroot(j);
  if (leaf >= rooted.size() || !caterpillar_at(rooted[leaf].second)) throw InputError("not an end leaf");
  Cubic out;
  trace_rooted(out, genus, rooted[leaf].first, rooted[leaf].second, 1);
  return out;
}

Cubic tr3(const trees::TreeSum& t) {
  Cubic out;
  for (const auto& [j, c] : t.terms()) {
    if (j.degree() != 3) throw InputError("Tr3 is defined on degree-3 trees");
    const auto rooted = trees::reroot(j);
    for (const auto& [l, r] : rooted)
      if (caterpillar_at(r)) {
        trace_rooted(out, t.genus(), l, r, c);
        break;
      }
  }
  return out;
}

}  // namespace jk::mcg
