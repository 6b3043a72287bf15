#include <gtest/gtest.h>

#include "jk/errors.hpp"
#include "jk/mcg/theorem_b.hpp"

using namespace jk;
using namespace jk::mcg;

namespace {

const LogansionTable& table4() {
  static const LogansionTable t = LogansionTable::standard(3, 4);
  return t;
}

}  // namespace

TEST(RValue, WindowsOfGenerators) {
  const RValue t = r_twist({gamma_lift(3), 1}, table4());
  EXPECT_EQ(t.depth(), 2);
  EXPECT_EQ(t.known(), 4);
  const RValue p = r_bp(bounding_pair(1), table4());
  EXPECT_EQ(p.depth(), 1);
  EXPECT_EQ(p.known(), 2);
  EXPECT_THROW(p.part(3), CapabilityError);
}

TEST(RValue, CommutatorWindow) {
  const RValue p = r_bp(bounding_pair(1), table4());
  const RValue t = r_twist({gamma_lift(1), 1}, table4());
  const RValue c = commutator(p, t);
  EXPECT_GE(c.depth(), 3);
  EXPECT_EQ(c.known(), 4);
  const RValue pp = commutator(p, r_bp(bounding_pair(2), table4()));
  EXPECT_EQ(pp.known(), 3);
}

TEST(RValue, InverseAndPowers) {
  const RValue t = r_twist({gamma_lift(2), 1}, table4());
  const RValue id = compose(t, inverse(t));
  for (int d = 1; d <= 4; ++d) EXPECT_TRUE(id.part(d).is_zero()) << d;
  EXPECT_EQ(power(t, 3), compose({t, t, t}));
  EXPECT_EQ(r_twist({gamma_lift(2), -2}, table4()), power(t, -2));
}

TEST(Generators, RejectsNonSeparatingLift) {
  EXPECT_THROW(r_twist({words::parse_word("a1+"), 1}, table4()), InputError);
  EXPECT_THROW(r_bp({words::parse_word("a3+"), words::parse_word("b3+"), 1}, table4()), InputError);
}

TEST(Generators, GenusOfLifts) {
  EXPECT_EQ(genus_of_lift(gamma_lift(1), table4()), 2);
  EXPECT_EQ(genus_of_lift(gamma_lift(2), table4()), 2);
  EXPECT_EQ(genus_of_lift(gamma_lift(3), table4()), 1);
  EXPECT_EQ(genus_of_lift(gamma_lift(4), table4()), 1);
}

TEST(Tau, DepthChecks) {
  const RValue p = r_bp(bounding_pair(2), table4());
  EXPECT_TRUE(tau(p, 1).integral);
  EXPECT_THROW(tau(p, 2), InputError);
  EXPECT_THROW(R(p), InputError);
}

TEST(RMap, SingleTwistsAndCommutators) {
  const RValue t2 = r_twist({gamma_lift(2), 1}, table4());
  const RClass c = R(t2);
  EXPECT_FALSE(c.zero);
  EXPECT_EQ(c.denominator, 12);
  EXPECT_FALSE(c.power_of_two);
  const RValue t1 = r_twist({gamma_lift(1), 1}, table4());
  EXPECT_TRUE(R(commutator(t1, t2)).zero);
  EXPECT_TRUE(R(RValue::identity(3)).zero);
}

TEST(Degrees, SpotValues) {
  const TwistWord g3{{1, 1}}, g1{{2, 1}};
  EXPECT_EQ(d_hom(g3), 0);
  EXPECT_EQ(d_prime(g3), 3);
  EXPECT_EQ(d_bar(g1, 3), 2);
  EXPECT_EQ(d_hom(g1), 8);
  EXPECT_EQ(d_prime(g1), 10);
  for (const TwistWord& w : {g3, g1, TwistWord{{1, 2}, {2, -1}}})
    EXPECT_EQ(d_bar_from(d_hom(w), d_prime(w), 3), Rational(d_bar(w, 3))) << w.size();
}

TEST(Degrees, VanishOnCommutators) {
  const TwistWord k{{2, 1}, {2, -1}, {1, -1}, {1, 1}};
  const TwistWord phi = commutator_with(k);
  EXPECT_EQ(d_hom(phi), 0);
  EXPECT_EQ(d_prime(phi), 0);
  EXPECT_EQ(d_bar(phi, 3), 0);
}

TEST(TheoremB, EveryStagePasses) {
  const TheoremBReport r = build_phi(3);
  for (const Stage& s : r.stages) EXPECT_TRUE(s.pass) << s.name << "\n" << s.value << "\n" << s.target;
  EXPECT_TRUE(r.pass());
  EXPECT_TRUE(r.stage("R(phi) != 0").pass);
  EXPECT_THROW(r.stage("no such stage"), std::exception);
  EXPECT_EQ(r.to_json()["stages"].size(), r.stages.size());
}

TEST(TheoremB, NeedsGenusThree) { EXPECT_THROW(build_phi(2), InputError); }
