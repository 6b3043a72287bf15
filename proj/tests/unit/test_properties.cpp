#include <gtest/gtest.h>

#include "jk/checks/properties.hpp"

using namespace jk::checks;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2026;
constexpr int kCases = 200;

void expect_pass(const PropertyResult& r) {
  EXPECT_EQ(r.cases, kCases) << r.name;
  EXPECT_TRUE(r.pass()) << r.name << ": " << r.failures << " failures, first " << r.first_failure;
}

}  // namespace

TEST(Properties, BracketAxioms) { expect_pass(check_bracket_axioms(kSeed, kCases)); }
TEST(Properties, BchAssociativity) { expect_pass(check_bch_associativity(kSeed, kCases)); }
TEST(Properties, EtaIsALieMap) { expect_pass(check_eta_bracket(kSeed, kCases)); }
TEST(Properties, TriangleAntisymmetry) { expect_pass(check_triangle_antisymmetry(kSeed, kCases)); }
TEST(Properties, TruncationIdentity) { expect_pass(check_truncation_identity(kSeed, kCases)); }
TEST(Properties, RVanishesOnCommutators) { expect_pass(check_R_on_commutators(kSeed, kCases)); }
TEST(Properties, BoundingPairTwoRoutes) { expect_pass(check_bp_two_routes(kSeed, kCases)); }
TEST(Properties, TraceOnTau3) { expect_pass(check_trace_on_tau3(kSeed, kCases)); }

TEST(Properties, DeterministicForASeed) {
  const auto a = check_bp_two_routes(3, 20), b = check_bp_two_routes(3, 20);
  EXPECT_EQ(a.failures, b.failures);
  EXPECT_EQ(a.cases, b.cases);
}
