#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Randomized identity checks over exact arithmetic. Each suite is
// deterministic for a given seed.
namespace jk::checks {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool pass() const { return cases > 0 && failures == 0; }
};

PropertyResult check_bracket_axioms(std::uint64_t seed, int cases);
PropertyResult check_bch_associativity(std::uint64_t seed, int cases);
PropertyResult check_eta_bracket(std::uint64_t seed, int cases);
PropertyResult check_triangle_antisymmetry(std::uint64_t seed, int cases);
PropertyResult check_truncation_identity(std::uint64_t seed, int cases);
PropertyResult check_R_on_commutators(std::uint64_t seed, int cases);
PropertyResult check_bp_two_routes(std::uint64_t seed, int cases);
PropertyResult check_trace_on_tau3(std::uint64_t seed, int cases);

std::vector<PropertyResult> run_all(std::uint64_t seed, int cases);

}  // namespace jk::checks
