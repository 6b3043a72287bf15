#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jk/mcg/generators.hpp"
#include "jk/mcg/invariants.hpp"

namespace jk::mcg {

// Based lifts of the four separating curves used to build k (n = 1..4).
GroupWord gamma_lift(int n);
// The two bounding pair maps whose quotient is i.
BoundingPairMap bounding_pair(int n);

struct Stage {
  std::string name;
  std::string value;
  std::string target;
  bool pass = false;
};

struct TheoremBReport {
  int genus = 0;
  std::vector<Stage> stages;

  bool pass() const;
  const Stage& stage(const std::string& name) const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Builds phi = [i, k] and checks every intermediate value of the computation
// of R(phi), for the bordered and the closed surface. Requires genus >= 3.
TheoremBReport build_phi(int genus);

}  // namespace jk::mcg
