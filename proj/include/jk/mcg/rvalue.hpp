#pragma once

#include <array>
#include <vector>

#include <json.hpp>

#include "jk/trees/derivation.hpp"

namespace jk::mcg {

using lie::LieContext;
using trees::DerivationElement;

inline constexpr int kMaxTreeDegree = 4;

// Truncation of r(f) in the tree Lie algebra: parts of degree < depth vanish,
// parts of degree depth..known are known exactly, higher parts are unknown.
// Parts are stored as eta images in H (x) L over the degree-5 context.
class RValue {
 public:
  RValue() = default;
  RValue(int genus, int depth, int known);
  static RValue identity(int genus) { return RValue(genus, kMaxTreeDegree + 1, kMaxTreeDegree); }

  const LieContext& context() const;
  int genus() const { return genus_; }
  int depth() const { return depth_; }
  int known() const { return known_; }

  // Throws "window underflow" when d is above the known window.
  const DerivationElement& part(int d) const;
  void set_part(int d, const DerivationElement& x);
  // Raises depth past vanishing parts (e.g. after a commutator cancels).
  void normalize_depth();
  RValue restricted(int known) const;

  // BCH inverse.
  RValue operator-() const;
  bool operator==(const RValue& o) const;

 private:
  int genus_ = 0;
  int depth_ = 1;
  int known_ = 0;
  std::array<DerivationElement, kMaxTreeDegree + 1> parts_;
};

// The common degree-5 context for tree work at a given genus.
const LieContext& tree_context(int genus);

[[noreturn]] void window_underflow(int degree);

// r(f h) = r(f) * r(h) for the BCH product of the tree Lie algebra.
RValue compose(const RValue& f, const RValue& h);
RValue compose(const std::vector<RValue>& values);
RValue inverse(const RValue& f);
RValue power(const RValue& f, int exponent);
// r([f, h]) = r(f h f^-1 h^-1); the window grows with the depths.
RValue commutator(const RValue& f, const RValue& h);
// r(f h f^-1) = exp(ad r(f)) r(h) for f in the Torelli group.
RValue conjugate_torelli(const RValue& f, const RValue& h);

nlohmann::json to_json(const RValue& r);

}  // namespace jk::mcg
