#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jk/lie/algebra.hpp"
#include "jk/trees/tree_sum.hpp"

namespace jk::trees {

// Element sum_z z (x) x_z of H (x) L_{k+1}, stored as one Lie element per
// generator z. k is the tree degree.
class DerivationElement {
 public:
  DerivationElement() = default;
  DerivationElement(const LieContext& ctx, int degree);

  const LieContext& context() const;
  bool has_context() const { return ctx_ != nullptr; }
  int degree() const { return degree_; }
  int genus() const { return context().genus(); }

  const LieElement& part(Letter z) const { return parts_.at(z); }
  void add(Letter z, const LieElement& x);
  void add(Letter z, BasisKey k, const Rational& c);

  bool is_zero() const;
  bool is_integral() const;

  // The derivation of L determined by a_i -> -x_{b_i}, b_i -> x_{a_i}
  // (duality h -> omega(h, .)), applied to x.
  LieElement apply(const LieElement& x) const;
  // sum_z [z, x_z], in tensor coordinates of degree k+2; zero iff symplectic.
  bool is_symplectic() const;

  DerivationElement& operator+=(const DerivationElement& o);
  DerivationElement& operator-=(const DerivationElement& o);
  DerivationElement& operator*=(const Rational& c);
  DerivationElement operator+(const DerivationElement& o) const { auto r = *this; r += o; return r; }
  DerivationElement operator-(const DerivationElement& o) const { auto r = *this; r -= o; return r; }
  DerivationElement operator-() const { auto r = *this; r *= -1; return r; }
  DerivationElement operator*(const Rational& c) const { auto r = *this; r *= c; return r; }
  friend DerivationElement operator*(const Rational& c, const DerivationElement& d) { return d * c; }
  bool operator==(const DerivationElement& o) const;

  std::string to_string() const;

 private:
  void check_same(const DerivationElement& o) const;
  const LieContext* ctx_ = nullptr;
  int degree_ = 0;
  std::vector<LieElement> parts_;
};

// Contribution of the leaves of a rooted tree u when its root is attached to
// a tree with bracket X (bilinear in u and X).
DerivationElement eta_part(const LieElement& u, const LieElement& x);
// eta(join(x, y)), computed without listing Join terms.
DerivationElement eta_join(const LieElement& x, const LieElement& y);
DerivationElement eta(const TreeSum& t, const LieContext& ctx);

// Commutator of derivations, written back as an element of H (x) L.
DerivationElement derivation_bracket(const DerivationElement& d1, const DerivationElement& d2);

// (1/(k+2)) sum_z Join(z, x_z): a tree presentation whose eta image is d
// whenever d satisfies the symplectic condition.
TreeSum canonical_trees(const DerivationElement& d);

nlohmann::json to_json(const DerivationElement& d);

}  // namespace jk::trees
