#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jk/lie/algebra.hpp"
#include "jk/lie/rooted_tree.hpp"

namespace jk::trees {

using lie::BasisKey;
using lie::Letter;
using lie::LieContext;
using lie::LieElement;
using lie::RootedTree;

// Unrooted tree obtained by joining the roots of two rooted trees by an edge.
// Join(u, v) and Join(v, u) are the same oriented tree, so the pair is stored
// sorted.
struct Join {
  RootedTree left, right;

  static Join make(RootedTree u, RootedTree v) {
    if (v < u) std::swap(u, v);
    return Join{std::move(u), std::move(v)};
  }
  std::size_t num_leaves() const { return left.num_leaves() + right.num_leaves(); }
  int degree() const { return static_cast<int>(num_leaves()) - 2; }
  std::string to_string(int genus) const;

  auto operator<=>(const Join&) const = default;
  bool operator==(const Join&) const = default;
};

// Formal rational combination of Join presentations. Two sums denote the same
// element of the tree space iff their eta images agree; operator== here is
// only syntactic.
class TreeSum {
 public:
  TreeSum() = default;
  explicit TreeSum(int genus) : genus_(genus) {}
  static TreeSum single(int genus, const Join& j, const Rational& c = 1);

  int genus() const { return genus_; }
  const std::map<Join, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  void add(const Join& j, const Rational& c);

  TreeSum& operator+=(const TreeSum& o);
  TreeSum& operator-=(const TreeSum& o);
  TreeSum& operator*=(const Rational& c);
  TreeSum operator+(const TreeSum& o) const { TreeSum r = *this; r += o; return r; }
  TreeSum operator-(const TreeSum& o) const { TreeSum r = *this; r -= o; return r; }
  TreeSum operator*(const Rational& c) const { TreeSum r = *this; r *= c; return r; }
  bool operator==(const TreeSum& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  void adopt(const TreeSum& o);
  int genus_ = 0;
  std::map<Join, Rational> terms_;
};

// Bilinear join of two Lie elements through their standard bracketings.
TreeSum join(const LieElement& x, const LieElement& y);

// All ways of rooting a Join at one of its leaves: (leaf color, tree hanging
// from that leaf). Leaves are visited left half first.
std::vector<std::pair<Letter, RootedTree>> reroot(const Join& j);

// omega(x, y) on basis letters: omega(a_i, b_i) = 1 = -omega(b_i, a_i).
int omega(Letter x, Letter y, int genus);
// ell(a_i, b_j) = delta_ij, zero otherwise.
int ell(Letter x, Letter y, int genus);

// Sum over all omega-weighted ways of gluing one leaf of P to one leaf of Q.
TreeSum bracket_trees(const TreeSum& p, const TreeSum& q);
// Same with the asymmetric pairing ell.
TreeSum triangle(const TreeSum& p, const TreeSum& q);

nlohmann::json to_json(const TreeSum& t);

}  // namespace jk::trees
