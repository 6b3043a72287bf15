#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jk/lie/lyndon.hpp"

namespace jk::lie {

// Planar rooted binary tree with generator-colored leaves, stored as a prefix
// code: kNode followed by the left and right subtrees, or a single letter.
class RootedTree {
 public:
  static constexpr std::int16_t kNode = -1;

  RootedTree() = default;
  static RootedTree leaf(Letter l);
  static RootedTree node(const RootedTree& left, const RootedTree& right);

  bool empty() const { return code_.empty(); }
  bool is_leaf() const { return code_.size() == 1; }
  Letter letter() const { return static_cast<Letter>(code_.front()); }
  std::pair<RootedTree, RootedTree> children() const;

  std::size_t num_leaves() const;
  std::vector<Letter> leaves() const;  // left to right
  std::string to_string(int genus) const;

  const std::vector<std::int16_t>& code() const { return code_; }
  auto operator<=>(const RootedTree&) const = default;
  bool operator==(const RootedTree&) const = default;

 private:
  std::vector<std::int16_t> code_;
};

// Standard bracketing of a Lyndon word.
RootedTree standard_bracketing(const Word& w);

}  // namespace jk::lie
