#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jk/lie/lyndon.hpp"

namespace jk::words {

using lie::Generator;

struct GroupLetter {
  Generator gen;
  int exponent;  // +1 or -1
  bool operator==(const GroupLetter& o) const {
    return gen.kind == o.gen.kind && gen.index == o.gen.index && exponent == o.exponent;
  }
};

// Word in the free group on alpha_i, beta_i, written "a1+b2-..." (one letter
// per generator occurrence, each followed by its sign).
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<GroupLetter> letters) : letters_(std::move(letters)) {}

  static GroupWord parse(std::string_view text);

  const std::vector<GroupLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::string to_string() const;
  GroupWord inverse() const;
  GroupWord freely_reduced() const;
  GroupWord operator*(const GroupWord& o) const;
  int max_index() const;
  // Exponent sums, indexed like Lie letters (a_i -> i-1, b_i -> g+i-1).
  std::vector<int> abelianization(int genus) const;

  bool operator==(const GroupWord& o) const { return letters_ == o.letters_; }

 private:
  std::vector<GroupLetter> letters_;
};

GroupWord parse_word(std::string_view text);
GroupWord invert(const GroupWord& w);
// [u, v] = u v u^-1 v^-1
GroupWord comm(const GroupWord& u, const GroupWord& v);
// x w x^-1
GroupWord conj(const GroupWord& x, const GroupWord& w);
// prod_i [beta_i^-1, alpha_i] written as b_i- a_i+ b_i+ a_i-
GroupWord boundary_word(int genus);

}  // namespace jk::words
