#include "jk/lie/rooted_tree.hpp"

#include <stdexcept>

namespace jk::lie {

RootedTree RootedTree::leaf(Letter l) {
  RootedTree t;
  t.code_.push_back(static_cast<std::int16_t>(l));
  return t;
}

RootedTree RootedTree::node(const RootedTree& left, const RootedTree& right) {
  RootedTree t;
  t.code_.reserve(1 + left.code_.size() + right.code_.size());
  t.code_.push_back(kNode);
  t.code_.insert(t.code_.end(), left.code_.begin(), left.code_.end());
  t.code_.insert(t.code_.end(), right.code_.begin(), right.code_.end());
  return t;
}

namespace {

// length of the subtree starting at position i
std::size_t subtree_end(const std::vector<std::int16_t>& code, std::size_t i) {
  std::size_t pending = 1;
  while (pending > 0) {
    if (i >= code.size()) throw std::logic_error("malformed rooted tree code");
    pending += code[i] == RootedTree::kNode ? 1 : -1;
    ++i;
  }
  return i;
}

}  // namespace

std::pair<RootedTree, RootedTree> RootedTree::children() const {
  if (code_.empty() || code_.front() != kNode) throw std::logic_error("children() of a leaf");
  std::size_t mid = subtree_end(code_, 1);
  RootedTree l, r;
  l.code_.assign(code_.begin() + 1, code_.begin() + static_cast<std::ptrdiff_t>(mid));
  r.code_.assign(code_.begin() + static_cast<std::ptrdiff_t>(mid), code_.end());
  return {l, r};
}

std::size_t RootedTree::num_leaves() const {
  std::size_t n = 0;
  for (auto c : code_)
    if (c != kNode) ++n;
  return n;
}

std::vector<Letter> RootedTree::leaves() const {
  std::vector<Letter> out;
  for (auto c : code_)
    if (c != kNode) out.push_back(static_cast<Letter>(c));
  return out;
}

std::string RootedTree::to_string(int genus) const {
  if (is_leaf()) return letter_name(letter(), genus);
  auto [l, r] = children();
  return "[" + l.to_string(genus) + "," + r.to_string(genus) + "]";
}

RootedTree standard_bracketing(const Word& w) {
  if (w.size() == 1) return RootedTree::leaf(w.front());
  std::size_t k = standard_split(w);
  return RootedTree::node(standard_bracketing(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k))),
                          standard_bracketing(Word(w.begin() + static_cast<std::ptrdiff_t>(k), w.end())));
}

}  // namespace jk::lie
