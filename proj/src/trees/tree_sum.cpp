#include "jk/trees/tree_sum.hpp"

#include "jk/errors.hpp"

namespace jk::trees {

std::string Join::to_string(int genus) const { return left.to_string(genus) + "--" + right.to_string(genus); }

TreeSum TreeSum::single(int genus, const Join& j, const Rational& c) {
  TreeSum t(genus);
  t.add(j, c);
  return t;
}

void TreeSum::add(const Join& j, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(j, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void TreeSum::adopt(const TreeSum& o) {
  if (genus_ == 0) genus_ = o.genus_;
  if (o.genus_ != 0 && o.genus_ != genus_) throw MismatchError("tree sums of different genus");
}

TreeSum& TreeSum::operator+=(const TreeSum& o) {
  adopt(o);
  for (const auto& [j, c] : o.terms_) add(j, c);
  return *this;
}

TreeSum& TreeSum::operator-=(const TreeSum& o) {
  adopt(o);
  for (const auto& [j, c] : o.terms_) add(j, -c);
  return *this;
}

TreeSum& TreeSum::operator*=(const Rational& c) {
  if (sgn(c) == 0) terms_.clear();
  for (auto& [j, x] : terms_) x *= c;
  return *this;
}

std::string TreeSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [j, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.get_str() + ")*(" + j.to_string(genus_) + ")";
  }
  return out;
}

TreeSum join(const LieElement& x, const LieElement& y) {
  const int g = x.has_context() ? x.context().genus() : y.has_context() ? y.context().genus() : 0;
  TreeSum out(g);
  for (const auto& [cx, tx] : lie::rooted_terms(x))
    for (const auto& [cy, ty] : lie::rooted_terms(y)) out.add(Join::make(tx, ty), cx * cy);
  return out;
}

namespace {

void hang(const RootedTree& t, const RootedTree& outside, std::vector<std::pair<Letter, RootedTree>>& out) {
  if (t.is_leaf()) {
    out.emplace_back(t.letter(), outside);
    return;
  }
  auto [l, r] = t.children();
  hang(l, RootedTree::node(r, outside), out);
  hang(r, RootedTree::node(outside, l), out);
}

template <class Pairing>
TreeSum glue(const TreeSum& p, const TreeSum& q, Pairing pairing) {
  int g = p.genus() != 0 ? p.genus() : q.genus();
  if (p.genus() != 0 && q.genus() != 0 && p.genus() != q.genus()) throw MismatchError("tree sums of different genus");
  TreeSum out(g);
  for (const auto& [jp, cp] : p.terms()) {
    if (jp.degree() < 1) throw InputError("degree-0 trees cannot be glued");
    auto rp = reroot(jp);
    for (const auto& [jq, cq] : q.terms()) {
      if (jq.degree() < 1) throw InputError("degree-0 trees cannot be glued");
      auto rq = reroot(jq);
      Rational c = cp * cq;
      for (const auto& [x, tx] : rp)
        for (const auto& [y, ty] : rq) {
          int w = pairing(x, y, g);
          if (w != 0) out.add(Join::make(tx, ty), c * w);
        }
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<Letter, RootedTree>> reroot(const Join& j) {
  std::vector<std::pair<Letter, RootedTree>> out;
  hang(j.left, j.right, out);
  hang(j.right, j.left, out);
  return out;
}

int omega(Letter x, Letter y, int genus) {
  if (x < genus && y == x + genus) return 1;
  if (y < genus && x == y + genus) return -1;
  return 0;
}

int ell(Letter x, Letter y, int genus) { return x < genus && y == x + genus ? 1 : 0; }

TreeSum bracket_trees(const TreeSum& p, const TreeSum& q) { return glue(p, q, omega); }
TreeSum triangle(const TreeSum& p, const TreeSum& q) { return glue(p, q, ell); }

namespace {

nlohmann::json tree_json(const RootedTree& t, int genus) {
  if (t.is_leaf()) return lie::letter_name(t.letter(), genus);
  auto [l, r] = t.children();
  return nlohmann::json::array({tree_json(l, genus), tree_json(r, genus)});
}

}  // namespace

nlohmann::json to_json(const TreeSum& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [j, c] : t.terms())
    arr.push_back({{"coeff", c.get_str()},
                   {"left", tree_json(j.left, t.genus())},
                   {"right", tree_json(j.right, t.genus())}});
  return arr;
}

}  // namespace jk::trees
