#include "jk/trees/derivation.hpp"

#include <algorithm>
#include <map>

#include "jk/errors.hpp"
#include "jk/lie/render.hpp"

namespace jk::trees {

DerivationElement::DerivationElement(const LieContext& ctx, int degree)
    : ctx_(&ctx), degree_(degree), parts_(static_cast<std::size_t>(ctx.rank()), LieElement(ctx)) {
  if (degree < 0) throw InputError("negative tree degree");
  if (degree + 1 > ctx.max_degree())
    throw CapabilityError("tree degree " + std::to_string(degree) + " needs Lie degree " + std::to_string(degree + 1));
}

const LieContext& DerivationElement::context() const {
  if (!ctx_) throw MismatchError("derivation element without context");
  return *ctx_;
}

void DerivationElement::add(Letter z, const LieElement& x) {
  for (const auto& [k, c] : x.terms()) add(z, k, c);
}

void DerivationElement::add(Letter z, BasisKey k, const Rational& c) {
  if (k.degree != degree_ + 1) throw MismatchError("derivation component of the wrong degree");
  parts_.at(z).add_term(k, c);
}

bool DerivationElement::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const LieElement& x) { return x.is_zero(); });
}

bool DerivationElement::is_integral() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const LieElement& x) { return x.is_integral(); });
}

void DerivationElement::check_same(const DerivationElement& o) const {
  if (ctx_ && o.ctx_ && (ctx_ != o.ctx_ || degree_ != o.degree_))
    throw MismatchError("derivation elements of different context or degree");
}

DerivationElement& DerivationElement::operator+=(const DerivationElement& o) {
  if (!o.ctx_) return *this;
  if (!ctx_) return *this = o;
  check_same(o);
  for (std::size_t z = 0; z < parts_.size(); ++z) parts_[z] += o.parts_[z];
  return *this;
}

DerivationElement& DerivationElement::operator-=(const DerivationElement& o) {
  if (!o.ctx_) return *this;
  if (!ctx_) return *this = -o;
  check_same(o);
  for (std::size_t z = 0; z < parts_.size(); ++z) parts_[z] -= o.parts_[z];
  return *this;
}

DerivationElement& DerivationElement::operator*=(const Rational& c) {
  for (auto& x : parts_) x *= c;
  return *this;
}

bool DerivationElement::operator==(const DerivationElement& o) const {
  if (!ctx_ || !o.ctx_) return is_zero() && o.is_zero();
  check_same(o);
  return parts_ == o.parts_;
}

std::string DerivationElement::to_string() const {
  if (!ctx_ || is_zero()) return "0";
  std::string out;
  for (std::size_t z = 0; z < parts_.size(); ++z) {
    if (parts_[z].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += lie::letter_name(static_cast<Letter>(z), genus()) + " (x) (" + lie::display(parts_[z]) + ")";
  }
  return out;
}

LieElement DerivationElement::apply(const LieElement& x) const {
  const LieContext& ctx = context();
  const int g = ctx.genus();
  std::map<BasisKey, LieElement> memo;
  auto on_basis = [&](auto&& self, BasisKey k) -> LieElement {
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    LieElement r(ctx);
    if (k.degree == 1) {
      Letter z = static_cast<Letter>(k.index);
      r = z < g ? -parts_[z + static_cast<std::size_t>(g)] : parts_[z - static_cast<std::size_t>(g)];
    } else if (k.degree + degree_ <= ctx.max_degree()) {
      auto [u, v] = ctx.split(k);
      LieElement pu = LieElement::basis(ctx, u), pv = LieElement::basis(ctx, v);
      r = lie::bracket(self(self, u), pv) + lie::bracket(pu, self(self, v));
    }
    memo.emplace(k, r);
    return r;
  };
  LieElement out(ctx);
  for (const auto& [k, c] : x.terms()) out += on_basis(on_basis, k) * c;
  return out;
}

bool DerivationElement::is_symplectic() const {
  const LieContext& ctx = context();
  const std::uint64_t r = static_cast<std::uint64_t>(ctx.rank());
  std::uint64_t shift = 1;
  for (int i = 0; i < degree_ + 1; ++i) shift *= r;
  std::map<std::uint64_t, Rational> acc;
  for (std::size_t z = 0; z < parts_.size(); ++z)
    for (const auto& [k, c] : parts_[z].terms())
      for (const auto& [code, m] : ctx.expansion(k)) {
        acc[z * shift + code] += c * m;
        acc[code * r + z] -= c * m;
      }
  return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return sgn(kv.second) == 0; });
}

// ---------------------------------------------------------------------------

namespace {

void eta_part_basis(const LieContext& ctx, BasisKey k, const LieElement& x, DerivationElement& out) {
  if (k.degree == 1) {
    out.add(static_cast<Letter>(k.index), x);
    return;
  }
  auto [u, v] = ctx.split(k);
  LieElement pu = LieElement::basis(ctx, u), pv = LieElement::basis(ctx, v);
  eta_part_basis(ctx, u, lie::bracket(pv, x), out);
  eta_part_basis(ctx, v, lie::bracket(x, pu), out);
}

}  // namespace

DerivationElement eta_part(const LieElement& u, const LieElement& x) {
  if (u.is_zero() || x.is_zero()) return DerivationElement();
  const LieContext& ctx = u.context();
  if (u.min_degree() != u.max_degree() || x.min_degree() != x.max_degree())
    throw InputError("eta_part needs homogeneous arguments");
  DerivationElement out(ctx, u.min_degree() + x.min_degree() - 2);
  for (const auto& [k, c] : u.terms()) eta_part_basis(ctx, k, x * c, out);
  return out;
}

DerivationElement eta_join(const LieElement& x, const LieElement& y) {
  return eta_part(x, y) + eta_part(y, x);
}

DerivationElement eta(const TreeSum& t, const LieContext& ctx) {
  if (t.genus() != 0 && t.genus() != ctx.genus()) throw MismatchError("tree sum genus differs from context");
  DerivationElement out;
  for (const auto& [j, c] : t.terms()) {
    LieElement u = LieElement::from_tree(ctx, j.left);
    LieElement v = LieElement::from_tree(ctx, j.right);
    DerivationElement term = eta_join(u, v);
    if (!out.has_context())
      out = term * c;
    else
      out += term * c;
  }
  return out;
}

DerivationElement derivation_bracket(const DerivationElement& d1, const DerivationElement& d2) {
  if (!d1.has_context() || !d2.has_context()) return DerivationElement();
  const LieContext& ctx = d1.context();
  if (&d2.context() != &ctx) throw MismatchError("derivation bracket over different contexts");
  const int g = ctx.genus();
  DerivationElement out(ctx, d1.degree() + d2.degree());
  auto commutator = [&](Letter z) {
    LieElement gz = LieElement::generator(ctx, z);
    return d1.apply(d2.apply(gz)) - d2.apply(d1.apply(gz));
  };
  for (int i = 0; i < g; ++i) {
    Letter a = static_cast<Letter>(i), b = static_cast<Letter>(g + i);
    out.add(a, commutator(b));
    out.add(b, -commutator(a));
  }
  return out;
}

TreeSum canonical_trees(const DerivationElement& d) {
  if (!d.has_context()) return TreeSum();
  const LieContext& ctx = d.context();
  TreeSum out(ctx.genus());
  Rational scale(1, d.degree() + 2);
  for (int z = 0; z < ctx.rank(); ++z)
    for (const auto& [k, c] : d.part(static_cast<Letter>(z)).terms())
      out.add(Join::make(RootedTree::leaf(static_cast<Letter>(z)), ctx.tree(k)), c * scale);
  return out;
}

nlohmann::json to_json(const DerivationElement& d) {
  nlohmann::json arr = nlohmann::json::array();
  if (!d.has_context()) return arr;
  const LieContext& ctx = d.context();
  for (int z = 0; z < ctx.rank(); ++z)
    for (const auto& [k, c] : d.part(static_cast<Letter>(z)).terms()) {
      nlohmann::json w = nlohmann::json::array();
      for (Letter l : ctx.word(k)) w.push_back(static_cast<int>(l) + 1);
      arr.push_back({{"generator", lie::letter_name(static_cast<Letter>(z), ctx.genus())},
                     {"word", w},
                     {"bracket", lie::basis_string(ctx, k)},
                     {"num", c.get_num().get_str()},
                     {"den", c.get_den().get_str()}});
    }
  return arr;
}

}  // namespace jk::trees
