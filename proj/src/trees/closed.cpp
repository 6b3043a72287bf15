#include "jk/trees/closed.hpp"

#include <algorithm>
#include <map>

#include "jk/errors.hpp"
#include "jk/linalg/rational_space.hpp"

namespace jk::trees {

namespace {

SparseVector lie_vector(const LieElement& x) {
  SparseVector v;
  for (const auto& [k, c] : x.terms()) v[k.index] = c;
  return v;
}

RationalRowSpace ideal_space(const LieContext& ctx, int d) {
  RationalRowSpace space(ctx.dimension(d));
  for (const LieElement& x : lie::ideal_omega_component(ctx, d)) space.insert(lie_vector(x));
  return space;
}

}  // namespace

std::size_t lbar_rank(const LieContext& ctx, int d) {
  if (d < 1 || d > ctx.max_degree()) throw InputError("degree outside the context");
  if (d == 1) return ctx.dimension(1);
  return ctx.dimension(d) - ideal_space(ctx, d).rank();
}

bool lbar_is_zero(const LieElement& x) {
  if (x.is_zero()) return true;
  if (x.min_degree() != x.max_degree()) throw InputError("lbar_is_zero needs a homogeneous element");
  const int d = x.min_degree();
  if (d < 2) return false;
  return ideal_space(x.context(), d).contains(lie_vector(x));
}

bool odbar_is_zero(const DerivationElement& d) {
  if (!d.has_context() || d.is_zero()) return true;
  const LieContext& ctx = d.context();
  const int g = ctx.genus();
  const int k = d.degree();
  const std::size_t width = ctx.dimension(k + 1);
  auto flatten = [&](const DerivationElement& e) {
    SparseVector v;
    for (int z = 0; z < ctx.rank(); ++z)
      for (const auto& [key, c] : e.part(static_cast<Letter>(z)).terms())
        v[static_cast<std::size_t>(z) * width + key.index] = c;
    return v;
  };
  RationalRowSpace space(static_cast<std::size_t>(ctx.rank()) * width);
  if (k + 1 >= 2)
    for (const LieElement& x : lie::ideal_omega_component(ctx, k + 1))
      for (int z = 0; z < ctx.rank(); ++z) {
        DerivationElement e(ctx, k);
        e.add(static_cast<Letter>(z), x);
        space.insert(flatten(e));
      }
  if (k >= 1)
    for (std::uint32_t i = 0; i < ctx.dimension(k); ++i) {
      LieElement x = LieElement::basis(ctx, lie::BasisKey{static_cast<std::uint8_t>(k), i});
      DerivationElement e(ctx, k);
      for (int j = 0; j < g; ++j) {
        const Letter a = static_cast<Letter>(j), b = static_cast<Letter>(g + j);
        e.add(a, lie::bracket(LieElement::generator(ctx, b), x));
        e.add(b, -lie::bracket(LieElement::generator(ctx, a), x));
      }
      space.insert(flatten(e));
    }
  return space.contains(flatten(d));
}

std::vector<lie::Word> a_only_words(int genus, int d) { return lie::lyndon_words(genus, d); }

BitVector project_to_A_mod2(const LieContext& ctx, int d, const BitVector& v) {
  if (v.dim() != ctx.dimension(d)) throw MismatchError("mod-2 vector of the wrong dimension");
  const int g = ctx.genus();
  const std::vector<lie::Word> target = a_only_words(g, d);
  std::map<lie::Word, std::size_t> position;
  for (std::size_t i = 0; i < target.size(); ++i) position.emplace(target[i], i);
  BitVector out(target.size());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!v.get(i)) continue;
    const lie::Word& w = ctx.basis(d)[i];
    if (std::all_of(w.begin(), w.end(), [g](Letter l) { return l < g; })) out.flip(position.at(w));
  }
  return out;
}

}  // namespace jk::trees
