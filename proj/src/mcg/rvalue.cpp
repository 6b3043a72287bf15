#include "jk/mcg/rvalue.hpp"

#include <algorithm>

#include "jk/errors.hpp"
#include "jk/mcg/bch_formula.hpp"

namespace jk::mcg {

const LieContext& tree_context(int genus) { return LieContext::get(genus, kMaxTreeDegree + 1); }

void window_underflow(int degree) {
  throw CapabilityError("window underflow: degree " + std::to_string(degree) + " is not known");
}

RValue::RValue(int genus, int depth, int known) : genus_(genus), depth_(depth), known_(known) {
  if (genus < 1) throw InputError("genus must be positive");
  if (depth < 1) throw InputError("depth must be positive");
  known_ = std::min(known, kMaxTreeDegree);
  const LieContext& ctx = tree_context(genus);
  for (int d = 1; d <= kMaxTreeDegree; ++d) parts_[static_cast<std::size_t>(d)] = DerivationElement(ctx, d);
}

const LieContext& RValue::context() const { return tree_context(genus_); }

const DerivationElement& RValue::part(int d) const {
  if (d < 1 || d > kMaxTreeDegree || d > known_) window_underflow(d);
  return parts_[static_cast<std::size_t>(d)];
}

void RValue::set_part(int d, const DerivationElement& x) {
  if (d < 1 || d > known_) window_underflow(d);
  if (d < depth_ && !x.is_zero()) throw MismatchError("nonzero part below the depth");
  DerivationElement& slot = parts_[static_cast<std::size_t>(d)];
  slot = DerivationElement(context(), d);
  slot += x;
}

void RValue::normalize_depth() {
  while (depth_ <= known_ && parts_[static_cast<std::size_t>(depth_)].is_zero()) ++depth_;
}

RValue RValue::restricted(int known) const {
  RValue r = *this;
  r.known_ = std::min(known_, known);
  for (int d = r.known_ + 1; d <= kMaxTreeDegree; ++d)
    r.parts_[static_cast<std::size_t>(d)] = DerivationElement(context(), d);
  return r;
}

RValue RValue::operator-() const {
  RValue r = *this;
  for (int d = 1; d <= kMaxTreeDegree; ++d) r.parts_[static_cast<std::size_t>(d)] *= -1;
  return r;
}

bool RValue::operator==(const RValue& o) const {
  if (genus_ != o.genus_ || known_ != o.known_) return false;
  for (int d = 1; d <= known_; ++d)
    if (!(parts_[static_cast<std::size_t>(d)] == o.parts_[static_cast<std::size_t>(d)])) return false;
  return true;
}

namespace {

// Graded element of the tree Lie algebra truncated above degree 4. Unknown
// parts are carried as zero; callers fix the window afterwards.
struct Graded {
  std::array<DerivationElement, kMaxTreeDegree + 1> parts;

  Graded operator+(const Graded& o) const {
    Graded r = *this;
    for (std::size_t d = 1; d < parts.size(); ++d) r.parts[d] += o.parts[d];
    return r;
  }
  Graded operator-(const Graded& o) const {
    Graded r = *this;
    for (std::size_t d = 1; d < parts.size(); ++d) r.parts[d] -= o.parts[d];
    return r;
  }
  Graded operator*(const Rational& c) const {
    Graded r = *this;
    for (std::size_t d = 1; d < parts.size(); ++d) r.parts[d] *= c;
    return r;
  }
};

Graded bracket(const Graded& x, const Graded& y) {
  Graded out;
  for (int i = 1; i < kMaxTreeDegree; ++i) {
    const DerivationElement& xi = x.parts[static_cast<std::size_t>(i)];
    if (!xi.has_context() || xi.is_zero()) continue;
    for (int j = 1; i + j <= kMaxTreeDegree; ++j) {
      const DerivationElement& yj = y.parts[static_cast<std::size_t>(j)];
      if (!yj.has_context() || yj.is_zero()) continue;
      out.parts[static_cast<std::size_t>(i + j)] += trees::derivation_bracket(xi, yj);
    }
  }
  return out;
}

Graded graded(const RValue& r) {
  Graded g;
  for (int d = r.depth(); d <= r.known(); ++d) g.parts[static_cast<std::size_t>(d)] = r.part(d);
  return g;
}

RValue from_graded(int genus, const Graded& g, int depth, int known) {
  RValue r(genus, std::min(depth, kMaxTreeDegree + 1), known);
  for (int d = 1; d <= r.known(); ++d) {
    const DerivationElement& x = g.parts[static_cast<std::size_t>(d)];
    if (d < r.depth()) {
      if (x.has_context() && !x.is_zero()) throw MismatchError("BCH produced a part below the expected depth");
      continue;
    }
    r.set_part(d, x);
  }
  return r;
}

Graded bch(const Graded& x, const Graded& y) {
  return bch_formula(x, y, [](const Graded& a, const Graded& b) { return bracket(a, b); });
}

void check_genus(const RValue& f, const RValue& h) {
  if (f.genus() != h.genus()) throw MismatchError("r-values of different genus");
}

}  // namespace

RValue compose(const RValue& f, const RValue& h) {
  check_genus(f, h);
  return from_graded(f.genus(), bch(graded(f), graded(h)), std::min(f.depth(), h.depth()),
                     std::min(f.known(), h.known()));
}

RValue compose(const std::vector<RValue>& values) {
  if (values.empty()) throw InputError("empty composition");
  RValue acc = values.front();
  for (std::size_t i = 1; i < values.size(); ++i) acc = compose(acc, values[i]);
  return acc;
}

RValue inverse(const RValue& f) { return -f; }

RValue power(const RValue& f, int exponent) {
  const RValue base = exponent < 0 ? inverse(f) : f;
  RValue acc = RValue(f.genus(), f.depth(), f.known());
  for (int i = 0; i < std::abs(exponent); ++i) acc = compose(acc, base);
  return acc;
}

RValue commutator(const RValue& f, const RValue& h) {
  check_genus(f, h);
  const Graded u = graded(f), v = graded(h);
  const Graded c = bch(bch(bch(u, v), u * Rational(-1)), v * Rational(-1));
  const int depth = f.depth() + h.depth();
  const int known = std::min({f.known() + h.depth(), h.known() + f.depth(), kMaxTreeDegree});
  RValue r = from_graded(f.genus(), c, depth, known);
  r.normalize_depth();
  return r;
}

RValue conjugate_torelli(const RValue& f, const RValue& h) {
  check_genus(f, h);
  if (f.depth() < 1) throw InputError("conjugation needs a Torelli element");
  const Graded c = exp_ad_formula(graded(f), graded(h), [](const Graded& a, const Graded& b) { return bracket(a, b); });
  const int known = std::min(h.known(), f.known() + h.depth());
  return from_graded(f.genus(), c, h.depth(), known);
}

nlohmann::json to_json(const RValue& r) {
  nlohmann::json parts = nlohmann::json::array();
  for (int d = 1; d <= r.known(); ++d)
    parts.push_back({{"degree", d}, {"value", trees::to_json(r.part(d))}});
  return {{"genus", r.genus()}, {"depth", r.depth()}, {"known", r.known()}, {"parts", parts}};
}

}  // namespace jk::mcg
