#include "jk/sp/sp2g_mod2.hpp"

#include "jk/errors.hpp"
#include "jk/lie/render.hpp"

namespace jk::sp {

using lie::Letter;
using lie::LieContext;
using lie::LieElement;
using lie::RootedTree;

int omega_mod2(const BitVector& x, const BitVector& y, int genus) {
  int s = 0;
  for (int i = 0; i < genus; ++i) {
    const std::size_t a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(genus + i);
    s ^= (x.get(a) & y.get(b)) ^ (x.get(b) & y.get(a));
  }
  return s;
}

SpTransformation::SpTransformation(int genus, Gf2Matrix m, std::string name)
    : genus_(genus), m_(std::move(m)), name_(std::move(name)) {
  const std::size_t n = static_cast<std::size_t>(2 * genus);
  if (m_.rows() != n || m_.cols() != n) throw MismatchError("symplectic matrix of the wrong size");
  if (!preserves_pairing()) throw InputError("transformation " + name_ + " does not preserve the pairing");
}

SpTransformation SpTransformation::identity(int genus) {
  return SpTransformation(genus, Gf2Matrix::identity(static_cast<std::size_t>(2 * genus)), "id");
}

SpTransformation SpTransformation::transvection(int genus, const BitVector& x, const std::string& name) {
  const std::size_t n = static_cast<std::size_t>(2 * genus);
  Gf2Matrix m = Gf2Matrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    BitVector e(n);
    e.set(j);
    if (omega_mod2(x, e, genus)) m.column(j) ^= x;
  }
  return SpTransformation(genus, std::move(m), "T_" + name);
}

SpTransformation SpTransformation::swap(int genus, int r, int s) {
  const std::size_t n = static_cast<std::size_t>(2 * genus);
  Gf2Matrix m(n, n);
  for (int i = 0; i < genus; ++i) {
    const int t = i == r - 1 ? s - 1 : i == s - 1 ? r - 1 : i;
    m.set(static_cast<std::size_t>(t), static_cast<std::size_t>(i));
    m.set(static_cast<std::size_t>(genus + t), static_cast<std::size_t>(genus + i));
  }
  return SpTransformation(genus, std::move(m), "E_" + std::to_string(r) + std::to_string(s));
}

SpTransformation SpTransformation::rotation(int genus, int r) {
  const std::size_t n = static_cast<std::size_t>(2 * genus);
  Gf2Matrix m = Gf2Matrix::identity(n);
  const std::size_t a = static_cast<std::size_t>(r - 1), b = static_cast<std::size_t>(genus + r - 1);
  m.set(a, a, false);
  m.set(b, b, false);
  m.set(b, a);
  m.set(a, b);
  return SpTransformation(genus, std::move(m), "F_" + std::to_string(r));
}

SpTransformation SpTransformation::shear(int genus, int i, int j) {
  if (i == j) throw InputError("shear needs distinct indices");
  const std::size_t n = static_cast<std::size_t>(2 * genus);
  Gf2Matrix m = Gf2Matrix::identity(n);
  m.set(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1));
  m.set(static_cast<std::size_t>(genus + i - 1), static_cast<std::size_t>(genus + j - 1));
  return SpTransformation(genus, std::move(m), "G_" + std::to_string(i) + std::to_string(j));
}

bool SpTransformation::preserves_pairing() const {
  const std::size_t n = m_.cols();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      BitVector ei(n), ej(n);
      ei.set(i);
      ej.set(j);
      if (omega_mod2(m_.column(i), m_.column(j), genus_) != omega_mod2(ei, ej, genus_)) return false;
    }
  return true;
}

SpTransformation SpTransformation::operator*(const SpTransformation& o) const {
  if (genus_ != o.genus_) throw MismatchError("transformations of different genus");
  return SpTransformation(genus_, m_ * o.m_, name_ + "*" + o.name_);
}

BitVector h_vector(int genus, const std::string& text) {
  const LieElement x = lie::parse_lie(LieContext::get(genus, 1), text);
  BitVector v(static_cast<std::size_t>(2 * genus));
  for (const auto& [k, c] : x.terms()) {
    if (!is_integral(c)) throw InputError("non-integral vector " + text);
    if (mpz_odd_p(c.get_num_mpz_t())) v.set(k.index);
  }
  return v;
}

BitVector mod2(const LieElement& x) {
  if (x.is_zero() && !x.has_context()) return BitVector();
  const int d = x.max_degree();
  const LieContext& ctx = x.context();
  BitVector v(ctx.dimension(d > 0 ? d : 1));
  for (const auto& [k, c] : x.terms()) {
    if (k.degree != d) throw InputError("mod2 needs a homogeneous element");
    if (!is_integral(c)) throw InputError("mod2 needs an integral element");
    if (mpz_odd_p(c.get_num_mpz_t())) v.set(k.index);
  }
  return v;
}

namespace {

LieElement evaluate(const RootedTree& t, const std::vector<LieElement>& images) {
  if (t.is_leaf()) return images[t.letter()];
  auto [l, r] = t.children();
  return lie::bracket(evaluate(l, images), evaluate(r, images));
}

}  // namespace

Gf2Matrix act_on_L(const SpTransformation& t, int d) {
  const LieContext& ctx = LieContext::get(t.genus(), d);
  std::vector<LieElement> images;
  for (int z = 0; z < ctx.rank(); ++z) {
    LieElement img(ctx);
    const BitVector& col = t.matrix().column(static_cast<std::size_t>(z));
    for (int y = 0; y < ctx.rank(); ++y)
      if (col.get(static_cast<std::size_t>(y))) img += LieElement::generator(ctx, static_cast<Letter>(y));
    images.push_back(std::move(img));
  }
  const std::size_t n = ctx.dimension(d);
  Gf2Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    LieElement image = evaluate(ctx.tree(lie::BasisKey{static_cast<std::uint8_t>(d), static_cast<std::uint32_t>(j)}), images);
    if (!image.is_zero()) m.column(j) = mod2(image);
  }
  return m;
}

BitVector act_on_L3(const SpTransformation& t, const BitVector& v) { return act_on_L(t, 3).apply(v); }

Gf2Matrix stigma_matrix(int genus) {
  const LieContext& ctx = LieContext::get(genus, 3);
  const std::size_t n = static_cast<std::size_t>(2 * genus);
  const std::size_t dim = ctx.dimension(3);
  auto unit = [n](Letter l) {
    BitVector e(n);
    e.set(l);
    return e;
  };
  Gf2Matrix m(n, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const RootedTree& t = ctx.tree(lie::BasisKey{3, static_cast<std::uint32_t>(j)});
    auto [l, r] = t.children();
    // Bring the tree to the shape [[a,b],c]; signs vanish mod 2.
    RootedTree pair = l, single = r;
    if (l.is_leaf()) std::swap(pair, single);
    auto [x, y] = pair.children();
    const Letter a = x.letter(), b = y.letter(), c = single.letter();
    BitVector img(n);
    if (omega_mod2(unit(b), unit(c), genus)) img ^= unit(a);
    if (omega_mod2(unit(a), unit(c), genus)) img ^= unit(b);
    m.column(j) = img;
  }
  return m;
}

BitVector stigma(int genus, const BitVector& v) { return stigma_matrix(genus).apply(v); }

SesReport verify_ses(int genus) {
  const LieContext& ctx = LieContext::get(genus, 3);
  SesReport report;
  report.genus = genus;
  report.dim_l3 = ctx.dimension(3);
  const Gf2Matrix s = stigma_matrix(genus);
  report.kernel_dim = gf2_kernel(s).size();
  report.splits = true;
  const LieElement w = lie::omega_element(ctx);
  for (int z = 0; z < ctx.rank(); ++z) {
    BitVector h(static_cast<std::size_t>(ctx.rank()));
    h.set(static_cast<std::size_t>(z));
    if (!(s.apply(mod2(lie::bracket(w, LieElement::generator(ctx, static_cast<Letter>(z))))) == h)) report.splits = false;
  }
  return report;
}

std::vector<SpTransformation> orbit_generators(int genus) {
  std::vector<SpTransformation> out;
  const std::size_t n = static_cast<std::size_t>(2 * genus);
  for (std::size_t z = 0; z < n; ++z) {
    BitVector e(n);
    e.set(z);
    out.push_back(SpTransformation::transvection(genus, e, lie::letter_name(static_cast<Letter>(z), genus)));
  }
  if (genus >= 3) out.push_back(SpTransformation::transvection(genus, h_vector(genus, "a2+a3"), "a2+a3"));
  for (int r = 1; r <= genus; ++r)
    for (int s = r + 1; s <= genus; ++s) out.push_back(SpTransformation::swap(genus, r, s));
  for (int r = 1; r <= genus; ++r) out.push_back(SpTransformation::rotation(genus, r));
  for (int i = 1; i <= genus; ++i)
    for (int j = 1; j <= genus; ++j)
      if (i != j) out.push_back(SpTransformation::shear(genus, i, j));
  return out;
}

BitVector kernel_seed(int genus) {
  if (genus < 3) throw InputError("the seed [[a1,a2],a3] needs genus at least 3");
  return mod2(lie::parse_lie(LieContext::get(genus, 3), "[[a1,a2],a3]"));
}

OrbitSpanReport verify_orbit_span(int genus, const BitVector& seed, kernels::Exec exec) {
  OrbitSpanReport report;
  report.genus = genus;
  std::vector<Gf2Matrix> actions;
  for (const auto& t : orbit_generators(genus)) actions.push_back(act_on_L(t, 3));
  const Gf2Matrix s = stigma_matrix(genus);
  const Mod2Subspace orbit = kernels::gf2_span_closure_batched(seed, actions, exec);
  const Mod2Subspace reference = gf2_span_closure(seed, actions);
  report.serial_matches = orbit.rows() == reference.rows();
  report.orbit_dim = orbit.rank();
  report.kernel_dim = gf2_kernel(s).size();
  report.contained = true;
  for (const auto& row : orbit.rows())
    if (!s.apply(row).is_zero()) report.contained = false;
  return report;
}

OrbitSpanReport verify_orbit_span(int genus, kernels::Exec exec) {
  return verify_orbit_span(genus, kernel_seed(genus), exec);
}

LowerBounds lower_bound_exponents(int genus) {
  if (genus < 2) throw InputError("lower bounds need genus at least 2");
  LowerBounds b;
  b.genus = genus;
  const std::int64_t g = genus;
  b.bordered = lie::witt_rank(2 * g, 3) - 2 * g;
  b.closed = lie::witt_rank(g, 3) - g;
  b.bordered_formula = Rational(8, 3) * (g * g * g - g);
  b.closed_formula = Rational(1, 3) * (g * g * g - 4 * g);
  return b;
}

}  // namespace jk::sp
