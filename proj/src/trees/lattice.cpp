#include "jk/trees/lattice.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>

#include "jk/errors.hpp"
#include "jk/kernels/kernels.hpp"

namespace jk::trees {

namespace {

void compositions(int rank, int total, Multidegree& cur, std::vector<Multidegree>& out) {
  if (static_cast<int>(cur.size()) == rank - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int x = total; x >= 0; --x) {
    cur.push_back(x);
    compositions(rank, total - x, cur, out);
    cur.pop_back();
  }
}

// Lyndon basis indices of one degree grouped by content.
const std::map<Multidegree, std::vector<std::uint32_t>>& by_content(const LieContext& ctx, int d) {
  static std::mutex mu;
  static std::map<std::pair<const LieContext*, int>, std::map<Multidegree, std::vector<std::uint32_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace({&ctx, d});
  if (fresh) {
    const auto& words = ctx.basis(d);
    for (std::uint32_t i = 0; i < words.size(); ++i) it->second[lie::content(words[i], ctx.rank())].push_back(i);
  }
  return it->second;
}

using CacheKey = std::tuple<const LieContext*, int, Multidegree, int>;

template <class Value, class Make>
const Value& cached(std::map<CacheKey, std::unique_ptr<Value>>& cache, std::mutex& mu, const CacheKey& key, Make make) {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_unique<Value>(make());
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace(key, std::move(value));
  return *it->second;
}

void check_md(const LieContext& ctx, const Multidegree& md) {
  if (static_cast<int>(md.size()) != ctx.rank()) throw MismatchError("multidegree length differs from 2g");
  for (int x : md)
    if (x < 0) throw InputError("negative multidegree entry");
}

std::vector<Letter> multiset_letters(const Multidegree& md) {
  std::vector<Letter> l;
  for (std::size_t z = 0; z < md.size(); ++z)
    for (int c = 0; c < md[z]; ++c) l.push_back(static_cast<Letter>(z));
  return l;
}

RootedTree left_comb(const std::vector<Letter>& l) {
  RootedTree t = RootedTree::leaf(l.front());
  for (std::size_t i = 1; i < l.size(); ++i) t = RootedTree::node(t, RootedTree::leaf(l[i]));
  return t;
}

IntegerLattice lattice_from_rows(IntMatrix rows, std::size_t dim) {
  // drop duplicates (up to sign) before the HNF
  std::set<IntVector> seen;
  IntMatrix unique;
  for (auto& r : rows) {
    auto lead = std::find_if(r.begin(), r.end(), [](const Integer& x) { return sgn(x) != 0; });
    if (lead == r.end()) continue;
    if (sgn(*lead) < 0)
      for (auto& x : r) x = -x;
    if (seen.insert(r).second) unique.push_back(r);
  }
  return IntegerLattice::from_rows(unique, dim);
}

const IntegerLattice& base_lattice(const LieContext& ctx, int k, const Multidegree& md) {
  return k == 4 ? lattice_eta_T4(ctx, md) : lattice_eta_T(ctx, k, md);
}

}  // namespace

std::vector<Multidegree> multidegrees(int rank, int total) {
  std::vector<Multidegree> out;
  if (rank <= 0 || total < 0) return out;
  Multidegree cur;
  compositions(rank, total, cur, out);
  return out;
}

const ComponentBasis& ComponentBasis::get(const LieContext& ctx, int k, const Multidegree& md) {
  static std::mutex mu;
  static std::map<CacheKey, std::unique_ptr<ComponentBasis>> cache;
  check_md(ctx, md);
  return cached(cache, mu, CacheKey{&ctx, k, md, 0}, [&] { return ComponentBasis(ctx, k, md); });
}

ComponentBasis::ComponentBasis(const LieContext& ctx, int k, Multidegree md) : ctx_(&ctx), k_(k), md_(std::move(md)) {
  if (k + 1 > ctx.max_degree()) throw CapabilityError("component of tree degree " + std::to_string(k) + " needs Lie degree " + std::to_string(k + 1));
  const auto& groups = by_content(ctx, k + 1);
  for (int z = 0; z < ctx.rank(); ++z) {
    if (md_[static_cast<std::size_t>(z)] == 0) continue;
    Multidegree rest = md_;
    --rest[static_cast<std::size_t>(z)];
    auto it = groups.find(rest);
    if (it == groups.end()) continue;
    for (auto idx : it->second)
      coords_.emplace_back(static_cast<Letter>(z), BasisKey{static_cast<std::uint8_t>(k + 1), idx});
  }
}

RatVector ComponentBasis::vector_of(const DerivationElement& d) const {
  RatVector v(coords_.size());
  if (!d.has_context()) return v;
  if (&d.context() != ctx_ || d.degree() != k_) throw MismatchError("component basis does not match element");
  for (std::size_t i = 0; i < coords_.size(); ++i) v[i] = d.part(coords_[i].first).coefficient(coords_[i].second);
  return v;
}

IntVector ComponentBasis::integer_vector_of(const DerivationElement& d) const {
  IntVector out;
  for (const auto& q : vector_of(d)) {
    if (!is_integral(q)) throw std::logic_error("expected an integral component vector");
    out.push_back(q.get_num());
  }
  return out;
}

DerivationElement ComponentBasis::element(const RatVector& v) const {
  if (v.size() != coords_.size()) throw MismatchError("component vector dimension mismatch");
  DerivationElement d(*ctx_, k_);
  for (std::size_t i = 0; i < coords_.size(); ++i) d.add(coords_[i].first, coords_[i].second, v[i]);
  return d;
}

std::vector<Multidegree> support(const DerivationElement& d) {
  std::set<Multidegree> mds;
  if (!d.has_context()) return {};
  const LieContext& ctx = d.context();
  for (int z = 0; z < ctx.rank(); ++z)
    for (const auto& [k, c] : d.part(static_cast<Letter>(z)).terms()) {
      Multidegree md = lie::content(ctx.word(k), ctx.rank());
      ++md[static_cast<std::size_t>(z)];
      mds.insert(md);
    }
  return {mds.begin(), mds.end()};
}

const IntegerLattice& lattice_eta_T(const LieContext& ctx, int k, const Multidegree& md) {
  static std::mutex mu;
  static std::map<CacheKey, std::unique_ptr<IntegerLattice>> cache;
  check_md(ctx, md);
  return cached(cache, mu, CacheKey{&ctx, k, md, 1}, [&] {
    const ComponentBasis& basis = ComponentBasis::get(ctx, k, md);
    std::vector<Join> joins;
    for (const auto& [z, key] : basis.coords()) joins.push_back(Join::make(RootedTree::leaf(z), ctx.tree(key)));
    return lattice_from_rows(kernels::eta_rows(basis, joins, kernels::Exec::Parallel), basis.dim());
  });
}

Join caterpillar6(const std::vector<Letter>& l) {
  using T = RootedTree;
  return Join::make(T::node(T::node(T::leaf(l[0]), T::leaf(l[1])), T::leaf(l[2])),
                    T::node(T::leaf(l[3]), T::node(T::leaf(l[4]), T::leaf(l[5]))));
}

Join spider6(const std::vector<Letter>& l) {
  using T = RootedTree;
  return Join::make(T::node(T::leaf(l[0]), T::leaf(l[1])),
                    T::node(T::node(T::leaf(l[2]), T::leaf(l[3])), T::node(T::leaf(l[4]), T::leaf(l[5]))));
}

const IntegerLattice& lattice_eta_T4(const LieContext& ctx, const Multidegree& md) {
  static std::mutex mu;
  static std::map<CacheKey, std::unique_ptr<IntegerLattice>> cache;
  check_md(ctx, md);
  return cached(cache, mu, CacheKey{&ctx, 4, md, 2}, [&] {
    std::vector<Letter> letters = multiset_letters(md);
    if (letters.size() != 6) throw InputError("degree-4 component needs 6 leaves");
    const ComponentBasis& basis = ComponentBasis::get(ctx, 4, md);
    std::set<Join> joins;
    do {
      joins.insert(caterpillar6(letters));
      joins.insert(spider6(letters));
    } while (std::next_permutation(letters.begin(), letters.end()));
    std::vector<Join> list(joins.begin(), joins.end());
    return lattice_from_rows(kernels::eta_rows(basis, list, kernels::Exec::Parallel), basis.dim());
  });
}

std::vector<BasisKey> half_slots(const LieContext& ctx, int k, const Multidegree& md) {
  std::vector<BasisKey> out;
  if (k % 2 != 0) return out;
  Multidegree half(md.size());
  for (std::size_t z = 0; z < md.size(); ++z) {
    if (md[z] % 2 != 0) return out;
    half[z] = md[z] / 2;
  }
  const int m1 = k / 2 + 1;
  const auto& groups = by_content(ctx, m1);
  auto it = groups.find(half);
  if (it == groups.end()) return out;
  for (auto idx : it->second) out.push_back(BasisKey{static_cast<std::uint8_t>(m1), idx});
  return out;
}

const IntegerLattice& lattice_D(const LieContext& ctx, int k, const Multidegree& md) {
  static std::mutex mu;
  static std::map<CacheKey, std::unique_ptr<IntegerLattice>> cache;
  check_md(ctx, md);
  return cached(cache, mu, CacheKey{&ctx, k, md, 3}, [&] {
    const IntegerLattice& base = base_lattice(ctx, k, md);
    const ComponentBasis& basis = ComponentBasis::get(ctx, k, md);
    IntMatrix rows = base.basis();
    bool even = k % 2 == 0 && std::all_of(md.begin(), md.end(), [](int x) { return x % 2 == 0; });
    if (even) {
      Multidegree half(md.size());
      for (std::size_t z = 0; z < md.size(); ++z) half[z] = md[z] / 2;
      std::vector<Letter> letters = multiset_letters(half);
      do {
        LieElement u = LieElement::from_tree(ctx, left_comb(letters));
        if (u.is_zero()) continue;
        DerivationElement h = eta_join(u, u) * Rational(1, 2);
        rows.push_back(basis.integer_vector_of(h));
      } while (std::next_permutation(letters.begin(), letters.end()));
    }
    return lattice_from_rows(std::move(rows), basis.dim());
  });
}

IntegerLattice lattice_D_kernel(const LieContext& ctx, int k, const Multidegree& md) {
  const ComponentBasis& basis = ComponentBasis::get(ctx, k, md);
  const std::uint64_t r = static_cast<std::uint64_t>(ctx.rank());
  std::uint64_t shift = 1;
  for (int i = 0; i < k + 1; ++i) shift *= r;
  std::vector<std::map<std::uint64_t, long>> images;
  std::map<std::uint64_t, std::size_t> columns;
  for (const auto& [z, key] : basis.coords()) {
    std::map<std::uint64_t, long> img;
    for (const auto& [code, m] : ctx.expansion(key)) {
      img[z * shift + code] += m;
      img[code * r + z] -= m;
    }
    for (const auto& [c, m] : img)
      if (m != 0) columns.emplace(c, 0);
    images.push_back(std::move(img));
  }
  std::size_t col = 0;
  for (auto& [c, idx] : columns) idx = col++;
  IntMatrix m(images.size(), IntVector(columns.size()));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (const auto& [c, x] : images[i])
      if (x != 0) m[i][columns.at(c)] = x;
  return IntegerLattice::from_rows(integer_left_kernel(m, columns.size()), basis.dim());
}

Mod1Verdict mod1_class_is_zero(const DerivationElement& d) {
  Mod1Verdict verdict;
  if (!d.has_context()) return verdict;
  for (const auto& md : support(d)) {
    const ComponentBasis& basis = ComponentBasis::get(d.context(), d.degree(), md);
    if (!base_lattice(d.context(), d.degree(), md).contains(basis.vector_of(d))) {
      verdict.zero = false;
      verdict.failing.push_back(md);
    }
  }
  return verdict;
}

BitVector mod2_coordinates(const LieElement& x) {
  const LieContext& ctx = x.context();
  if (x.is_zero()) throw InputError("mod2_coordinates needs a nonzero homogeneous element");
  const int d = x.min_degree();
  if (x.max_degree() != d) throw InputError("mod2_coordinates needs a homogeneous element");
  BitVector v(ctx.dimension(d));
  for (const auto& [k, c] : x.terms()) {
    if (!is_integral(c)) throw InputError("mod2_coordinates needs integral coefficients");
    if (mpz_odd_p(c.get_num_mpz_t())) v.set(k.index);
  }
  return v;
}

VarpiResult varpi(const DerivationElement& d) {
  const LieContext& ctx = d.context();
  const int k = d.degree();
  if (k % 2 != 0) throw InputError("varpi is defined on even degrees");
  VarpiResult result;
  result.value = BitVector(ctx.dimension(k / 2 + 1));
  for (const auto& md : support(d)) {
    const ComponentBasis& basis = ComponentBasis::get(ctx, k, md);
    const IntegerLattice& lat = base_lattice(ctx, k, md);
    RatVector v = basis.vector_of(d);
    std::vector<BasisKey> slots = half_slots(ctx, k, md);
    std::vector<RatVector> halves;
    for (auto key : slots) {
      LieElement u = LieElement::basis(ctx, key);
      halves.push_back(basis.vector_of(eta_join(u, u) * Rational(1, 2)));
    }
    bool found = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()) && !found; ++mask) {
      RatVector w = v;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1U)
          for (std::size_t i = 0; i < w.size(); ++i) w[i] -= halves[s][i];
      if (lat.contains(w)) {
        found = true;
        for (std::size_t s = 0; s < slots.size(); ++s)
          if (mask >> s & 1U) result.value.flip(slots[s].index);
      }
    }
    if (!found) {
      result.in_D = false;
      result.outside.push_back(md);
    }
  }
  return result;
}

BitVector varpi_presented(const HalfPresentation& p, const LieContext& ctx, int k) {
  if (k % 2 != 0) throw InputError("varpi is defined on even degrees");
  if (!mod1_class_is_zero(p.integral).zero) throw InputError("presentation: integral part is not in eta(T(H))");
  BitVector value(ctx.dimension(k / 2 + 1));
  for (const auto& [u, n] : p.halves) {
    if (static_cast<int>(u.num_leaves()) != k / 2 + 1) throw InputError("half-symmetric tree of the wrong size");
    if (mpz_even_p(n.get_mpz_t())) continue;
    LieElement b = LieElement::from_tree(ctx, u);
    if (!b.is_zero()) value ^= mod2_coordinates(b);
  }
  return value;
}

}  // namespace jk::trees
