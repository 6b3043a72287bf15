#include "jk/lie/algebra.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>

#include "jk/errors.hpp"

namespace jk::lie {

const LieContext& LieContext::get(int genus, int max_degree) {
  if (genus < 1) throw InputError("genus must be at least 1");
  if (max_degree < 1 || max_degree > kMaxAlgebraDegree)
    throw CapabilityError("Lie algebra degree must lie in 1.." + std::to_string(kMaxAlgebraDegree));
  static std::mutex registry_mu;
  static std::map<std::pair<int, int>, std::unique_ptr<LieContext>> registry;
  std::lock_guard<std::mutex> lock(registry_mu);
  auto& slot = registry[{genus, max_degree}];
  if (!slot) slot.reset(new LieContext(genus, max_degree));
  return *slot;
}

LieContext::LieContext(int genus, int max_degree)
    : genus_(genus),
      max_degree_(max_degree),
      basis_(static_cast<std::size_t>(max_degree) + 1),
      codes_(basis_.size()),
      trees_(basis_.size()),
      splits_(basis_.size()),
      expansions_(basis_.size()) {
  const std::uint64_t r = static_cast<std::uint64_t>(rank());
  for (int d = 1; d <= max_degree_; ++d) {
    auto& words = basis_[static_cast<std::size_t>(d)];
    words = lyndon_words(rank(), d);
    auto& codes = codes_[static_cast<std::size_t>(d)];
    for (const auto& w : words) codes.push_back(code(w));
    auto& exps = expansions_[static_cast<std::size_t>(d)];
    auto& splits = splits_[static_cast<std::size_t>(d)];
    auto& trees = trees_[static_cast<std::size_t>(d)];
    for (std::size_t i = 0; i < words.size(); ++i) {
      const Word& w = words[i];
      if (d == 1) {
        exps.push_back({{codes[i], 1}});
        splits.push_back({});
        trees.push_back(RootedTree::leaf(w[0]));
        continue;
      }
      std::size_t k = standard_split(w);
      BasisKey u = *key_of(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
      BasisKey v = *key_of(Word(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
      splits.push_back({u, v});
      trees.push_back(RootedTree::node(tree(u), tree(v)));
      std::uint64_t shift_v = 1, shift_u = 1;
      for (int j = 0; j < v.degree; ++j) shift_v *= r;
      for (int j = 0; j < u.degree; ++j) shift_u *= r;
      std::map<std::uint64_t, long> acc;
      for (const auto& [cu, xu] : expansion(u))
        for (const auto& [cv, xv] : expansion(v)) {
          acc[cu * shift_v + cv] += xu * xv;
          acc[cv * shift_u + cu] -= xu * xv;
        }
      std::vector<std::pair<std::uint64_t, long>> e;
      for (const auto& [c, x] : acc)
        if (x != 0) e.emplace_back(c, x);
      if (e.empty() || e.front().first != codes[i] || e.front().second != 1)
        throw std::logic_error("Lyndon expansion does not lead with its word");
      exps.push_back(std::move(e));
    }
  }
}

std::uint64_t LieContext::code(const Word& w) const {
  std::uint64_t c = 0;
  for (Letter l : w) c = c * static_cast<std::uint64_t>(rank()) + l;
  return c;
}

Word LieContext::decode(std::uint64_t c, int degree) const {
  Word w(static_cast<std::size_t>(degree));
  for (int i = degree - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<Letter>(c % static_cast<std::uint64_t>(rank()));
    c /= static_cast<std::uint64_t>(rank());
  }
  return w;
}

std::uint64_t LieContext::words_of_degree(int d) const {
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) n *= static_cast<std::uint64_t>(rank());
  return n;
}

std::optional<BasisKey> LieContext::key_of(const Word& w) const {
  const int d = static_cast<int>(w.size());
  if (d < 1 || d > max_degree_) return std::nullopt;
  for (Letter l : w)
    if (l >= rank()) return std::nullopt;
  const auto& codes = codes_[static_cast<std::size_t>(d)];
  const std::uint64_t c = code(w);
  auto it = std::lower_bound(codes.begin(), codes.end(), c);
  if (it == codes.end() || *it != c) return std::nullopt;
  return BasisKey{static_cast<std::uint8_t>(d), static_cast<std::uint32_t>(it - codes.begin())};
}

SparseLie LieContext::decompose(std::map<std::uint64_t, Rational> tensor, int degree) const {
  SparseLie out;
  while (!tensor.empty()) {
    auto first = tensor.begin();
    if (sgn(first->second) == 0) {
      tensor.erase(first);
      continue;
    }
    Rational c = first->second;
    auto key = key_of(decode(first->first, degree));
    if (!key) throw std::logic_error("tensor is not a Lie polynomial");
    out.emplace_back(*key, c);
    for (const auto& [wc, x] : expansion(*key)) {
      auto it = tensor.find(wc);
      if (it == tensor.end()) {
        tensor.emplace(wc, -c * x);
      } else {
        it->second -= c * x;
        if (sgn(it->second) == 0) tensor.erase(it);
      }
    }
  }
  return out;
}

const SparseLie& LieContext::bracket_basis(BasisKey u, BasisKey v) const {
  static const SparseLie empty;
  if (u == v || u.degree + v.degree > max_degree_) return empty;
  std::lock_guard<std::mutex> lock(mu_);
  auto it = brackets_.find({u, v});
  if (it != brackets_.end()) return it->second;
  const std::uint64_t r = static_cast<std::uint64_t>(rank());
  std::uint64_t shift_v = 1, shift_u = 1;
  for (int j = 0; j < v.degree; ++j) shift_v *= r;
  for (int j = 0; j < u.degree; ++j) shift_u *= r;
  std::map<std::uint64_t, Rational> acc;
  for (const auto& [cu, xu] : expansion(u))
    for (const auto& [cv, xv] : expansion(v)) {
      acc[cu * shift_v + cv] += xu * xv;
      acc[cv * shift_u + cu] -= xu * xv;
    }
  SparseLie result = decompose(std::move(acc), u.degree + v.degree);
  return brackets_.emplace(std::make_pair(u, v), std::move(result)).first->second;
}

// ---------------------------------------------------------------------------

LieElement LieElement::generator(const LieContext& ctx, Letter l) {
  if (l >= ctx.rank()) throw InputError("generator out of range for genus " + std::to_string(ctx.genus()));
  return basis(ctx, BasisKey{1, l});
}

LieElement LieElement::basis(const LieContext& ctx, BasisKey k, const Rational& c) {
  LieElement x(ctx);
  x.add_term(k, c);
  return x;
}

LieElement LieElement::from_tree(const LieContext& ctx, const RootedTree& t) {
  if (t.is_leaf()) return generator(ctx, t.letter());
  auto [l, r] = t.children();
  return bracket(from_tree(ctx, l), from_tree(ctx, r));
}

const LieContext& LieElement::context() const {
  if (!ctx_) throw MismatchError("Lie element without context");
  return *ctx_;
}

Rational LieElement::coefficient(BasisKey k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LieElement::coefficient(const Word& w) const {
  auto k = context().key_of(w);
  return k ? coefficient(*k) : Rational(0);
}

void LieElement::add_term(BasisKey k, const Rational& c) {
  if (k.degree > context().max_degree()) return;
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LieElement LieElement::homogeneous(int d) const {
  LieElement r(context());
  for (const auto& [k, c] : terms_)
    if (k.degree == d) r.terms_.emplace(k, c);
  return r;
}

LieElement LieElement::truncated(int d) const {
  LieElement r(context());
  for (const auto& [k, c] : terms_)
    if (k.degree <= d) r.terms_.emplace(k, c);
  return r;
}

bool LieElement::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return jk::is_integral(kv.second); });
}

void LieElement::check_same(const LieElement& o) const {
  if (ctx_ && o.ctx_ && ctx_ != o.ctx_) throw MismatchError("Lie elements over different contexts");
}

LieElement& LieElement::operator+=(const LieElement& o) {
  check_same(o);
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  check_same(o);
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

bool LieElement::operator==(const LieElement& o) const {
  check_same(o);
  return terms_ == o.terms_;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (!x.has_context() || !y.has_context())
    return x.has_context() ? LieElement(x.context()) : y.has_context() ? LieElement(y.context()) : LieElement();
  if (&x.context() != &y.context()) throw MismatchError("bracket of elements over different contexts");
  const LieContext& ctx = x.context();
  LieElement out(ctx);
  for (const auto& [ku, cu] : x.terms())
    for (const auto& [kv, cv] : y.terms()) {
      if (ku.degree + kv.degree > ctx.max_degree()) continue;
      Rational c = cu * cv;
      for (const auto& [k, s] : ctx.bracket_basis(ku, kv)) out.add_term(k, c * s);
    }
  return out;
}

// ---------------------------------------------------------------------------

TensorSeries::TensorSeries(const LieContext& ctx, int max_degree)
    : ctx_(&ctx), max_degree_(max_degree), coeffs_(static_cast<std::size_t>(max_degree) + 1) {
  for (int d = 0; d <= max_degree; ++d) coeffs_[static_cast<std::size_t>(d)].resize(ctx.words_of_degree(d));
}

TensorSeries TensorSeries::one(const LieContext& ctx, int max_degree) {
  TensorSeries t(ctx, max_degree);
  t.coeffs_[0][0] = 1;
  return t;
}

TensorSeries TensorSeries::from_lie(const LieElement& x, int max_degree) {
  TensorSeries t(x.context(), max_degree);
  for (const auto& [k, c] : x.terms()) {
    if (k.degree > max_degree) continue;
    auto& slot = t.coeffs_[k.degree];
    for (const auto& [code, m] : x.context().expansion(k)) slot[code] += c * m;
  }
  return t;
}

namespace {

std::vector<std::vector<std::size_t>> nonzeros(const std::vector<std::vector<Rational>>& c) {
  std::vector<std::vector<std::size_t>> nz(c.size());
  for (std::size_t d = 0; d < c.size(); ++d)
    for (std::size_t i = 0; i < c[d].size(); ++i)
      if (sgn(c[d][i]) != 0) nz[d].push_back(i);
  return nz;
}

}  // namespace

TensorSeries TensorSeries::operator*(const TensorSeries& o) const {
  if (ctx_ != o.ctx_ || max_degree_ != o.max_degree_) throw MismatchError("tensor series mismatch");
  TensorSeries out(*ctx_, max_degree_);
  auto nza = nonzeros(coeffs_);
  auto nzb = nonzeros(o.coeffs_);
  const std::size_t r = static_cast<std::size_t>(ctx_->rank());
  for (int i = 0; i <= max_degree_; ++i) {
    std::size_t shift = 1;
    for (int j = 0; i + j <= max_degree_; ++j) {
      auto& dst = out.coeffs_[static_cast<std::size_t>(i + j)];
      for (std::size_t a : nza[static_cast<std::size_t>(i)]) {
        const Rational& x = coeffs_[static_cast<std::size_t>(i)][a];
        for (std::size_t b : nzb[static_cast<std::size_t>(j)])
          dst[a * shift + b] += x * o.coeffs_[static_cast<std::size_t>(j)][b];
      }
      shift *= r;
    }
  }
  return out;
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& o) {
  if (ctx_ != o.ctx_ || max_degree_ != o.max_degree_) throw MismatchError("tensor series mismatch");
  for (std::size_t d = 0; d < coeffs_.size(); ++d)
    for (std::size_t i = 0; i < coeffs_[d].size(); ++i)
      if (sgn(o.coeffs_[d][i]) != 0) coeffs_[d][i] += o.coeffs_[d][i];
  return *this;
}

TensorSeries& TensorSeries::operator*=(const Rational& c) {
  for (auto& level : coeffs_)
    for (auto& x : level)
      if (sgn(x) != 0) x *= c;
  return *this;
}

TensorSeries TensorSeries::exp() const {
  if (sgn(coeffs_[0][0]) != 0) throw std::logic_error("exp of a series with constant term");
  TensorSeries result = one(*ctx_, max_degree_);
  TensorSeries term = one(*ctx_, max_degree_);
  for (int n = 1; n <= max_degree_; ++n) {
    term = term * *this;
    term *= Rational(1, n);
    result += term;
  }
  return result;
}

TensorSeries TensorSeries::log() const {
  if (coeffs_[0][0] != 1) throw std::logic_error("log of a series with constant term != 1");
  TensorSeries z = *this;
  z.coeffs_[0][0] = 0;
  TensorSeries result(*ctx_, max_degree_);
  TensorSeries power = z;
  for (int n = 1; n <= max_degree_; ++n) {
    TensorSeries term = power;
    term *= Rational(n % 2 == 1 ? 1 : -1, n);
    result += term;
    if (n < max_degree_) power = power * z;
  }
  return result;
}

LieElement TensorSeries::to_lie() const {
  LieElement x(*ctx_);
  for (int d = 1; d <= max_degree_; ++d) {
    std::map<std::uint64_t, Rational> m;
    const auto& level = coeffs_[static_cast<std::size_t>(d)];
    for (std::size_t i = 0; i < level.size(); ++i)
      if (sgn(level[i]) != 0) m.emplace(i, level[i]);
    for (const auto& [k, c] : ctx_->decompose(std::move(m), d)) x.add_term(k, c);
  }
  return x;
}

LieElement bch(const LieElement& x, const LieElement& y) {
  if (!x.has_context()) return y;
  if (!y.has_context()) return x;
  if (&x.context() != &y.context()) throw MismatchError("bch of elements over different contexts");
  const int n = x.context().max_degree();
  TensorSeries ex = TensorSeries::from_lie(x, n).exp();
  TensorSeries ey = TensorSeries::from_lie(y, n).exp();
  return (ex * ey).log().to_lie();
}

LieElement omega_element(const LieContext& ctx) {
  LieElement w(ctx);
  if (ctx.max_degree() < 2) return w;
  const int g = ctx.genus();
  for (int i = 0; i < g; ++i)
    w += bracket(LieElement::generator(ctx, static_cast<Letter>(i)),
                 LieElement::generator(ctx, static_cast<Letter>(g + i)));
  return w;
}

std::vector<LieElement> ideal_omega_component(const LieContext& ctx, int d) {
  if (d < 2 || d > ctx.max_degree()) return {};
  std::vector<LieElement> level{omega_element(ctx)};
  for (int k = 2; k < d; ++k) {
    std::vector<LieElement> next;
    next.reserve(level.size() * static_cast<std::size_t>(ctx.rank()));
    for (int z = 0; z < ctx.rank(); ++z) {
      LieElement gen = LieElement::generator(ctx, static_cast<Letter>(z));
      for (const auto& e : level) next.push_back(bracket(gen, e));
    }
    level = std::move(next);
  }
  return level;
}

std::vector<std::pair<Rational, RootedTree>> rooted_terms(const LieElement& x) {
  std::vector<std::pair<Rational, RootedTree>> out;
  for (const auto& [k, c] : x.terms()) out.emplace_back(c, x.context().tree(k));
  return out;
}

std::vector<int> content(const Word& w, int rank) {
  std::vector<int> c(static_cast<std::size_t>(rank), 0);
  for (Letter l : w) ++c[l];
  return c;
}

LieElement change_context(const LieElement& x, const LieContext& ctx) {
  if (x.has_context() && x.context().genus() != ctx.genus()) throw MismatchError("change of context across genera");
  LieElement out(ctx);
  for (const auto& [k, c] : x.terms())
    if (k.degree <= ctx.max_degree()) out.add_term(k, c);
  return out;
}

}  // namespace jk::lie
