#include "jk/words/logansion.hpp"

#include "jk/errors.hpp"

namespace jk::words {

using lie::bracket;
using lie::LieContext;
using lie::LieElement;

LogansionTable LogansionTable::standard(int genus, int degree) {
  if (degree > kMaxLogansionDegree) throw CapabilityError("logansion unspecified beyond degree 4");
  if (degree < 1) throw InputError("degree must be at least 1");
  const LieContext& ctx = LieContext::get(genus, degree);
  auto gen = [&](int l) { return LieElement::generator(ctx, static_cast<lie::Letter>(l)); };
  const int g = genus;
  std::vector<LieElement> alpha, beta;
  LieElement sigma(ctx);  // sum_{j<i} [a_j, b_j]
  for (int i = 0; i < g; ++i) {
    LieElement a = gen(i), b = gen(g + i);
    LieElement ab = bracket(a, b);
    LieElement ta = a - Rational(1, 2) * ab + Rational(1, 12) * bracket(ab, b) -
                    Rational(1, 24) * bracket(a, bracket(a, ab)) - Rational(1, 2) * bracket(sigma, a) +
                    Rational(1, 4) * bracket(sigma, ab);
    LieElement tb = b - Rational(1, 2) * ab + Rational(1, 4) * bracket(ab, b) + Rational(1, 12) * bracket(a, ab) -
                    Rational(1, 24) * bracket(bracket(ab, b), b) + Rational(1, 2) * bracket(b, sigma) +
                    Rational(1, 4) * bracket(sigma, ab);
    alpha.push_back(std::move(ta));
    beta.push_back(std::move(tb));
    sigma += ab;
  }
  return LogansionTable(ctx, std::move(alpha), std::move(beta));
}

LogansionTable::LogansionTable(const LieContext& ctx, std::vector<LieElement> alpha, std::vector<LieElement> beta)
    : ctx_(&ctx) {
  if (static_cast<int>(alpha.size()) != ctx.genus() || static_cast<int>(beta.size()) != ctx.genus())
    throw MismatchError("logansion table needs one value per generator");
  values_ = std::move(alpha);
  for (auto& b : beta) values_.push_back(std::move(b));
  for (const auto& v : values_)
    if (v.has_context() && &v.context() != ctx_) throw MismatchError("logansion value over another context");
  build_exponentials();
}

void LogansionTable::build_exponentials() {
  exp_pos_.clear();
  exp_neg_.clear();
  for (const auto& v : values_) {
    exp_pos_.push_back(lie::TensorSeries::from_lie(v, degree()).exp());
    exp_neg_.push_back(lie::TensorSeries::from_lie(-v, degree()).exp());
  }
}

std::size_t LogansionTable::slot(const Generator& gen) const {
  if (gen.index < 1 || gen.index > genus())
    throw InputError("generator " + gen.name() + " out of range for genus " + std::to_string(genus()));
  return gen.letter(genus());
}

const LieElement& LogansionTable::value(const Generator& gen) const { return values_[slot(gen)]; }

LogansionTable LogansionTable::with_value(const Generator& gen, const LieElement& v) const {
  LogansionTable copy = *this;
  copy.values_[slot(gen)] = v;
  copy.build_exponentials();
  return copy;
}

LieElement LogansionTable::theta(const GroupWord& w) const {
  for (const auto& l : w.letters()) slot(l.gen);
  if (w.empty()) return LieElement(*ctx_);
  lie::TensorSeries prod = lie::TensorSeries::one(*ctx_, degree());
  for (const auto& l : w.letters()) {
    std::size_t s = slot(l.gen);
    prod = prod * (l.exponent > 0 ? exp_pos_[s] : exp_neg_[s]);
  }
  return prod.log().to_lie();
}

LieElement LogansionTable::theta_fold(const GroupWord& w) const {
  LieElement acc(*ctx_);
  for (const auto& l : w.letters()) {
    const LieElement& v = values_[slot(l.gen)];
    acc = lie::bch(acc, l.exponent > 0 ? v : -v);
  }
  return acc;
}

LieElement theta(const GroupWord& w, const LogansionTable& table) { return table.theta(w); }

bool symplectic_check(const LogansionTable& table) {
  return table.theta(boundary_word(table.genus())) == lie::omega_element(table.context());
}

}  // namespace jk::words
