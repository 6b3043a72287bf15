#include "jk/linalg/gf2.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "jk/errors.hpp"

namespace jk {

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.dim_ != dim_) throw MismatchError("bit vector dimension mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
  return *this;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

long BitVector::leading() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] != 0) return static_cast<long>(k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k])));
  return -1;
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitVector Gf2Matrix::apply(const BitVector& v) const {
  if (v.dim() != cols()) throw MismatchError("gf2 apply: dimension mismatch");
  BitVector out(rows_);
  for (std::size_t j = 0; j < cols(); ++j)
    if (v.get(j)) out ^= cols_[j];
  return out;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
  if (o.rows() != cols()) throw MismatchError("gf2 product: dimension mismatch");
  Gf2Matrix r(rows_, o.cols());
  for (std::size_t j = 0; j < o.cols(); ++j) r.cols_[j] = apply(o.cols_[j]);
  return r;
}

BitVector Mod2Subspace::reduce(BitVector v) const {
  if (v.dim() != dim_) throw MismatchError("gf2 reduce: dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(static_cast<std::size_t>(leads_[i]))) v ^= rows_[i];
  return v;
}

bool Mod2Subspace::insert(const BitVector& v) {
  BitVector r = reduce(v);
  long lead = r.leading();
  if (lead < 0) return false;
  for (auto& row : rows_)
    if (row.get(static_cast<std::size_t>(lead))) row ^= r;
  auto pos = std::lower_bound(leads_.begin(), leads_.end(), lead) - leads_.begin();
  rows_.insert(rows_.begin() + pos, std::move(r));
  leads_.insert(leads_.begin() + pos, lead);
  return true;
}

BitVector gf2_reduce(const BitVector& v, const Mod2Subspace& s) { return s.reduce(v); }
bool gf2_membership(const BitVector& v, const Mod2Subspace& s) { return s.contains(v); }

Mod2Subspace gf2_span_closure(const BitVector& seed, const std::vector<Gf2Matrix>& actions) {
  const std::size_t n = seed.dim();
  for (const auto& a : actions)
    if (a.rows() != n || a.cols() != n) throw MismatchError("span closure: action dimension mismatch");
  Mod2Subspace space(n);
  std::deque<BitVector> work;
  if (space.insert(seed)) work.push_back(seed);
  while (!work.empty()) {
    BitVector v = std::move(work.front());
    work.pop_front();
    for (const auto& a : actions) {
      BitVector w = a.apply(v);
      if (space.insert(w)) work.push_back(std::move(w));
    }
  }
  return space;
}

std::size_t gf2_rank(const std::vector<BitVector>& rows, std::size_t dim) {
  Mod2Subspace s(dim);
  for (const auto& r : rows) s.insert(r);
  return s.rank();
}

std::vector<BitVector> gf2_kernel(const Gf2Matrix& m) {
  // Row-reduce the columns while tracking combinations.
  const std::size_t n = m.cols();
  std::vector<BitVector> img, comb;
  std::vector<long> leads;
  std::vector<BitVector> kernel;
  for (std::size_t j = 0; j < n; ++j) {
    BitVector v = m.column(j);
    BitVector c(n);
    c.set(j);
    for (std::size_t i = 0; i < img.size(); ++i)
      if (v.get(static_cast<std::size_t>(leads[i]))) {
        v ^= img[i];
        c ^= comb[i];
      }
    long lead = v.leading();
    if (lead < 0) {
      kernel.push_back(std::move(c));
      continue;
    }
    for (std::size_t i = 0; i < img.size(); ++i)
      if (img[i].get(static_cast<std::size_t>(lead))) {
        img[i] ^= v;
        comb[i] ^= c;
      }
    img.push_back(std::move(v));
    comb.push_back(std::move(c));
    leads.push_back(lead);
  }
  return kernel;
}

}  // namespace jk
