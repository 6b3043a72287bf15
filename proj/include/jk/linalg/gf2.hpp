#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace jk {

class BitVector {
 public:
  explicit BitVector(std::size_t dim = 0) : dim_(dim), words_((dim + 63) / 64, 0) {}

  std::size_t dim() const { return dim_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o);
  BitVector operator^(const BitVector& o) const {
    BitVector r = *this;
    r ^= o;
    return r;
  }
  bool operator==(const BitVector& o) const = default;
  auto operator<=>(const BitVector& o) const = default;

  bool is_zero() const;
  // -1 when zero
  long leading() const;
  std::size_t popcount() const;

 private:
  std::size_t dim_;
  std::vector<std::uint64_t> words_;
};

// Square-or-rectangular linear map stored by column images: apply(v) is the
// XOR of the columns selected by v.
class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols, BitVector(rows)) {}
  static Gf2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const BitVector& column(std::size_t j) const { return cols_[j]; }
  BitVector& column(std::size_t j) { return cols_[j]; }
  bool get(std::size_t i, std::size_t j) const { return cols_[j].get(i); }
  void set(std::size_t i, std::size_t j, bool v = true) { cols_[j].set(i, v); }

  BitVector apply(const BitVector& v) const;
  Gf2Matrix operator*(const Gf2Matrix& o) const;
  bool operator==(const Gf2Matrix& o) const = default;

 private:
  std::size_t rows_;
  std::vector<BitVector> cols_;
};

// Subspace in reduced row-echelon form; rows are kept sorted by leading bit.
class Mod2Subspace {
 public:
  explicit Mod2Subspace(std::size_t dim = 0) : dim_(dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<BitVector>& rows() const { return rows_; }

  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
  // Returns true when v enlarged the subspace.
  bool insert(const BitVector& v);

 private:
  std::size_t dim_;
  std::vector<BitVector> rows_;
  std::vector<long> leads_;
};

BitVector gf2_reduce(const BitVector& v, const Mod2Subspace& s);
bool gf2_membership(const BitVector& v, const Mod2Subspace& s);

// Smallest subspace containing `seed` and stable under every action.
Mod2Subspace gf2_span_closure(const BitVector& seed, const std::vector<Gf2Matrix>& actions);

std::size_t gf2_rank(const std::vector<BitVector>& rows, std::size_t dim);

// Basis of the kernel of m (as a map GF(2)^cols -> GF(2)^rows).
std::vector<BitVector> gf2_kernel(const Gf2Matrix& m);

}  // namespace jk
