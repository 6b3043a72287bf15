#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "jk/linalg/rational.hpp"

namespace jk {

// Sparse rational vector: column index -> nonzero coefficient.
using SparseVector = std::map<std::size_t, Rational>;

// Row space over Q kept in reduced echelon form (sparse rows).
class RationalRowSpace {
 public:
  explicit RationalRowSpace(std::size_t dim = 0) : dim_(dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  bool insert(const SparseVector& v);

 private:
  std::size_t dim_;
  std::map<std::size_t, SparseVector> rows_;  // keyed by pivot column, pivot entry 1
};

std::size_t rational_rank(const std::vector<RatVector>& rows);

}  // namespace jk
