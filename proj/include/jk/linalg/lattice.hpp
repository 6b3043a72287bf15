#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jk/linalg/rational.hpp"

namespace jk {

// A sublattice of Z^n kept in row Hermite normal form: echelon rows with
// strictly increasing pivot columns, positive pivots, and every entry above a
// pivot reduced into [0, pivot).
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t ambient_dim = 0) : dim_(ambient_dim) {}

  static IntegerLattice from_rows(const IntMatrix& rows, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const IntMatrix& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  void insert(const IntVector& v);

  bool contains(const IntVector& v) const;
  bool contains(const RatVector& v) const;
  // Integer coefficients of v with respect to basis(), if v lies in the lattice.
  std::optional<IntVector> coordinates(const RatVector& v) const;

  bool operator==(const IntegerLattice& other) const {
    return dim_ == other.dim_ && rows_ == other.rows_;
  }

 private:
  void add_row(IntVector v);
  void shrink_row(std::size_t i);
  void normalize();

  std::size_t dim_;
  IntMatrix rows_;
  std::vector<std::size_t> pivots_;
};

// Row-space HNF; all rows must have the same width.
IntegerLattice hnf(const IntMatrix& m);
IntegerLattice hnf(const IntMatrix& m, std::size_t ambient_dim);

bool lattice_membership(const IntVector& v, const IntegerLattice& lattice);

// Smith diagonal d1 | d2 | ... of length min(rows, cols), zeros last.
std::vector<Integer> snf_diagonal(const IntMatrix& m);

// Smith invariants of outer / inner (length rank(outer), zeros for the free
// part). Throws if inner is not contained in outer.
std::vector<Integer> relative_invariants(const IntegerLattice& outer, const IntegerLattice& inner);

// Rewrites a list of cyclic orders as a divisibility chain d1 | d2 | ...
// (the diagonal of the Smith form of their diagonal matrix), units dropped.
std::vector<Integer> merge_invariants(std::vector<Integer> orders);

// Z-basis of { x : x * m = 0 }, returned as rows of length m.size().
IntMatrix integer_left_kernel(const IntMatrix& m, std::size_t cols);

}  // namespace jk
