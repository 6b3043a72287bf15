#include "jk/linalg/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "jk/errors.hpp"

namespace jk {

namespace {

std::optional<std::size_t> leading(const IntVector& v, std::size_t from = 0) {
  for (std::size_t j = from; j < v.size(); ++j)
    if (sgn(v[j]) != 0) return j;
  return std::nullopt;
}

// row -= q * other, starting at column `from`
void axpy(IntVector& row, const Integer& q, const IntVector& other, std::size_t from) {
  if (q == 0) return;
  for (std::size_t j = from; j < row.size(); ++j)
    if (sgn(other[j]) != 0) row[j] -= q * other[j];
}

// Reduce row[col] into [0, pivot) using `pivot_row`.
void reduce_entry(IntVector& row, const IntVector& pivot_row, std::size_t col) {
  if (sgn(row[col]) == 0) return;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), row[col].get_mpz_t(), pivot_row[col].get_mpz_t());
  axpy(row, q, pivot_row, col);
}

}  // namespace

IntegerLattice IntegerLattice::from_rows(const IntMatrix& rows, std::size_t ambient_dim) {
  IntegerLattice lat(ambient_dim);
  for (const auto& r : rows) {
    if (r.size() != ambient_dim) throw MismatchError("lattice row width mismatch");
    lat.add_row(r);
  }
  lat.normalize();
  return lat;
}

void IntegerLattice::insert(const IntVector& v) {
  if (v.size() != dim_) throw MismatchError("lattice insert: dimension mismatch");
  add_row(v);
  normalize();
}

// Keeps the entries of row i at later pivot columns below those pivots, which
// is what stops coefficient growth during long insertion sequences.
void IntegerLattice::shrink_row(std::size_t i) {
  for (std::size_t k = i + 1; k < rows_.size(); ++k) reduce_entry(rows_[i], rows_[k], pivots_[k]);
}

void IntegerLattice::add_row(IntVector v) {
  std::size_t i = 0;
  while (true) {
    auto lead = leading(v);
    if (!lead) return;
    std::size_t c = *lead;
    while (i < rows_.size() && pivots_[i] < c) ++i;
    if (i == rows_.size() || pivots_[i] > c) {
      if (sgn(v[c]) < 0)
        for (auto& x : v) x = -x;
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(i), std::move(v));
      pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(i), c);
      shrink_row(i);
      return;
    }
    IntVector& r = rows_[i];
    if (mpz_divisible_p(v[c].get_mpz_t(), r[c].get_mpz_t())) {
      Integer q = v[c] / r[c];
      axpy(v, q, r, c);
      continue;
    }
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), r[c].get_mpz_t(), v[c].get_mpz_t());
    Integer ra = r[c] / g, vb = v[c] / g;
    IntVector nr(dim_), nv(dim_);
    for (std::size_t j = c; j < dim_; ++j) {
      nr[j] = s * r[j] + t * v[j];
      nv[j] = ra * v[j] - vb * r[j];
    }
    if (sgn(nr[c]) < 0)
      for (auto& x : nr) x = -x;
    r = std::move(nr);
    shrink_row(i);
    v = std::move(nv);
  }
}

void IntegerLattice::normalize() {
  for (std::size_t i = rows_.size(); i-- > 0;)
    for (std::size_t k = i + 1; k < rows_.size(); ++k) reduce_entry(rows_[i], rows_[k], pivots_[k]);
}

std::optional<IntVector> IntegerLattice::coordinates(const RatVector& v) const {
  if (v.size() != dim_) throw MismatchError("lattice membership: dimension mismatch");
  RatVector w = v;
  IntVector coeffs(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t p = pivots_[i];
    Rational a = w[p] / Rational(rows_[i][p]);
    if (!is_integral(a)) return std::nullopt;
    coeffs[i] = a.get_num();
    if (sgn(a) != 0)
      for (std::size_t j = p; j < dim_; ++j)
        if (sgn(rows_[i][j]) != 0) w[j] -= a * rows_[i][j];
  }
  for (const auto& x : w)
    if (sgn(x) != 0) return std::nullopt;
  return coeffs;
}

bool IntegerLattice::contains(const RatVector& v) const { return coordinates(v).has_value(); }

bool IntegerLattice::contains(const IntVector& v) const {
  RatVector q(v.begin(), v.end());
  return contains(q);
}

IntegerLattice hnf(const IntMatrix& m, std::size_t ambient_dim) {
  return IntegerLattice::from_rows(m, ambient_dim);
}

IntegerLattice hnf(const IntMatrix& m) {
  if (m.empty()) return IntegerLattice(0);
  return IntegerLattice::from_rows(m, m.front().size());
}

bool lattice_membership(const IntVector& v, const IntegerLattice& lattice) {
  return lattice.contains(v);
}

std::vector<Integer> snf_diagonal(const IntMatrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m.front().size();
  const std::size_t full = std::min(m.size(), cols);
  IntMatrix a = hnf(m, cols).basis();
  const std::size_t rows = a.size();
  std::vector<Integer> diag;

  auto col_op = [&](std::size_t dst, const Integer& q, std::size_t src) {
    for (std::size_t i = 0; i < rows; ++i) a[i][dst] -= q * a[i][src];
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // bring the smallest nonzero entry of the trailing block to (t,t)
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a[i][j]) != 0 && (bi == rows || mpz_cmpabs(a[i][j].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0)) {
            bi = i;
            bj = j;
          }
      if (bi == rows) {
        for (std::size_t k = diag.size(); k < full; ++k) diag.push_back(0);
        return diag;
      }
      std::swap(a[t], a[bi]);
      if (bj != t)
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][bj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        Integer q = a[i][t] / a[t][t];
        axpy(a[i], q, a[t], t);
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        Integer q = a[t][j] / a[t][t];
        col_op(j, q, t);
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  for (std::size_t k = diag.size(); k < full; ++k) diag.push_back(0);
  return diag;
}

IntMatrix integer_left_kernel(const IntMatrix& m, std::size_t cols) {
  const std::size_t n = m.size();
  IntMatrix aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != cols) throw MismatchError("kernel: row width mismatch");
    IntVector row(cols + n);
    std::copy(m[i].begin(), m[i].end(), row.begin());
    row[cols + i] = 1;
    aug.push_back(std::move(row));
  }
  IntegerLattice h = hnf(aug, cols + n);
  IntMatrix ker;
  for (std::size_t i = 0; i < h.rank(); ++i)
    if (h.pivots()[i] >= cols) ker.emplace_back(h.basis()[i].begin() + static_cast<std::ptrdiff_t>(cols), h.basis()[i].end());
  return ker;
}

std::vector<Integer> relative_invariants(const IntegerLattice& outer, const IntegerLattice& inner) {
  if (outer.ambient_dim() != inner.ambient_dim()) throw MismatchError("lattices of different ambient dimension");
  IntMatrix coords;
  for (const IntVector& row : inner.basis()) {
    auto c = outer.coordinates(RatVector(row.begin(), row.end()));
    if (!c) throw MismatchError("inner lattice is not contained in the outer lattice");
    coords.push_back(std::move(*c));
  }
  std::vector<Integer> diag = coords.empty() ? std::vector<Integer>() : snf_diagonal(coords);
  diag.resize(outer.rank(), Integer(0));
  return diag;
}

std::vector<Integer> merge_invariants(std::vector<Integer> orders) {
  std::vector<Integer> d;
  for (auto& x : orders) {
    x = abs(x);
    if (x != 1) d.push_back(x);
  }
  // Zero stands for Z and sorts last.
  auto key_less = [](const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return a != 0 && b == 0;
    return a < b;
  };
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[i] == 0 || d[j] == 0) continue;
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }
  std::vector<Integer> out;
  for (auto& x : d)
    if (x != 1) out.push_back(x);
  std::sort(out.begin(), out.end(), key_less);
  return out;
}

}  // namespace jk
