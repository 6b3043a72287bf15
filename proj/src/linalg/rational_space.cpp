#include "jk/linalg/rational_space.hpp"

namespace jk {

namespace {

void add_scaled(SparseVector& v, const Rational& c, const SparseVector& row) {
  for (const auto& [j, x] : row) {
    auto it = v.find(j);
    if (it == v.end()) {
      v.emplace(j, c * x);
    } else {
      it->second += c * x;
      if (sgn(it->second) == 0) v.erase(it);
    }
  }
}

}  // namespace

SparseVector RationalRowSpace::reduce(SparseVector v) const {
  // Rows are fully reduced, so each pivot can be cleared independently.
  for (auto it = v.begin(); it != v.end();) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    std::size_t col = it->first;
    Rational c = -it->second;
    add_scaled(v, c, row->second);
    it = v.upper_bound(col);
  }
  return v;
}

bool RationalRowSpace::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  std::size_t p = r.begin()->first;
  Rational inv = 1 / r.begin()->second;
  for (auto& [j, x] : r) x *= inv;
  for (auto& [q, row] : rows_) {
    auto it = row.find(p);
    if (it != row.end()) {
      Rational c = -it->second;
      add_scaled(row, c, r);
    }
  }
  rows_.emplace(p, std::move(r));
  return true;
}

std::size_t rational_rank(const std::vector<RatVector>& rows) {
  if (rows.empty()) return 0;
  RationalRowSpace space(rows.front().size());
  for (const auto& r : rows) {
    SparseVector s;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (sgn(r[j]) != 0) s.emplace(j, r[j]);
    space.insert(s);
  }
  return space.rank();
}

}  // namespace jk
