#pragma once

#include <vector>

#include "jk/lie/algebra.hpp"
#include "jk/words/group_word.hpp"

namespace jk::words {

inline constexpr int kMaxLogansionDegree = 4;

// Values of a multiplicative expansion on the free generators, truncated at
// the context degree.
class LogansionTable {
 public:
  // The explicit symplectic expansion through degree 4.
  static LogansionTable standard(int genus, int degree);

  LogansionTable(const lie::LieContext& ctx, std::vector<lie::LieElement> alpha, std::vector<lie::LieElement> beta);

  const lie::LieContext& context() const { return *ctx_; }
  int genus() const { return ctx_->genus(); }
  int degree() const { return ctx_->max_degree(); }

  const lie::LieElement& value(const Generator& gen) const;
  LogansionTable with_value(const Generator& gen, const lie::LieElement& v) const;

  // log of the product of exp(+-theta(x)) along the word.
  lie::LieElement theta(const GroupWord& w) const;
  // Same value computed as an explicit left-to-right BCH fold.
  lie::LieElement theta_fold(const GroupWord& w) const;

 private:
  void build_exponentials();
  std::size_t slot(const Generator& gen) const;

  const lie::LieContext* ctx_;
  std::vector<lie::LieElement> values_;  // indexed by letter
  std::vector<lie::TensorSeries> exp_pos_, exp_neg_;
};

lie::LieElement theta(const GroupWord& w, const LogansionTable& table);

// theta(boundary word) == omega
bool symplectic_check(const LogansionTable& table);

}  // namespace jk::words
