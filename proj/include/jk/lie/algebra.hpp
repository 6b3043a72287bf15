#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "jk/linalg/rational.hpp"
#include "jk/lie/lyndon.hpp"
#include "jk/lie/rooted_tree.hpp"

namespace jk::lie {

inline constexpr int kMaxAlgebraDegree = 5;

// Position of a Lyndon basis element: degree, then rank in lex order.
// The induced order is the display order.
struct BasisKey {
  std::uint8_t degree = 0;
  std::uint32_t index = 0;
  auto operator<=>(const BasisKey&) const = default;
};

using SparseLie = std::vector<std::pair<BasisKey, Rational>>;

// Free Lie algebra on a_1..a_g, b_1..b_g truncated above degree N. Contexts
// are interned: get() returns the same object for the same (g, N).
class LieContext {
 public:
  static const LieContext& get(int genus, int max_degree);

  LieContext(const LieContext&) = delete;
  LieContext& operator=(const LieContext&) = delete;

  int genus() const { return genus_; }
  int rank() const { return 2 * genus_; }
  int max_degree() const { return max_degree_; }

  const std::vector<Word>& basis(int d) const { return basis_.at(static_cast<std::size_t>(d)); }
  std::size_t dimension(int d) const { return d >= 1 && d <= max_degree_ ? basis(d).size() : 0; }
  std::optional<BasisKey> key_of(const Word& w) const;
  const Word& word(BasisKey k) const { return basis_[k.degree][k.index]; }
  const RootedTree& tree(BasisKey k) const { return trees_[k.degree][k.index]; }
  std::pair<BasisKey, BasisKey> split(BasisKey k) const { return splits_[k.degree][k.index]; }

  std::uint64_t code(const Word& w) const;
  Word decode(std::uint64_t code, int degree) const;
  std::uint64_t words_of_degree(int d) const;

  // Tensor expansion of P_w: pairs (word code, integer coefficient).
  const std::vector<std::pair<std::uint64_t, long>>& expansion(BasisKey k) const {
    return expansions_[k.degree][k.index];
  }
  // Structure constants [P_u, P_v] expressed in the Lyndon basis.
  const SparseLie& bracket_basis(BasisKey u, BasisKey v) const;

  // Rewrites a homogeneous Lie polynomial given by tensor coordinates
  // (code -> coefficient) in the Lyndon basis; throws if it is not Lie.
  SparseLie decompose(std::map<std::uint64_t, Rational> tensor, int degree) const;

 private:
  LieContext(int genus, int max_degree);

  int genus_;
  int max_degree_;
  std::vector<std::vector<Word>> basis_;
  std::vector<std::vector<std::uint64_t>> codes_;
  std::vector<std::vector<RootedTree>> trees_;
  std::vector<std::vector<std::pair<BasisKey, BasisKey>>> splits_;
  std::vector<std::vector<std::vector<std::pair<std::uint64_t, long>>>> expansions_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<BasisKey, BasisKey>, SparseLie> brackets_;
};

class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(const LieContext& ctx) : ctx_(&ctx) {}

  static LieElement generator(const LieContext& ctx, Letter l);
  static LieElement basis(const LieContext& ctx, BasisKey k, const Rational& c = 1);
  // Evaluates the bracket expression of a rooted tree.
  static LieElement from_tree(const LieContext& ctx, const RootedTree& t);

  const LieContext& context() const;
  bool has_context() const { return ctx_ != nullptr; }
  const std::map<BasisKey, Rational>& terms() const { return terms_; }

  Rational coefficient(BasisKey k) const;
  Rational coefficient(const Word& w) const;
  void add_term(BasisKey k, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree; }
  int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree; }
  LieElement homogeneous(int d) const;
  LieElement truncated(int d) const;
  bool is_integral() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& c);
  LieElement operator+(const LieElement& o) const { LieElement r = *this; r += o; return r; }
  LieElement operator-(const LieElement& o) const { LieElement r = *this; r -= o; return r; }
  LieElement operator-() const { LieElement r = *this; r *= -1; return r; }
  LieElement operator*(const Rational& c) const { LieElement r = *this; r *= c; return r; }
  friend LieElement operator*(const Rational& c, const LieElement& x) { return x * c; }

  bool operator==(const LieElement& o) const;

 private:
  void check_same(const LieElement& o) const;

  const LieContext* ctx_ = nullptr;
  std::map<BasisKey, Rational> terms_;
};

LieElement bracket(const LieElement& x, const LieElement& y);

// Dense truncated tensor series, used for the BCH product.
class TensorSeries {
 public:
  TensorSeries(const LieContext& ctx, int max_degree);
  static TensorSeries from_lie(const LieElement& x, int max_degree);
  static TensorSeries one(const LieContext& ctx, int max_degree);

  int max_degree() const { return max_degree_; }
  std::vector<Rational>& degree(int d) { return coeffs_[static_cast<std::size_t>(d)]; }
  const std::vector<Rational>& degree(int d) const { return coeffs_[static_cast<std::size_t>(d)]; }

  TensorSeries operator*(const TensorSeries& o) const;
  TensorSeries& operator+=(const TensorSeries& o);
  TensorSeries& operator*=(const Rational& c);

  TensorSeries exp() const;  // requires zero constant term
  TensorSeries log() const;  // requires constant term 1
  LieElement to_lie() const;

 private:
  const LieContext* ctx_;
  int max_degree_;
  std::vector<std::vector<Rational>> coeffs_;
};

// log(exp(x) exp(y)) truncated at the context degree.
LieElement bch(const LieElement& x, const LieElement& y);

LieElement omega_element(const LieContext& ctx);
// Spanning set of the degree-d part of the ideal generated by omega.
std::vector<LieElement> ideal_omega_component(const LieContext& ctx, int d);

std::vector<std::pair<Rational, RootedTree>> rooted_terms(const LieElement& x);

// Same element over another context of the same genus; terms above the
// target degree are dropped.
LieElement change_context(const LieElement& x, const LieContext& ctx);

// Multidegree: number of occurrences of each letter.
std::vector<int> content(const Word& w, int rank);

}  // namespace jk::lie
