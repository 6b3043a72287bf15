#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace jk::lie {

// Letters 0..g-1 are a_1..a_g, letters g..2g-1 are b_1..b_g.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

struct Generator {
  enum class Kind { A, B };
  Kind kind;
  int index;  // 1-based

  Letter letter(int genus) const {
    return static_cast<Letter>(kind == Kind::A ? index - 1 : genus + index - 1);
  }
  static Generator from_letter(Letter l, int genus) {
    return l < genus ? Generator{Kind::A, l + 1} : Generator{Kind::B, l - genus + 1};
  }
  std::string name() const { return (kind == Kind::A ? "a" : "b") + std::to_string(index); }
};

inline std::string letter_name(Letter l, int genus) { return Generator::from_letter(l, genus).name(); }

bool is_lyndon(const Word& w);

// All Lyndon words of length d over an alphabet of size n, in lexicographic order.
std::vector<Word> lyndon_words(int n, int d);

// Position where the standard factorization w = u v splits (v is the longest
// proper Lyndon suffix). Requires |w| >= 2.
std::size_t standard_split(const Word& w);

std::int64_t witt_rank(std::int64_t n, int d);

}  // namespace jk::lie
