#include "jk/lie/lyndon.hpp"

#include <stdexcept>

namespace jk::lie {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word rot(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    if (!(w < rot)) return false;
  }
  return true;
}

std::vector<Word> lyndon_words(int n, int d) {
  // Duval's generation, filtered to length d; it already visits words in lex order.
  std::vector<Word> out;
  if (n <= 0 || d <= 0) return out;
  Word w{0};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == d) out.push_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < d) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::size_t standard_split(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("standard_split needs a word of length >= 2");
  for (std::size_t k = 1; k < w.size(); ++k)
    if (is_lyndon(Word(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()))) return k;
  return w.size() - 1;
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

std::int64_t witt_rank(std::int64_t n, int d) {
  if (d <= 0) return 0;
  std::int64_t total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    std::int64_t p = 1;
    for (int k = 0; k < d / e; ++k) p *= n;
    total += mobius(e) * p;
  }
  return total / d;
}

}  // namespace jk::lie
