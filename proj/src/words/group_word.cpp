#include "jk/words/group_word.hpp"

#include <algorithm>

#include "jk/errors.hpp"

namespace jk::words {

GroupWord GroupWord::parse(std::string_view text) {
  std::vector<GroupLetter> out;
  std::size_t i = 0;
  auto fail = [&](std::size_t at, const std::string& what) {
    throw InputError("word parse error at offset " + std::to_string(at) + ": " + what);
  };
  while (i < text.size()) {
    char c = text[i];
    if (c != 'a' && c != 'b') fail(i, "expected 'a' or 'b'");
    Generator::Kind kind = c == 'a' ? Generator::Kind::A : Generator::Kind::B;
    ++i;
    if (i >= text.size() || text[i] < '1' || text[i] > '9') fail(i, "expected generator index");
    long index = 0;
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      index = index * 10 + (text[i] - '0');
      if (index > 1000000) fail(start, "generator index too large");
      ++i;
    }
    if (i >= text.size() || (text[i] != '+' && text[i] != '-')) fail(i, "expected '+' or '-'");
    out.push_back({Generator{kind, static_cast<int>(index)}, text[i] == '+' ? 1 : -1});
    ++i;
  }
  return GroupWord(std::move(out));
}

std::string GroupWord::to_string() const {
  std::string s;
  for (const auto& l : letters_) s += l.gen.name() + (l.exponent > 0 ? "+" : "-");
  return s;
}

GroupWord GroupWord::inverse() const {
  std::vector<GroupLetter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return GroupWord(std::move(out));
}

GroupWord GroupWord::freely_reduced() const {
  std::vector<GroupLetter> out;
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().gen.kind == l.gen.kind && out.back().gen.index == l.gen.index &&
        out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return GroupWord(std::move(out));
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  std::vector<GroupLetter> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return GroupWord(std::move(out));
}

int GroupWord::max_index() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.gen.index);
  return m;
}

std::vector<int> GroupWord::abelianization(int genus) const {
  if (max_index() > genus) throw InputError("word uses a generator beyond genus " + std::to_string(genus));
  std::vector<int> v(static_cast<std::size_t>(2 * genus), 0);
  for (const auto& l : letters_) v[l.gen.letter(genus)] += l.exponent;
  return v;
}

GroupWord parse_word(std::string_view text) { return GroupWord::parse(text); }
GroupWord invert(const GroupWord& w) { return w.inverse(); }
GroupWord comm(const GroupWord& u, const GroupWord& v) { return u * v * u.inverse() * v.inverse(); }
GroupWord conj(const GroupWord& x, const GroupWord& w) { return x * w * x.inverse(); }

GroupWord boundary_word(int genus) {
  std::string s;
  for (int i = 1; i <= genus; ++i) {
    std::string n = std::to_string(i);
    s += "b" + n + "-a" + n + "+b" + n + "+a" + n + "-";
  }
  return GroupWord::parse(s);
}

}  // namespace jk::words
