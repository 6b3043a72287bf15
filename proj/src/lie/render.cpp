#include "jk/lie/render.hpp"

#include <cctype>

#include "jk/errors.hpp"

namespace jk::lie {

std::string basis_string(const LieContext& ctx, BasisKey k) { return ctx.tree(k).to_string(ctx.genus()); }

std::string display(const LieElement& x) {
  if (x.is_zero()) return "0";
  const LieContext& ctx = x.context();
  auto it = x.terms().begin();
  std::string out;
  if (it->second == 1)
    out = basis_string(ctx, it->first);
  else
    out = "(" + it->second.get_str() + ")*" + basis_string(ctx, it->first);
  for (++it; it != x.terms().end(); ++it) {
    out += "+";
    if (it->second != 1) out += "(" + it->second.get_str() + ")*";
    out += basis_string(ctx, it->first);
  }
  return out;
}

nlohmann::json to_json(const LieElement& x) {
  nlohmann::json j;
  nlohmann::json terms = nlohmann::json::array();
  if (x.has_context()) {
    const LieContext& ctx = x.context();
    j["genus"] = ctx.genus();
    j["max_degree"] = ctx.max_degree();
    for (const auto& [k, c] : x.terms()) {
      nlohmann::json w = nlohmann::json::array();
      for (Letter l : ctx.word(k)) w.push_back(static_cast<int>(l) + 1);
      terms.push_back({{"word", w},
                       {"bracket", basis_string(ctx, k)},
                       {"num", c.get_num().get_str()},
                       {"den", c.get_den().get_str()}});
    }
  }
  j["terms"] = terms;
  return j;
}

namespace {

class LieParser {
 public:
  LieParser(const LieContext& ctx, std::string_view text) : ctx_(ctx) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
  }

  LieElement parse() {
    if (text_ == "0") return LieElement(ctx_);
    LieElement x = expr();
    if (pos_ != text_.size()) fail("unexpected character");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("Lie expression parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  LieElement expr() {
    LieElement x(ctx_);
    bool first = true;
    while (true) {
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = peek('-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      x += term() * sign;
      first = false;
      if (pos_ >= text_.size() || peek(')') || peek(',') || peek(']')) break;
    }
    return x;
  }

  // "(p/q)*" as printed by display().
  bool parenthesized_coefficient(Rational& c) {
    if (!peek('(')) return false;
    std::size_t end = pos_ + 1;
    if (end < text_.size() && text_[end] == '-') ++end;
    const std::size_t digits = end;
    while (end < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '/')) ++end;
    if (end == digits || end + 1 >= text_.size() || text_[end] != ')' || text_[end + 1] != '*') return false;
    try {
      c = Rational(text_.substr(pos_ + 1, end - pos_ - 1));
    } catch (const std::invalid_argument&) {
      fail("malformed coefficient");
    }
    if (c.get_den() == 0) fail("zero denominator");
    c.canonicalize();
    pos_ = end + 2;
    return true;
  }

  LieElement term() {
    Rational c = 1;
    if (parenthesized_coefficient(c)) return atom() * c;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
        ++pos_;
      try {
        c = Rational(text_.substr(start, pos_ - start));
      } catch (const std::invalid_argument&) {
        fail("malformed coefficient");
      }
      if (c.get_den() == 0) fail("zero denominator");
      c.canonicalize();
      expect('*');
    }
    return atom() * c;
  }

  LieElement atom() {
    if (peek('[')) {
      ++pos_;
      LieElement x = expr();
      expect(',');
      LieElement y = expr();
      expect(']');
      return bracket(x, y);
    }
    if (peek('(')) {
      ++pos_;
      LieElement x = expr();
      expect(')');
      return x;
    }
    if (peek('a') || peek('b')) {
      const bool is_a = peek('a');
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected generator index");
      const int index = std::stoi(text_.substr(start, pos_ - start));
      if (index < 1 || index > ctx_.genus()) fail("generator index out of range");
      Generator gen{is_a ? Generator::Kind::A : Generator::Kind::B, index};
      return LieElement::generator(ctx_, gen.letter(ctx_.genus()));
    }
    fail("expected a generator, '[' or '('");
  }

  const LieContext& ctx_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

LieElement parse_lie(const LieContext& ctx, std::string_view text) { return LieParser(ctx, text).parse(); }

}  // namespace jk::lie
