#include "umbrella/literal.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace umb {
namespace {

enum class Tok { number, name, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool digit(char c) { return c >= '0' && c <= '9'; }

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& what) {
  throw std::invalid_argument("polynomial literal '" + std::string(text) + "' at " + std::to_string(pos) +
                              ": " + what);
}

std::vector<Token> tokenize(std::string_view s) {
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (s.substr(i, 3) == kUnicodeMinus) {
      out.push_back({Tok::minus, "-", i});
      i += 3;
    } else if (digit(c)) {
      std::size_t j = i;
      while (j < s.size() && digit(s[j])) ++j;
      if (j + 1 < s.size() && s[j] == '/' && digit(s[j + 1])) {
        ++j;
        while (j < s.size() && digit(s[j])) ++j;
      }
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (name_start(c)) {
      std::size_t j = i;
      while (j < s.size() && name_char(s[j])) ++j;
      out.push_back({Tok::name, std::string(s.substr(i, j - i)), i});
      i = j;
    } else {
      Tok k;
      switch (c) {
        case '+': k = Tok::plus; break;
        case '-': k = Tok::minus; break;
        case '*': k = Tok::star; break;
        case '^': k = Tok::caret; break;
        case '(': k = Tok::lparen; break;
        case ')': k = Tok::rparen; break;
        default: fail(s, i, std::string("unexpected character '") + c + "'");
      }
      out.push_back({k, std::string(1, c), i});
      ++i;
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const AlphabetPtr& alphabet, std::string_view text)
      : alphabet_(alphabet), text_(text), tokens_(tokenize(text)) {}

  NCPoly parse() {
    NCPoly f = expr();
    if (peek().kind != Tok::end) fail(text_, peek().pos, "trailing input '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  NCPoly expr() {
    NCPoly sum(alphabet_);
    bool first = true;
    while (true) {
      Scalar sign = 1;
      if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
        if (next().kind == Tok::minus) sign = -1;
      } else if (!first) {
        break;
      }
      sum.add_scaled(term(), sign);
      first = false;
    }
    return sum;
  }

  bool starts_factor(Tok k) const { return k == Tok::number || k == Tok::name || k == Tok::lparen; }

  NCPoly term() {
    if (!starts_factor(peek().kind)) fail(text_, peek().pos, "expected a term");
    NCPoly product = factor();
    while (true) {
      if (peek().kind == Tok::star) {
        next();
        if (!starts_factor(peek().kind)) fail(text_, peek().pos, "expected a factor after '*'");
      } else if (!starts_factor(peek().kind)) {
        break;
      }
      product = mul(product, factor());
    }
    return product;
  }

  NCPoly factor() {
    NCPoly base = primary();
    if (peek().kind == Tok::caret) {
      next();
      const Token& t = next();
      if (t.kind != Tok::number || t.text.find('/') != std::string::npos) {
        fail(text_, t.pos, "exponent must be a nonnegative integer");
      }
      base = power(base, std::stoi(t.text));
    }
    return base;
  }

  NCPoly primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::number:
        return NCPoly::constant(alphabet_, parse_scalar(t.text));
      case Tok::name: {
        auto id = alphabet_->find(t.text);
        if (!id) fail(text_, t.pos, "unknown generator '" + t.text + "'");
        return NCPoly::generator(alphabet_, *id);
      }
      case Tok::lparen: {
        NCPoly inner = expr();
        if (next().kind != Tok::rparen) fail(text_, t.pos, "unbalanced '('");
        return inner;
      }
      default:
        fail(text_, t.pos, "unexpected '" + t.text + "'");
    }
  }

  AlphabetPtr alphabet_;
  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_polynomial(const AlphabetPtr& alphabet, std::string_view text) { return Parser(alphabet, text).parse(); }

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) return Word{};
  text = text.substr(first, text.find_last_not_of(" \t\n") - first + 1);
  if (text == "1") return Word{};
  std::vector<int> ids;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    ids.push_back(alphabet.id_of(std::string(text.substr(i, j - i))));
    i = j;
  }
  return Word(ids);
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet[w[i]].name;
  }
  return out;
}

std::string format_polynomial(const NCPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Scalar mag = abs(c);
    if (w.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + ' ';
      out += format_word(f.alphabet(), w);
    }
    first = false;
  }
  return out;
}

}  // namespace umb
