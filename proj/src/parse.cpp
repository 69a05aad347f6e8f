#include "motivic/parse.hpp"

#include <algorithm>
#include <cctype>

namespace motivic {

namespace {

enum class Tok { number, name, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError(why + " at offset " + std::to_string(i) + " in '" + std::string(s) + "'");
  };
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::name, std::string(s.substr(start, i - start)), start});
    } else if (ch == '[') {
      std::size_t close = s.find(']', i);
      if (close == std::string_view::npos) fail("unterminated '['");
      std::string_view inner = s.substr(i + 1, close - i - 1);
      if (inner.empty()) fail("empty generator name");
      i = close + 1;
      out.push_back({Tok::name, "[" + std::string(inner) + "]", start});
    } else {
      Tok k;
      switch (ch) {
        case '+': k = Tok::plus; break;
        case '-': k = Tok::minus; break;
        case '*': k = Tok::star; break;
        case '/': k = Tok::slash; break;
        case '^': k = Tok::caret; break;
        case '(': k = Tok::lparen; break;
        case ')': k = Tok::rparen; break;
        default: fail(std::string("unexpected character '") + ch + "'");
      }
      ++i;
      out.push_back({k, std::string(1, ch), start});
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, std::vector<Token> toks, std::vector<std::string> vars)
      : src_(src), toks_(std::move(toks)), vars_(std::move(vars)) {}

  MultiPoly run() {
    MultiPoly r = expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return r;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(peek().pos) + " in '" + std::string(src_) + "'");
  }

  bool starts_factor() const {
    Tok k = peek().kind;
    return k == Tok::number || k == Tok::name || k == Tok::lparen;
  }

  MultiPoly expr() {
    MultiPoly r = term();
    for (;;) {
      if (accept(Tok::plus)) {
        r += term();
      } else if (accept(Tok::minus)) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  MultiPoly term() {
    MultiPoly r = unary();
    for (;;) {
      if (accept(Tok::star)) {
        r = r * unary();
      } else if (accept(Tok::slash)) {
        Rational d = literal();
        if (d == 0) fail("division by zero");
        r /= d;
      } else if (starts_factor()) {
        r = r * power();
      } else {
        return r;
      }
    }
  }

  MultiPoly unary() {
    if (accept(Tok::minus)) return -unary();
    if (accept(Tok::plus)) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept(Tok::caret)) {
      if (peek().kind != Tok::number) fail("exponent must be a non-negative integer literal");
      const std::string& digits = next().text;
      if (digits.size() > 6) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Rational literal() {
    if (peek().kind == Tok::number) return Rational(Integer(next().text));
    if (accept(Tok::lparen)) {
      MultiPoly inner = expr();
      if (!accept(Tok::rparen)) fail("expected ')'");
      if (!inner.is_constant()) fail("divisor must be a rational constant");
      return inner.constant_term();
    }
    fail("expected a number after '/'");
  }

  MultiPoly atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number:
        ++pos_;
        return MultiPoly::constant(vars_, Rational(Integer(t.text)));
      case Tok::name:
        ++pos_;
        return MultiPoly::variable(vars_, t.text);
      case Tok::lparen: {
        ++pos_;
        MultiPoly inner = expr();
        if (!accept(Tok::rparen)) fail("expected ')'");
        return inner;
      }
      default:
        fail(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

/// Splits a run of letters into known variable names (longest match first);
/// empty when impossible.
std::vector<std::string> split_product(const std::string& word, const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t best = 0;
    for (const auto& v : vars) {
      if (v.size() > best && word.compare(i, v.size(), v) == 0) best = v.size();
    }
    if (best == 0) return {};
    out.push_back(word.substr(i, best));
    i += best;
  }
  return out;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& variables) {
  auto raw = tokenize(text);
  std::vector<std::string> vars = variables;
  std::vector<Token> toks;
  for (auto& t : raw) {
    if (t.kind != Tok::name || std::find(vars.begin(), vars.end(), t.text) != vars.end()) {
      toks.push_back(std::move(t));
      continue;
    }
    if (variables.empty()) {
      vars.push_back(t.text);
      toks.push_back(std::move(t));
      continue;
    }
    // With a fixed ring, "uv" reads as u*v.
    auto pieces = split_product(t.text, variables);
    if (pieces.empty()) throw ParseError("unknown variable '" + t.text + "' in '" + std::string(text) + "'");
    for (auto& piece : pieces) toks.push_back({Tok::name, std::move(piece), t.pos});
  }
  return Parser(text, std::move(toks), std::move(vars)).run();
}

UniPoly parse_uni(std::string_view text, std::string_view var) {
  return to_uni(parse_poly(text, {std::string(var)}), var);
}

BiPoly parse_bi(std::string_view text, std::string_view u, std::string_view v) {
  return to_bi(parse_poly(text, {std::string(u), std::string(v)}), u, v);
}

}  // namespace motivic
