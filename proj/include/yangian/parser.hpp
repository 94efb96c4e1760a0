// Recursive-descent parser for the expression mini-language:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | 'hbar' | 'eps' | symvar | gen | '(' expr ')'
//           | factor '^' uint | 'ox(' expr (',' expr)+ ')'
//   gen    := ('E'|'F'|'H'|'S') '[' uint ',' int ']'
// A leading sign is accepted at the start of an expr.
#pragma once

#include <cctype>
#include <set>
#include <string>
#include <string_view>

#include "yangian/ncpoly.hpp"

namespace yangian {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::set<std::string> symbols) : s_(text), symbols_(std::move(symbols)) {}

  NCPoly<MPoly> parse() {
    auto e = expr();
    skip_ws();
    if (pos_ < s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(Error::Kind::Parse, "parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  std::string uint_digits() {
    skip_ws();
    size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) error("expected an unsigned integer");
    return std::string(s_.substr(b, pos_ - b));
  }
  long small_uint() {
    auto d = uint_digits();
    if (d.size() > 9) error("integer too large");
    return std::stol(d);
  }
  std::string identifier() {
    size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  NCPoly<MPoly> expr() {
    NCPoly<MPoly> acc;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  NCPoly<MPoly> term() {
    auto acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  NCPoly<MPoly> factor() {
    auto base = primary();
    while (accept('^')) base = base.pow(static_cast<unsigned>(small_uint()));
    return base;
  }

  NCPoly<MPoly> primary() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = uint_digits();
      std::string den = "1";
      if (accept('/')) den = uint_digits();
      Rational q(num + "/" + den);
      if (den.find_first_not_of('0') == std::string::npos) error("zero denominator");
      q.canonicalize();
      return NCPoly<MPoly>::scalar(MPoly(q));
    }
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) error(std::string("unexpected '") + c + "'");
    size_t start = pos_;
    std::string id = identifier();
    if (id.size() == 1 && std::string("EFHS").find(id[0]) != std::string::npos && peek('[')) return generator(id[0]);
    if (id == "ox" && peek('(')) return ox();
    if (id == "hbar") return NCPoly<MPoly>::scalar(MPoly::variable(Variables::kHbar));
    if (id == "eps") return NCPoly<MPoly>::scalar(MPoly::variable(Variables::kEps));
    if (symbols_.count(id)) return NCPoly<MPoly>::scalar(MPoly::variable(id));
    pos_ = start;
    if (id.size() == 1 && std::isupper(static_cast<unsigned char>(id[0]))) error("unknown generator family '" + id + "'");
    error("undeclared symbol '" + id + "'");
  }

  NCPoly<MPoly> generator(char fam) {
    size_t at = pos_;
    expect('[');
    long node = small_uint();
    expect(',');
    bool neg = accept('-');
    long level = small_uint();
    if (neg) level = -level;
    expect(']');
    Family f = fam == 'E' ? Family::E : fam == 'F' ? Family::F : fam == 'H' ? Family::H : Family::S;
    if (node < 1) {
      pos_ = at;
      error("node index must be >= 1");
    }
    if ((f == Family::E || f == Family::F) && level < 1) {
      pos_ = at;
      error(std::string(1, fam) + " level must be >= 1");
    }
    return NCPoly<MPoly>::gen(Gen{f, static_cast<int>(node), static_cast<int>(level), 0});
  }

  NCPoly<MPoly> ox() {
    expect('(');
    std::vector<NCPoly<MPoly>> parts;
    parts.push_back(expr());
    while (accept(',')) parts.push_back(expr());
    expect(')');
    if (parts.size() < 2) error("ox needs at least two factors");
    for (auto& p : parts)
      if (p.arity() != 0) error("nested ox");
    return tensor(parts);
  }

  std::string_view s_;
  std::set<std::string> symbols_;
  size_t pos_ = 0;
};

inline NCPoly<MPoly> parse_mpoly(std::string_view text, const std::set<std::string>& symbols = {}) {
  return ExprParser(text, symbols).parse();
}

// parse into a specific coefficient ring; coefficients outside it are a ring-mismatch error
template <class C>
NCPoly<C> parse_expr(std::string_view text, const std::set<std::string>& symbols = {}) {
  return from_mpoly<C>(parse_mpoly(text, symbols));
}

}  // namespace yangian
