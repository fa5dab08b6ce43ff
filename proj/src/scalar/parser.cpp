#include "crg/scalar/parser.hpp"

#include <cctype>

#include "crg/errors.hpp"

namespace crg {

SymbolKind ParseOptions::kind_of(const std::string& name) const {
  if (real_units.count(name) != 0) return {true, true};
  if (units.count(name) != 0) return {true, false};
  if (reals.count(name) != 0) return {false, true};
  return {};
}

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts) : text_(text), opts_(opts) { advance(); }

  UnitFraction parse() {
    UnitFraction e = expr();
    if (tok_.kind != Tok::End) fail("unexpected '" + tok_.text + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, tok_.column); }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t col = pos_ + 1;
    if (pos_ >= text_.size()) {
      tok_ = {Tok::End, "end of input", col};
      return;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
      while (end < text_.size() && text_[end] == '\'') ++end;
      tok_ = {Tok::Ident, std::string(text_.substr(pos_, end - pos_)), col};
      pos_ = end;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      tok_ = {Tok::Int, std::string(text_.substr(pos_, end - pos_)), col};
      pos_ = end;
      return;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", col);
    }
    tok_ = {k, std::string(1, c), col};
    ++pos_;
  }

  void expect(Tok k, const char* what) {
    if (tok_.kind != k) fail(std::string("expected ") + what);
    advance();
  }

  UnitFraction expr() {
    UnitFraction acc = term();
    while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      const bool minus = tok_.kind == Tok::Minus;
      advance();
      UnitFraction t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  UnitFraction term() {
    UnitFraction acc = factor();
    while (tok_.kind == Tok::Star || tok_.kind == Tok::Slash) {
      const bool div = tok_.kind == Tok::Slash;
      advance();
      UnitFraction f = factor();
      if (!div) {
        acc *= f;
      } else {
        if (f.is_zero()) throw NotAUnit("division by zero");
        acc *= f.inverse();
      }
    }
    return acc;
  }

  UnitFraction factor() {
    if (tok_.kind == Tok::Minus) {
      advance();
      return -factor();
    }
    UnitFraction base = primary();
    if (tok_.kind != Tok::Caret) return base;
    advance();
    bool neg = false;
    if (tok_.kind == Tok::Minus) {
      neg = true;
      advance();
    }
    if (tok_.kind != Tok::Int) fail("expected integer exponent");
    if (tok_.text.size() > 6) fail("exponent too large");
    const int n = std::stoi(tok_.text);
    advance();
    return base.pow(neg ? -n : n);
  }

  UnitFraction primary() {
    switch (tok_.kind) {
      case Tok::Int: {
        UnitFraction v(GaussRat(Rational(mpz_class(tok_.text))));
        advance();
        return v;
      }
      case Tok::LParen: {
        advance();
        UnitFraction e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident: {
        const std::string name = tok_.text;
        advance();
        if (name == "I") return UnitFraction(GaussRat::i());
        if (name == "conj") {
          expect(Tok::LParen, "'(' after conj");
          UnitFraction e = expr();
          expect(Tok::RParen, "')'");
          return e.conj();
        }
        if (tok_.kind == Tok::LParen && opts_.derivations && is_registered_derivation(name)) {
          advance();
          UnitFraction e = expr();
          expect(Tok::RParen, "')'");
          return e.derive(name);
        }
        return UnitFraction(opts_.symbol(name));
      }
      default:
        fail("expected term");
    }
  }

  std::string_view text_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;
  Token tok_{Tok::End, "", 1};
};

}  // namespace

UnitFraction parse_expr(std::string_view text, const ParseOptions& opts) { return Parser(text, opts).parse(); }

}  // namespace crg
