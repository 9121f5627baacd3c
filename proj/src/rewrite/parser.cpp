#include "rewrite/parser.hpp"

#include <cctype>
#include <cstdlib>

namespace rewrite {

namespace {

struct Token {
  enum class Kind {
    Number,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Arrow,
    End
  };
  Kind kind;
  std::string text;
  double number = 0.0;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Token::Kind::End, "", 0.0, start};
    char c = text_[pos_];
    switch (c) {
      case '+': ++pos_; return {Token::Kind::Plus, "+", 0.0, start};
      case '-': ++pos_; return {Token::Kind::Minus, "-", 0.0, start};
      case '*': ++pos_; return {Token::Kind::Star, "*", 0.0, start};
      case '/': ++pos_; return {Token::Kind::Slash, "/", 0.0, start};
      case '(': ++pos_; return {Token::Kind::LParen, "(", 0.0, start};
      case ')': ++pos_; return {Token::Kind::RParen, ")", 0.0, start};
      case '=':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          return {Token::Kind::Arrow, "=>", 0.0, start};
        }
        throw ParseError("unexpected '='", start);
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return lex_number(start);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return {Token::Kind::Ident, std::string(text_.substr(start, pos_ - start)),
              0.0, start};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  Token lex_number(std::size_t start) {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        ++pos_;
      } else if ((c == 'e' || c == 'E') && pos_ + 1 < text_.size() &&
                 (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
                  ((text_[pos_ + 1] == '+' || text_[pos_ + 1] == '-') &&
                   pos_ + 2 < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_ + 2]))))) {
        pos_ += 2;  // consume 'e' and the sign or first digit
      } else {
        break;
      }
    }
    std::string lexeme(text_.substr(start, pos_ - start));
    char* end = nullptr;
    double value = std::strtod(lexeme.c_str(), &end);
    if (end != lexeme.c_str() + lexeme.size()) {
      throw ParseError("malformed number '" + lexeme + "'", start);
    }
    return {Token::Kind::Number, lexeme, value, start};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  ExprPtr parse_full_expr() {
    ExprPtr e = parse_sum();
    expect(Token::Kind::End, "end of input");
    return e;
  }

  RewriteRule parse_full_rule() {
    ExprPtr lhs = parse_sum();
    expect(Token::Kind::Arrow, "'=>'");
    advance();
    ExprPtr rhs = parse_sum();
    expect(Token::Kind::End, "end of input");
    return make_rule(std::move(lhs), std::move(rhs));
  }

 private:
  ExprPtr parse_sum() {
    ExprPtr e = parse_term();
    for (;;) {
      if (current_.kind == Token::Kind::Plus) {
        advance();
        e = sum(std::move(e), parse_term());
      } else if (current_.kind == Token::Kind::Minus) {
        advance();
        e = difference(std::move(e), parse_term());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    for (;;) {
      if (current_.kind == Token::Kind::Star) {
        advance();
        e = product(std::move(e), parse_factor());
      } else if (current_.kind == Token::Kind::Slash) {
        advance();
        e = quotient(std::move(e), parse_factor());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_factor() {
    if (current_.kind == Token::Kind::Minus) {
      advance();
      return negate(parse_factor());
    }
    if (current_.kind == Token::Kind::Plus) {
      advance();
      return parse_factor();  // unary plus is the identity
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    switch (current_.kind) {
      case Token::Kind::Number: {
        double v = current_.number;
        advance();
        return constant(szval::SzValue::from_double(v));
      }
      case Token::Kind::Ident: {
        std::string name = current_.text;
        std::size_t offset = current_.offset;
        advance();
        if (name == "inf") {
          return constant(szval::SzValue::infinity(szval::Sign::Positive));
        }
        if (name == "nan") {
          return constant(szval::SzValue::nan());
        }
        if (name == "sqrt") {
          expect(Token::Kind::LParen, "'(' after sqrt");
          advance();
          ExprPtr inner = parse_sum();
          expect(Token::Kind::RParen, "')'");
          advance();
          return sqrt_of(std::move(inner));
        }
        (void)offset;
        return variable(std::move(name));
      }
      case Token::Kind::LParen: {
        advance();
        ExprPtr inner = parse_sum();
        expect(Token::Kind::RParen, "')'");
        advance();
        return inner;
      }
      default:
        throw ParseError("expected a value, variable or '(', got '" +
                             describe(current_) + "'",
                         current_.offset);
    }
  }

  void expect(Token::Kind kind, const std::string& what) {
    if (current_.kind != kind) {
      throw ParseError("expected " + what + ", got '" + describe(current_) + "'",
                       current_.offset);
    }
  }

  static std::string describe(const Token& t) {
    return t.kind == Token::Kind::End ? "end of input" : t.text;
  }

  void advance() { current_ = lexer_.next(); }

  Lexer lexer_;
  Token current_;
};

}  // namespace

ExprPtr parse_expr(std::string_view text) {
  return Parser(text).parse_full_expr();
}

RewriteRule parse_rule(std::string_view text) {
  return Parser(text).parse_full_rule();
}

}  // namespace rewrite
