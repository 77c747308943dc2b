#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "vbraid/errors.hpp"
#include "vbraid/rational_function.hpp"

namespace vbraid {

namespace {

enum class TokenKind { number, variable, symbol, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  char symbol = 0;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_ = Token{};
    current_.offset = pos_;
    if (pos_ == text_.size()) return;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      current_.kind = TokenKind::number;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      while (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      current_.kind = TokenKind::variable;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (std::string_view("+-*/^(){}").find(c) != std::string_view::npos) {
      ++pos_;
      current_.kind = TokenKind::symbol;
      current_.symbol = c;
      return;
    }
    throw SyntaxError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text), lexer_(text) {}

  RationalFunction parse() {
    if (lexer_.peek().kind == TokenKind::end) fail("empty expression");
    RationalFunction value = expression();
    if (lexer_.peek().kind != TokenKind::end) fail("trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw SyntaxError(why + " at offset " + std::to_string(lexer_.peek().offset) + " in '" + std::string(text_) + "'");
  }

  bool at_symbol(char c) const { return lexer_.peek().kind == TokenKind::symbol && lexer_.peek().symbol == c; }

  bool starts_atom() const {
    const auto& t = lexer_.peek();
    return t.kind == TokenKind::number || t.kind == TokenKind::variable || (t.kind == TokenKind::symbol && t.symbol == '(');
  }

  RationalFunction expression() {
    RationalFunction value = term();
    while (at_symbol('+') || at_symbol('-')) {
      const char op = lexer_.take().symbol;
      RationalFunction rhs = term();
      value = op == '+' ? value + rhs : value - rhs;
    }
    return value;
  }

  RationalFunction term() {
    RationalFunction value = unary();
    for (;;) {
      if (at_symbol('*')) {
        lexer_.take();
        value = value * unary();
      } else if (at_symbol('/')) {
        lexer_.take();
        RationalFunction rhs = unary();
        if (rhs.is_zero()) throw DivisionByZero("division by zero in '" + std::string(text_) + "'");
        value = value / rhs;
      } else if (starts_atom()) {
        value = value * unary();
      } else {
        return value;
      }
    }
  }

  RationalFunction unary() {
    if (at_symbol('-')) {
      lexer_.take();
      return -unary();
    }
    if (at_symbol('+')) {
      lexer_.take();
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!at_symbol('^')) return base;
    lexer_.take();
    const char close = at_symbol('(') ? ')' : (at_symbol('{') ? '}' : '\0');
    const bool braced = close != '\0';
    if (braced) lexer_.take();
    bool negative = false;
    if (at_symbol('-')) {
      lexer_.take();
      negative = true;
    }
    if (lexer_.peek().kind != TokenKind::number) fail("expected integer exponent");
    const std::string digits = lexer_.take().text;
    if (digits.size() > 6) fail("exponent too large");
    if (braced) {
      if (!at_symbol(close)) fail(std::string("expected '") + close + "'");
      lexer_.take();
    }
    const int e = std::stoi(digits);
    if (negative && base.is_zero()) throw DivisionByZero("zero raised to a negative power");
    return base.pow(negative ? -e : e);
  }

  RationalFunction atom() {
    const Token t = lexer_.peek();
    if (t.kind == TokenKind::number) {
      lexer_.take();
      return RationalFunction(Rational(mpz_class(t.text, 10)));
    }
    if (t.kind == TokenKind::variable) {
      lexer_.take();
      std::size_t split = 0;
      while (split < t.text.size() && std::isalpha(static_cast<unsigned char>(t.text[split]))) ++split;
      std::string prefix = t.text.substr(0, split);
      std::size_t digits_at = split;
      while (digits_at < t.text.size() && t.text[digits_at] == '_') ++digits_at;
      const std::string digits = t.text.substr(digits_at);
      if (digits.empty() || digits.size() > 6) fail("variable '" + t.text + "' needs a numeric index");
      const long index = std::stol(digits);
      if (index < 1) fail("variable indices are 1-based");
      if (!prefix_) {
        prefix_ = prefix;
      } else if (*prefix_ != prefix) {
        fail("mixed variable prefixes '" + *prefix_ + "' and '" + prefix + "'");
      }
      return RationalFunction::variable(static_cast<Var>(index));
    }
    if (at_symbol('(')) {
      lexer_.take();
      RationalFunction inner = expression();
      if (!at_symbol(')')) fail("expected ')'");
      lexer_.take();
      return inner;
    }
    fail("unexpected token");
  }

  std::string_view text_;
  Lexer lexer_;
  std::optional<std::string> prefix_;
};

}  // namespace

RationalFunction RationalFunction::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace vbraid
