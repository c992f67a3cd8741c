#include "kitt/parser.hpp"

#include "kitt/error.hpp"

#include <cctype>

namespace kitt {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = product();
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc = acc + product();
      } else if (accept('-')) {
        acc = acc - product();
      } else {
        return acc;
      }
    }
  }

  Polynomial product() {
    Polynomial acc = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc = acc * unary();
      } else if (peek() == '/') {
        fail("division is not supported");
      } else if (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '(' ||
                               peek() == '_')) {
        fail("implicit multiplication is not supported; use '*'");
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    if (peek() == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    std::size_t start = pos_;
    mpz_class e = integer();
    if (e > 65535) fail_at("exponent too large", start);
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Polynomial primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (accept('(')) {
      Polynomial p = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      std::size_t save = pos_;
      skip_space();
      if (peek() == '/') {
        std::size_t slash = pos_;
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          fail_at("division is not supported", slash);
        }
        mpz_class den = integer();
        try {
          return Polynomial::constant(ring_, ring_->field().from_fraction(num, den));
        } catch (const DomainError& e) {
          fail_at(e.what(), slash);
        }
      }
      pos_ = save;
      return Polynomial::constant(ring_, ring_->field().from_mpz(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->var_index(name);
      if (!idx) fail_at("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c || at_end()) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

}  // namespace kitt
