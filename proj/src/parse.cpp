#include "gradec/parse.hpp"

#include <cctype>
#include <string>

#include "gradec/error.hpp"

namespace gradec {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, const ParseOptions& options)
      : text_(text), ring_(ring), options_(options) {}

  Scalar parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Scalar value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_atom() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           c == '(';
  }

  Scalar expr() {
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    Scalar value = term();
    if (negate) value = -value;
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Scalar rhs = term();
      value = c == '+' ? value + rhs : value - rhs;
    }
    return value;
  }

  Scalar term() {
    Scalar value = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        value = value * factor();
      } else if (c == '/') {
        if (!options_.allow_division) fail("division is not allowed here");
        ++pos_;
        Scalar rhs = factor();
        value = divide(value, rhs);
      } else if (starts_atom()) {
        value = value * factor();
      } else {
        break;
      }
    }
    return value;
  }

  Scalar factor() {
    Scalar base = atom();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    long e = std::stol(digits);
    return pow(base, negative ? -e : e);
  }

  Scalar atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar value = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar::from_integer(ring_, mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return Scalar::variable(ring_, std::string(text_.substr(start, pos_ - start)));
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const Ring& ring, const ParseOptions& options) {
  return Parser(text, ring, options).parse();
}

}  // namespace gradec
