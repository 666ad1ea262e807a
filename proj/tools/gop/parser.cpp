#include "parser.hpp"

#include <cctype>

namespace gop::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OreOperator parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    OreOperator result = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  OreOperator expr() {
    OreOperator acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  OreOperator term() {
    OreOperator acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        OreOperator d = unary();
        if (d.order() > 0) throw ParseError("division by an expression containing D", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc * OreOperator(d.leading().inverse());
      } else {
        return acc;
      }
    }
  }

  OreOperator unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  OreOperator power() {
    OreOperator base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      BigInt e = natural();
      if (!e.fits_uint_p() || e > 10000) throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  BigInt natural() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  OreOperator atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return OreOperator(RationalFunction(BigRational(natural())));
    if (c == '(') {
      ++pos_;
      OreOperator inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "z") return OreOperator::variable();
      if (word == "D") return OreOperator::derivation();
      if (word == "theta") return OreOperator::theta();
      pos_ = start;
      fail("unknown symbol '" + std::string(word) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OreOperator parse_operator(std::string_view text) { return Parser(text).parse(); }

}  // namespace gop::cli
