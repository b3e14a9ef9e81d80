#include "jetclosure/parser.hpp"

#include <cctype>

#include "jetclosure/errors.hpp"

namespace jetclosure {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, const MonomialOrder& order)
      : text_(text), ring_(ring), order_(order) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

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

  Polynomial expr() {
    skip_space();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division only by a nonzero constant");
        }
        acc = acc.scale(d.constant_coeff().inverse());
      } else {
        skip_space();
        if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                    text_[pos_] == '_' || text_[pos_] == '(')) {
          fail("implicit multiplication is not allowed; use '*'");
        }
        return acc;
      }
    }
  }

  Polynomial factor() {
    std::size_t at = (skip_space(), pos_);
    Polynomial base = primary();
    if (!accept('^')) return base;
    skip_space();
    std::size_t exp_at = pos_;
    mpz_class e = integer_literal("exponent");
    if (e > kMaxParsedDegree) {
      pos_ = exp_at;
      fail("exponent exceeds " + std::to_string(kMaxParsedDegree));
    }
    auto exponent = static_cast<unsigned>(e.get_ui());
    long degree = base.total_degree();
    if (degree > 0 && static_cast<unsigned long>(degree) * exponent > kMaxParsedDegree) {
      pos_ = at;
      fail("power degree exceeds " + std::to_string(kMaxParsedDegree));
    }
    return base.pow(exponent);
  }

  mpz_class integer_literal(const char* what) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class v = integer_literal("integer");
      return Polynomial::constant(ring_, FieldElement::from_integer(ring_->field(), v), order_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '@') {
        ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits == pos_) fail("expected jet index after '@'");
      }
      std::string name(text_.substr(start, pos_ - start));
      auto index = ring_->index_of(name);
      if (!index) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *index, order_);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  const MonomialOrder& order_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring, const MonomialOrder& order) {
  return Parser(text, ring, order).parse();
}

}  // namespace jetclosure
