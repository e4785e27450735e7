#include <cctype>
#include <string>

#include "gdc/poly.hpp"

namespace gdc {

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-' but found '") + c + "'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term term(bool negative) {
    skip_ws();
    if (at_end()) fail("expected a term");
    Term t{Rational(1), ExponentVector(ring_->size())};
    std::vector<int> exps(ring_->size(), 0);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coefficient = coefficient();
    } else {
      factor(exps);
    }
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      factor(exps);
    }
    if (negative) t.coefficient = -t.coefficient;
    t.monomial = ExponentVector(std::move(exps));
    return t;
  }

  Rational coefficient() {
    mpz_class num = unsigned_integer();
    skip_ws();
    if (!at_end() && peek() == '/') {
      const std::size_t slash = pos_++;
      mpz_class den = unsigned_integer();
      if (den == 0) throw ZeroDenominator("zero denominator at offset " + std::to_string(slash));
      return Rational(num, den);
    }
    return Rational(num);
  }

  void factor(std::vector<int>& exps) {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable name");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    auto index = ring_->index_of(name);
    if (!index) throw UnknownVariable("unknown variable '" + name + "' at offset " + std::to_string(start), start);
    skip_ws();
    long e = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      mpz_class v = unsigned_integer();
      if (v > 1000000) fail("exponent too large");
      e = v.get_si();
    }
    exps[*index] += static_cast<int>(e);
  }

  mpz_class unsigned_integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error at offset " + std::to_string(pos_) + ": " + what, pos_);
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) { return PolynomialParser(text, ring).parse(); }

}  // namespace gdc
