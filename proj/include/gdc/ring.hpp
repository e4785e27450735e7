#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gdc/errors.hpp"

namespace gdc {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. The default value is the canonical zero 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& value) : value_(value) {}
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpq_class& value);

  /// Parses "a" or "a/b" with an optional leading sign.
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  int sign() const noexcept { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const;

  /// "a" for integers, "a/b" otherwise.
  std::string to_string() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exponent vector a of a monomial x^a. Entries are non-negative and the
/// length equals the number of ambient variables.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<int> e);
  explicit ExponentVector(std::vector<int> e);

  static ExponentVector unit(std::size_t n, std::size_t index, int power = 1);

  std::size_t size() const noexcept { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value);
  std::span<const int> span() const noexcept { return e_; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  int total_degree() const;
  bool is_zero() const;
  /// Number of variables with positive exponent.
  std::size_t support_size() const;

  /// True iff this monomial divides `other` (componentwise <=).
  bool divides(const ExponentVector& other) const;

  ExponentVector& operator+=(const ExponentVector& o);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  /// Componentwise difference; requires `divisor` to divide this.
  ExponentVector quotient(const ExponentVector& divisor) const;
  ExponentVector lcm(const ExponentVector& o) const;
  ExponentVector gcd(const ExponentVector& o) const;
  /// Exponents flattened to 0/1.
  ExponentVector support() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  /// Plain lexicographic comparison of the entries (container order, not a
  /// monomial order).
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) { return a.e_ <=> b.e_; }

 private:
  std::vector<int> e_;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& e);

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& e) const noexcept;
};

/// Weight vector omega in N^n.
class WeightVector {
 public:
  WeightVector() = default;
  WeightVector(std::initializer_list<std::int64_t> w);
  explicit WeightVector(std::vector<std::int64_t> w);

  /// Parses "w1,w2,...".
  static WeightVector parse(std::string_view text);
  static WeightVector ones(std::size_t n) { return WeightVector(std::vector<std::int64_t>(n, 1)); }

  std::size_t size() const noexcept { return w_.size(); }
  std::int64_t operator[](std::size_t i) const { return w_[i]; }
  std::span<const std::int64_t> span() const noexcept { return w_; }
  const std::vector<std::int64_t>& values() const noexcept { return w_; }

  bool is_strictly_positive() const;
  /// Throws InvalidInput unless every entry is >= 1.
  void require_strictly_positive() const;

  /// omega . a, with overflow detection.
  std::int64_t dot(std::span<const int> a) const;
  std::int64_t dot(const ExponentVector& a) const { return dot(a.span()); }

  std::string to_string() const;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::int64_t> w_;
};

/// omega-degree of a single exponent vector.
std::int64_t omega_degree(const WeightVector& omega, const ExponentVector& a);

/// A monomial order: lex, grlex, grevlex, a weight order refined by a
/// tiebreak order, or a block order (first `split` variables compared by the
/// left order, remaining ones by the right order on ties).
class MonomialOrder {
 public:
  enum class Kind { lex, grlex, grevlex, weight, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder grlex() { return MonomialOrder(Kind::grlex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static MonomialOrder weight(WeightVector omega, MonomialOrder tiebreak = grevlex());
  static MonomialOrder block(std::size_t split, MonomialOrder left, MonomialOrder right);

  /// Parses the syntax produced by to_string(): "lex", "grlex", "grevlex",
  /// "weight(w1,...,wn;TIEBREAK)" and "block(k;LEFT;RIGHT)". "weight(w)"
  /// defaults the tiebreak to grevlex.
  static MonomialOrder parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  const WeightVector& weights() const noexcept { return weights_; }
  std::size_t split() const noexcept { return split_; }
  const MonomialOrder& tiebreak() const { return *first_; }
  const MonomialOrder& left() const { return *first_; }
  const MonomialOrder& right() const { return *second_; }

  /// Throws InvalidInput/DimensionMismatch unless the order is usable on n
  /// variables.
  void validate(std::size_t n) const;

  std::strong_ordering compare(std::span<const int> a, std::span<const int> b) const;
  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;

  /// Canonical textual key; equal keys denote the same order.
  std::string to_string() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.to_string() == b.to_string();
  }

 private:
  explicit MonomialOrder(Kind kind) : kind_(kind) {}

  Kind kind_;
  WeightVector weights_;
  std::size_t split_ = 0;
  std::shared_ptr<const MonomialOrder> first_;
  std::shared_ptr<const MonomialOrder> second_;
};

/// Three-way comparison of exponent vectors under `order`.
std::strong_ordering compare(const MonomialOrder& order, const ExponentVector& a, const ExponentVector& b);

}  // namespace gdc
