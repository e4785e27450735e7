#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdc/ring.hpp"

namespace gdc {

/// Ordered list of distinct variable names. When `has_t()` is set, the last
/// variable is the homogenizing variable t (deg t = 1).
class RingContext {
 public:
  explicit RingContext(std::vector<std::string> names, bool last_is_homogenizing = false);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool has_t() const noexcept { return has_t_; }
  /// Number of variables excluding t.
  std::size_t base_size() const noexcept { return has_t_ ? names_.size() - 1 : names_.size(); }

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  std::vector<std::string> names_;
  bool has_t_;
};

using Ring = std::shared_ptr<const RingContext>;

Ring make_ring(std::vector<std::string> names);
/// P -> P[t]; the new variable is named "t".
Ring ring_with_t(const Ring& base);
/// P[t] -> P.
Ring ring_without_t(const Ring& ring);
/// Prepends `count` fresh variables whose names do not clash with `ring`.
Ring ring_with_leading(const Ring& ring, std::size_t count, std::string_view stem = "u");
/// Removes the first `count` variables.
Ring ring_drop_leading(const Ring& ring, std::size_t count);

bool same_ring(const Ring& a, const Ring& b);
void require_same_ring(const Ring& a, const Ring& b);

struct Term {
  Rational coefficient;
  ExponentVector monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Multivariate polynomial with rational coefficients. Terms are kept in
/// strictly descending grevlex order with nonzero coefficients; the zero
/// polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(Ring ring);

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, ExponentVector e, const Rational& c = Rational(1));
  /// Normalizes an arbitrary term list: merges duplicates, drops zeros, sorts.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  int total_degree() const;
  bool is_homogeneous() const;
  bool is_homogeneous(const WeightVector& weights) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const ExponentVector& e, const Rational& c) const;
  Polynomial pow(unsigned k) const;

  /// Re-embeds into a larger ring, placing this ring's variables at
  /// positions offset, offset+1, ... of `target`.
  Polynomial extend(const Ring& target, std::size_t offset) const;
  /// Inverse of extend(); throws InvalidInput when a dropped variable occurs.
  Polynomial restrict(const Ring& target, std::size_t offset) const;

  /// Divides by the leading coefficient under `order`.
  Polynomial monic(const MonomialOrder& order) const;

  std::string to_string(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(Ring ring, std::vector<Term> sorted_terms);

  Ring ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Parses the ASCII polynomial grammar:
///   poly   := term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := ident ('^' uint)?
///   coeff  := int ('/' uint)?
/// A leading sign on the first term is accepted. Whitespace is ignored.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// Prints terms in descending `order`, coefficients as "a/b", powers with '^'.
std::string format_polynomial(const Polynomial& f, const MonomialOrder& order = MonomialOrder::grevlex());

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Rational& c, const Polynomial& f);
Polynomial power(const Polynomial& f, unsigned k);

Term leading_term(const Polynomial& f, const MonomialOrder& order);

/// max{ omega . a : x^a a term of f }.
std::int64_t omega_degree(const WeightVector& omega, const Polynomial& f);

/// Sum of the terms of f of maximal omega-degree.
Polynomial initial_form(const Polynomial& f, const WeightVector& omega);

/// f(x_1/t^w_1, ..., x_n/t^w_n) * t^{deg_w f}, living in P[t].
Polynomial omega_homogenize(const Polynomial& f, const WeightVector& omega);

/// F(x, t) -> F(x, 1).
Polynomial dehomogenize(const Polynomial& F);

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational determinant(RationalMatrix m);
RationalMatrix inverse(const RationalMatrix& m);
RationalMatrix identity_matrix(std::size_t n);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

/// f(M x): variable x_i is replaced by sum_j M[i][j] x_j. M must be invertible.
Polynomial substitute_linear(const Polynomial& f, const RationalMatrix& m);

}  // namespace gdc
