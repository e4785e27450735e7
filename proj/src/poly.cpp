#include "gdc/poly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace gdc {

// ---------------------------------------------------------------------------
// RingContext

RingContext::RingContext(std::vector<std::string> names, bool last_is_homogenizing)
    : names_(std::move(names)), has_t_(last_is_homogenizing) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidInput("empty variable name");
    if (!seen.insert(n).second) throw InvalidInput("duplicate variable name '" + n + "'");
  }
  if (has_t_ && names_.empty()) throw InvalidInput("homogenizing flag on an empty ring");
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Ring make_ring(std::vector<std::string> names) { return std::make_shared<const RingContext>(std::move(names)); }

Ring ring_with_t(const Ring& base) {
  if (base->has_t()) throw InvalidInput("ring already carries a homogenizing variable");
  if (base->index_of("t")) throw InvalidInput("variable name 't' is reserved for the homogenizing variable");
  auto names = base->names();
  names.emplace_back("t");
  return std::make_shared<const RingContext>(std::move(names), true);
}

Ring ring_without_t(const Ring& ring) {
  if (!ring->has_t()) throw InvalidInput("ring has no homogenizing variable t");
  auto names = ring->names();
  names.pop_back();
  return std::make_shared<const RingContext>(std::move(names));
}

Ring ring_with_leading(const Ring& ring, std::size_t count, std::string_view stem) {
  std::vector<std::string> names;
  std::size_t k = 0;
  while (names.size() < count) {
    std::string candidate = std::string(stem) + "_" + std::to_string(k++);
    if (!ring->index_of(candidate)) names.push_back(candidate);
  }
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  return std::make_shared<const RingContext>(std::move(names), ring->has_t());
}

Ring ring_drop_leading(const Ring& ring, std::size_t count) {
  if (count > ring->base_size()) throw InvalidInput("cannot drop more variables than the ring has");
  std::vector<std::string> names(ring->names().begin() + static_cast<std::ptrdiff_t>(count), ring->names().end());
  return std::make_shared<const RingContext>(std::move(names), ring->has_t());
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw ContextMismatch("polynomials live in different rings");
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

// Storage order. Identical to MonomialOrder::grevlex() but without dispatch.
int grevlex_cmp(const ExponentVector& a, const ExponentVector& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

bool grevlex_greater(const Term& x, const Term& y) { return grevlex_cmp(x.monomial, y.monomial) > 0; }

}  // namespace

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidInput("polynomial without a ring");
}

Polynomial::Polynomial(Ring ring, std::vector<Term> sorted_terms) : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({c, ExponentVector(p.ring_->size())});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring->size()) throw DimensionMismatch("variable index out of range");
  auto n = ring->size();
  return monomial(std::move(ring), ExponentVector::unit(n, index));
}

Polynomial Polynomial::monomial(Ring ring, ExponentVector e, const Rational& c) {
  if (e.size() != ring->size()) throw DimensionMismatch("exponent vector length does not match ring");
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({c, std::move(e)});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.size() != ring->size()) throw DimensionMismatch("exponent vector length does not match ring");
  std::sort(terms.begin(), terms.end(), grevlex_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_zero()); }

int Polynomial::total_degree() const {
  if (terms_.empty()) throw ZeroPolynomial("degree of the zero polynomial");
  return terms_.front().monomial.total_degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().monomial.total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.monomial.total_degree() == d; });
}

bool Polynomial::is_homogeneous(const WeightVector& weights) const {
  if (terms_.empty()) return true;
  const auto d = weights.dot(terms_.front().monomial);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return weights.dot(t.monomial) == d; });
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grevlex_cmp(terms_[i].monomial, o.terms_[j].monomial);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coefficient + o.terms_[j].coefficient;
      if (!s.is_zero()) out.push_back({std::move(s), std::move(terms_[i].monomial)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.coefficient * b.coefficient, a.monomial + b.monomial});
  *this = from_terms(ring_, std::move(prod));
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const ExponentVector& e, const Rational& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  // Multiplying by a monomial preserves any monomial order, grevlex included.
  for (auto& t : r.terms_) {
    t.coefficient *= c;
    t.monomial += e;
  }
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::extend(const Ring& target, std::size_t offset) const {
  if (offset + ring_->size() > target->size()) throw DimensionMismatch("target ring too small for extension");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e(target->size(), 0);
    for (std::size_t i = 0; i < t.monomial.size(); ++i) e[offset + i] = t.monomial[i];
    out.push_back({t.coefficient, ExponentVector(std::move(e))});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::restrict(const Ring& target, std::size_t offset) const {
  if (offset + target->size() > ring_->size()) throw DimensionMismatch("target ring too large for restriction");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e(target->size(), 0);
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (i >= offset && i < offset + target->size()) {
        e[i - offset] = t.monomial[i];
      } else if (t.monomial[i] != 0) {
        throw InvalidInput("polynomial involves variable '" + ring_->name(i) + "' outside the target ring");
      }
    }
    out.push_back({t.coefficient, ExponentVector(std::move(e))});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  return scaled(leading_term(*this, order).coefficient.inverse());
}

std::string Polynomial::to_string(const MonomialOrder& order) const { return format_polynomial(*this, order); }

bool operator==(const Polynomial& a, const Polynomial& b) { return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_; }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << format_polynomial(p); }

// ---------------------------------------------------------------------------
// Printing

std::string format_polynomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  order.validate(f.ring()->size());
  std::vector<const Term*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const Term* a, const Term* b) { return order.compare(a->monomial, b->monomial) > 0; });
  std::ostringstream out;
  bool first = true;
  for (const Term* t : terms) {
    const bool negative = t->coefficient.sign() < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    Rational magnitude = negative ? -t->coefficient : t->coefficient;
    std::string mono;
    for (std::size_t i = 0; i < t->monomial.size(); ++i) {
      int e = t->monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += f.ring()->name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out << magnitude.to_string();
    } else if (magnitude.is_one()) {
      out << mono;
    } else {
      out << magnitude.to_string() << '*' << mono;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Free-function arithmetic

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }
Polynomial scale(const Rational& c, const Polynomial& f) { return f.scaled(c); }
Polynomial power(const Polynomial& f, unsigned k) { return f.pow(k); }

Term leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw ZeroPolynomial("leading term of the zero polynomial");
  const auto& terms = f.terms();
  if (terms.front().monomial.size() != f.ring()->size()) throw DimensionMismatch("corrupt polynomial");
  const Term* best = &terms.front();
  for (const auto& t : terms)
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  return *best;
}

std::int64_t omega_degree(const WeightVector& omega, const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("omega-degree of the zero polynomial is undefined");
  std::int64_t best = omega.dot(f.terms().front().monomial);
  for (const auto& t : f.terms()) best = std::max(best, omega.dot(t.monomial));
  return best;
}

Polynomial initial_form(const Polynomial& f, const WeightVector& omega) {
  const auto d = omega_degree(omega, f);
  std::vector<Term> kept;
  for (const auto& t : f.terms())
    if (omega.dot(t.monomial) == d) kept.push_back(t);
  return Polynomial::from_terms(f.ring(), std::move(kept));
}

Polynomial omega_homogenize(const Polynomial& f, const WeightVector& omega) {
  const auto d = omega_degree(omega, f);
  auto target = ring_with_t(f.ring());
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<int> e(t.monomial.begin(), t.monomial.end());
    const auto shift = d - omega.dot(t.monomial);
    if (shift > std::numeric_limits<int>::max()) throw Error("homogenizing exponent overflow");
    e.push_back(static_cast<int>(shift));
    out.push_back({t.coefficient, ExponentVector(std::move(e))});
  }
  return Polynomial::from_terms(std::move(target), std::move(out));
}

Polynomial dehomogenize(const Polynomial& F) {
  if (!F.ring()->has_t()) throw InvalidInput("dehomogenize needs a ring with the homogenizing variable t");
  auto target = ring_without_t(F.ring());
  std::vector<Term> out;
  out.reserve(F.size());
  for (const auto& t : F.terms()) {
    std::vector<int> e(t.monomial.begin(), t.monomial.end() - 1);
    out.push_back({t.coefficient, ExponentVector(std::move(e))});
  }
  return Polynomial::from_terms(std::move(target), std::move(out));
}

// ---------------------------------------------------------------------------
// Linear changes of coordinates

namespace {

void require_square(const RationalMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw DimensionMismatch("matrix is not square");
}

}  // namespace

Rational determinant(RationalMatrix m) {
  require_square(m);
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

RationalMatrix inverse(const RationalMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col].inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] *= p;
      inv[col][c] *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= factor * a[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != (n ? a[0].size() : 0)) throw DimensionMismatch("matrix product shape mismatch");
  const std::size_t m = b.empty() ? 0 : b[0].size();
  RationalMatrix c(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Polynomial substitute_linear(const Polynomial& f, const RationalMatrix& m) {
  const std::size_t n = f.ring()->size();
  if (m.size() != n) throw DimensionMismatch("substitution matrix size does not match the ring");
  require_square(m);
  if (determinant(m).is_zero()) throw SingularMatrix("substitution matrix is singular");

  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j)
      if (!m[i][j].is_zero()) terms.push_back({m[i][j], ExponentVector::unit(n, j)});
    images.push_back(Polynomial::from_terms(f.ring(), std::move(terms)));
  }
  // powers[i][k] = images[i]^k, filled lazily.
  std::vector<std::vector<Polynomial>> powers(n);
  auto image_power = [&](std::size_t i, int k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(f.ring(), Rational(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(k)];
  };

  Polynomial result(f.ring());
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(f.ring(), t.coefficient);
    for (std::size_t i = 0; i < n; ++i)
      if (t.monomial[i] > 0) term *= image_power(i, t.monomial[i]);
    result += term;
  }
  return result;
}

}  // namespace gdc
