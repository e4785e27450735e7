#include "gdc/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace gdc {

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(denominator) == 0) throw ZeroDenominator("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (sgn(value_.get_den()) == 0) throw ZeroDenominator("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  auto to_z = [&](std::string_view s) {
    std::string buf(s);
    if (buf.empty() || buf == "-" || buf == "+") throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    if (buf[0] == '+') buf.erase(0, 1);
    for (std::size_t i = (buf[0] == '-') ? 1 : 0; i < buf.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(buf[i])))
        throw ParseError("malformed rational '" + std::string(text) + "'", i);
    }
    return mpz_class(buf, 10);
  };
  if (slash == std::string_view::npos) return Rational(to_z(text));
  return Rational(to_z(text.substr(0, slash)), to_z(text.substr(slash + 1)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDenominator("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::ExponentVector(std::initializer_list<int> e) : ExponentVector(std::vector<int>(e)) {}

ExponentVector::ExponentVector(std::vector<int> e) : e_(std::move(e)) {
  if (std::any_of(e_.begin(), e_.end(), [](int v) { return v < 0; }))
    throw InvalidInput("negative exponent");
}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t index, int power) {
  ExponentVector e(n);
  e.set(index, power);
  return e;
}

void ExponentVector::set(std::size_t i, int value) {
  if (value < 0) throw InvalidInput("negative exponent");
  e_.at(i) = value;
}

int ExponentVector::total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool ExponentVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

std::size_t ExponentVector::support_size() const {
  return static_cast<std::size_t>(std::count_if(e_.begin(), e_.end(), [](int v) { return v > 0; }));
}

bool ExponentVector::divides(const ExponentVector& other) const {
  if (size() != other.size()) throw DimensionMismatch("exponent vectors of different length");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  if (size() != o.size()) throw DimensionMismatch("exponent vectors of different length");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

ExponentVector ExponentVector::quotient(const ExponentVector& divisor) const {
  if (!divisor.divides(*this)) throw InvalidInput("monomial quotient of non-divisible monomials");
  ExponentVector r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= divisor.e_[i];
  return r;
}

ExponentVector ExponentVector::lcm(const ExponentVector& o) const {
  if (size() != o.size()) throw DimensionMismatch("exponent vectors of different length");
  ExponentVector r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
  return r;
}

ExponentVector ExponentVector::gcd(const ExponentVector& o) const {
  if (size() != o.size()) throw DimensionMismatch("exponent vectors of different length");
  ExponentVector r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::min(e_[i], o.e_[i]);
  return r;
}

ExponentVector ExponentVector::support() const {
  ExponentVector r = *this;
  for (auto& v : r.e_) v = v > 0 ? 1 : 0;
  return r;
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& e) {
  os << '(';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  return os << ')';
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : e) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------------------
// WeightVector

WeightVector::WeightVector(std::initializer_list<std::int64_t> w) : WeightVector(std::vector<std::int64_t>(w)) {}

WeightVector::WeightVector(std::vector<std::int64_t> w) : w_(std::move(w)) {
  if (std::any_of(w_.begin(), w_.end(), [](std::int64_t v) { return v < 0; }))
    throw InvalidInput("weight vector entries must be non-negative");
}

WeightVector WeightVector::parse(std::string_view text) {
  std::vector<std::int64_t> w;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty weight entry in '" + std::string(text) + "'", 0);
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed weight entry '" + item + "'", 0);
    }
    if (used != item.size()) throw ParseError("malformed weight entry '" + item + "'", 0);
    w.push_back(v);
  }
  if (w.empty()) throw ParseError("empty weight vector", 0);
  return WeightVector(std::move(w));
}

bool WeightVector::is_strictly_positive() const {
  return std::all_of(w_.begin(), w_.end(), [](std::int64_t v) { return v >= 1; });
}

void WeightVector::require_strictly_positive() const {
  if (!is_strictly_positive())
    throw InvalidInput("weight vector " + to_string() + " must have strictly positive entries");
}

std::int64_t WeightVector::dot(std::span<const int> a) const {
  if (a.size() != w_.size()) throw DimensionMismatch("weight vector length does not match exponent length");
  __int128 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<__int128>(w_[i]) * a[i];
  if (acc > std::numeric_limits<std::int64_t>::max()) throw Error("omega-degree overflow");
  return static_cast<std::int64_t>(acc);
}

std::string WeightVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < w_.size(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
  return s;
}

std::int64_t omega_degree(const WeightVector& omega, const ExponentVector& a) { return omega.dot(a); }

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder MonomialOrder::weight(WeightVector omega, MonomialOrder tiebreak) {
  MonomialOrder o(Kind::weight);
  o.weights_ = std::move(omega);
  o.first_ = std::make_shared<const MonomialOrder>(std::move(tiebreak));
  return o;
}

MonomialOrder MonomialOrder::block(std::size_t split, MonomialOrder left, MonomialOrder right) {
  if (split == 0) throw InvalidInput("block order split index must be at least 1");
  MonomialOrder o(Kind::block);
  o.split_ = split;
  o.first_ = std::make_shared<const MonomialOrder>(std::move(left));
  o.second_ = std::make_shared<const MonomialOrder>(std::move(right));
  return o;
}

void MonomialOrder::validate(std::size_t n) const {
  switch (kind_) {
    case Kind::lex:
    case Kind::grlex:
    case Kind::grevlex:
      return;
    case Kind::weight:
      if (weights_.size() != n)
        throw DimensionMismatch("weight order on " + std::to_string(weights_.size()) + " variables used on " +
                                std::to_string(n));
      first_->validate(n);
      return;
    case Kind::block:
      if (split_ < 1 || split_ + 1 > n)
        throw InvalidInput("block split index " + std::to_string(split_) + " outside [1, " + std::to_string(n - 1) +
                           "]");
      first_->validate(split_);
      second_->validate(n - split_);
      return;
  }
}

namespace {

std::strong_ordering from_int(long long c) {
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

long long degree(std::span<const int> a) {
  long long d = 0;
  for (int v : a) d += v;
  return d;
}

std::strong_ordering compare_lex(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return from_int(a[i] - b[i]);
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(std::span<const int> a, std::span<const int> b) const {
  if (a.size() != b.size()) throw DimensionMismatch("exponent vectors of different length");
  switch (kind_) {
    case Kind::lex:
      return compare_lex(a, b);
    case Kind::grlex: {
      if (auto c = from_int(degree(a) - degree(b)); c != 0) return c;
      return compare_lex(a, b);
    }
    case Kind::grevlex: {
      if (auto c = from_int(degree(a) - degree(b)); c != 0) return c;
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return from_int(b[i] - a[i]);
      return std::strong_ordering::equal;
    }
    case Kind::weight: {
      if (auto c = weights_.dot(a) <=> weights_.dot(b); c != 0) return c;
      return first_->compare(a, b);
    }
    case Kind::block: {
      if (split_ >= a.size()) throw DimensionMismatch("block split index beyond the number of variables");
      if (auto c = first_->compare(a.first(split_), b.first(split_)); c != 0) return c;
      return second_->compare(a.subspan(split_), b.subspan(split_));
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  return compare(a.span(), b.span());
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grlex:
      return "grlex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::weight:
      return "weight(" + weights_.to_string() + ";" + first_->to_string() + ")";
    case Kind::block:
      return "block(" + std::to_string(split_) + ";" + first_->to_string() + ";" + second_->to_string() + ")";
  }
  return {};
}

namespace {

/// Splits the argument list of "name(a;b;c)" at top-level semicolons.
std::vector<std::string_view> split_args(std::string_view body) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
    if (body[i] == ';' && depth == 0) {
      out.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(body.substr(start));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

MonomialOrder MonomialOrder::parse(std::string_view text) {
  text = trim(text);
  if (text == "lex") return lex();
  if (text == "grlex") return grlex();
  if (text == "grevlex") return grevlex();
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw ParseError("unknown monomial order '" + std::string(text) + "'", 0);
  auto name = trim(text.substr(0, open));
  auto args = split_args(text.substr(open + 1, text.size() - open - 2));
  if (name == "weight") {
    if (args.size() > 2) throw ParseError("weight order takes (weights[;tiebreak])", open);
    auto w = WeightVector::parse(trim(args[0]));
    return weight(std::move(w), args.size() == 2 ? parse(args[1]) : grevlex());
  }
  if (name == "block") {
    if (args.size() != 3) throw ParseError("block order takes (split;left;right)", open);
    std::string split(trim(args[0]));
    std::size_t used = 0;
    unsigned long k = 0;
    try {
      k = std::stoul(split, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed block split '" + split + "'", open);
    }
    if (used != split.size()) throw ParseError("malformed block split '" + split + "'", open);
    return block(k, parse(args[1]), parse(args[2]));
  }
  throw ParseError("unknown monomial order '" + std::string(text) + "'", 0);
}

std::strong_ordering compare(const MonomialOrder& order, const ExponentVector& a, const ExponentVector& b) {
  return order.compare(a, b);
}

}  // namespace gdc
