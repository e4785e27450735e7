#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gdc/poly.hpp"

namespace gdc {

/// Monomial ideal given by its minimal generators. Generators form an
/// antichain under divisibility and are sorted lexicographically, so two
/// equal ideals compare equal. No generators means the zero ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(Ring ring) : ring_(std::move(ring)) {}
  MonomialIdeal(Ring ring, std::vector<ExponentVector> generators);

  /// Throws InvalidInput if some polynomial is not a single term.
  static MonomialIdeal from_polynomials(Ring ring, const std::vector<Polynomial>& polys);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  std::size_t num_variables() const { return ring_->size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;
  bool contains(const ExponentVector& monomial) const;

  std::vector<Polynomial> to_polynomials() const;
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
  }

 private:
  Ring ring_;
  std::vector<ExponentVector> gens_;
};

MonomialIdeal monomial_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monomial_intersection(const MonomialIdeal& a, const MonomialIdeal& b);

/// Prime ideal generated by a set of variables (0-based indices). The empty
/// set stands for the zero prime.
class VariablePrime {
 public:
  VariablePrime() = default;
  explicit VariablePrime(std::vector<std::size_t> variables);

  static VariablePrime from_mask(std::uint64_t mask);
  std::uint64_t mask() const;

  const std::vector<std::size_t>& variables() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  bool contains(std::size_t v) const;
  bool is_subset_of(const VariablePrime& other) const;
  VariablePrime united(const VariablePrime& other) const;

  /// Contains the monomial ideal iff every generator involves a variable of
  /// the prime.
  bool contains(const MonomialIdeal& ideal) const;

  /// dim P/(S) = n - |S|.
  int dimension(std::size_t n) const { return static_cast<int>(n) - static_cast<int>(vars_.size()); }

  MonomialIdeal to_monomial_ideal(const Ring& ring) const;
  std::vector<Polynomial> to_polynomials(const Ring& ring) const;
  std::string to_string(const RingContext& ring) const;

  friend bool operator==(const VariablePrime&, const VariablePrime&) = default;
  friend auto operator<=>(const VariablePrime& a, const VariablePrime& b) { return a.vars_ <=> b.vars_; }

 private:
  std::vector<std::size_t> vars_;
};

/// Exponents flattened to 0/1, then minimized.
MonomialIdeal radical_monomial(const MonomialIdeal& ideal);

/// Minimal primes of a proper monomial ideal: the minimal vertex covers of
/// the hypergraph formed by the supports of its generators. Sorted. The zero
/// ideal yields the single zero prime.
std::vector<VariablePrime> minimal_primes_monomial(const MonomialIdeal& ideal);

/// min |S| over the minimal primes.
int height_monomial(const MonomialIdeal& ideal);
/// dim P/B = n - height(B).
int dimension_monomial(const MonomialIdeal& ideal);

/// Intersection of variable primes as a monomial ideal.
MonomialIdeal intersect_primes(const Ring& ring, const std::vector<VariablePrime>& primes);

}  // namespace gdc
