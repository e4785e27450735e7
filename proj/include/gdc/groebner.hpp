#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gdc/monocomb.hpp"
#include "gdc/poly.hpp"

namespace gdc {

/// Default reduction-step budget: 10^7, overridden by the GDC_STEP_BUDGET
/// environment variable.
std::size_t default_step_budget();
/// Overrides the default budget process-wide; 0 restores the default.
void set_default_step_budget(std::size_t budget);

struct GroebnerOptions {
  std::size_t step_budget = default_step_budget();
  /// When set, S-pairs are picked pseudo-randomly from this seed instead of
  /// by the normal strategy. The reduced basis must not depend on it.
  std::optional<std::uint64_t> selection_seed;
};

/// Reduced, monic Groebner basis, sorted by leading monomial (descending).
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order) : ring_(std::move(ring)), order_(std::move(order)) {}

  const Ring& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const std::vector<ExponentVector>& leading_monomials() const noexcept { return leads_; }
  std::size_t size() const noexcept { return elements_.size(); }

  bool is_unit() const;
  bool is_zero() const noexcept { return elements_.empty(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_ == b.order_ && a.elements_ == b.elements_;
  }

 private:
  friend GroebnerBasis buchberger_impl(const Ring&, const std::vector<Polynomial>&, const MonomialOrder&,
                                       const GroebnerOptions&);
  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<ExponentVector> leads_;
};

/// Ideal of a polynomial ring, given by generators. Zero generators are
/// dropped; no generators means the zero ideal. Groebner bases are cached
/// per monomial order and shared between copies.
class Ideal {
 public:
  explicit Ideal(Ring ring);
  Ideal(Ring ring, std::vector<Polynomial> generators);
  /// Each string is parsed with the polynomial grammar.
  Ideal(Ring ring, const std::vector<std::string>& generators);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// Reduced basis for `order`; computed once and cached.
  const GroebnerBasis& basis(const MonomialOrder& order, const GroebnerOptions& options = {}) const;

  bool is_unit() const;
  /// True iff the ideal is generated by monomials.
  bool is_monomial() const;
  /// True iff every generator is homogeneous in total degree.
  bool is_graded() const;

  Ideal extend(const Ring& target, std::size_t offset) const;
  Ideal restrict(const Ring& target, std::size_t offset) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::unique_ptr<const GroebnerBasis>> bases;
  };

  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Called with (input ideal, result) after every fresh Buchberger run.
using BasisObserver = std::function<void(const Ideal&, const GroebnerBasis&)>;
void set_basis_observer(BasisObserver observer);

/// Remainder of f under full reduction by G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Moeller criteria, followed by interreduction.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options = {});

MonomialIdeal lt_ideal(const Ideal& ideal, const MonomialOrder& order);

bool ideal_membership(const Polynomial& f, const Ideal& ideal);
/// J is contained in I.
bool ideal_contains(const Ideal& big, const Ideal& small);
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// I intersected with k[x_{k+1}, ..., x_n], returned in the same ring.
Ideal eliminate(const Ideal& ideal, std::size_t k);

Ideal intersect(const Ideal& a, const Ideal& b);
/// I : f^infinity.
Ideal saturate(const Ideal& ideal, const Polynomial& f);
/// f in sqrt(I), by the Rabinowitsch trick.
bool radical_membership(const Ideal& ideal, const Polynomial& f);

/// Krull dimension of P/I; -1 for the unit ideal.
int dimension(const Ideal& ideal);

}  // namespace gdc
