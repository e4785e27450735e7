#include "gdc/monocomb.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

namespace gdc {

namespace {

std::vector<ExponentVector> minimize(std::vector<ExponentVector> gens) {
  // Processing by increasing degree means a divisor is always seen first.
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const int da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  std::vector<ExponentVector> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::uint64_t support_mask(const ExponentVector& e) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<ExponentVector> generators) : ring_(std::move(ring)) {
  for (const auto& g : generators)
    if (g.size() != ring_->size()) throw DimensionMismatch("monomial generator length does not match the ring");
  gens_ = minimize(std::move(generators));
}

MonomialIdeal MonomialIdeal::from_polynomials(Ring ring, const std::vector<Polynomial>& polys) {
  std::vector<ExponentVector> gens;
  for (const auto& p : polys) {
    require_same_ring(ring, p.ring());
    if (p.is_zero()) continue;
    if (!p.is_monomial()) throw InvalidInput("'" + p.to_string() + "' is not a monomial");
    gens.push_back(p.terms().front().monomial);
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const ExponentVector& g) {
    return std::all_of(g.begin(), g.end(), [](int v) { return v <= 1; });
  });
}

bool MonomialIdeal::contains(const ExponentVector& monomial) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(monomial); });
}

std::vector<Polynomial> MonomialIdeal::to_polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(Polynomial::monomial(ring_, g));
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += Polynomial::monomial(ring_, gens_[i]).to_string();
  }
  return s + ")";
}

MonomialIdeal monomial_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal monomial_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<ExponentVector> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(x.lcm(y));
  return MonomialIdeal(a.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// VariablePrime

VariablePrime::VariablePrime(std::vector<std::size_t> variables) : vars_(std::move(variables)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

VariablePrime VariablePrime::from_mask(std::uint64_t mask) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < 64; ++i)
    if (mask >> i & 1u) vars.push_back(i);
  return VariablePrime(std::move(vars));
}

std::uint64_t VariablePrime::mask() const {
  std::uint64_t m = 0;
  for (auto v : vars_) {
    if (v >= 64) throw InvalidInput("variable index beyond 64 in a bitmask");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

bool VariablePrime::contains(std::size_t v) const { return std::binary_search(vars_.begin(), vars_.end(), v); }

bool VariablePrime::is_subset_of(const VariablePrime& other) const {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

VariablePrime VariablePrime::united(const VariablePrime& other) const {
  std::vector<std::size_t> u;
  std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(), std::back_inserter(u));
  return VariablePrime(std::move(u));
}

bool VariablePrime::contains(const MonomialIdeal& ideal) const {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(), [&](const ExponentVector& g) {
    return std::any_of(vars_.begin(), vars_.end(), [&](std::size_t v) { return v < g.size() && g[v] > 0; });
  });
}

MonomialIdeal VariablePrime::to_monomial_ideal(const Ring& ring) const {
  std::vector<ExponentVector> gens;
  for (auto v : vars_) {
    if (v >= ring->size()) throw DimensionMismatch("variable prime index outside the ring");
    gens.push_back(ExponentVector::unit(ring->size(), v));
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::vector<Polynomial> VariablePrime::to_polynomials(const Ring& ring) const {
  return to_monomial_ideal(ring).to_polynomials();
}

std::string VariablePrime::to_string(const RingContext& ring) const {
  std::string s = "(";
  for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? ", " : "") + ring.name(vars_[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Radical, minimal primes, height

MonomialIdeal radical_monomial(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.support());
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

namespace {

/// Enumerates minimal transversals of a hypergraph given as vertex masks.
class TransversalSearch {
 public:
  explicit TransversalSearch(std::vector<std::uint64_t> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b; });
  }

  std::set<std::uint64_t> run() {
    branch(0);
    return found_;
  }

 private:
  void branch(std::uint64_t chosen) {
    if (!visited_.insert(chosen).second) return;
    const auto open = std::find_if(edges_.begin(), edges_.end(), [&](std::uint64_t e) { return (e & chosen) == 0; });
    if (open == edges_.end()) {
      found_.insert(chosen);
      return;
    }
    for (std::uint64_t rest = *open; rest != 0; rest &= rest - 1) {
      const std::uint64_t next = chosen | (rest & -rest);
      if (every_vertex_critical(next)) branch(next);
    }
  }

  /// Each chosen vertex must be the only chosen vertex on some edge; once
  /// this fails, no superset can be a minimal transversal.
  bool every_vertex_critical(std::uint64_t chosen) const {
    std::uint64_t critical = 0;
    for (std::uint64_t e : edges_) {
      const std::uint64_t hit = e & chosen;
      if (hit != 0 && (hit & (hit - 1)) == 0) critical |= hit;
    }
    return critical == chosen;
  }

  std::vector<std::uint64_t> edges_;
  std::unordered_set<std::uint64_t> visited_;
  std::set<std::uint64_t> found_;
};

}  // namespace

std::vector<VariablePrime> minimal_primes_monomial(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InvalidInput("the unit ideal has no minimal primes");
  if (ideal.num_variables() > 64) throw InvalidInput("minimal primes are limited to 64 variables");
  if (ideal.is_zero()) return {VariablePrime()};
  std::vector<std::uint64_t> edges;
  const MonomialIdeal radical = radical_monomial(ideal);
  for (const auto& g : radical.generators()) edges.push_back(support_mask(g));
  std::vector<VariablePrime> primes;
  const auto masks = TransversalSearch(std::move(edges)).run();
  for (auto mask : masks) primes.push_back(VariablePrime::from_mask(mask));
  std::sort(primes.begin(), primes.end());
  return primes;
}

int height_monomial(const MonomialIdeal& ideal) {
  const auto primes = minimal_primes_monomial(ideal);
  std::size_t h = primes.front().size();
  for (const auto& p : primes) h = std::min(h, p.size());
  return static_cast<int>(h);
}

int dimension_monomial(const MonomialIdeal& ideal) {
  return static_cast<int>(ideal.num_variables()) - height_monomial(ideal);
}

MonomialIdeal intersect_primes(const Ring& ring, const std::vector<VariablePrime>& primes) {
  if (primes.empty()) return MonomialIdeal(ring, {ExponentVector(ring->size())});
  MonomialIdeal acc = primes.front().to_monomial_ideal(ring);
  for (std::size_t i = 1; i < primes.size(); ++i) acc = monomial_intersection(acc, primes[i].to_monomial_ideal(ring));
  return acc;
}

}  // namespace gdc
