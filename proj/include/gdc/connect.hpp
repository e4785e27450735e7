#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gdc/deform.hpp"
#include "gdc/groebner.hpp"
#include "gdc/monocomb.hpp"

namespace gdc {

/// An irreducible component, given by its prime: a variable prime, or a
/// general ideal whose primality is taken on trust.
struct Component {
  std::variant<VariablePrime, Ideal> prime;
  int dim = 0;

  bool is_variable_prime() const { return std::holds_alternative<VariablePrime>(prime); }
  Ideal as_ideal(const Ring& ring) const;
  std::string to_string(const Ring& ring) const;
};

class ComponentSet {
 public:
  explicit ComponentSet(Ring ring) : ring_(std::move(ring)) {}

  static ComponentSet from_variable_primes(Ring ring, std::vector<VariablePrime> primes);
  /// Each ideal is taken to be prime; incomparability is checked.
  static ComponentSet from_trusted_primes(Ring ring, std::vector<Ideal> primes);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return comps_.size(); }
  bool empty() const noexcept { return comps_.empty(); }
  const Component& operator[](std::size_t i) const { return comps_.at(i); }
  const std::vector<Component>& components() const noexcept { return comps_; }
  /// True when some component is a general (trusted) prime.
  bool has_trusted() const;
  bool all_variable_primes() const { return !has_trusted(); }

  /// Checks that every component contains `target` and that the
  /// intersection of the components has the radical of `target`.
  /// Throws InvalidInput otherwise.
  void verify_against(const Ideal& target) const;

  /// dim V(p_i + p_j), or -1 when the sum is the unit ideal.
  int edge_weight(std::size_t i, std::size_t j) const;

  /// The components of the w-homogenized ideal, living in P[t].
  ComponentSet homogenized(const WeightVector& omega) const;

  std::vector<std::string> to_strings() const;

 private:
  Ring ring_;
  std::vector<Component> comps_;
};

/// Symmetric weights with w(i,i) = dim of component i.
class IntersectionGraph {
 public:
  IntersectionGraph() = default;
  explicit IntersectionGraph(std::vector<std::vector<int>> weights);
  /// Edge weights are computed on up to `threads` worker threads; the
  /// result does not depend on the thread count.
  static IntersectionGraph build(const ComponentSet& set, unsigned threads = 1);

  std::size_t size() const noexcept { return w_.size(); }
  int weight(std::size_t i, std::size_t j) const { return w_.at(i).at(j); }
  int dim(std::size_t i) const { return w_.at(i).at(i); }
  const std::vector<std::vector<int>>& weights() const noexcept { return w_; }

 private:
  std::vector<std::vector<int>> w_;
};

struct ChainCertificate {
  std::vector<std::size_t> chain;
  int threshold = 0;

  bool validates(const IntersectionGraph& graph) const;
};

struct ConnectivityReport {
  int c = -1;
  int sdim = -1;
  int dim = -1;
  std::vector<ChainCertificate> certificates;
  /// Two sides of a split realizing c, when there are two or more components.
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> partition;
};

ConnectivityReport connectivity_dimension(const IntersectionGraph& graph);
ConnectivityReport connectivity_dimension(const ComponentSet& set, unsigned threads = 1);

/// min over pairs (A, B) of nonempty index sets with A u B = everything of
/// max_{i in A, j in B} w(i, j). At most 16 components.
int connectivity_via_partitions(const IntersectionGraph& graph);
int connectivity_via_partitions(const ComponentSet& set);

/// Connectivity of the punctured cone: affine c minus one.
int projective_connectivity(const ComponentSet& set);

/// Connectivity report of P/sqrt(B) for a monomial ideal B.
ConnectivityReport monomial_connectivity(const MonomialIdeal& b);

struct VerificationRecord {
  std::string theorem;
  nlohmann::json inputs = nlohmann::json::object();
  int lhs = 0;
  int rhs = 0;
  bool strict_expected = false;
  bool pass = false;
  nlohmann::json certificates = nlohmann::json::array();
  std::vector<std::string> caveats;

  nlohmann::json to_json() const;
};

/// c(P/in_w(I)) >= c(P/I) - 1, strictly when I has several minimal primes.
VerificationRecord check_martina(const Ideal& ideal, const WeightVector& omega, const ComponentSet& components,
                                 unsigned threads = 1);
/// For a prime I (taken on trust): c(P/in_w(I)) >= dim P/I - 1.
VerificationRecord check_ks_corollary(const Ideal& ideal, const WeightVector& omega);
/// For a graded complete intersection: c(P/in_w(I)) >= depth P/I - 1.
VerificationRecord check_skinner(const Ideal& ideal, const WeightVector& omega);

struct ObstructionWitness {
  VariablePrime localization;
  /// Indices into the minimal primes of B.
  std::vector<std::size_t> side_a;
  std::vector<std::size_t> side_b;
  int local_c = 0;
  int local_dim = 0;
};

/// Localizations of P/sqrt(B) at variable primes that are not connected in
/// codimension one. A nonempty result shows P/B is not Cohen-Macaulay.
std::vector<ObstructionWitness> cm_obstruction(const MonomialIdeal& b);

/// Variable primes whose intersection is sqrt(I), when they exist among the
/// minimal primes of the ideal of all terms of the generators.
std::optional<ComponentSet> certify_variable_components(const Ideal& ideal);

nlohmann::json to_json(const ChainCertificate& cert);

}  // namespace gdc
