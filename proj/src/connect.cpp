#include "gdc/connect.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>
#include <thread>

#include "gdc/errors.hpp"

namespace gdc {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Components

Ideal Component::as_ideal(const Ring& ring) const {
  if (const auto* v = std::get_if<VariablePrime>(&prime)) return Ideal(ring, v->to_polynomials(ring));
  return std::get<Ideal>(prime);
}

std::string Component::to_string(const Ring& ring) const {
  if (const auto* v = std::get_if<VariablePrime>(&prime)) return v->to_string(*ring);
  return std::get<Ideal>(prime).to_string();
}

ComponentSet ComponentSet::from_variable_primes(Ring ring, std::vector<VariablePrime> primes) {
  ComponentSet set(ring);
  const std::size_t n = ring->size();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (auto v : primes[i].variables())
      if (v >= n) throw DimensionMismatch("variable prime index outside the ring");
    for (std::size_t j = 0; j < i; ++j)
      if (primes[i].is_subset_of(primes[j]) || primes[j].is_subset_of(primes[i]))
        throw InvalidInput("components " + primes[j].to_string(*ring) + " and " + primes[i].to_string(*ring) +
                           " are comparable");
  }
  for (auto& p : primes) {
    const int d = p.dimension(n);
    set.comps_.push_back({std::move(p), d});
  }
  return set;
}

ComponentSet ComponentSet::from_trusted_primes(Ring ring, std::vector<Ideal> primes) {
  ComponentSet set(ring);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    require_same_ring(ring, primes[i].ring());
    if (primes[i].is_unit()) throw InvalidInput("a component cannot be the unit ideal");
    for (std::size_t j = 0; j < i; ++j)
      if (ideal_contains(primes[i], primes[j]) || ideal_contains(primes[j], primes[i]))
        throw InvalidInput("components " + primes[j].to_string() + " and " + primes[i].to_string() +
                           " are comparable");
  }
  for (auto& p : primes) {
    const int d = dimension(p);
    set.comps_.push_back({std::move(p), d});
  }
  return set;
}

bool ComponentSet::has_trusted() const {
  return std::any_of(comps_.begin(), comps_.end(), [](const Component& c) { return !c.is_variable_prime(); });
}

void ComponentSet::verify_against(const Ideal& target) const {
  require_same_ring(ring_, target.ring());
  if (comps_.empty()) {
    if (!target.is_unit()) throw InvalidInput("an empty component set only describes the unit ideal");
    return;
  }
  for (const auto& c : comps_)
    if (!ideal_contains(c.as_ideal(ring_), target))
      throw InvalidInput("component " + c.to_string(ring_) + " does not contain the ideal");

  std::vector<Polynomial> meet;
  if (all_variable_primes()) {
    std::vector<VariablePrime> vps;
    for (const auto& c : comps_) vps.push_back(std::get<VariablePrime>(c.prime));
    meet = intersect_primes(ring_, vps).to_polynomials();
  } else {
    Ideal acc = comps_.front().as_ideal(ring_);
    for (std::size_t i = 1; i < comps_.size(); ++i) acc = intersect(acc, comps_[i].as_ideal(ring_));
    meet = acc.generators();
  }
  for (const auto& g : meet)
    if (!radical_membership(target, g))
      throw InvalidInput("the components cut out more than the ideal: " + g.to_string() + " is not in its radical");
}

int ComponentSet::edge_weight(std::size_t i, std::size_t j) const {
  const auto& a = comps_.at(i);
  const auto& b = comps_.at(j);
  if (i == j) return a.dim;
  if (a.is_variable_prime() && b.is_variable_prime()) {
    const auto u = std::get<VariablePrime>(a.prime).united(std::get<VariablePrime>(b.prime));
    return u.dimension(ring_->size());
  }
  return dimension(ideal_sum(a.as_ideal(ring_), b.as_ideal(ring_)));
}

ComponentSet ComponentSet::homogenized(const WeightVector& omega) const {
  ComponentSet out(ring_with_t(ring_));
  for (const auto& c : comps_) {
    if (const auto* v = std::get_if<VariablePrime>(&c.prime))
      out.comps_.push_back({*v, c.dim + 1});
    else
      out.comps_.push_back({omega_homogenize_ideal(std::get<Ideal>(c.prime), omega), c.dim + 1});
  }
  return out;
}

std::vector<std::string> ComponentSet::to_strings() const {
  std::vector<std::string> out;
  for (const auto& c : comps_) out.push_back(c.to_string(ring_));
  return out;
}

// ---------------------------------------------------------------------------
// Graph

IntersectionGraph::IntersectionGraph(std::vector<std::vector<int>> weights) : w_(std::move(weights)) {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i].size() != w_.size()) throw DimensionMismatch("weight matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (w_[i][j] != w_[j][i]) throw InvalidInput("weight matrix is not symmetric");
  }
}

IntersectionGraph IntersectionGraph::build(const ComponentSet& set, unsigned threads) {
  const std::size_t r = set.size();
  std::vector<std::vector<int>> w(r, std::vector<int>(r));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < r; ++i) {
    w[i][i] = set[i].dim;
    for (std::size_t j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
  }
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t k = start; k < pairs.size(); k += stride) {
      const auto [i, j] = pairs[k];
      w[i][j] = w[j][i] = set.edge_weight(i, j);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(pairs.size(), 1))));
  if (threads == 1 || !set.has_trusted()) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t, threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return IntersectionGraph(std::move(w));
}

bool ChainCertificate::validates(const IntersectionGraph& graph) const {
  if (chain.empty()) return false;
  for (auto v : chain)
    if (v >= graph.size()) return false;
  if (chain.size() == 1) return graph.dim(chain.front()) >= threshold;
  for (std::size_t k = 1; k < chain.size(); ++k)
    if (graph.weight(chain[k - 1], chain[k]) < threshold) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Connectivity

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

std::vector<std::size_t> tree_path(const std::vector<std::vector<std::size_t>>& adj, std::size_t from, std::size_t to) {
  std::vector<std::size_t> prev(adj.size(), adj.size());
  std::vector<std::size_t> queue{from};
  prev[from] = from;
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (auto next : adj[queue[q]])
      if (prev[next] == adj.size()) {
        prev[next] = queue[q];
        queue.push_back(next);
      }
  std::vector<std::size_t> path{to};
  while (path.back() != from) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

ConnectivityReport connectivity_dimension(const IntersectionGraph& graph) {
  ConnectivityReport report;
  const std::size_t r = graph.size();
  if (r == 0) return report;
  report.sdim = graph.dim(0);
  report.dim = graph.dim(0);
  for (std::size_t i = 0; i < r; ++i) {
    report.sdim = std::min(report.sdim, graph.dim(i));
    report.dim = std::max(report.dim, graph.dim(i));
  }
  if (r == 1) {
    report.c = graph.dim(0);
    report.certificates.push_back({{0}, report.c});
    return report;
  }

  struct Edge {
    int w;
    std::size_t i, j;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) edges.push_back({graph.weight(i, j), i, j});
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.w > b.w; });

  DisjointSets sets(r);
  std::vector<std::vector<std::size_t>> tree(r);
  std::size_t merged = 0;
  std::size_t k = 0;
  std::optional<DisjointSets> before_last;
  while (merged + 1 < r) {
    // Add the whole weight class, so the split recorded below is the one
    // just before the threshold at which everything connects.
    const int level = edges[k].w;
    DisjointSets snapshot = sets;
    for (; k < edges.size() && edges[k].w == level; ++k)
      if (sets.unite(edges[k].i, edges[k].j)) {
        ++merged;
        tree[edges[k].i].push_back(edges[k].j);
        tree[edges[k].j].push_back(edges[k].i);
      }
    report.c = level;
    before_last = snapshot;
  }

  std::vector<std::size_t> side_a, side_b;
  const std::size_t root = before_last->find(0);
  for (std::size_t i = 0; i < r; ++i) (before_last->find(i) == root ? side_a : side_b).push_back(i);
  report.partition = std::make_pair(std::move(side_a), std::move(side_b));

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) report.certificates.push_back({tree_path(tree, i, j), report.c});
  return report;
}

ConnectivityReport connectivity_dimension(const ComponentSet& set, unsigned threads) {
  return connectivity_dimension(IntersectionGraph::build(set, threads));
}

int connectivity_via_partitions(const IntersectionGraph& graph) {
  const std::size_t r = graph.size();
  if (r == 0) return -1;
  if (r > 16) throw InvalidInput("the partition formula is limited to 16 components");
  const std::uint32_t full = (std::uint32_t{1} << r) - 1;
  // row_max[i][B] = max_{j in B} w(i, j)
  std::vector<std::vector<int>> row_max(r, std::vector<int>(full + 1, std::numeric_limits<int>::min()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::uint32_t b = 1; b <= full; ++b) {
      const std::size_t low = static_cast<std::size_t>(std::countr_zero(b));
      row_max[i][b] = std::max(row_max[i][b & (b - 1)], graph.weight(i, low));
    }
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t a = 1; a <= full; ++a) {
    // B ranges over sets containing the complement of A.
    const std::uint32_t forced = full & ~a;
    for (std::uint32_t extra = a;; extra = (extra - 1) & a) {
      const std::uint32_t b = forced | extra;
      if (b != 0) {
        int m = std::numeric_limits<int>::min();
        for (std::uint32_t s = a; s != 0 && m < best; s &= s - 1)
          m = std::max(m, row_max[static_cast<std::size_t>(std::countr_zero(s))][b]);
        best = std::min(best, m);
      }
      if (extra == 0) break;
    }
  }
  return best;
}

int connectivity_via_partitions(const ComponentSet& set) {
  return connectivity_via_partitions(IntersectionGraph::build(set));
}

int projective_connectivity(const ComponentSet& set) {
  for (const auto& c : set.components())
    if (!c.is_variable_prime() && !std::get<Ideal>(c.prime).is_graded())
      throw InvalidInput("projective connectivity needs homogeneous components");
  return connectivity_dimension(set).c - 1;
}

ConnectivityReport monomial_connectivity(const MonomialIdeal& b) {
  return connectivity_dimension(ComponentSet::from_variable_primes(b.ring(), minimal_primes_monomial(b)));
}

// ---------------------------------------------------------------------------
// Verification records

json to_json(const ChainCertificate& cert) { return json{{"chain", cert.chain}, {"threshold", cert.threshold}}; }

json VerificationRecord::to_json() const {
  return json{{"theorem", theorem},   {"inputs", inputs}, {"lhs", lhs},
              {"rhs", rhs},           {"strict_expected", strict_expected},
              {"pass", pass},         {"certificates", certificates},
              {"caveats", caveats}};
}

namespace {

json certificates_json(const ConnectivityReport& report) {
  json out = json::array();
  for (const auto& c : report.certificates) out.push_back(to_json(c));
  return out;
}

/// c(P/in_w(I)), read off the minimal primes of a monomial degeneration.
ConnectivityReport initial_connectivity(const Ideal& ideal, const WeightVector& omega, VerificationRecord& record) {
  omega.require_strictly_positive();
  const auto order = MonomialOrder::weight(omega, MonomialOrder::grevlex());
  order.validate(ideal.ring()->size());
  if (!initial_ideal_is_monomial(ideal, omega))
    record.caveats.push_back("initial ideal for this weight is not monomial; its leading term ideal under " +
                             order.to_string() + " was used instead");
  const MonomialIdeal lt = lt_ideal(ideal, order);
  if (lt.is_unit()) throw InvalidInput("the ideal is the unit ideal");
  record.inputs["initial_ideal"] = lt.to_string();
  const auto primes = minimal_primes_monomial(lt);
  std::vector<std::string> names;
  for (const auto& p : primes) names.push_back(p.to_string(*ideal.ring()));
  record.inputs["initial_components"] = names;
  return connectivity_dimension(ComponentSet::from_variable_primes(ideal.ring(), primes));
}

}  // namespace

VerificationRecord check_martina(const Ideal& ideal, const WeightVector& omega, const ComponentSet& components,
                                 unsigned threads) {
  VerificationRecord record;
  record.theorem = "initial ideal connectivity drops by at most one";
  record.inputs["ideal"] = ideal.to_string();
  record.inputs["weight"] = omega.to_string();
  record.inputs["components"] = components.to_strings();
  components.verify_against(ideal);
  if (components.has_trusted()) record.caveats.push_back("primes trusted");

  const auto original = connectivity_dimension(components, threads);
  const auto initial = initial_connectivity(ideal, omega, record);
  record.inputs["c_ideal"] = original.c;
  record.inputs["c_initial"] = initial.c;
  record.lhs = initial.c;
  record.rhs = original.c - 1;
  record.strict_expected = components.size() > 1;
  record.pass = record.strict_expected ? record.lhs > record.rhs : record.lhs >= record.rhs;
  record.certificates = certificates_json(initial);
  return record;
}

VerificationRecord check_ks_corollary(const Ideal& ideal, const WeightVector& omega) {
  VerificationRecord record;
  record.theorem = "initial ideal of a prime is connected in codimension one";
  record.inputs["ideal"] = ideal.to_string();
  record.inputs["weight"] = omega.to_string();
  record.caveats.push_back("primes trusted");
  const int d = dimension(ideal);
  if (d < 0) throw InvalidInput("the ideal is the unit ideal");
  const auto initial = initial_connectivity(ideal, omega, record);
  record.inputs["dim"] = d;
  record.lhs = initial.c;
  record.rhs = d - 1;
  record.pass = record.lhs >= record.rhs;
  record.certificates = certificates_json(initial);
  return record;
}

VerificationRecord check_skinner(const Ideal& ideal, const WeightVector& omega) {
  if (!ideal.is_graded()) throw InvalidInput("the depth bound is checked for graded ideals only");
  const int n = static_cast<int>(ideal.ring()->size());
  const int d = dimension(ideal);
  if (d < 0) throw InvalidInput("the ideal is the unit ideal");
  if (d != n - static_cast<int>(ideal.generators().size()))
    throw InvalidInput("not a complete intersection: height " + std::to_string(n - d) + " with " +
                       std::to_string(ideal.generators().size()) + " generators, so depth is not available");
  VerificationRecord record;
  record.theorem = "initial ideal connectivity is at least depth minus one";
  record.inputs["ideal"] = ideal.to_string();
  record.inputs["weight"] = omega.to_string();
  record.inputs["depth"] = d;
  const auto initial = initial_connectivity(ideal, omega, record);
  record.lhs = initial.c;
  record.rhs = d - 1;
  record.pass = record.lhs >= record.rhs;
  record.certificates = certificates_json(initial);
  return record;
}

// ---------------------------------------------------------------------------
// Cohen-Macaulay obstruction

std::vector<ObstructionWitness> cm_obstruction(const MonomialIdeal& b) {
  const auto primes = minimal_primes_monomial(b);
  std::vector<ObstructionWitness> out;
  if (primes.size() < 2) return out;
  if (b.num_variables() > 64) throw InvalidInput("obstruction search is limited to 64 variables");

  std::vector<std::uint64_t> masks;
  for (const auto& p : primes) masks.push_back(p.mask());
  std::set<std::uint64_t> candidates(masks.begin(), masks.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::uint64_t> current(candidates.begin(), candidates.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j)
        if (candidates.insert(current[i] | current[j]).second) grew = true;
  }

  std::vector<std::uint64_t> ordered(candidates.begin(), candidates.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) < std::popcount(y); });
  for (auto q : ordered) {
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if ((masks[i] & q) == masks[i]) inside.push_back(i);
    if (inside.size() < 2) continue;
    const int h = std::popcount(q);
    std::vector<std::vector<int>> w(inside.size(), std::vector<int>(inside.size()));
    for (std::size_t a = 0; a < inside.size(); ++a)
      for (std::size_t c = 0; c < inside.size(); ++c)
        w[a][c] = h - std::popcount(masks[inside[a]] | masks[inside[c]]);
    const auto local = connectivity_dimension(IntersectionGraph(std::move(w)));
    if (local.c < local.dim - 1) {
      ObstructionWitness witness{VariablePrime::from_mask(q), {}, {}, local.c, local.dim};
      for (auto k : local.partition->first) witness.side_a.push_back(inside[k]);
      for (auto k : local.partition->second) witness.side_b.push_back(inside[k]);
      out.push_back(std::move(witness));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Component certification

std::optional<ComponentSet> certify_variable_components(const Ideal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return std::nullopt;
  if (ideal.ring()->size() > 64) return std::nullopt;
  std::vector<ExponentVector> terms;
  for (const auto& g : ideal.generators())
    for (const auto& t : g.terms()) terms.push_back(t.monomial);
  const MonomialIdeal all_terms(ideal.ring(), std::move(terms));
  if (all_terms.is_unit()) return std::nullopt;
  auto set = ComponentSet::from_variable_primes(ideal.ring(), minimal_primes_monomial(all_terms));
  try {
    set.verify_against(ideal);
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
  return set;
}

}  // namespace gdc
