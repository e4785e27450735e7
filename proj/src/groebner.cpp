#include "gdc/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>

namespace gdc {

namespace {
std::atomic<std::size_t> budget_override{0};
}

void set_default_step_budget(std::size_t budget) { budget_override = budget; }

std::size_t default_step_budget() {
  if (const std::size_t forced = budget_override.load()) return forced;
  if (const char* env = std::getenv("GDC_STEP_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

bool GroebnerBasis::is_unit() const { return elements_.size() == 1 && elements_.front().is_constant(); }

namespace {

BasisObserver& observer_slot() {
  static BasisObserver observer;
  return observer;
}

std::uint64_t support_mask(const ExponentVector& e) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < e.size() && i < 64; ++i)
    if (e[i] > 0) m |= std::uint64_t{1} << i;
  return m;
}

using Terms = std::vector<Term>;

/// Polynomial arithmetic on term lists kept in descending `order`.
class Engine {
 public:
  Engine(const MonomialOrder& order, std::size_t budget) : order_(order), budget_(budget) {}

  Terms sorted(const Polynomial& p) const {
    Terms t = p.terms();
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order_.compare(a.monomial, b.monomial) > 0; });
    return t;
  }

  struct Reducer {
    const Terms* terms;
    ExponentVector lead;
    std::uint64_t mask;
  };

  static Reducer make_reducer(const Terms& t) { return {&t, t.front().monomial, support_mask(t.front().monomial)}; }

  /// Full reduction of h by the reducers (leading coefficients must be 1).
  Terms reduce(Terms h, const std::vector<Reducer>& reducers) {
    Terms out;
    std::size_t i = 0;
    while (i < h.size()) {
      const Term& lt = h[i];
      const std::uint64_t mask = support_mask(lt.monomial);
      const Reducer* hit = nullptr;
      for (const auto& r : reducers) {
        if ((r.mask & ~mask) != 0) continue;
        if (r.lead.divides(lt.monomial)) {
          hit = &r;
          break;
        }
      }
      if (hit == nullptr) {
        out.push_back(std::move(h[i]));
        ++i;
        continue;
      }
      count_step();
      const ExponentVector shift = lt.monomial.quotient(hit->lead);
      const Rational factor = -lt.coefficient;
      h = add_multiple(h, i + 1, factor, shift, *hit->terms, 1);
      i = 0;
    }
    return out;
  }

  /// h[hstart..] + c * x^shift * g[gstart..]
  Terms add_multiple(const Terms& h, std::size_t hstart, const Rational& c, const ExponentVector& shift, const Terms& g,
                     std::size_t gstart) const {
    Terms out;
    out.reserve(h.size() - hstart + g.size() - gstart);
    std::size_t i = hstart, j = gstart;
    ExponentVector moved;
    bool have_moved = false;
    while (i < h.size() || j < g.size()) {
      if (j < g.size() && !have_moved) {
        moved = g[j].monomial + shift;
        have_moved = true;
      }
      if (j >= g.size()) {
        out.push_back(h[i++]);
        continue;
      }
      if (i >= h.size()) {
        out.push_back({c * g[j].coefficient, std::move(moved)});
        ++j;
        have_moved = false;
        continue;
      }
      const auto cmp = order_.compare(h[i].monomial, moved);
      if (cmp > 0) {
        out.push_back(h[i++]);
      } else if (cmp < 0) {
        out.push_back({c * g[j].coefficient, std::move(moved)});
        ++j;
        have_moved = false;
      } else {
        Rational s = h[i].coefficient + c * g[j].coefficient;
        if (!s.is_zero()) out.push_back({std::move(s), std::move(moved)});
        ++i;
        ++j;
        have_moved = false;
      }
    }
    return out;
  }

  Terms spoly(const Terms& f, const Terms& g) const {
    const ExponentVector l = f.front().monomial.lcm(g.front().monomial);
    const ExponentVector sf = l.quotient(f.front().monomial);
    const ExponentVector sg = l.quotient(g.front().monomial);
    Terms fs;
    fs.reserve(f.size() - 1);
    for (std::size_t k = 1; k < f.size(); ++k) fs.push_back({f[k].coefficient, f[k].monomial + sf});
    return add_multiple(fs, 0, Rational(-1), sg, g, 1);
  }

  static void make_monic(Terms& t) {
    if (t.empty() || t.front().coefficient.is_one()) return;
    const Rational inv = t.front().coefficient.inverse();
    for (auto& term : t) term.coefficient *= inv;
  }

  const MonomialOrder& order() const { return order_; }

 private:
  void count_step() {
    if (++steps_ > budget_)
      throw BudgetExceeded("Groebner computation exceeded the reduction-step budget of " + std::to_string(budget_));
  }

  const MonomialOrder& order_;
  std::size_t budget_;
  std::size_t steps_ = 0;
};

bool is_constant_terms(const Terms& t) { return t.size() == 1 && t.front().monomial.is_zero(); }

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  ExponentVector lcm;
  int degree;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const GroebnerOptions& options)
      : engine_(order, options.step_budget), seed_(options.selection_seed) {
    if (seed_) rng_.seed(*seed_);
  }

  /// Returns the minimal basis (unreduced tails) or {1}.
  std::vector<Terms> run(const std::vector<Polynomial>& generators) {
    std::vector<Terms> inputs;
    for (const auto& g : generators)
      if (!g.is_zero()) inputs.push_back(engine_.sorted(g));
    // Smaller leading monomials first keeps the initial interreduction cheap.
    std::stable_sort(inputs.begin(), inputs.end(), [&](const Terms& a, const Terms& b) {
      return engine_.order().compare(a.front().monomial, b.front().monomial) < 0;
    });
    for (auto& in : inputs) {
      if (unit_) break;
      insert(engine_.reduce(std::move(in), active_reducers()));
    }
    while (!pairs_.empty() && !unit_) {
      const Pair p = take_pair();
      insert(engine_.reduce(engine_.spoly(polys_[p.i], polys_[p.j]), active_reducers()));
    }
    if (unit_) return {Terms{Term{Rational(1), ExponentVector(num_vars_)}}};
    std::vector<Terms> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(polys_[k]);
    return out;
  }

  /// Tail-reduces a minimal basis into the reduced one.
  std::vector<Terms> interreduce(std::vector<Terms> basis) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<Engine::Reducer> others;
      for (std::size_t m = 0; m < basis.size(); ++m)
        if (m != k) others.push_back(Engine::make_reducer(basis[m]));
      Terms head{basis[k].front()};
      Terms tail(basis[k].begin() + 1, basis[k].end());
      Terms reduced = engine_.reduce(std::move(tail), others);
      head.insert(head.end(), std::make_move_iterator(reduced.begin()), std::make_move_iterator(reduced.end()));
      basis[k] = std::move(head);
      Engine::make_monic(basis[k]);
    }
    std::sort(basis.begin(), basis.end(), [&](const Terms& a, const Terms& b) {
      return engine_.order().compare(a.front().monomial, b.front().monomial) > 0;
    });
    return basis;
  }

  void set_num_vars(std::size_t n) { num_vars_ = n; }

 private:
  std::vector<Engine::Reducer> active_reducers() const {
    std::vector<Engine::Reducer> r;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) r.push_back(Engine::make_reducer(polys_[k]));
    return r;
  }

  void insert(Terms h) {
    if (h.empty()) return;
    if (is_constant_terms(h)) {
      unit_ = true;
      return;
    }
    Engine::make_monic(h);
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(false);
    update(hi);
    active_[hi] = true;
  }

  // Gebauer-Moeller installation of the pairs created by polys_[h].
  void update(std::size_t h) {
    const ExponentVector& lh = polys_[h].front().monomial;
    struct Candidate {
      std::size_t g;
      ExponentVector lcm;
      bool coprime;
    };
    std::vector<Candidate> fresh;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (!active_[g]) continue;
      const auto& lg = polys_[g].front().monomial;
      fresh.push_back({g, lh.lcm(lg), coprime(lh, lg)});
    }
    std::vector<Candidate> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const auto& c = fresh[a];
      bool keep = c.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < fresh.size() && keep; ++b)
          if (fresh[b].lcm.divides(c.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].lcm.divides(c.lcm)) keep = false;
      }
      if (keep) kept.push_back(c);
    }

    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      const bool dominated = lh.divides(p.lcm) && polys_[p.i].front().monomial.lcm(lh) != p.lcm &&
                             polys_[p.j].front().monomial.lcm(lh) != p.lcm;
      if (!dominated) survivors.push_back(std::move(p));
    }
    for (auto& c : kept) {
      if (c.coprime) continue;
      const int deg = c.lcm.total_degree();
      survivors.push_back({c.g, h, std::move(c.lcm), deg});
    }
    pairs_ = std::move(survivors);

    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g] && lh.divides(polys_[g].front().monomial)) active_[g] = false;
  }

  Pair take_pair() {
    std::size_t best = 0;
    if (seed_) {
      best = std::uniform_int_distribution<std::size_t>(0, pairs_.size() - 1)(rng_);
    } else {
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto& a = pairs_[k];
        const auto& b = pairs_[best];
        if (a.degree != b.degree) {
          if (a.degree < b.degree) best = k;
          continue;
        }
        const auto c = engine_.order().compare(a.lcm, b.lcm);
        if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
      }
    }
    Pair p = std::move(pairs_[best]);
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  Engine engine_;
  std::optional<std::uint64_t> seed_;
  std::mt19937_64 rng_;
  std::vector<Terms> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
  std::size_t num_vars_ = 0;
};

}  // namespace

GroebnerBasis buchberger_impl(const Ring& ring, const std::vector<Polynomial>& generators, const MonomialOrder& order,
                              const GroebnerOptions& options) {
  order.validate(ring->size());
  GroebnerBasis result(ring, order);
  Buchberger engine(order, options);
  engine.set_num_vars(ring->size());
  auto reduced = engine.interreduce(engine.run(generators));
  for (auto& t : reduced) {
    result.leads_.push_back(t.front().monomial);
    result.elements_.push_back(Polynomial::from_terms(ring, std::move(t)));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(Ring ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : Ideal(std::move(ring)) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal::Ideal(Ring ring, const std::vector<std::string>& generators) : Ideal(std::move(ring)) {
  for (const auto& s : generators) {
    auto g = parse_polynomial(s, ring_);
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const GroebnerBasis& Ideal::basis(const MonomialOrder& order, const GroebnerOptions& options) const {
  const std::string key = order.to_string();
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->bases.find(key); it != cache_->bases.end()) return *it->second;
  }
  auto computed = std::make_unique<const GroebnerBasis>(buchberger(*this, order, options));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(key, std::move(computed));
  return *it->second;
}

bool Ideal::is_unit() const {
  if (gens_.empty()) return false;
  for (const auto& g : gens_)
    if (g.is_constant()) return true;
  return basis(MonomialOrder::grevlex()).is_unit();
}

bool Ideal::is_monomial() const {
  if (std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); })) return true;
  const auto& gb = basis(MonomialOrder::grevlex());
  return std::all_of(gb.elements().begin(), gb.elements().end(), [](const Polynomial& g) { return g.is_monomial(); });
}

bool Ideal::is_graded() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

Ideal Ideal::extend(const Ring& target, std::size_t offset) const {
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.extend(target, offset));
  return Ideal(target, std::move(gens));
}

Ideal Ideal::restrict(const Ring& target, std::size_t offset) const {
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.restrict(target, offset));
  return Ideal(target, std::move(gens));
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
  return s + ")";
}

void set_basis_observer(BasisObserver observer) { observer_slot() = std::move(observer); }

// ---------------------------------------------------------------------------
// Operations

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  require_same_ring(f.ring(), basis.ring());
  if (f.is_zero() || basis.is_zero()) return f;
  Engine engine(basis.order(), default_step_budget());
  std::vector<Terms> sorted;
  sorted.reserve(basis.size());
  for (const auto& g : basis.elements()) sorted.push_back(engine.sorted(g));
  std::vector<Engine::Reducer> reducers;
  for (auto& s : sorted) {
    Engine::make_monic(s);
    reducers.push_back(Engine::make_reducer(s));
  }
  return Polynomial::from_terms(f.ring(), engine.reduce(engine.sorted(f), reducers));
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options) {
  GroebnerBasis gb = buchberger_impl(ideal.ring(), ideal.generators(), order, options);
  if (const auto& obs = observer_slot()) obs(ideal, gb);
  return gb;
}

MonomialIdeal lt_ideal(const Ideal& ideal, const MonomialOrder& order) {
  return MonomialIdeal(ideal.ring(), ideal.basis(order).leading_monomials());
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(f.ring(), ideal.ring());
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  return normal_form(f, ideal.basis(MonomialOrder::grevlex())).is_zero();
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
  require_same_ring(big.ring(), small.ring());
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Polynomial& g) { return ideal_membership(g, big); });
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.basis(MonomialOrder::grevlex()).elements() == b.basis(MonomialOrder::grevlex()).elements();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& ideal, std::size_t k) {
  const std::size_t n = ideal.ring()->size();
  if (k == 0 || ideal.is_zero()) return ideal;
  if (k > n) throw InvalidInput("cannot eliminate more variables than the ring has");
  if (k == n) {
    if (ideal.is_unit()) return Ideal(ideal.ring(), {Polynomial::constant(ideal.ring(), Rational(1))});
    return Ideal(ideal.ring());
  }
  const auto order = MonomialOrder::block(k, MonomialOrder::grevlex(), MonomialOrder::grevlex());
  std::vector<Polynomial> kept;
  for (const auto& g : ideal.basis(order).elements()) {
    const bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t i = 0; i < k; ++i)
        if (t.monomial[i] != 0) return false;
      return true;
    });
    if (free) kept.push_back(g);
  }
  return Ideal(ideal.ring(), std::move(kept));
}

namespace {

/// Eliminates the auxiliary first variable of `aux_ring` and maps back.
Ideal eliminate_aux(const Ring& ring, const Ring& aux_ring, std::vector<Polynomial> gens) {
  return eliminate(Ideal(aux_ring, std::move(gens)), 1).restrict(ring, 1);
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  const auto aux = ring_with_leading(a.ring(), 1);
  const auto u = Polynomial::variable(aux, 0);
  const auto one_minus_u = Polynomial::constant(aux, Rational(1)) - u;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(u * g.extend(aux, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_u * g.extend(aux, 1));
  return eliminate_aux(a.ring(), aux, std::move(gens));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) throw InvalidInput("saturation by the zero polynomial");
  if (ideal.is_zero()) return ideal;
  const auto aux = ring_with_leading(ideal.ring(), 1);
  const auto u = Polynomial::variable(aux, 0);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.extend(aux, 1));
  gens.push_back(Polynomial::constant(aux, Rational(1)) - u * f.extend(aux, 1));
  return eliminate_aux(ideal.ring(), aux, std::move(gens));
}

bool radical_membership(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring());
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  const auto aux = ring_with_leading(ideal.ring(), 1);
  const auto u = Polynomial::variable(aux, 0);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.extend(aux, 1));
  gens.push_back(Polynomial::constant(aux, Rational(1)) - u * f.extend(aux, 1));
  const auto order = MonomialOrder::block(1, MonomialOrder::lex(), MonomialOrder::grevlex());
  return Ideal(aux, std::move(gens)).basis(order).is_unit();
}

int dimension(const Ideal& ideal) {
  const int n = static_cast<int>(ideal.ring()->size());
  if (ideal.is_zero()) return n;
  const auto& gb = ideal.basis(MonomialOrder::grevlex());
  if (gb.is_unit()) return -1;
  return dimension_monomial(MonomialIdeal(ideal.ring(), gb.leading_monomials()));
}

}  // namespace gdc
