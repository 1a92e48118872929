#include "hesspatch/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "hesspatch/errors.hpp"

namespace hesspatch {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!g.ring()->compatible(*ring_)) throw RingMismatchError("ideal generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::from_int(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::with_basis(const MonomialOrder& order, std::vector<Polynomial> basis) const {
  Ideal copy = *this;
  copy.basis_order_ = order;
  copy.basis_ = std::move(basis);
  return copy;
}

const std::vector<Polynomial>* Ideal::cached_basis(const MonomialOrder& order) const {
  if (basis_order_ && *basis_order_ == order) return &basis_;
  return nullptr;
}

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
  if (const auto* cached = ideal.cached_basis(order)) return *cached;
  return buchberger(ideal.generators(), order).basis;
}

Ideal with_groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
  if (ideal.cached_basis(order)) return ideal;
  return ideal.with_basis(order, groebner_basis(ideal, order));
}

bool ideal_member(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order) {
  if (f.is_zero()) return true;
  std::vector<Polynomial> gb = groebner_basis(ideal, order);
  return normal_form(f, gb, order).is_zero();
}

bool ideal_contains(const Ideal& outer, const Ideal& inner, const MonomialOrder& order) {
  std::vector<Polynomial> gb = groebner_basis(outer, order);
  for (const auto& g : inner.generators()) {
    if (!normal_form(g, gb, order).is_zero()) return false;
  }
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order) {
  return ideal_contains(a, b, order) && ideal_contains(b, a, order);
}

namespace {

// Ring with `extra` new variables in front of the existing ones.
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
  std::vector<Variable> vars;
  for (const auto& name : extra) vars.push_back(Variable{name, std::nullopt});
  for (const auto& v : ring->variables().all()) vars.push_back(v);
  return PolynomialRing::make(VariableSet(std::move(vars)), ring->field());
}

std::string fresh_name(const RingPtr& ring, std::string base) {
  while (ring->variables().find(base)) base = "_" + base;
  return base;
}

std::vector<std::size_t> shift_map(std::size_t n, std::size_t by) {
  std::vector<std::size_t> m(n);
  for (std::size_t v = 0; v < n; ++v) m[v] = v + by;
  return m;
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b, const MonomialOrder& order) {
  if (!a.ring()->compatible(*b.ring())) throw RingMismatchError("intersection of ideals in different rings");
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring).with_basis(order, {});
  const std::size_t n = ring->num_variables();
  RingPtr ext = extend_ring(ring, {fresh_name(ring, "t")});
  std::vector<std::size_t> up = shift_map(n, 1);

  std::vector<std::size_t> priority{0};
  for (std::size_t v : order.priority()) priority.push_back(v + 1);
  MonomialOrder ext_order(priority);

  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::from_int(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.rename(ext, up));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.rename(ext, up));
  GroebnerResult gb = buchberger(gens, ext_order);

  std::vector<std::size_t> down(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) down[v + 1] = v;
  std::vector<Polynomial> kept;
  for (const auto& g : gb.basis) {
    if (!g.uses_variable(0)) kept.push_back(g.rename(ring, down));
  }
  return Ideal(ring, kept).with_basis(order, kept);
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw DomainError("ideal quotient by the zero polynomial");
  Ideal principal(ideal.ring(), {f});
  Ideal meet = ideal_intersection(ideal, principal, order);
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) gens.push_back(exact_divide(g, f, order));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& variables, const MonomialOrder& order) {
  const std::size_t n = ideal.ring()->num_variables();
  std::vector<bool> drop(n, false);
  for (std::size_t v : variables) {
    if (v >= n) throw std::invalid_argument("eliminated variable out of range");
    drop[v] = true;
  }
  std::vector<std::size_t> priority;
  for (std::size_t v : order.priority()) {
    if (drop[v]) priority.push_back(v);
  }
  for (std::size_t v : order.priority()) {
    if (!drop[v]) priority.push_back(v);
  }
  MonomialOrder elim(priority);
  GroebnerResult gb = buchberger(ideal.generators(), elim);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.basis) {
    bool free = true;
    for (std::size_t v : variables) free = free && !g.uses_variable(v);
    if (free) kept.push_back(g);
  }
  return Ideal(ideal.ring(), std::move(kept));
}

MonomialIdeal::MonomialIdeal(std::size_t num_variables, std::vector<Monomial> generators)
    : num_variables_(num_variables) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t a = 0; a < generators.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < generators.size() && !redundant; ++b) {
      redundant = b != a && generators[b].divides(generators[a]);
    }
    if (!redundant) gens_.push_back(generators[a]);
  }
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_) {
    if (g.divides(m)) return true;
  }
  return false;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::is_generated_by_variables() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.total_degree() == 1; });
}

MonomialIdeal lead_monomial_ideal(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(g.leading_term(order).monomial);
  return MonomialIdeal(order.size(), std::move(leads));
}

MonomialIdeal initial_ideal(const Ideal& ideal, const MonomialOrder& order) {
  return lead_monomial_ideal(groebner_basis(ideal, order), order);
}

namespace {

struct IndependentSetSearch {
  std::size_t n;
  std::vector<std::uint64_t> supports;
  std::size_t best = 0;

  bool allowed(std::uint64_t set) const {
    for (std::uint64_t s : supports) {
      if ((s & ~set) == 0) return false;
    }
    return true;
  }

  void search(std::size_t v, std::uint64_t set, std::size_t size) {
    if (size > best) best = size;
    if (v == n || size + (n - v) <= best) return;
    std::uint64_t with = set | (std::uint64_t{1} << v);
    if (allowed(with)) search(v + 1, with, size + 1);
    search(v + 1, set, size);
  }
};

}  // namespace

std::size_t monomial_dimension(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return 0;
  IndependentSetSearch s{ideal.num_variables(), {}, 0};
  for (const auto& g : ideal.generators()) {
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < ideal.num_variables(); ++v) {
      if (g[v]) mask |= std::uint64_t{1} << v;
    }
    s.supports.push_back(mask);
  }
  s.search(0, 0, 0);
  return s.best;
}

namespace {

void count_monomials(const MonomialIdeal& ideal, const std::vector<int>& weights, std::size_t v, Monomial& m,
                     long degree, int dmax, std::vector<std::uint64_t>& counts) {
  if (v == weights.size()) {
    ++counts[static_cast<std::size_t>(degree)];
    return;
  }
  for (unsigned e = 0; degree + static_cast<long>(e) * weights[v] <= dmax; ++e) {
    m.set(v, e);
    if (e > 0 && ideal.contains(m)) break;
    count_monomials(ideal, weights, v + 1, m, degree + static_cast<long>(e) * weights[v], dmax, counts);
  }
  m.set(v, 0);
}

}  // namespace

std::vector<std::uint64_t> hilbert_function(const MonomialIdeal& ideal, const Grading& grading, int dmax) {
  if (!grading.positive()) throw std::invalid_argument("Hilbert function needs a positive grading");
  if (dmax < 0) throw std::invalid_argument("negative degree bound");
  if (grading.weights().size() != ideal.num_variables()) {
    throw std::invalid_argument("grading does not match the monomial ideal's ring");
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(dmax) + 1, 0);
  if (ideal.is_unit()) return counts;
  Monomial m;
  count_monomials(ideal, grading.weights(), 0, m, 0, dmax, counts);
  return counts;
}

std::string to_string(RadicalCertificate c) {
  return c == RadicalCertificate::radical_by_squarefree_initial ? "radical_by_squarefree_initial" : "unknown";
}

RadicalCertificate radical_certificate(const Ideal& ideal, const MonomialOrder& order) {
  return initial_ideal(ideal, order).is_squarefree() ? RadicalCertificate::radical_by_squarefree_initial
                                                     : RadicalCertificate::unknown;
}

}  // namespace hesspatch
