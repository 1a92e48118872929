#include "hesspatch/frobenius.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "hesspatch/errors.hpp"

namespace hesspatch {

namespace {

std::uint64_t require_prime_field(const Polynomial& g) {
  if (!g.field().is_prime_field()) throw DomainError("trace maps need GF(p) coefficients");
  return g.field().characteristic();
}

Monomial all_variables(std::size_t n) {
  Monomial m;
  for (std::size_t v = 0; v < n; ++v) m.set(v, 1);
  return m;
}

RingPtr prime_ring(const RingPtr& ring, std::uint64_t p) {
  if (ring->field().is_prime_field()) {
    if (ring->field().characteristic() != p) throw DomainError("ring has the wrong characteristic");
    return ring;
  }
  return ring->with_field(Field::prime(p));
}

Polynomial to_prime(const Polynomial& g, std::uint64_t p) { return g.change_ring(prime_ring(g.ring(), p)); }

}  // namespace

Polynomial trace(const Polynomial& g) {
  const std::uint64_t p = require_prime_field(g);
  const std::size_t nv = g.ring()->num_variables();
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    Monomial root;
    bool keep = true;
    for (std::size_t v = 0; v < nv && keep; ++v) {
      unsigned a = t.monomial[v] + 1u;
      if (a % p) {
        keep = false;
      } else {
        root.set(v, static_cast<unsigned>(a / p - 1));
      }
    }
    if (keep) out.push_back(Term{root, t.coeff});
  }
  return Polynomial::from_terms(g.ring(), std::move(out));
}

Polynomial phi_std(const Polynomial& g) {
  const std::uint64_t p = require_prime_field(g);
  const std::size_t nv = g.ring()->num_variables();
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    Monomial root;
    bool keep = true;
    for (std::size_t v = 0; v < nv && keep; ++v) {
      unsigned a = t.monomial[v];
      if (a % p) {
        keep = false;
      } else {
        root.set(v, static_cast<unsigned>(a / p));
      }
    }
    if (keep) out.push_back(Term{root, t.coeff});
  }
  return Polynomial::from_terms(g.ring(), std::move(out));
}

std::string to_string(SplittingElement::Provenance p) {
  switch (p) {
    case SplittingElement::Provenance::standard:
      return "standard";
    case SplittingElement::Provenance::f_i_power:
      return "F_I-power";
    case SplittingElement::Provenance::f_n_power:
      return "F_n-power";
    case SplittingElement::Provenance::user:
      return "user";
  }
  return "?";
}

struct SplittingElement::Buckets {
  std::unordered_map<Monomial, std::vector<std::size_t>, MonomialHash> by_residue;
};

void SplittingElement::index_terms() {
  if (p_ > kMaxExponent) return;
  auto b = std::make_shared<Buckets>();
  const std::size_t nv = f_.ring()->num_variables();
  for (std::size_t i = 0; i < f_.size(); ++i) {
    Monomial key;
    for (std::size_t v = 0; v < nv; ++v) key.set(v, static_cast<unsigned>(f_.terms()[i].monomial[v] % p_));
    b->by_residue[key].push_back(i);
  }
  buckets_ = std::move(b);
}

SplittingElement SplittingElement::standard(const RingPtr& ring) {
  if (!ring->field().is_prime_field()) throw DomainError("splittings need GF(p) coefficients");
  SplittingElement s;
  s.p_ = ring->field().characteristic();
  const std::size_t nv = ring->num_variables();
  Monomial m;
  for (std::size_t v = 0; v < nv; ++v) m.set(v, static_cast<unsigned>(s.p_ - 1));
  s.f_ = Polynomial::monomial(ring, m, ring->field().one());
  s.provenance_ = Provenance::standard;
  s.unit_.hypothesis = true;
  s.unit_.result = true;
  s.unit_.power_terms = 1;
  s.index_terms();
  return s;
}

SplittingElement SplittingElement::from_power(const Polynomial& g, std::uint64_t p, const MonomialOrder& order,
                                              Provenance provenance, std::size_t term_budget) {
  SplittingElement s;
  s.p_ = p;
  s.provenance_ = provenance;
  Polynomial gp = to_prime(g, p);
  s.base_ = gp;
  s.unit_.hypothesis = !gp.is_zero() && gp.leading_term(order).monomial == all_variables(gp.ring()->num_variables());

  Polynomial power = Polynomial::from_int(gp.ring(), 1);
  for (std::uint64_t k = 0; k + 1 < p; ++k) {
    power = power * gp;
    if (power.size() > term_budget) {
      s.unit_.within_budget = false;
      s.unit_.power_terms = power.size();
      s.f_ = Polynomial(gp.ring());
      return s;
    }
  }
  s.f_ = std::move(power);
  s.unit_.power_terms = s.f_.size();
  s.unit_.result = trace(s.f_) == Polynomial::from_int(gp.ring(), 1);
  s.index_terms();
  return s;
}

SplittingElement SplittingElement::user(const Polynomial& f) {
  SplittingElement s;
  s.p_ = require_prime_field(f);
  s.f_ = f;
  s.provenance_ = Provenance::user;
  s.unit_.power_terms = f.size();
  s.unit_.result = trace(f) == Polynomial::from_int(f.ring(), 1);
  s.index_terms();
  return s;
}

Polynomial SplittingElement::apply(const Polynomial& g) const {
  if (!g.ring()->compatible(*f_.ring())) throw RingMismatchError("splitting applied to a polynomial of another ring");
  if (!buckets_) return trace(f_ * g);
  const std::size_t nv = f_.ring()->num_variables();
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
  for (const auto& t : g.terms()) {
    Monomial key;
    for (std::size_t v = 0; v < nv; ++v) {
      key.set(v, static_cast<unsigned>((p_ - 1 - t.monomial[v] % p_) % p_));
    }
    auto it = buckets_->by_residue.find(key);
    if (it == buckets_->by_residue.end()) continue;
    for (std::size_t idx : it->second) {
      const Term& u = f_.terms()[idx];
      Monomial e = u.monomial * t.monomial;
      Monomial root;
      for (std::size_t v = 0; v < nv; ++v) root.set(v, static_cast<unsigned>((e[v] + 1u) / p_ - 1));
      auto& slot = acc[root];
      slot = (slot + u.coeff.residue() * t.coeff.residue()) % p_;
    }
  }
  std::vector<Term> out;
  for (const auto& [m, c] : acc) {
    if (c) out.push_back(Term{m, Coefficient(c)});
  }
  return Polynomial::from_terms(f_.ring(), std::move(out));
}

Polynomial phi_f(const SplittingElement& s, const Polynomial& g) { return s.apply(g); }

UnitCheck splitting_unit_check(const Polynomial& g, const MonomialOrder& order, std::uint64_t p,
                               std::size_t term_budget) {
  return SplittingElement::from_power(g, p, order, SplittingElement::Provenance::user, term_budget).unit_check();
}

Polynomial build_F_I(const TCIWitness& witness) {
  if (witness.generators.empty()) throw std::invalid_argument("build_F_I needs at least one generator");
  const RingPtr& ring = witness.generators.front().ring();
  const Field& k = ring->field();
  std::vector<bool> is_lead(ring->num_variables(), false);
  for (std::size_t v : witness.lead_variables) is_lead[v] = true;
  Polynomial f = Polynomial::from_int(ring, 1);
  for (std::size_t v = 0; v < is_lead.size(); ++v) {
    if (!is_lead[v]) f = f * Polynomial::variable(ring, v);
  }
  for (std::size_t j = 0; j < witness.generators.size(); ++j) {
    f = f * witness.generators[j].scale(k.inv(witness.units[j]));
  }
  Term lt = f.leading_term(witness.order);
  if (!(lt.monomial == all_variables(ring->num_variables())) || !k.is_one(lt.coeff)) {
    throw CheckFailure("build_F_I", "initial_term", "in(F_I) is not the product of all variables");
  }
  return f;
}

Polynomial build_F_n(int n) {
  if (n < 3) throw std::invalid_argument("build_F_n needs n >= 3");
  PatchIdeal peterson = hess_generators(n, Permutation::longest(n), HessenbergFunction::peterson(n));
  const RingPtr& ring = peterson.ring();
  int sign_exp = (n - 1) * (n - 2) / 2;
  Polynomial f = Polynomial::from_int(ring, sign_exp % 2 ? -1 : 1);
  for (int i = 1; i < n; ++i) f = f * Polynomial::variable(ring, *ring->variables().find(i, 1));
  for (const auto& g : peterson.generators()) f = f * g;
  Term lt = f.leading_term(order_n(n));
  if (!(lt.monomial == all_variables(ring->num_variables()))) {
    throw CheckFailure("build_F_n", "initial_term", "in(F_n) is not the product of all chart variables");
  }
  return f;
}

Ideal frobenius_power(const Ideal& ideal, std::uint64_t p) {
  RingPtr ring = prime_ring(ideal.ring(), p);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.change_ring(ring).pow(static_cast<unsigned>(p)));
  return Ideal(ring, std::move(gens));
}

namespace {

// A Groebner basis of the ideal: the generators themselves when their leads
// are pairwise coprime, otherwise a Buchberger run.
std::vector<Polynomial> cheap_basis(const Ideal& ideal, const MonomialOrder& order) {
  if (ideal.is_zero()) return {};
  if (coprime_leads_gb_check(ideal.generators(), order)) return ideal.generators();
  return groebner_basis(ideal, order);
}

Monomial sample_monomial(std::mt19937_64& rng, std::size_t nv, std::uint64_t p, unsigned bound) {
  std::vector<unsigned> e(nv);
  unsigned total = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    e[v] = static_cast<unsigned>(rng() % p);
    total += e[v];
  }
  while (total > bound) {
    std::size_t v = static_cast<std::size_t>(rng() % nv);
    if (e[v] > 0) {
      --e[v];
      --total;
    }
  }
  Monomial m;
  for (std::size_t v = 0; v < nv; ++v) m.set(v, e[v]);
  return m;
}

}  // namespace

CompatReport compat_check(const SplittingElement& s, const Ideal& ideal, std::uint64_t p,
                          const CompatOptions& options) {
  if (s.p() != p) throw DomainError("splitting element has a different characteristic");
  if (!s.unit_check().result) throw DomainError("compat_check: splitting element failed its unit check");
  CompatReport report;
  report.p = p;
  report.seed = options.seed;

  RingPtr ring = prime_ring(ideal.ring(), p);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.change_ring(ring));
  Ideal ip(ring, gens);
  MonomialOrder order = MonomialOrder::identity(ring->num_variables());
  Polynomial f = s.f().change_ring(ring);

  std::vector<Polynomial> frob_basis = cheap_basis(frobenius_power(ip, p), order);
  report.frob_power_membership = true;
  for (const auto& g : gens) {
    bool member = normal_form(f * g, frob_basis, order).is_zero();
    report.generator_membership.push_back(member);
    report.frob_power_membership = report.frob_power_membership && member;
  }

  if (!gens.empty()) {
    std::vector<Polynomial> basis = cheap_basis(ip, order);
    std::mt19937_64 rng(options.seed);
    const std::size_t nv = ring->num_variables();
    for (std::size_t k = 0; k < options.samples; ++k) {
      const Polynomial& g = gens[static_cast<std::size_t>(rng() % gens.size())];
      unsigned bound = (f.total_degree() + g.total_degree()) / static_cast<unsigned>(p) + options.degree_margin;
      Monomial m = sample_monomial(rng, nv, p, bound);
      Polynomial image = s.apply(g.mul_term(m, ring->field().one()));
      ++report.sampled_count;
      if (!normal_form(image, basis, order).is_zero()) ++report.sampled_failures;
    }
  }
  return report;
}

bool SplitPoset::all_passed() const {
  for (const auto& node : nodes) {
    if (!node.report.passed()) return false;
  }
  for (const auto& e : edges) {
    if (!e.verified) return false;
  }
  return unit_check.result;
}

SplitPoset split_poset(int n, std::uint64_t p, const CompatOptions& options) {
  SplitPoset poset;
  poset.n = n;
  poset.p = p;
  SplittingElement s = SplittingElement::from_power(build_F_n(n), p, order_n(n),
                                                    SplittingElement::Provenance::f_n_power);
  poset.unit_check = s.unit_check();
  if (!poset.unit_check.result) throw CheckFailure("split_poset", "unit_check", "Tr(F_n^{p-1}) != 1");

  const Field field = Field::prime(p);
  std::vector<Ideal> ideals;
  for (const auto& h : HessenbergFunction::enumerate(n, true)) {
    PatchIdeal patch = hess_generators(n, Permutation::longest(n), h);
    PosetNode node;
    node.h = h;
    node.indices = patch.indices();
    node.generators = patch.generators(field);
    Ideal ideal = patch.ideal(field);
    node.report = compat_check(s, ideal, p, options);
    if (!node.report.passed()) {
      throw CheckFailure("split_poset h=(" + h.to_string() + ")", "frob_power_membership",
                         "F_n^{p-1} g is not in I^[p] for some generator g");
    }
    poset.nodes.push_back(std::move(node));
    ideals.push_back(std::move(ideal));
  }

  MonomialOrder order = order_n(n);
  for (std::size_t a = 0; a < poset.nodes.size(); ++a) {
    for (std::size_t b = 0; b < poset.nodes.size(); ++b) {
      if (a == b) continue;
      const auto& big = poset.nodes[a].indices;
      const auto& small = poset.nodes[b].indices;
      bool contained = std::all_of(small.begin(), small.end(), [&](const Index& i) {
        return std::find(big.begin(), big.end(), i) != big.end();
      });
      if (!contained) continue;
      PosetEdge e{a, b, ideal_contains(ideals[a], ideals[b], order)};
      if (!e.verified) {
        throw CheckFailure("split_poset", "edge", "inclusion (" + poset.nodes[b].h.to_string() + ") in (" +
                                                      poset.nodes[a].h.to_string() + ") failed");
      }
      poset.edges.push_back(e);
    }
  }
  return poset;
}

}  // namespace hesspatch
