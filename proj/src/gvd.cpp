#include "hesspatch/gvd.hpp"

#include <algorithm>

#include "hesspatch/errors.hpp"

namespace hesspatch {

Polynomial initial_y_form(const Polynomial& f, std::size_t y) {
  unsigned d = f.degree_in(y);
  if (d == 0) return f;
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    if (t.monomial[y] == d) kept.push_back(t);
  }
  return Polynomial::from_canonical_terms(f.ring(), std::move(kept));
}

YSplit split_in_y(const Polynomial& f, std::size_t y) {
  YSplit s;
  s.degree = f.degree_in(y);
  std::vector<Term> q;
  std::vector<Term> r;
  Monomial ypow = Monomial::variable(y, s.degree);
  for (const auto& t : f.terms()) {
    if (t.monomial[y] == s.degree) {
      q.push_back(Term{t.monomial / ypow, t.coeff});
    } else {
      r.push_back(t);
    }
  }
  s.q = Polynomial::from_terms(f.ring(), std::move(q));
  s.r = Polynomial::from_canonical_terms(f.ring(), std::move(r));
  return s;
}

std::string to_string(GVDKind kind) { return kind == GVDKind::degenerate ? "degenerate" : "nondegenerate"; }

std::string to_string(BaseCase b) {
  switch (b) {
    case BaseCase::unit:
      return "unit";
    case BaseCase::indeterminates:
      return "indeterminates";
    case BaseCase::empty:
      return "empty";
  }
  return "?";
}

bool GVDStep::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

bool GVDStep::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c.passed;
  }
  return false;
}

bool GVDCertificate::accepted() const {
  for (const auto& s : steps) {
    if (!s.step.passed()) return false;
  }
  for (const auto& r : relabels) {
    if (!r.generators_match) return false;
  }
  return true;
}

GVDStep gvd_decompose(const Ideal& ideal, std::size_t y, const MonomialOrder& order) {
  const RingPtr& ring = ideal.ring();
  if (y >= ring->num_variables()) throw std::invalid_argument("gvd_decompose: variable out of range");
  GVDStep step;
  step.y = y;
  step.y_name = ring->variables()[y].name;
  step.basis = groebner_basis(ideal, order);

  for (const auto& g : step.basis) {
    std::vector<bool> used = g.variables_used();
    for (std::size_t v = 0; v < used.size(); ++v) {
      if (used[v] && order.greater_variable(v, y)) {
        throw CheckFailure("gvd_decompose", "y_compatible",
                           ring->variables()[v].name + " exceeds " + step.y_name + " and occurs in the basis");
      }
    }
  }

  std::vector<Polynomial> c_list;
  std::vector<Polynomial> n_list;
  std::vector<Polynomial> iny_list;
  for (const auto& g : step.basis) {
    YSplit s = split_in_y(g, y);
    c_list.push_back(s.q);
    if (s.degree == 0) n_list.push_back(g);
    iny_list.push_back(initial_y_form(g, y));
  }
  Ideal c_ideal = with_groebner_basis(Ideal(ring, c_list), order);
  Ideal n_ideal = with_groebner_basis(Ideal(ring, n_list), order);
  step.c_gens = groebner_basis(c_ideal, order);
  step.n_gens = groebner_basis(n_ideal, order);

  Ideal iny(ring, iny_list);
  std::vector<Polynomial> n_plus_y = n_list;
  n_plus_y.push_back(Polynomial::variable(ring, y));
  Ideal meet = ideal_intersection(c_ideal, Ideal(ring, n_plus_y), order);

  bool n_in_i = ideal_contains(ideal, n_ideal, order);
  bool n_in_c = ideal_contains(c_ideal, n_ideal, order);
  bool identity = ideal_equal(iny, meet, order);
  step.checks.push_back(NamedCheck{"n_in_i", n_in_i, "N is contained in I"});
  step.checks.push_back(NamedCheck{"n_in_c", n_in_c, "N is contained in C"});
  step.checks.push_back(NamedCheck{"intersection_identity", identity, "in_y(I) = C cap (N + <y>)"});

  bool c_unit = ideal_member(Polynomial::from_int(ring, 1), c_ideal, order);
  bool c_equals_n = ideal_equal(c_ideal, n_ideal, order);
  step.kind = (c_unit || c_equals_n) ? GVDKind::degenerate : GVDKind::nondegenerate;
  return step;
}

namespace {

std::string step_label(int n, const HessenbergFunction& h, int m) {
  return "n=" + std::to_string(n) + " h=(" + h.to_string() + ") m=" + std::to_string(m);
}

void require(const NamedCheck& c, const std::string& label) {
  if (!c.passed) throw CheckFailure(label, c.name, c.detail);
}

ChainStep certify_step(int n, const HessenbergFunction& h, int m, int depth) {
  const Field q = Field::rationals();
  const std::string label = step_label(n, h, m);
  RingPtr ring = w0_ring(n, q);
  MonomialOrder order = order_n(n);
  ChainIdeal chain_i = chain_ideal(n, h, m);
  ChainIdeal chain_n = chain_ideal(n, h, m + 1);
  Ideal i_ideal = chain_i.ideal(q);
  Ideal n_ideal = with_groebner_basis(chain_n.ideal(q), order);
  std::size_t y = *ring->variables().find(1, m + 2);
  Polynomial y_poly = Polynomial::variable(ring, y);

  auto pos = std::find(chain_i.indices.begin(), chain_i.indices.end(), Index{n, m + 1});
  if (pos == chain_i.indices.end()) {
    throw CheckFailure(label, "witness", "f_{n,m+1} is not a generator of I(m)");
  }
  Polynomial witness = -chain_i.generators[static_cast<std::size_t>(pos - chain_i.indices.begin())].change_ring(ring);

  std::vector<NamedCheck> checks;
  bool squarefree = std::all_of(i_ideal.generators().begin(), i_ideal.generators().end(),
                                [&](const Polynomial& g) { return g.degree_in(y) <= 1; });
  checks.push_back(NamedCheck{"squarefree", squarefree, "no generator of I(m) is divisible by y^2"});

  const auto& n_basis = *n_ideal.cached_basis(order);
  bool y_free = std::none_of(n_basis.begin(), n_basis.end(), [&](const Polynomial& g) { return g.uses_variable(y); });
  checks.push_back(NamedCheck{"gb_y_free", y_free, "reduced basis of N avoids y"});

  bool unit_coeff = initial_y_form(witness, y) == y_poly;
  checks.push_back(NamedCheck{"unit_y_coeff", unit_coeff, "in_y(witness) = y"});

  bool nzd = ideal_equal(ideal_quotient(n_ideal, witness, order), n_ideal, order);
  checks.push_back(NamedCheck{"nzd_colon", nzd, "(N : witness) = N"});

  std::vector<Polynomial> sum = n_ideal.generators();
  sum.push_back(witness);
  bool decomposition = ideal_equal(i_ideal, Ideal(ring, sum), order);
  checks.push_back(NamedCheck{"sum_decomposition", decomposition, "I(m) = N + <witness>"});

  for (const auto& c : checks) require(c, label);

  GVDStep step;
  try {
    step = gvd_decompose(i_ideal, y, order);
  } catch (const CheckFailure& e) {
    throw CheckFailure(label, e.check(), e.what());
  }
  // The decomposition must be the degenerate one with C = <1> and N = I(m+1).
  Ideal c_found(ring, step.c_gens);
  Ideal n_found(ring, step.n_gens);
  bool identity = step.passed() && ideal_member(Polynomial::from_int(ring, 1), c_found, order) &&
                  ideal_equal(n_found, n_ideal, order);
  checks.push_back(NamedCheck{"intersection_identity", identity,
                              "in_y(I) = <1> cap (N + <y>) with N = I(m+1), N in I, N in C"});
  require(checks.back(), label);

  step.witness = witness;
  step.checks = std::move(checks);
  return ChainStep{n, h, m, depth, std::move(step)};
}

}  // namespace

GVDCertificate certify_w0_chain(int n, const HessenbergFunction& h) {
  if (n < 3) throw std::invalid_argument("certify_w0_chain needs n >= 3");
  if (h.size() != n) throw std::invalid_argument("Hessenberg function size does not match n");
  if (!h.indecomposable()) throw std::invalid_argument("certify_w0_chain needs an indecomposable h");
  GVDCertificate cert;
  cert.n = n;
  cert.h = h;

  const Field q = Field::rationals();
  PatchIdeal root = hess_generators(n, Permutation::longest(n), h);
  Ideal root_ideal = root.ideal(q);
  cert.generator_count = root_ideal.generators().size();
  MonomialIdeal in_root = initial_ideal(root_ideal, order_n(n));
  cert.codimension = root.ring()->num_variables() - monomial_dimension(in_root);
  cert.complete_intersection = cert.generator_count == cert.codimension;
  if (h.is_full()) {
    cert.base_case = BaseCase::empty;
    return cert;
  }

  int level_n = n;
  HessenbergFunction level_h = h;
  int depth = 0;
  for (;;) {
    const int top = mu(level_h);
    for (int m = 0; m < top; ++m) cert.steps.push_back(certify_step(level_n, level_h, m, depth));
    ChainIdeal last = chain_ideal(level_n, level_h, top);
    if (last.generators.empty()) {
      cert.base_case = BaseCase::empty;
      break;
    }
    RelabelRecord rec;
    rec.from_n = level_n;
    rec.from_h = level_h;
    rec.to_h = relabel_function(level_h);
    PatchIdeal next = hess_generators(level_n - 1, Permutation::longest(level_n - 1), rec.to_h);
    rec.generators_match = next.indices() == last.indices;
    for (std::size_t i = 0; rec.generators_match && i < last.indices.size(); ++i) {
      rec.generators_match = relabel_down(last.generators[i], level_n) == next.generators()[i];
    }
    cert.relabels.push_back(rec);
    if (!rec.generators_match) {
      throw CheckFailure(step_label(level_n, level_h, top), "relabel",
                         "relabelled generators differ from those of h' = (" + rec.to_h.to_string() + ")");
    }
    ++depth;
    --level_n;
    level_h = rec.to_h;
  }
  cert.relabel_depth = depth;
  return cert;
}

GBLift gvd_gb_lift(const std::vector<Polynomial>& c_basis, const std::vector<Polynomial>& n_basis,
                   const std::vector<std::pair<Polynomial, Polynomial>>& pairs, std::size_t y,
                   const MonomialOrder& order, const Grading& grading, int dmax) {
  if (pairs.empty() && n_basis.empty()) throw std::invalid_argument("gvd_gb_lift: nothing to lift");
  const RingPtr& ring = pairs.empty() ? n_basis.front().ring() : pairs.front().first.ring();
  Polynomial y_poly = Polynomial::variable(ring, y);
  GBLift lift;
  for (const auto& [q, r] : pairs) {
    if (r.uses_variable(y) || q.uses_variable(y)) {
      throw CheckFailure("gvd_gb_lift", "y_free_pairs", "q_i and r_i must not involve y");
    }
    lift.basis.push_back(y_poly * q + r);
  }
  for (const auto& g : n_basis) lift.basis.push_back(g);

  GroebnerCheck gb = check_groebner_basis(lift.basis, order);
  lift.pairs_checked = gb.pairs_checked;
  if (!gb.is_basis) throw CheckFailure("gvd_gb_lift", "groebner_lift", "an S-polynomial has nonzero normal form");

  const std::size_t nv = ring->num_variables();
  MonomialIdeal in_i = lead_monomial_ideal(lift.basis, order);
  MonomialIdeal in_n = n_basis.empty() ? MonomialIdeal(nv, {}) : lead_monomial_ideal(n_basis, order);
  MonomialIdeal in_c = c_basis.empty() ? MonomialIdeal(nv, {}) : lead_monomial_ideal(c_basis, order);
  auto hf_i = hilbert_function(in_i, grading, dmax);
  auto hf_n = hilbert_function(in_n, grading, dmax);
  auto hf_c = hilbert_function(in_c, grading, dmax);
  const long shift = grading.degree(Monomial::variable(y));
  lift.hilbert_bound = dmax;
  for (int d = 0; d <= dmax; ++d) {
    auto ud = static_cast<std::size_t>(d);
    lift.lifted_quotient_dims.push_back(static_cast<std::int64_t>(hf_n[ud]) - static_cast<std::int64_t>(hf_i[ud]));
    std::int64_t shifted = 0;
    if (d >= shift) {
      auto us = static_cast<std::size_t>(d - shift);
      shifted = static_cast<std::int64_t>(hf_n[us]) - static_cast<std::int64_t>(hf_c[us]);
    }
    lift.shifted_quotient_dims.push_back(shifted);
  }
  if (lift.lifted_quotient_dims != lift.shifted_quotient_dims) {
    throw CheckFailure("gvd_gb_lift", "hilbert_shift", "graded pieces of in(I)/in(N) and in(C)/in(N)(-deg y) differ");
  }
  return lift;
}

LinkageCheck linkage_2minors_check(const std::vector<Polynomial>& qs, const std::vector<Polynomial>& rs,
                                   const Ideal& n_ideal, const MonomialOrder& order) {
  if (qs.size() != rs.size()) throw std::invalid_argument("linkage_2minors_check: q and r lengths differ");
  LinkageCheck check;
  Ideal n_gb = with_groebner_basis(n_ideal, order);
  check.minors_in_n = true;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      ++check.minors_checked;
      if (!ideal_member(qs[i] * rs[j] - qs[j] * rs[i], n_gb, order)) check.minors_in_n = false;
    }
  }
  const std::size_t nv = n_ideal.ring()->num_variables();
  std::vector<Polynomial> c_gens = n_ideal.generators();
  c_gens.insert(c_gens.end(), qs.begin(), qs.end());
  check.height_n = nv - monomial_dimension(initial_ideal(n_gb, order));
  check.height_c = nv - monomial_dimension(initial_ideal(Ideal(n_ideal.ring(), c_gens), order));
  check.height_condition = check.height_c > check.height_n;
  return check;
}

}  // namespace hesspatch
