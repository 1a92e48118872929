#include "hesspatch/groebner.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "hesspatch/errors.hpp"
#include "ranked.hpp"

namespace hesspatch {

namespace detail {

RankedFrame::RankedFrame(const RingPtr& ring, const MonomialOrder& order) : original(ring) {
  if (order.size() != ring->num_variables()) {
    throw RingMismatchError("monomial order has " + std::to_string(order.size()) + " variables, ring has " +
                            std::to_string(ring->num_variables()));
  }
  identity = order.is_identity();
  if (identity) {
    ranked = ring;
    return;
  }
  std::vector<Variable> vars;
  for (std::size_t k = 0; k < order.size(); ++k) vars.push_back(ring->variables()[order.priority()[k]]);
  ranked = PolynomialRing::make(VariableSet(std::move(vars)), ring->field());
  to_rank.resize(order.size());
  from_rank.resize(order.size());
  for (std::size_t v = 0; v < order.size(); ++v) to_rank[v] = order.rank(v);
  for (std::size_t k = 0; k < order.size(); ++k) from_rank[k] = order.priority()[k];
}

Polynomial RankedFrame::in(const Polynomial& f) const {
  if (!f.ring()->compatible(*original)) throw RingMismatchError("polynomial from a different ring");
  if (identity) return f;
  return f.rename(ranked, to_rank);
}

Polynomial RankedFrame::out(const Polynomial& f) const {
  if (identity) return f.ring() == original ? f : Polynomial::from_canonical_terms(original, f.terms());
  return f.rename(original, from_rank);
}

std::vector<Polynomial> RankedFrame::in(const std::vector<Polynomial>& fs) const {
  std::vector<Polynomial> r;
  r.reserve(fs.size());
  for (const auto& f : fs) r.push_back(in(f));
  return r;
}

std::vector<Polynomial> RankedFrame::out(const std::vector<Polynomial>& fs) const {
  std::vector<Polynomial> r;
  r.reserve(fs.size());
  for (const auto& f : fs) r.push_back(out(f));
  return r;
}

Division divide_lex(const Polynomial& f, const std::vector<Polynomial>& divisors, bool want_quotients) {
  const RingPtr& ring = f.ring();
  const Field& k = ring->field();
  Division result;
  result.remainder = Polynomial(ring);
  std::vector<std::vector<Term>> qterms(want_quotients ? divisors.size() : 0);
  std::vector<Coefficient> lead_inv;
  lead_inv.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    lead_inv.push_back(k.inv(g.terms().front().coeff));
  }

  std::unordered_map<Monomial, Coefficient, MonomialHash> acc;
  std::priority_queue<Monomial> heap;
  acc.reserve(f.size() * 2);
  for (const auto& t : f.terms()) {
    acc.emplace(t.monomial, t.coeff);
    heap.push(t.monomial);
  }
  std::vector<Term> rem;
  while (!heap.empty()) {
    Monomial m = heap.top();
    heap.pop();
    auto it = acc.find(m);
    Coefficient c = std::move(it->second);
    acc.erase(it);
    if (k.is_zero(c)) continue;
    std::size_t which = divisors.size();
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i].terms().front().monomial.divides(m)) {
        which = i;
        break;
      }
    }
    if (which == divisors.size()) {
      rem.push_back(Term{m, std::move(c)});
      continue;
    }
    const Polynomial& g = divisors[which];
    Coefficient factor = k.mul(c, lead_inv[which]);
    Monomial shift = m / g.terms().front().monomial;
    const auto& gt = g.terms();
    for (std::size_t j = 1; j < gt.size(); ++j) {
      Monomial mm = gt[j].monomial * shift;
      Coefficient val = k.neg(k.mul(factor, gt[j].coeff));
      auto [slot, inserted] = acc.try_emplace(mm, val);
      if (inserted) {
        heap.push(mm);
      } else {
        slot->second = k.add(slot->second, val);
      }
    }
    if (want_quotients) qterms[which].push_back(Term{shift, std::move(factor)});
  }
  result.remainder = Polynomial::from_canonical_terms(ring, std::move(rem));
  if (want_quotients) {
    for (auto& q : qterms) result.quotients.push_back(Polynomial::from_canonical_terms(ring, std::move(q)));
  }
  return result;
}

}  // namespace detail

using detail::RankedFrame;

Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order) {
  RankedFrame frame(f.ring(), order);
  Division d = detail::divide_lex(frame.in(f), frame.in(divisors), true);
  d.remainder = frame.out(d.remainder);
  d.quotients = frame.out(d.quotients);
  return d;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order) {
  RankedFrame frame(f.ring(), order);
  return frame.out(detail::divide_lex(frame.in(f), frame.in(divisors), false).remainder);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Field& k = f.field();
  Term lf = f.leading_term(order);
  Term lg = g.leading_term(order);
  Monomial l = lf.monomial.lcm(lg.monomial);
  return f.mul_term(l / lf.monomial, k.inv(lf.coeff)) - g.mul_term(l / lg.monomial, k.inv(lg.coeff));
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  Division d = divide(f, {g}, order);
  if (!d.remainder.is_zero()) throw DomainError("polynomial division is not exact");
  return d.quotients.front();
}

namespace {

struct Element {
  Polynomial poly;
  Monomial lead;
  bool active = true;
  std::vector<Polynomial> cof;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned degree;
};

bool pair_before(const Pair& a, const Pair& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (!(a.lcm == b.lcm)) return a.lcm < b.lcm;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

class BuchbergerRun {
 public:
  BuchbergerRun(const RingPtr& ring, std::size_t num_inputs, bool track)
      : ring_(ring), field_(ring->field()), num_inputs_(num_inputs), track_(track) {}

  void add_input(const Polynomial& g, std::size_t input_index) {
    Coefficient inv = field_.inv(g.terms().front().coeff);
    std::vector<Polynomial> cof;
    if (track_) {
      cof.assign(num_inputs_, Polynomial(ring_));
      cof[input_index] = Polynomial::constant(ring_, inv);
    }
    insert(g.scale(inv), std::move(cof));
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), pair_before);
      Pair p = *best;
      pairs_.erase(best);
      ++stats_.pairs_reduced;
      reduce_pair(p);
    }
  }

  std::vector<std::size_t> minimal_indices() const {
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < elems_.size(); ++a) {
      if (!elems_[a].active) continue;
      bool redundant = false;
      for (std::size_t b = 0; b < elems_.size() && !redundant; ++b) {
        if (b == a || !elems_[b].active) continue;
        if (elems_[b].lead.divides(elems_[a].lead) && (!(elems_[b].lead == elems_[a].lead) || b < a)) {
          redundant = true;
        }
      }
      if (!redundant) idx.push_back(a);
    }
    return idx;
  }

  const std::vector<Element>& elements() const { return elems_; }
  BuchbergerStats& stats() { return stats_; }

 private:
  void reduce_pair(const Pair& p) {
    const Element& a = elems_[p.i];
    const Element& b = elems_[p.j];
    Monomial sa = p.lcm / a.lead;
    Monomial sb = p.lcm / b.lead;
    Coefficient one = field_.one();
    Polynomial s = a.poly.mul_term(sa, one) - b.poly.mul_term(sb, one);
    std::vector<std::size_t> active;
    std::vector<Polynomial> divisors;
    for (std::size_t e = 0; e < elems_.size(); ++e) {
      if (elems_[e].active) {
        active.push_back(e);
        divisors.push_back(elems_[e].poly);
      }
    }
    Division d = detail::divide_lex(s, divisors, track_);
    if (d.remainder.is_zero()) {
      ++stats_.zero_reductions;
      return;
    }
    Coefficient inv = field_.inv(d.remainder.terms().front().coeff);
    std::vector<Polynomial> cof;
    if (track_) {
      cof.resize(num_inputs_);
      for (std::size_t j = 0; j < num_inputs_; ++j) {
        Polynomial c = a.cof[j].mul_term(sa, one) - b.cof[j].mul_term(sb, one);
        for (std::size_t q = 0; q < active.size(); ++q) {
          if (!d.quotients[q].is_zero()) c -= d.quotients[q] * elems_[active[q]].cof[j];
        }
        cof[j] = c.scale(inv);
      }
    }
    ++stats_.elements_added;
    insert(d.remainder.scale(inv), std::move(cof));
  }

  // Gebauer-Moeller update for a new basis element.
  void insert(Polynomial h, std::vector<Polynomial> cof) {
    const std::size_t t = elems_.size();
    Monomial lead = h.terms().front().monomial;
    elems_.push_back(Element{std::move(h), lead, true, std::move(cof)});

    std::vector<Pair> candidates;
    for (std::size_t i = 0; i < t; ++i) {
      if (!elems_[i].active) continue;
      Monomial l = elems_[i].lead.lcm(lead);
      candidates.push_back(Pair{i, t, l, l.total_degree()});
    }
    stats_.pairs_created += candidates.size();

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      if (elems_[p.i].lead.coprime(lead)) {
        kept.push_back(p);
        continue;
      }
      bool dominated = false;
      for (std::size_t r = c + 1; r < candidates.size() && !dominated; ++r) {
        dominated = candidates[r].lcm.divides(p.lcm);
      }
      for (std::size_t r = 0; r < kept.size() && !dominated; ++r) {
        dominated = kept[r].lcm.divides(p.lcm);
      }
      if (dominated) {
        ++stats_.chain_criterion_skips;
      } else {
        kept.push_back(p);
      }
    }

    std::vector<Pair> remaining;
    for (const Pair& p : pairs_) {
      bool drop = lead.divides(p.lcm) && !(elems_[p.i].lead.lcm(lead) == p.lcm) &&
                  !(elems_[p.j].lead.lcm(lead) == p.lcm);
      if (drop) {
        ++stats_.chain_criterion_skips;
      } else {
        remaining.push_back(p);
      }
    }
    for (const Pair& p : kept) {
      if (elems_[p.i].lead.coprime(lead)) {
        ++stats_.product_criterion_skips;
      } else {
        remaining.push_back(p);
      }
    }
    pairs_ = std::move(remaining);

    for (std::size_t i = 0; i < t; ++i) {
      if (elems_[i].active && lead.divides(elems_[i].lead)) elems_[i].active = false;
    }
  }

  RingPtr ring_;
  const Field& field_;
  std::size_t num_inputs_;
  bool track_;
  std::vector<Element> elems_;
  std::vector<Pair> pairs_;
  BuchbergerStats stats_;
};

bool lead_greater(const Polynomial& a, const Polynomial& b) {
  return a.terms().front().monomial > b.terms().front().monomial;
}

}  // namespace

GroebnerResult buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                          const BuchbergerOptions& options) {
  GroebnerResult result;
  if (gens.empty()) return result;
  const RingPtr& ring = gens.front().ring();
  if (!ring->field().is_field()) throw DomainError("Groebner bases need field coefficients");
  RankedFrame frame(ring, order);
  std::vector<Polynomial> input = frame.in(gens);

  BuchbergerRun run(frame.ranked, input.size(), options.track_cofactors);
  for (std::size_t j = 0; j < input.size(); ++j) {
    if (!input[j].is_zero()) run.add_input(input[j], j);
  }
  run.run();

  const auto& elems = run.elements();
  std::vector<std::size_t> minimal = run.minimal_indices();
  std::vector<Polynomial> min_polys;
  for (std::size_t idx : minimal) min_polys.push_back(elems[idx].poly);

  // Tail-reduce each element against the others; leads are untouched because
  // the set is minimal.
  std::vector<std::pair<Polynomial, std::vector<Polynomial>>> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    std::vector<std::size_t> other_idx;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) {
        others.push_back(min_polys[b]);
        other_idx.push_back(minimal[b]);
      }
    }
    Division d = detail::divide_lex(min_polys[a], others, options.track_cofactors);
    std::vector<Polynomial> cof;
    if (options.track_cofactors) {
      cof = elems[minimal[a]].cof;
      for (std::size_t j = 0; j < cof.size(); ++j) {
        for (std::size_t q = 0; q < others.size(); ++q) {
          if (!d.quotients[q].is_zero()) cof[j] -= d.quotients[q] * elems[other_idx[q]].cof[j];
        }
      }
    }
    reduced.emplace_back(std::move(d.remainder), std::move(cof));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const auto& x, const auto& y) { return lead_greater(x.first, y.first); });

  for (auto& [poly, cof] : reduced) result.basis.push_back(frame.out(poly));
  result.minimal_basis = frame.out(min_polys);
  if (options.track_cofactors) {
    std::vector<std::vector<Polynomial>> cofs;
    for (auto& [poly, cof] : reduced) cofs.push_back(frame.out(cof));
    result.cofactors = std::move(cofs);
  }
  result.stats = run.stats();
  return result;
}

std::vector<Polynomial> interreduce(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : basis) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return {};
  RankedFrame frame(nonzero.front().ring(), order);
  std::vector<Polynomial> in = frame.in(nonzero);
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < in.size(); ++a) {
    const Monomial& la = in[a].terms().front().monomial;
    bool redundant = false;
    for (std::size_t b = 0; b < in.size() && !redundant; ++b) {
      if (b == a) continue;
      const Monomial& lb = in[b].terms().front().monomial;
      redundant = lb.divides(la) && (!(lb == la) || b < a);
    }
    if (!redundant) minimal.push_back(in[a].scale(in[a].field().inv(in[a].terms().front().coeff)));
  }
  std::vector<Polynomial> out;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    out.push_back(detail::divide_lex(minimal[a], others, false).remainder);
  }
  std::sort(out.begin(), out.end(), lead_greater);
  return frame.out(out);
}

bool coprime_leads_gb_check(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  std::vector<Monomial> leads;
  for (const auto& g : gens) leads.push_back(g.leading_term(order).monomial);
  for (std::size_t i = 0; i < leads.size(); ++i) {
    for (std::size_t j = i + 1; j < leads.size(); ++j) {
      if (!leads[i].coprime(leads[j])) return false;
    }
  }
  return true;
}

GroebnerCheck check_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  GroebnerCheck check;
  if (basis.empty()) return check;
  RankedFrame frame(basis.front().ring(), order);
  std::vector<Polynomial> in = frame.in(basis);
  const MonomialOrder lex = MonomialOrder::identity(frame.ranked->num_variables());
  for (std::size_t i = 0; i < in.size(); ++i) {
    for (std::size_t j = i + 1; j < in.size(); ++j) {
      ++check.pairs_checked;
      Polynomial s = s_polynomial(in[i], in[j], lex);
      if (!detail::divide_lex(s, in, false).remainder.is_zero()) {
        check.is_basis = false;
        check.failing_pair = std::make_pair(i, j);
        return check;
      }
    }
  }
  return check;
}

bool verify_cofactors(const Polynomial& target, const std::vector<Polynomial>& cofactors,
                      const std::vector<Polynomial>& gens) {
  if (cofactors.size() != gens.size()) return false;
  Polynomial sum(target.ring());
  for (std::size_t j = 0; j < gens.size(); ++j) sum += cofactors[j] * gens[j];
  return sum == target;
}

}  // namespace hesspatch
