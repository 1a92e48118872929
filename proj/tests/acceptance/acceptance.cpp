// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hesspatch/chart.hpp"
#include "hesspatch/frobenius.hpp"
#include "hesspatch/groebner.hpp"
#include "hesspatch/gvd.hpp"
#include "hesspatch/ideal.hpp"
#include "hesspatch/parse.hpp"
#include "hesspatch/tci.hpp"

using namespace hesspatch;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string label(int n, const HessenbergFunction& h) { return "n=" + std::to_string(n) + " h=(" + h.to_string() + ")"; }

// Independent enumeration: nondecreasing sequences with i + 1 <= h(i) <= n
// for i < n and h(n) = n.
std::vector<std::vector<int>> brute_force_indecomposable(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int i) {
    if (i > n) {
      out.push_back(cur);
      return;
    }
    int lo = std::max(i == n ? n : i + 1, cur.empty() ? 1 : cur.back());
    for (int v = lo; v <= n; ++v) {
      cur.push_back(v);
      extend(i + 1);
      cur.pop_back();
    }
  };
  extend(1);
  return out;
}

std::vector<HessenbergFunction> indecomposable(int n) {
  std::vector<HessenbergFunction> out;
  for (auto& v : brute_force_indecomposable(n)) out.emplace_back(v);
  return out;
}

std::size_t var_index(const RingPtr& ring, int row, int col) { return *ring->variables().find(row, col); }

Outcome ac1_generators() {
  Outcome o;
  const int n = 5;
  PatchIdeal patch = hess_generators(n, Permutation::longest(n), HessenbergFunction::peterson(n));
  const std::map<std::pair<int, int>, std::string> printed{
      {{5, 1}, "-x[1,2] + x[1,3]*(x[3,2] - x[4,1]) + x[1,4]*(x[2,2] - x[2,3]*x[3,2] + x[2,3]*x[4,1] - x[3,1]) + x[2,1]"},
      {{5, 2}, "-x[1,3] + x[1,4]*(x[2,3] - x[3,2]) + x[2,2]"},
      {{5, 3}, "-x[1,4] + x[2,3]"},
      {{4, 1}, "-x[2,2] + x[2,3]*(x[3,2] - x[4,1]) + x[3,1]"},
      {{4, 2}, "-x[2,3] + x[3,2]"},
      {{3, 1}, "-x[3,2] + x[4,1]"},
  };
  if (patch.indices().size() != printed.size()) o.fail("expected six generators");
  for (const auto& [idx, text] : printed) {
    if (patch.entry(idx.first, idx.second) != parse_poly(text, patch.ring())) {
      o.fail("f[" + std::to_string(idx.first) + "," + std::to_string(idx.second) + "] differs");
    }
  }

  ChartMatrix chart = build_chart(4, Permutation::longest(4));
  PolyMatrix inverse = invert_chart(chart);
  Polynomial y13 = parse_poly("-x[1,3]", chart.ring);
  Polynomial y12 = parse_poly("-x[1,2] + x[1,3]*x[2,2]", chart.ring);
  // y_{i,j} sits at row n+1-i, column n+1-j (1-based).
  if (inverse[3][1] != y13 || cofactor_y(chart, 1, 3) != y13) o.fail("y[1,3] differs");
  if (inverse[3][2] != y12 || cofactor_y(chart, 1, 2) != y12) o.fail("y[1,2] differs");
  return o;
}

Outcome ac2_recursion() {
  Outcome o;
  for (int n = 3; n <= 7; ++n) {
    PatchIdeal patch = hess_generators(n, Permutation::longest(n), HessenbergFunction::peterson(n));
    for (int k = 3; k <= n; ++k) {
      for (int l = 1; l + 1 < k; ++l) {
        if (recursion_f(n, k, l) != patch.entry(k, l)) {
          o.fail("n=" + std::to_string(n) + " f[" + std::to_string(k) + "," + std::to_string(l) + "]");
        }
      }
    }
  }
  return o;
}

Outcome ac3_initial_terms() {
  Outcome o;
  for (int n = 3; n <= 7; ++n) {
    PatchIdeal patch = hess_generators(n, Permutation::longest(n), HessenbergFunction::peterson(n));
    const RingPtr& ring = patch.ring();
    MonomialOrder order = order_n(n);
    // Generators bottom-to-top, left-to-right.
    std::vector<std::pair<int, int>> seq;
    for (int k = n; k >= 3; --k) {
      for (int l = 1; l + 1 < k; ++l) seq.emplace_back(k, l);
    }
    for (std::size_t a = 0; a < seq.size(); ++a) {
      auto [k, l] = seq[a];
      const Polynomial& f = patch.entry(k, l);
      std::size_t lead_var = var_index(ring, n + 1 - k, l + 1);
      Term lt = f.leading_term(order);
      if (!(lt.monomial == Monomial::variable(lead_var)) || lt.coeff != ring->field().from_int(-1)) {
        o.fail("n=" + std::to_string(n) + " wrong initial term of f[" + std::to_string(k) + "," + std::to_string(l) + "]");
      }
      // The lead variable occurs exactly once in f and never later.
      std::size_t occurrences = 0;
      for (const auto& t : f.terms()) occurrences += t.monomial[lead_var] > 0;
      if (occurrences != 1) o.fail("lead variable repeated in f[" + std::to_string(k) + "," + std::to_string(l) + "]");
      for (std::size_t b = a + 1; b < seq.size(); ++b) {
        if (patch.entry(seq[b].first, seq[b].second).uses_variable(lead_var)) {
          o.fail("n=" + std::to_string(n) + " later occurrence of the lead of f[" + std::to_string(k) + "," +
                 std::to_string(l) + "]");
        }
      }
    }
  }
  return o;
}

// Shared by AC4, AC5 and AC11.
struct GroebnerSweep {
  Outcome ac4;
  Outcome ac5;
  Outcome ac11;
};

GroebnerSweep groebner_sweep() {
  GroebnerSweep s;
  const Field q = Field::rationals();
  for (int n = 3; n <= 6; ++n) {
    MonomialOrder order = order_n(n);
    for (const auto& h : indecomposable(n)) {
      PatchIdeal patch = hess_generators(n, Permutation::longest(n), h);
      RingPtr ring = patch.ring()->with_field(q);
      std::vector<Polynomial> gens = patch.generators(q);
      std::vector<Polynomial> monic;
      for (const auto& g : gens) monic.push_back(g.monic(order));

      GroebnerResult gb = buchberger(gens, order);
      if (gb.minimal_basis != monic) s.ac4.fail(label(n, h) + ": Buchberger added or dropped elements");
      if (gb.basis != interreduce(monic, order)) s.ac4.fail(label(n, h) + ": reduced basis mismatch");
      if (!check_groebner_basis(monic, order).is_basis) s.ac4.fail(label(n, h) + ": an S-polynomial is nonzero");
      std::vector<Monomial> expected;
      for (int l = 1; l <= n; ++l) {
        for (int k = h(l) + 1; k <= n; ++k) expected.push_back(Monomial::variable(var_index(ring, n + 1 - k, l + 1)));
      }
      MonomialIdeal expected_in(ring->num_variables(), expected);
      MonomialIdeal in_gb = lead_monomial_ideal(gb.basis, order);
      if (!(in_gb == expected_in)) s.ac4.fail(label(n, h) + ": initial ideal mismatch");

      TCIResult tci = detect_tci(gens, order);
      if (!tci.ok()) {
        s.ac5.fail(label(n, h) + ": " + tci.failure->message);
      } else {
        TCIConclusions c = tci_conclusions(*tci.witness);
        if (!(c.initial_ideal == in_gb)) s.ac5.fail(label(n, h) + ": initial ideals disagree");
        if (c.dimension != monomial_dimension(in_gb)) s.ac5.fail(label(n, h) + ": dimensions disagree");
        std::vector<Polynomial> witness_monic;
        for (const auto& g : c.groebner_basis) witness_monic.push_back(g.monic(order));
        if (interreduce(witness_monic, order) != gb.basis) s.ac5.fail(label(n, h) + ": bases disagree");
      }

      Ideal ideal(ring, gens);
      if (radical_certificate(ideal, order) != RadicalCertificate::radical_by_squarefree_initial) {
        s.ac11.fail(label(n, h) + ": no squarefree certificate");
      }
    }
  }
  return s;
}

Outcome ac6_gvd() {
  Outcome o;
  const std::map<int, std::size_t> counts{{3, 2}, {4, 5}, {5, 14}};
  for (auto [n, count] : counts) {
    auto hs = indecomposable(n);
    if (hs.size() != count) o.fail("n=" + std::to_string(n) + ": " + std::to_string(hs.size()) + " functions");
    if (HessenbergFunction::enumerate(n, true) != hs) o.fail("library enumeration differs at n=" + std::to_string(n));
    for (const auto& h : hs) {
      try {
        GVDCertificate cert = certify_w0_chain(n, h);
        if (!cert.accepted()) o.fail(label(n, h) + " not accepted");
        for (const auto& st : cert.steps) {
          for (const char* name : {"squarefree", "gb_y_free", "unit_y_coeff", "nzd_colon", "sum_decomposition"}) {
            if (!st.step.check(name)) o.fail(label(n, h) + ": " + name);
          }
        }
      } catch (const std::exception& e) {
        o.fail(label(n, h) + ": " + e.what());
      }
    }
  }
  GVDCertificate cert = certify_w0_chain(5, HessenbergFunction({2, 3, 4, 5, 5}));
  std::vector<std::string> ys;
  for (const auto& st : cert.steps) {
    if (st.n == 5) ys.push_back(st.step.y_name);
  }
  if (ys != std::vector<std::string>{"x[1,2]", "x[1,3]", "x[1,4]"}) o.fail("(5,h1) y-sequence differs");
  if (cert.relabels.empty() || cert.relabels[0].to_h != HessenbergFunction({2, 3, 4, 4})) {
    o.fail("(5,h1) does not relabel to (4,(2,3,4,4))");
  }
  return o;
}

Outcome ac7_homogeneity() {
  Outcome o;
  for (int n = 3; n <= 7; ++n) {
    PatchIdeal patch = hess_generators(n, Permutation::longest(n), HessenbergFunction::peterson(n));
    const RingPtr& ring = patch.ring();
    Grading grading = chart_grading(n);
    std::vector<int> weights(ring->num_variables());
    for (std::size_t v = 0; v < weights.size(); ++v) {
      const auto& var = ring->variables()[v];
      weights[v] = n + 1 - var.index->first - var.index->second;
      if (weights[v] < 1) o.fail("nonpositive weight");
    }
    if (grading.weights() != weights) o.fail("chart grading differs at n=" + std::to_string(n));
    for (int k = 3; k <= n; ++k) {
      for (int l = 1; l + 1 < k; ++l) {
        for (const auto& t : patch.entry(k, l).terms()) {
          long deg = 0;
          for (std::size_t v = 0; v < weights.size(); ++v) deg += static_cast<long>(t.monomial[v]) * weights[v];
          if (deg != k - l - 1) {
            o.fail("n=" + std::to_string(n) + " f[" + std::to_string(k) + "," + std::to_string(l) + "] not homogeneous");
          }
        }
      }
    }
  }
  return o;
}

// Tr by direct inspection of the terms: the constant must come out 1 and every
// other contribution must cancel.
bool trace_is_one_by_hand(const Polynomial& power, std::uint64_t p) {
  std::map<std::vector<unsigned>, std::uint64_t> sums;
  const std::size_t nv = power.ring()->num_variables();
  for (const auto& t : power.terms()) {
    std::vector<unsigned> root(nv);
    bool keep = true;
    for (std::size_t v = 0; v < nv && keep; ++v) {
      if ((t.monomial[v] + 1) % p != 0) keep = false;
      root[v] = (t.monomial[v] + 1) / static_cast<unsigned>(p) - 1;
    }
    if (keep) sums[root] = (sums[root] + t.coeff.residue()) % p;
  }
  for (const auto& [root, c] : sums) {
    bool constant = std::all_of(root.begin(), root.end(), [](unsigned e) { return e == 0; });
    if (constant ? c != 1 : c != 0) return false;
  }
  return sums.count(std::vector<unsigned>(nv, 0)) == 1;
}

Outcome ac8_unit_check() {
  Outcome o;
  for (int n = 3; n <= 5; ++n) {
    Polynomial fn = build_F_n(n);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      SplittingElement s = SplittingElement::from_power(fn, p, order_n(n), SplittingElement::Provenance::f_n_power);
      std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p);
      if (!s.unit_check().within_budget) {
        o.fail(tag + ": expansion exceeded the term budget");
        continue;
      }
      if (!s.unit_check().hypothesis) o.fail(tag + ": in(F_n) is not the product of the variables");
      if (!s.unit_check().result) o.fail(tag + ": Tr != 1");
      if (!trace_is_one_by_hand(s.f(), p)) o.fail(tag + ": direct trace != 1");
    }
  }
  return o;
}

Outcome ac9_poset() {
  Outcome o;
  for (int n = 3; n <= 5; ++n) {
    auto hs = indecomposable(n);
    std::size_t expected_edges = 0;
    for (const auto& a : hs) {
      for (const auto& b : hs) {
        bool below = a != b;
        for (int l = 1; l <= n && below; ++l) below = a(l) <= b(l);
        expected_edges += below;
      }
    }
    for (std::uint64_t p : {2u, 3u}) {
      std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p);
      try {
        SplitPoset poset = split_poset(n, p);
        if (!poset.all_passed()) o.fail(tag + ": a node or edge failed");
        if (poset.nodes.size() != hs.size()) o.fail(tag + ": node count");
        if (poset.edges.size() != expected_edges) o.fail(tag + ": edge count");
        for (const auto& node : poset.nodes) {
          if (node.report.sampled_failures != 0) o.fail(tag + ": sampled check failed for h=(" + node.h.to_string() + ")");
        }
      } catch (const std::exception& e) {
        o.fail(tag + ": " + e.what());
      }
    }
  }
  if (split_poset(4, 2).nodes.size() != 5) o.fail("n=4 poset does not have 5 nodes");
  return o;
}

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_terms, unsigned max_exp) {
  std::vector<Term> terms;
  std::size_t count = rng() % (max_terms + 1);
  const std::uint64_t p = ring->field().characteristic();
  for (std::size_t i = 0; i < count; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < ring->num_variables(); ++v) m.set(v, static_cast<unsigned>(rng() % (max_exp + 1)));
    terms.push_back(Term{m, ring->field().from_int(static_cast<std::int64_t>(rng() % p))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::size_t axiom_failures(const SplittingElement& s, const RingPtr& ring, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  const unsigned p = static_cast<unsigned>(s.p());
  const Polynomial one = Polynomial::from_int(ring, 1);
  std::size_t failures = s.apply(one) == one ? 0 : 1;
  for (int i = 0; i < samples; ++i) {
    Polynomial a = random_poly(rng, ring, 3, 2);
    Polynomial b = random_poly(rng, ring, 4, 2 * p);
    Polynomial c = random_poly(rng, ring, 4, 2 * p);
    if (s.apply(b + c) != s.apply(b) + s.apply(c)) ++failures;
    if (s.apply(a.pow(p) * b) != a * s.apply(b)) ++failures;
    if (s.apply(a.pow(p)) != a) ++failures;
  }
  return failures;
}

Outcome ac10_axioms() {
  Outcome o;
  const int samples = 1000;
  for (std::uint64_t p : {2u, 3u, 5u}) {
    std::vector<std::string> names{"a", "b", "c", "d"};
    RingPtr ring = PolynomialRing::make(VariableSet::from_names(names), Field::prime(p));
    std::size_t bad = axiom_failures(SplittingElement::standard(ring), ring, 1000 + p, samples);
    if (bad) o.fail("phi_std p=" + std::to_string(p) + ": " + std::to_string(bad) + " failures");
  }
  const std::vector<std::pair<int, std::uint64_t>> configs{{3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}};
  for (auto [n, p] : configs) {
    SplittingElement s = SplittingElement::from_power(build_F_n(n), p, order_n(n), SplittingElement::Provenance::f_n_power);
    std::size_t bad = axiom_failures(s, s.f().ring(), 2000 + static_cast<std::uint64_t>(n) * 10 + p, samples);
    if (bad) o.fail("F_n n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " + std::to_string(bad) + " failures");
  }
  return o;
}

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  GroebnerSweep sweep;
  bool swept = false;
  auto sweep_once = [&]() -> GroebnerSweep& {
    if (!swept) {
      sweep = groebner_sweep();
      swept = true;
    }
    return sweep;
  };

  // AC5 and AC11 reuse the AC4 sweep, so their time is counted under AC4.
  std::vector<Criterion> criteria{
      {"AC1", "generator reproduction", 1, ac1_generators},
      {"AC2", "recursion oracle", 30, ac2_recursion},
      {"AC3", "initial-term law", 30, ac3_initial_terms},
      {"AC4", "Groebner theorem n=3..6", 300, [&] { return sweep_once().ac4; }},
      {"AC5", "TCI pipeline agreement", 300, [&] { return sweep_once().ac5; }},
      {"AC6", "GVD certificates n=3,4,5", 120, ac6_gvd},
      {"AC7", "homogeneity", 10, ac7_homogeneity},
      {"AC8", "Frobenius unit check", 120, ac8_unit_check},
      {"AC9", "simultaneous compatibility", 300, ac9_poset},
      {"AC10", "splitting axioms", 60, ac10_axioms},
      {"AC11", "radicality certificate", 300, [&] { return sweep_once().ac11; }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.passed && seconds > c.budget_seconds) {
      std::ostringstream msg;
      msg << "exceeded " << c.budget_seconds << " s";
      o.fail(msg.str());
    }
    std::printf("[%s] %s %s (%.2f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), seconds,
                o.passed ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.passed) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
