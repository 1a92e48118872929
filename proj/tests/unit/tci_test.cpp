#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hesspatch/chart.hpp"
#include "hesspatch/errors.hpp"
#include "hesspatch/groebner.hpp"
#include "hesspatch/ideal.hpp"
#include "hesspatch/parse.hpp"
#include "hesspatch/tci.hpp"
#include "support.hpp"

using namespace hesspatch;
using testing_support::letters_ring;

namespace {

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, ring));
  return out;
}

struct RandomTci {
  std::vector<Polynomial> gens;
  std::vector<std::size_t> leads;
};

// Each tail only uses variables below its lead that are not leads of this
// or an earlier generator, so the defining conditions hold by construction.
RandomTci random_tci(std::mt19937_64& rng, const RingPtr& ring, const MonomialOrder& order) {
  const std::size_t nv = ring->num_variables();
  std::vector<std::size_t> vars(nv);
  for (std::size_t i = 0; i < nv; ++i) vars[i] = i;
  std::shuffle(vars.begin(), vars.end(), rng);
  std::size_t count = 1 + rng() % (nv - 1);
  RandomTci out;
  out.leads.assign(vars.begin(), vars.begin() + static_cast<long>(count));
  for (std::size_t j = 0; j < count; ++j) {
    std::size_t lead = out.leads[j];
    std::vector<std::size_t> allowed;
    for (std::size_t v = 0; v < nv; ++v) {
      bool earlier = std::find(out.leads.begin(), out.leads.begin() + static_cast<long>(j + 1), v) !=
                     out.leads.begin() + static_cast<long>(j + 1);
      if (!earlier && order.greater_variable(lead, v)) allowed.push_back(v);
    }
    Coefficient unit = ring->field().from_int(static_cast<std::int64_t>(1 + rng() % 6));
    std::vector<Term> terms{Term{Monomial::variable(lead), unit}};
    std::size_t tail = rng() % 4;
    for (std::size_t t = 0; t < tail; ++t) {
      Monomial m;
      for (std::size_t v : allowed) m.set(v, static_cast<unsigned>(rng() % 3));
      terms.push_back(Term{m, testing_support::random_coefficient(rng, ring->field())});
    }
    out.gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

}  // namespace

TEST(DetectTci, PatchIdealsAreTriangular) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& h : HessenbergFunction::enumerate(n, true)) {
      if (h.is_full()) continue;
      PatchIdeal patch = hess_generators(n, Permutation::longest(n), h);
      TCIResult r = detect_tci(patch.generators(), order_n(n));
      ASSERT_TRUE(r.ok()) << "n=" << n << " h=" << h.to_string() << ": " << r.failure->message;
      const auto& leads = r.witness->lead_variables;
      for (std::size_t j = 0; j < leads.size(); ++j) {
        auto [k, l] = patch.indices()[j];
        EXPECT_EQ(leads[j], *patch.ring()->variables().find(n + 1 - k, l + 1));
      }
    }
  }
}

TEST(DetectTci, ConclusionsMatchBuchberger) {
  const Field q = Field::rationals();
  for (int n = 3; n <= 5; ++n) {
    MonomialOrder order = order_n(n);
    for (const auto& h : HessenbergFunction::enumerate(n, true)) {
      if (h.is_full()) continue;
      PatchIdeal patch = hess_generators(n, Permutation::longest(n), h);
      TCIResult r = detect_tci(patch.generators(q), order);
      ASSERT_TRUE(r.ok());
      TCIConclusions c = tci_conclusions(*r.witness);
      GroebnerResult gb = buchberger(patch.generators(q), order);
      EXPECT_EQ(c.initial_ideal, lead_monomial_ideal(gb.basis, order));
      EXPECT_EQ(c.dimension, monomial_dimension(lead_monomial_ideal(gb.basis, order)));
      EXPECT_TRUE(check_groebner_basis(c.groebner_basis, order).is_basis);
      EXPECT_TRUE(ideal_equal(Ideal(patch.ring()->with_field(q), c.groebner_basis), Ideal(patch.ring()->with_field(q), gb.basis), order));
    }
  }
}

TEST(DetectTci, FailureReasons) {
  RingPtr zz = letters_ring(3, Field::integers());
  MonomialOrder order = MonomialOrder::identity(3);

  TCIResult r = detect_tci(parse_all({"a - c", "b^2 - c"}, zz), order);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failure->reason, TCIFailure::Reason::non_variable_lead);
  EXPECT_EQ(r.failure->j, 1u);

  r = detect_tci(parse_all({"2*a - b"}, zz), order);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failure->reason, TCIFailure::Reason::non_unit_lead);

  r = detect_tci(parse_all({"b - c", "a - b"}, zz), order);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failure->reason, TCIFailure::Reason::later_occurrence);
  EXPECT_EQ(r.failure->j, 0u);
  EXPECT_EQ(r.failure->m, std::optional<std::size_t>(1));

  // The same generators in the other order are fine.
  r = detect_tci(parse_all({"a - b", "b - c"}, zz), order);
  EXPECT_TRUE(r.ok());

  // 2 is a unit over QQ.
  RingPtr qq = letters_ring(3, Field::rationals());
  EXPECT_TRUE(detect_tci(parse_all({"2*a - b"}, qq), order).ok());

  EXPECT_THROW(detect_tci({Polynomial(zz)}, order), DomainError);
}

TEST(DetectTci, OrderMatters) {
  RingPtr ring = letters_ring(3, Field::rationals());
  auto gens = parse_all({"a - b*c"}, ring);
  EXPECT_TRUE(detect_tci(gens, MonomialOrder::identity(3)).ok());
  TCIResult r = detect_tci(gens, MonomialOrder({1, 0, 2}));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failure->reason, TCIFailure::Reason::non_variable_lead);
}

TEST(DetectTci, ConclusionsRejectRepeatedLeads) {
  RingPtr ring = letters_ring(2, Field::rationals());
  TCIWitness w;
  w.order = MonomialOrder::identity(2);
  w.generators = parse_all({"a - b", "a"}, ring);
  w.lead_variables = {0, 0};
  w.units = {ring->field().one(), ring->field().one()};
  EXPECT_THROW(tci_conclusions(w), CheckFailure);
}

TEST(DetectTci, RandomTriangularSequences) {
  std::mt19937_64 rng(17);
  const Field gf = Field::prime(7);
  RingPtr ring = letters_ring(6, gf);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<std::size_t> priority{0, 1, 2, 3, 4, 5};
    std::shuffle(priority.begin(), priority.end(), rng);
    MonomialOrder order(priority);
    RandomTci sample = random_tci(rng, ring, order);

    TCIResult r = detect_tci(sample.gens, order);
    ASSERT_TRUE(r.ok()) << r.failure->message;
    EXPECT_EQ(r.witness->lead_variables, sample.leads);
    TCIConclusions c = tci_conclusions(*r.witness);
    GroebnerResult gb = buchberger(sample.gens, order);
    EXPECT_EQ(c.initial_ideal, lead_monomial_ideal(gb.basis, order));
    EXPECT_EQ(c.dimension, 6 - sample.gens.size());
    EXPECT_EQ(c.dimension, monomial_dimension(c.initial_ideal));

    // Appending the first lead variable breaks the second condition at j = 0.
    auto broken = sample.gens;
    broken.push_back(Polynomial::variable(ring, sample.leads[0]));
    TCIResult bad = detect_tci(broken, order);
    ASSERT_FALSE(bad.ok());
    EXPECT_EQ(bad.failure->reason, TCIFailure::Reason::later_occurrence);
    EXPECT_EQ(bad.failure->j, 0u);
    EXPECT_EQ(bad.failure->m, std::optional<std::size_t>(sample.gens.size()));
  }
}
