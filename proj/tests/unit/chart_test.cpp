#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "hesspatch/chart.hpp"
#include "hesspatch/errors.hpp"
#include "hesspatch/parse.hpp"
#include "support.hpp"

using namespace hesspatch;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

int sign(const Permutation& w) {
  int inversions = 0;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) inversions += w(i) > w(j);
  }
  return inversions % 2 ? -1 : 1;
}

// (wM)^{-1} by the adjugate formula, using det(wM) = sign(w).
PolyMatrix adjugate_inverse(const ChartMatrix& chart) {
  const int n = chart.n;
  const Polynomial det_sign = Polynomial::from_int(chart.ring, sign(chart.w));
  PolyMatrix inv(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(chart.ring)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      PolyMatrix minor;
      for (int i = 0; i < n; ++i) {
        if (i == c) continue;
        std::vector<Polynomial> row;
        for (int j = 0; j < n; ++j) {
          if (j != r) row.push_back(chart.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
        minor.push_back(std::move(row));
      }
      Polynomial cof = determinant(minor, chart.ring) * det_sign;
      inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = (r + c) % 2 ? -cof : cof;
    }
  }
  return inv;
}

TEST(Permutation, ParseAndInverse) {
  Permutation w = Permutation::parse("3,1,2", 3);
  EXPECT_EQ(w.inverse(), Permutation({2, 3, 1}));
  EXPECT_EQ(Permutation::parse("w0", 4), Permutation({4, 3, 2, 1}));
  EXPECT_TRUE(Permutation::longest(4).is_longest());
  EXPECT_THROW(Permutation::parse("1,1,2", 3), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("1,2", 3), std::invalid_argument);
}

TEST(Permutation, Pattern321AgainstTripleSearch) {
  EXPECT_FALSE(Permutation::identity(3).contains_321());
  EXPECT_TRUE(Permutation::longest(4).contains_321());
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      bool found = false;
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (int k = j + 1; k <= n; ++k) found = found || (w(i) > w(j) && w(j) > w(k));
        }
      }
      ASSERT_EQ(w.contains_321(), found) << w.to_string();
    }
  }
}

// Hessenberg functions are counted by Catalan numbers; indecomposable ones
// for n by the previous Catalan number. Checked against direct enumeration.
TEST(HessenbergFunction, EnumerationAgainstBruteForce) {
  for (int n = 1; n <= 7; ++n) {
    std::size_t all = 0;
    std::size_t indecomposable = 0;
    std::vector<int> h(static_cast<std::size_t>(n), 1);
    for (;;) {
      bool valid = h[static_cast<std::size_t>(n - 1)] == n;
      bool indec = true;
      for (int i = 1; i <= n; ++i) {
        int value = h[static_cast<std::size_t>(i - 1)];
        valid = valid && value >= i && (i == 1 || value >= h[static_cast<std::size_t>(i - 2)]);
        if (i < n) indec = indec && value >= i + 1;
      }
      all += valid;
      indecomposable += valid && indec;
      std::size_t k = 0;
      while (k < h.size() && ++h[k] > n) h[k++] = 1;
      if (k == h.size()) break;
    }
    EXPECT_EQ(HessenbergFunction::enumerate(n, false).size(), all);
    EXPECT_EQ(HessenbergFunction::enumerate(n, true).size(), indecomposable);
  }
  EXPECT_EQ(HessenbergFunction::enumerate(5, true).size(), 14u);
}

TEST(HessenbergFunction, Validation) {
  EXPECT_THROW(HessenbergFunction({2, 1, 3}), std::invalid_argument);
  EXPECT_THROW(HessenbergFunction({1, 3, 2}), std::invalid_argument);
  EXPECT_THROW(HessenbergFunction({2, 3, 4}), std::invalid_argument);
  EXPECT_TRUE(HessenbergFunction::peterson(4).indecomposable());
  EXPECT_FALSE(HessenbergFunction({1, 3, 3}).indecomposable());
  EXPECT_TRUE(HessenbergFunction::full(3).is_full());
  EXPECT_EQ(HessenbergFunction::parse("2,3,4,5,5").to_string(), "2,3,4,5,5");
}

TEST(Chart, RingAndGrading) {
  RingPtr ring = w0_ring(4);
  ASSERT_EQ(ring->num_variables(), 6u);
  EXPECT_EQ(ring->variables()[0].name, "x[1,1]");
  EXPECT_EQ(ring->variables()[5].name, "x[3,1]");
  EXPECT_EQ(chart_grading(4).weights(), (std::vector<int>{3, 2, 1, 2, 1, 1}));
  for (int n = 2; n <= 8; ++n) EXPECT_TRUE(chart_grading(n).positive());
}

TEST(Chart, DeterminantIsTheSignOfW) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& w : all_permutations(n)) {
      ChartMatrix chart = build_chart(n, w);
      ASSERT_EQ(determinant(chart.entries, chart.ring), Polynomial::from_int(chart.ring, sign(w))) << w.to_string();
    }
  }
}

// The nilpotent-series inverse agrees with the adjugate, and multiplies back
// to the identity.
TEST(Chart, InverseAgreesWithAdjugate) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& w : all_permutations(n)) {
      ChartMatrix chart = build_chart(n, w);
      PolyMatrix inv = invert_chart(chart);
      ASSERT_TRUE(is_identity_matrix(matrix_multiply(inv, chart.entries)));
      ASSERT_TRUE(is_identity_matrix(matrix_multiply(chart.entries, inv)));
      ASSERT_EQ(inv, adjugate_inverse(chart)) << w.to_string();
    }
  }
  for (int n = 5; n <= 7; ++n) {
    ChartMatrix chart = build_chart(n, Permutation::longest(n));
    EXPECT_TRUE(is_identity_matrix(matrix_multiply(invert_chart(chart), chart.entries)));
  }
}

// y_{i,j} sits at row n+1-i, column n+1-j of the w0 inverse.
TEST(Chart, SignedMinorsGiveTheW0Inverse) {
  for (int n = 2; n <= 6; ++n) {
    ChartMatrix chart = build_chart(n, Permutation::longest(n));
    PolyMatrix inv = invert_chart(chart);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        ASSERT_EQ(inv[static_cast<std::size_t>(n - i)][static_cast<std::size_t>(n - j)], cofactor_y(chart, i, j));
      }
    }
  }
  EXPECT_THROW(cofactor_y(build_chart(3, Permutation::identity(3)), 1, 1), std::invalid_argument);
}

TEST(Chart, InverseEntriesForFourByFour) {
  ChartMatrix chart = build_chart(4, Permutation::longest(4));
  EXPECT_EQ(cofactor_y(chart, 1, 3), parse_poly("-x[1,3]", chart.ring));
  EXPECT_EQ(cofactor_y(chart, 1, 2), parse_poly("-x[1,2] + x[1,3]*x[2,2]", chart.ring));
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(cofactor_y(chart, i, 5 - i), Polynomial::from_int(chart.ring, 1));
}

// Hand-entered n = 5 generators for h = (2,3,4,5,5).
TEST(Generators, FiveByFiveExample) {
  PatchIdeal patch = hess_generators(5, Permutation::longest(5), HessenbergFunction::parse("2,3,4,5,5"));
  const RingPtr& ring = patch.ring();
  const std::vector<std::pair<Index, std::string>> expected = {
      {{5, 1},
       "-x[1,2] + x[1,3]*x[3,2] - x[1,3]*x[4,1] + x[1,4]*x[2,2] - x[1,4]*x[2,3]*x[3,2] + x[1,4]*x[2,3]*x[4,1] - "
       "x[1,4]*x[3,1] + x[2,1]"},
      {{5, 2}, "-x[1,3] + x[1,4]*x[2,3] - x[1,4]*x[3,2] + x[2,2]"},
      {{5, 3}, "-x[1,4] + x[2,3]"},
      {{4, 1}, "-x[2,2] + x[2,3]*x[3,2] - x[2,3]*x[4,1] + x[3,1]"},
      {{4, 2}, "-x[2,3] + x[3,2]"},
      {{3, 1}, "-x[3,2] + x[4,1]"}};
  ASSERT_EQ(patch.indices().size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(patch.indices()[i], expected[i].first);
    EXPECT_EQ(patch.generators()[i], parse_poly(expected[i].second, ring));
  }
}

TEST(Generators, EntriesAgreeWithAdjugateConjugation) {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& w : all_permutations(n)) {
      ChartMatrix chart = build_chart(n, w);
      PolyMatrix inv = adjugate_inverse(chart);
      PatchIdeal patch = hess_generators(n, w, HessenbergFunction::full(n));
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          // ((wM)^{-1} N (wM))_{k,l} = sum_a y_{k,a} (wM)_{a+1,l}.
          Polynomial expected(chart.ring);
          for (int a = 1; a < n; ++a) {
            expected = expected + inv[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(a - 1)] *
                                      chart.entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(l - 1)];
          }
          ASSERT_EQ(patch.entry(k, l), expected) << w.to_string() << " " << k << "," << l;
        }
      }
    }
  }
}

TEST(Generators, RecursionMatchesMatrixEntries) {
  for (int n = 3; n <= 6; ++n) {
    PatchIdeal patch = hess_generators(n, Permutation::longest(n), HessenbergFunction::full(n));
    for (const auto& [k, l] : lower_indices(n)) ASSERT_EQ(recursion_f(n, k, l), patch.entry(k, l));
  }
  EXPECT_THROW(recursion_f(4, 2, 1), std::invalid_argument);
}

TEST(Generators, InitialTermsAndHomogeneity) {
  for (int n = 3; n <= 6; ++n) {
    PatchIdeal patch = hess_generators(n, Permutation::longest(n), HessenbergFunction::full(n));
    const RingPtr& ring = patch.ring();
    MonomialOrder order = order_n(n);
    Grading grading = chart_grading(n);
    for (const auto& [k, l] : lower_indices(n)) {
      const Polynomial& f = patch.entry(k, l);
      Term lt = f.leading_term(order);
      std::size_t lead_var = *ring->variables().find(n + 1 - k, l + 1);
      ASSERT_EQ(lt.monomial, Monomial::variable(lead_var));
      ASSERT_EQ(Field::integers().to_string(lt.coeff), "-1");
      WeightedDegree wd = weighted_degree(f, grading);
      ASSERT_TRUE(wd.homogeneous());
      ASSERT_EQ(wd.degree, k - l - 1);
    }
  }
}

TEST(Generators, CountMatchesIndexSet) {
  for (const auto& w : all_permutations(4)) {
    for (const auto& h : HessenbergFunction::enumerate(4, false)) {
      PatchIdeal patch = hess_generators(4, w, h);
      std::size_t expected = 0;
      for (int l = 1; l <= 4; ++l) expected += static_cast<std::size_t>(4 - h(l));
      ASSERT_EQ(patch.indices().size(), expected);
    }
  }
  EXPECT_TRUE(hess_generators(4, Permutation::longest(4), HessenbergFunction::full(4)).ideal().is_zero());
}

TEST(ChainIdeals, LevelsShrinkToTheRelabelledPatch) {
  HessenbergFunction h = HessenbergFunction::parse("2,3,4,5,5");
  EXPECT_EQ(mu(h), 3);
  EXPECT_THROW(mu(HessenbergFunction::full(4)), std::invalid_argument);
  ChainIdeal zero = chain_ideal(5, h, 0);
  PatchIdeal patch = hess_generators(5, Permutation::longest(5), h);
  EXPECT_EQ(zero.indices, patch.indices());
  EXPECT_EQ(zero.generators, patch.generators());
  ChainIdeal last = chain_ideal(5, h, 3);
  EXPECT_EQ(last.indices, (std::vector<Index>{{4, 1}, {4, 2}, {3, 1}}));
  EXPECT_EQ(relabel_function(h), HessenbergFunction::parse("2,3,4,4"));
  PatchIdeal smaller = hess_generators(4, Permutation::longest(4), relabel_function(h));
  for (std::size_t i = 0; i < last.generators.size(); ++i) {
    Polynomial down = relabel_down(last.generators[i], 5);
    EXPECT_EQ(down, smaller.generators()[i]);
    EXPECT_EQ(relabel_up(down, 4), last.generators[i]);
  }
  EXPECT_THROW(relabel_down(Polynomial::variable(w0_ring(5), 0), 5), DomainError);
  EXPECT_THROW(chain_ideal(5, h, 4), std::out_of_range);
}

}  // namespace
