#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hesspatch/ideal.hpp"
#include "hesspatch/order.hpp"
#include "hesspatch/polynomial.hpp"

namespace hesspatch {

/// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  /// Throws std::invalid_argument unless values is a bijection of {1..n}.
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);
  /// The longest element [n, n-1, ..., 1].
  static Permutation longest(int n);
  /// Accepts "w0" or a comma list such as "3,1,2".
  static Permutation parse(const std::string& text, int n);

  int size() const { return static_cast<int>(values_.size()); }
  /// w(i) for 1-based i.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  Permutation inverse() const;
  bool is_longest() const;
  const std::vector<int>& values() const { return values_; }
  std::string to_string() const;
  /// True when w has a decreasing subsequence of length 3.
  bool contains_321() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// Nondecreasing h : [n] -> [n] with h(i) >= i.
class HessenbergFunction {
 public:
  /// Throws std::invalid_argument for invalid values.
  explicit HessenbergFunction(std::vector<int> values);
  static HessenbergFunction parse(const std::string& text);
  /// (2, 3, ..., n, n): the smallest indecomposable function.
  static HessenbergFunction peterson(int n);
  static HessenbergFunction full(int n);
  static std::vector<HessenbergFunction> enumerate(int n, bool indecomposable_only);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& values() const { return values_; }
  /// h(i) >= i + 1 for every i < n.
  bool indecomposable() const;
  /// h(i) = n for all i; the patch ideal is zero.
  bool is_full() const;
  std::string to_string() const;

  bool operator==(const HessenbergFunction&) const = default;
  auto operator<=>(const HessenbergFunction&) const = default;

 private:
  std::vector<int> values_;
};

/// Matrix position (row k, column l), 1-based.
using Index = std::pair<int, int>;
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Ring of the w-chart: variables x[w(i),j] for i > j, sorted by (row, column),
/// so the canonical order of the w0-chart ring is the order <_n.
RingPtr chart_ring(int n, const Permutation& w, const Field& field = Field::integers());
RingPtr w0_ring(int n, const Field& field = Field::integers());

struct ChartMatrix {
  int n = 0;
  Permutation w = Permutation::identity(1);
  RingPtr ring;
  /// entries[r][c] is the 0-based (r, c) entry of wM.
  PolyMatrix entries;
};

ChartMatrix build_chart(int n, const Permutation& w, const Field& field = Field::integers());

PolyMatrix matrix_multiply(const PolyMatrix& a, const PolyMatrix& b);
bool is_identity_matrix(const PolyMatrix& m);

/// (wM)^{-1} via M^{-1} = sum_{k<n} (-L)^k for M = 1 + L and (wM)^{-1} = M^{-1} w^{-1}.
/// Throws CheckFailure if the product with wM is not the identity.
PolyMatrix invert_chart(const ChartMatrix& chart);

/// The inverse entry y_{i,j} of the w0 chart (located at row n+1-i, column
/// n+1-j of the inverse), computed as the signed complementary minor
/// (-1)^{n(n-1)/2} (-1)^{i+j} det of w0M with row n+1-j and column n+1-i removed.
Polynomial cofactor_y(const ChartMatrix& chart, int i, int j);

/// Determinant by expansion over column subsets; exact, O(2^n n^2) products.
Polynomial determinant(const PolyMatrix& m, const RingPtr& ring);

class PatchIdeal {
 public:
  int n() const { return n_; }
  const Permutation& w() const { return w_; }
  const HessenbergFunction& h() const { return h_; }
  const RingPtr& ring() const { return ring_; }
  /// Full matrix (wM)^{-1} N (wM); entry(k, l) is 1-based.
  const Polynomial& entry(int k, int l) const {
    return matrix_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)];
  }
  /// Generator indices {(k, l) : k > h(l)}, bottom-to-top then left-to-right.
  const std::vector<Index>& indices() const { return indices_; }
  /// Generators in the order of indices(), over the integers.
  std::vector<Polynomial> generators() const;
  /// Generators converted to another coefficient domain.
  std::vector<Polynomial> generators(const Field& field) const;
  Ideal ideal(const Field& field = Field::rationals()) const;

 private:
  friend PatchIdeal hess_generators(int n, const Permutation& w, const HessenbergFunction& h);
  int n_ = 0;
  Permutation w_ = Permutation::identity(1);
  HessenbergFunction h_ = HessenbergFunction::full(1);
  RingPtr ring_;
  PolyMatrix matrix_;
  std::vector<Index> indices_;
};

/// Patch ideal of the w-chart: generators ((wM)^{-1} N (wM))_{k,l} for k > h(l),
/// N the nilpotent Jordan block with ones just above the diagonal. Over the integers.
PatchIdeal hess_generators(int n, const Permutation& w, const HessenbergFunction& h);

/// Bottom-to-top, left-to-right list of all (k, l) with k > l + 1.
std::vector<Index> lower_indices(int n);

/// w0-chart entry by the recursion f_{k,l} = x_{n+2-k,l} - sum_{p=l+1}^{k-1} x_{n+1-k,p} f_{p,l}
/// with f_{l+1,l} = 1. Requires k > l + 1 (std::invalid_argument otherwise).
Polynomial recursion_f(int n, int k, int l);

/// Lex order x[1,1] > x[1,2] > ... > x[2,1] > ... on the w0-chart ring
/// (the identity order, since chart variables are sorted row-major).
MonomialOrder order_n(int n);
/// Weight n+1-i-j for x[i,j].
Grading chart_grading(int n);

/// Largest l with h(l) < n; throws std::invalid_argument for the full function.
int mu(const HessenbergFunction& h);
/// {(k,l) : h(l) < k < n} together with {(n,l) : h(l) < n, l > m}, ordered
/// bottom-to-top then left-to-right.
std::vector<Index> chain_indices(const HessenbergFunction& h, int m);

struct ChainIdeal {
  int n = 0;
  HessenbergFunction h = HessenbergFunction::full(1);
  int m = 0;
  std::vector<Index> indices;
  /// Over the integers, aligned with indices.
  std::vector<Polynomial> generators;

  Ideal ideal(const Field& field = Field::rationals()) const;
};

/// I_{w0,h}(m). Requires h indecomposable, not full, and 0 <= m <= mu(h).
ChainIdeal chain_ideal(int n, const HessenbergFunction& h, int m);

/// Inverse of x[i,j] -> x[i+1,j]: maps a polynomial of the n-chart ring with
/// no row-1 variable into the (n-1)-chart ring. Throws DomainError otherwise.
Polynomial relabel_down(const Polynomial& f, int n);
/// x[i,j] -> x[i+1,j] from the (n-1)-chart ring into the n-chart ring.
Polynomial relabel_up(const Polynomial& f, int n_minus_1);
/// h(l) if h(l) < n, else n - 1, for l = 1..n-1.
HessenbergFunction relabel_function(const HessenbergFunction& h);

}  // namespace hesspatch
