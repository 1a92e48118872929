#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hesspatch/field.hpp"
#include "hesspatch/monomial.hpp"
#include "hesspatch/order.hpp"
#include "hesspatch/ring.hpp"

namespace hesspatch {

struct Term {
  Monomial monomial;
  Coefficient coeff;
};

/// Sparse polynomial. Terms are kept sorted by decreasing monomial in the
/// canonical (variable-index lexicographic) order, with no zero coefficients,
/// so equal polynomials have identical term vectors.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Caller guarantees canonical form (strictly decreasing, nonzero).
  static Polynomial from_canonical_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, const Coefficient& c);
  static Polynomial from_int(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Coefficient& c);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Coefficient of m (zero when absent).
  Coefficient coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial scale(const Coefficient& c) const;
  Polynomial mul_term(const Monomial& m, const Coefficient& c) const;
  Polynomial pow(unsigned e) const;

  /// Same ring and same terms.
  bool operator==(const Polynomial& other) const;

  /// Order-greatest term; throws DomainError for the zero polynomial.
  Term leading_term(const MonomialOrder& order) const;
  /// Scales so the leading coefficient is 1 (requires a unit leading coefficient).
  Polynomial monic(const MonomialOrder& order) const;

  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const;
  /// Flags for the variables occurring in some term.
  std::vector<bool> variables_used() const;
  bool uses_variable(std::size_t var) const { return degree_in(var) > 0; }

  /// Reinterprets the polynomial in a ring with the same variable count and a
  /// different coefficient domain (ZZ -> QQ, ZZ -> GF(p), ...).
  Polynomial change_ring(const RingPtr& target) const;
  /// Moves variable i to variable var_map[i] of target; coefficients converted.
  Polynomial rename(const RingPtr& target, const std::vector<std::size_t>& var_map) const;

 private:
  void require_same_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Result of testing a polynomial for homogeneity under a grading.
struct WeightedDegree {
  enum class Kind { homogeneous, inhomogeneous, zero };
  Kind kind = Kind::zero;
  long degree = 0;
  /// For inhomogeneous input: pairs of terms whose weighted degrees differ.
  std::vector<std::pair<Monomial, Monomial>> offending;

  bool homogeneous() const { return kind == Kind::homogeneous; }
};

WeightedDegree weighted_degree(const Polynomial& f, const Grading& grading);

}  // namespace hesspatch
