#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hesspatch/groebner.hpp"
#include "hesspatch/order.hpp"
#include "hesspatch/polynomial.hpp"

namespace hesspatch {

/// Finitely generated ideal. Zero generators are dropped on construction. A
/// reduced Groebner basis for one order may be attached; it is trusted by
/// every operation that needs a basis for that order.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Copy with a basis attached. The basis must be reduced and generate the ideal.
  Ideal with_basis(const MonomialOrder& order, std::vector<Polynomial> basis) const;
  /// Attached basis when it was computed for `order`.
  const std::vector<Polynomial>* cached_basis(const MonomialOrder& order) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::optional<MonomialOrder> basis_order_;
  std::vector<Polynomial> basis_;
};

/// Reduced Groebner basis, from the cache when available.
std::vector<Polynomial> groebner_basis(const Ideal& ideal, const MonomialOrder& order);
/// Same ideal with its reduced basis for `order` attached.
Ideal with_groebner_basis(const Ideal& ideal, const MonomialOrder& order);

bool ideal_member(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order);
/// Every generator of `inner` lies in `outer`.
bool ideal_contains(const Ideal& outer, const Ideal& inner, const MonomialOrder& order);
/// Mutual containment.
bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order);

/// I intersected with J, from t*I + (1-t)*J with an auxiliary variable t
/// placed above every other variable and then eliminated. The result carries
/// its reduced basis for `order`.
Ideal ideal_intersection(const Ideal& a, const Ideal& b, const MonomialOrder& order);
/// (I : f) = { g : g f in I }, as (1/f) (I intersected with <f>). Throws DomainError for f = 0.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f, const MonomialOrder& order);
/// Generators of I intersected with the subring omitting `variables`,
/// expressed in the original ring. `order` fixes the relative order of the
/// remaining variables; eliminated variables are placed above them.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& variables, const MonomialOrder& order);

/// Ideal generated by monomials, stored as its minimal generators (an antichain
/// under divisibility) in increasing canonical order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t num_variables, std::vector<Monomial> generators);

  std::size_t num_variables() const { return num_variables_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Monomial& m) const;
  bool is_squarefree() const;
  /// Every minimal generator is a single variable.
  bool is_generated_by_variables() const;

  bool operator==(const MonomialIdeal& other) const {
    return num_variables_ == other.num_variables_ && gens_ == other.gens_;
  }

 private:
  std::size_t num_variables_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal initial_ideal(const Ideal& ideal, const MonomialOrder& order);
MonomialIdeal lead_monomial_ideal(const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// Krull dimension of k[x]/M: the largest set of variables containing the
/// support of no generator. Exhaustive branch-and-bound search.
std::size_t monomial_dimension(const MonomialIdeal& ideal);

/// Number of monomials outside M in each weighted degree 0..dmax. Throws
/// std::invalid_argument for a grading that is not positive.
std::vector<std::uint64_t> hilbert_function(const MonomialIdeal& ideal, const Grading& grading, int dmax);

enum class RadicalCertificate { radical_by_squarefree_initial, unknown };
std::string to_string(RadicalCertificate c);
RadicalCertificate radical_certificate(const Ideal& ideal, const MonomialOrder& order);

}  // namespace hesspatch
