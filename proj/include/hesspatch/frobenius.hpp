#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hesspatch/chart.hpp"
#include "hesspatch/ideal.hpp"
#include "hesspatch/tci.hpp"

namespace hesspatch {

/// Trace map over GF(p): x^a -> x^{(a+1)/p - 1} when every a_i + 1 is
/// divisible by p, and 0 otherwise; coefficients pass through unchanged.
/// Throws DomainError unless the ring has prime-field coefficients.
Polynomial trace(const Polynomial& g);

/// Standard splitting: x^a -> x^{a/p} when p divides every a_i, else 0.
Polynomial phi_std(const Polynomial& g);

/// Outcome of testing Tr(g^{p-1}) = 1.
struct UnitCheck {
  /// in(g) is the product of all ring variables.
  bool hypothesis = false;
  /// Tr(g^{p-1}) = 1.
  bool result = false;
  bool within_budget = true;
  std::size_t power_terms = 0;
};

/// The map phi_f(g) = Tr(f g) together with where f came from.
class SplittingElement {
 public:
  enum class Provenance { standard, f_i_power, f_n_power, user };

  /// f = prod x_i^{p-1}; phi_f is the standard splitting.
  static SplittingElement standard(const RingPtr& ring);
  /// f = g^{p-1} over GF(p), with the unit check recorded. g is converted to
  /// GF(p) first. When the expansion would exceed term_budget terms the
  /// element is left without f and the check reports within_budget = false.
  static SplittingElement from_power(const Polynomial& g, std::uint64_t p, const MonomialOrder& order,
                                     Provenance provenance, std::size_t term_budget = 4'000'000);
  static SplittingElement user(const Polynomial& f);

  std::uint64_t p() const { return p_; }
  const Polynomial& f() const { return f_; }
  Provenance provenance() const { return provenance_; }
  const std::optional<Polynomial>& base() const { return base_; }
  const UnitCheck& unit_check() const { return unit_; }

  /// Tr(f g), computed by pairing each term of g only with the terms of f
  /// whose exponents complete it to p-1 modulo p.
  Polynomial apply(const Polynomial& g) const;

 private:
  struct Buckets;
  SplittingElement() = default;
  void index_terms();

  std::uint64_t p_ = 0;
  Polynomial f_;
  Provenance provenance_ = Provenance::user;
  std::optional<Polynomial> base_;
  UnitCheck unit_;
  std::shared_ptr<const Buckets> buckets_;
};

std::string to_string(SplittingElement::Provenance p);

Polynomial phi_f(const SplittingElement& s, const Polynomial& g);

/// Computes g^{p-1} exactly and tests Tr(g^{p-1}) = 1, also reporting
/// whether in(g) is the product of all variables.
UnitCheck splitting_unit_check(const Polynomial& g, const MonomialOrder& order, std::uint64_t p,
                               std::size_t term_budget = 4'000'000);

/// F_I = (product of the variables that are not leads) * prod u_j^{-1} f_j.
/// Throws CheckFailure if in(F_I) is not the product of all variables.
Polynomial build_F_I(const TCIWitness& witness);
/// F_n = (-1)^{(n-1)(n-2)/2} (prod_{i<n} x[i,1]) (prod_{k>l+1} f_{k,l}) over the
/// integers. Throws CheckFailure if its leading term is not the product of
/// all chart variables.
Polynomial build_F_n(int n);

/// <g^p : g a generator>, over GF(p) (generators are converted).
Ideal frobenius_power(const Ideal& ideal, std::uint64_t p);

struct CompatOptions {
  std::size_t samples = 64;
  std::uint64_t seed = 20240601;
  /// Added to deg(f g_i)/p to bound the total degree of sampled monomials.
  unsigned degree_margin = 2;
};

struct CompatReport {
  std::uint64_t p = 0;
  /// f g_i in I^[p] for every generator (sufficient for phi_f(I) in I).
  bool frob_power_membership = false;
  std::vector<bool> generator_membership;
  std::size_t sampled_count = 0;
  std::size_t sampled_failures = 0;
  std::uint64_t seed = 0;

  bool passed() const { return frob_power_membership; }
};

/// Compatibility of I with phi_f. Criterion (i): f g_i in I^[p] for each
/// generator. Corroboration (ii): phi_f(m g_i) reduces to zero modulo I for
/// sampled monomials m with exponents below p. Throws DomainError when the
/// splitting element has not passed its unit check.
CompatReport compat_check(const SplittingElement& s, const Ideal& ideal, std::uint64_t p,
                          const CompatOptions& options = {});

struct PosetNode {
  HessenbergFunction h = HessenbergFunction::full(1);
  std::vector<Index> indices;
  std::vector<Polynomial> generators;
  CompatReport report;
};

struct PosetEdge {
  /// I_to is contained in I_from (index set of `to` inside that of `from`).
  std::size_t from;
  std::size_t to;
  bool verified = false;
};

struct SplitPoset {
  int n = 0;
  std::uint64_t p = 0;
  UnitCheck unit_check;
  std::vector<PosetNode> nodes;
  std::vector<PosetEdge> edges;

  bool all_passed() const;
};

/// Every indecomposable h for this n, each checked against phi_{F_n^{p-1}},
/// with all inclusion edges spot-verified by ideal membership. Throws
/// CheckFailure if a node fails criterion (i) or an edge fails verification.
SplitPoset split_poset(int n, std::uint64_t p, const CompatOptions& options = {});

}  // namespace hesspatch
