#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hesspatch/order.hpp"
#include "hesspatch/polynomial.hpp"

namespace hesspatch {

struct Division {
  /// One quotient per divisor, aligned with the divisor list.
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Full multivariate division: f = sum quotients[i] * divisors[i] + remainder,
/// where no term of the remainder is divisible by a divisor's leading
/// monomial. At each step the first divisor (in list order) whose lead
/// divides the current term is used, so the result is deterministic.
Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Exact quotient f / g; throws DomainError when g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

struct BuchbergerOptions {
  /// Record, for each basis element, coefficients expressing it in the input generators.
  bool track_cofactors = false;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t product_criterion_skips = 0;
  std::size_t chain_criterion_skips = 0;
  std::size_t zero_reductions = 0;
  std::size_t elements_added = 0;
};

struct GroebnerResult {
  /// Reduced basis: monic, interreduced, sorted by decreasing leading monomial.
  std::vector<Polynomial> basis;
  /// Monic minimal basis before interreduction, in the order elements were
  /// accepted (input generators first). Equals the monic inputs exactly when
  /// the pair phase produced no new element and no input was redundant.
  std::vector<Polynomial> minimal_basis;
  /// When requested: cofactors[i][j] multiplies input generator j in the
  /// expression of basis[i].
  std::optional<std::vector<std::vector<Polynomial>>> cofactors;
  BuchbergerStats stats;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first) and the Gebauer-Moeller pair criteria. The ring must have
/// field coefficients.
GroebnerResult buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                          const BuchbergerOptions& options = {});

/// Monic interreduction of a minimal basis, sorted by decreasing lead.
std::vector<Polynomial> interreduce(const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// True iff the leading monomials are pairwise coprime.
bool coprime_leads_gb_check(const std::vector<Polynomial>& gens, const MonomialOrder& order);

struct GroebnerCheck {
  bool is_basis = true;
  /// First pair (by index) whose S-polynomial has a nonzero normal form.
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::size_t pairs_checked = 0;
};

/// Exhaustive S-polynomial test on every pair.
GroebnerCheck check_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// Verifies sum_j cofactors[j] * gens[j] == target.
bool verify_cofactors(const Polynomial& target, const std::vector<Polynomial>& cofactors,
                      const std::vector<Polynomial>& gens);

}  // namespace hesspatch
