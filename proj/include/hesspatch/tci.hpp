#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hesspatch/ideal.hpp"

namespace hesspatch {

/// An ordered generator list f_1..f_r whose leading terms are u_j * x_{i_j}
/// for distinct variables, where x_{i_j} occurs in no f_m with m > j.
struct TCIWitness {
  MonomialOrder order;
  std::vector<Polynomial> generators;
  std::vector<std::size_t> lead_variables;
  std::vector<Coefficient> units;

  std::size_t height() const { return generators.size(); }
};

struct TCIFailure {
  enum class Reason { non_variable_lead, non_unit_lead, later_occurrence };
  Reason reason;
  /// 0-based position of the offending generator.
  std::size_t j;
  /// For later_occurrence: the later generator containing x_{i_j}.
  std::optional<std::size_t> m;
  std::string message;
};

struct TCIResult {
  std::optional<TCIWitness> witness;
  std::optional<TCIFailure> failure;
  bool ok() const { return witness.has_value(); }
};

/// Tests the two defining conditions on the given sequence. Throws
/// DomainError on a zero generator.
TCIResult detect_tci(const std::vector<Polynomial>& gens, const MonomialOrder& order);

struct TCIConclusions {
  /// The witness generators, which form a Groebner basis.
  std::vector<Polynomial> groebner_basis;
  MonomialIdeal initial_ideal;
  /// Variable count minus the height.
  std::size_t dimension = 0;
};

/// Consequences of a witness: the generators are a Groebner basis (confirmed
/// with the coprime-leads criterion), the initial ideal is generated by the
/// lead variables, and the quotient has dimension (#variables - height).
/// Throws CheckFailure if the witness does not have coprime leads.
TCIConclusions tci_conclusions(const TCIWitness& witness);

}  // namespace hesspatch
