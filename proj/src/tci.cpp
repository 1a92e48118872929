#include "hesspatch/tci.hpp"

#include "hesspatch/errors.hpp"

namespace hesspatch {

TCIResult detect_tci(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  TCIResult result;
  TCIWitness w;
  w.order = order;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Polynomial& f = gens[j];
    if (f.is_zero()) throw DomainError("detect_tci: generator " + std::to_string(j + 1) + " is zero");
    Term lt = f.leading_term(order);
    if (lt.monomial.total_degree() != 1) {
      result.failure = TCIFailure{TCIFailure::Reason::non_variable_lead, j, std::nullopt,
                                  "leading term of generator " + std::to_string(j + 1) + " is not a variable"};
      return result;
    }
    if (!f.field().is_unit(lt.coeff)) {
      result.failure = TCIFailure{TCIFailure::Reason::non_unit_lead, j, std::nullopt,
                                  "leading coefficient of generator " + std::to_string(j + 1) + " is not a unit"};
      return result;
    }
    std::size_t var = 0;
    while (lt.monomial[var] == 0) ++var;
    w.generators.push_back(f);
    w.lead_variables.push_back(var);
    w.units.push_back(lt.coeff);
  }
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t m = j + 1; m < gens.size(); ++m) {
      if (gens[m].uses_variable(w.lead_variables[j])) {
        const auto& name = gens[j].ring()->variables()[w.lead_variables[j]].name;
        result.failure = TCIFailure{TCIFailure::Reason::later_occurrence, j, m,
                                    "lead variable " + name + " of generator " + std::to_string(j + 1) +
                                        " occurs in generator " + std::to_string(m + 1)};
        return result;
      }
    }
  }
  result.witness = std::move(w);
  return result;
}

TCIConclusions tci_conclusions(const TCIWitness& witness) {
  TCIConclusions c;
  if (!coprime_leads_gb_check(witness.generators, witness.order)) {
    throw CheckFailure("tci_conclusions", "coprime_leads", "lead variables are not distinct");
  }
  c.groebner_basis = witness.generators;
  std::vector<Monomial> leads;
  for (std::size_t v : witness.lead_variables) leads.push_back(Monomial::variable(v));
  std::size_t nvars = witness.order.size();
  c.initial_ideal = MonomialIdeal(nvars, std::move(leads));
  c.dimension = nvars - witness.height();
  return c;
}

}  // namespace hesspatch
