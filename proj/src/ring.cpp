#include "hesspatch/ring.hpp"

#include <stdexcept>
#include <unordered_set>

namespace hesspatch {

std::string chart_variable_name(int row, int col) {
  return "x[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

VariableSet::VariableSet(std::vector<Variable> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v.name).second) throw std::invalid_argument("duplicate variable " + v.name);
  }
}

VariableSet VariableSet::from_names(const std::vector<std::string>& names) {
  std::vector<Variable> vars;
  vars.reserve(names.size());
  for (const auto& n : names) vars.push_back(Variable{n, std::nullopt});
  return VariableSet(std::move(vars));
}

std::optional<std::size_t> VariableSet::find(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> VariableSet::find(int row, int col) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].index && vars_[i].index->first == row && vars_[i].index->second == col) return i;
  }
  return std::nullopt;
}

Grading::Grading(std::vector<int> weights) : weights_(std::move(weights)) {
  for (int w : weights_) {
    if (w < 1) positive_ = false;
  }
}

long Grading::degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) d += static_cast<long>(weights_[i]) * m[i];
  return d;
}

RingPtr PolynomialRing::make(VariableSet vars, Field field, std::optional<Grading> grading) {
  if (grading && grading->weights().size() != vars.size()) {
    throw std::invalid_argument("grading needs one weight per variable");
  }
  return RingPtr(new PolynomialRing(std::move(vars), field, std::move(grading)));
}

RingPtr PolynomialRing::with_field(const Field& field) const { return make(vars_, field, grading_); }

RingPtr PolynomialRing::with_grading(std::optional<Grading> grading) const {
  return make(vars_, field_, std::move(grading));
}

}  // namespace hesspatch
