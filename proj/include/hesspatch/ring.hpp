#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hesspatch/field.hpp"
#include "hesspatch/monomial.hpp"

namespace hesspatch {

struct Variable {
  std::string name;
  /// Matrix position (row, column) for chart variables.
  std::optional<std::pair<int, int>> index;

  bool operator==(const Variable&) const = default;
};

/// Canonical spelling of a chart variable, e.g. "x[2,3]".
std::string chart_variable_name(int row, int col);

/// Ordered, duplicate-free list of variables; fixed once built.
class VariableSet {
 public:
  VariableSet() = default;
  /// Throws std::invalid_argument on duplicate names or more than kMaxVariables entries.
  explicit VariableSet(std::vector<Variable> vars);
  static VariableSet from_names(const std::vector<std::string>& names);

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& all() const { return vars_; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::optional<std::size_t> find(int row, int col) const;

  bool operator==(const VariableSet& other) const { return vars_ == other.vars_; }

 private:
  std::vector<Variable> vars_;
};

/// Integer weight per variable; a grading is positive when every weight is at least 1.
class Grading {
 public:
  Grading() = default;
  explicit Grading(std::vector<int> weights);

  const std::vector<int>& weights() const { return weights_; }
  bool positive() const { return positive_; }
  long degree(const Monomial& m) const;

  bool operator==(const Grading& other) const { return weights_ == other.weights_; }

 private:
  std::vector<int> weights_;
  bool positive_ = true;
};

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

class PolynomialRing {
 public:
  static RingPtr make(VariableSet vars, Field field, std::optional<Grading> grading = std::nullopt);

  const VariableSet& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_.size(); }
  const Field& field() const { return field_; }
  const std::optional<Grading>& grading() const { return grading_; }

  /// Same variables and grading, different coefficient domain.
  RingPtr with_field(const Field& field) const;
  RingPtr with_grading(std::optional<Grading> grading) const;

  /// Rings are interchangeable when their variables and coefficient domains agree.
  bool compatible(const PolynomialRing& other) const {
    return this == &other || (field_ == other.field_ && vars_ == other.vars_);
  }

 private:
  PolynomialRing(VariableSet vars, Field field, std::optional<Grading> grading)
      : vars_(std::move(vars)), field_(field), grading_(std::move(grading)) {}

  VariableSet vars_;
  Field field_;
  std::optional<Grading> grading_;
};

}  // namespace hesspatch
