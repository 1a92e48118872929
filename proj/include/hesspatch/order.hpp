#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hesspatch/monomial.hpp"
#include "hesspatch/ring.hpp"

namespace hesspatch {

/// Lexicographic order induced by a ranking of the variables, highest first.
/// priority()[0] is the index of the greatest variable.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  /// Throws std::invalid_argument unless priority is a permutation of 0..size-1.
  explicit MonomialOrder(std::vector<std::size_t> priority);
  /// The order in which variable 0 is greatest, then variable 1, and so on.
  static MonomialOrder identity(std::size_t num_variables);
  /// Order from a list of variable names, highest first.
  static MonomialOrder from_names(const VariableSet& vars, const std::vector<std::string>& names);

  std::size_t size() const { return priority_.size(); }
  const std::vector<std::size_t>& priority() const { return priority_; }
  bool is_identity() const { return identity_; }
  /// Position of a variable in the priority list (0 = greatest).
  std::size_t rank(std::size_t var) const { return rank_[var]; }
  bool greater_variable(std::size_t a, std::size_t b) const { return rank_[a] < rank_[b]; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Rewrites m so that slot k holds the exponent of the k-th greatest
  /// variable; byte-wise comparison of the results is then this order.
  Monomial to_ranked(const Monomial& m) const;
  Monomial from_ranked(const Monomial& m) const;

  std::string describe(const VariableSet& vars) const;

  bool operator==(const MonomialOrder& other) const { return priority_ == other.priority_; }

 private:
  std::vector<std::size_t> priority_;
  std::vector<std::size_t> rank_;
  bool identity_ = true;
};

}  // namespace hesspatch
