#include "hesspatch/order.hpp"

#include <numeric>
#include <stdexcept>

namespace hesspatch {

MonomialOrder::MonomialOrder(std::vector<std::size_t> priority) : priority_(std::move(priority)) {
  rank_.assign(priority_.size(), priority_.size());
  for (std::size_t k = 0; k < priority_.size(); ++k) {
    std::size_t v = priority_[k];
    if (v >= priority_.size() || rank_[v] != priority_.size()) {
      throw std::invalid_argument("variable priority is not a permutation");
    }
    rank_[v] = k;
    if (v != k) identity_ = false;
  }
}

MonomialOrder MonomialOrder::identity(std::size_t num_variables) {
  std::vector<std::size_t> p(num_variables);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return MonomialOrder(std::move(p));
}

MonomialOrder MonomialOrder::from_names(const VariableSet& vars, const std::vector<std::string>& names) {
  if (names.size() != vars.size()) {
    throw std::invalid_argument("order lists " + std::to_string(names.size()) + " variables, ring has " +
                                std::to_string(vars.size()));
  }
  std::vector<std::size_t> p;
  for (const auto& n : names) {
    auto idx = vars.find(n);
    if (!idx) throw std::invalid_argument("unknown variable in order: " + n);
    p.push_back(*idx);
  }
  return MonomialOrder(std::move(p));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (identity_) return a <=> b;
  for (std::size_t v : priority_) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

Monomial MonomialOrder::to_ranked(const Monomial& m) const {
  if (identity_) return m;
  Monomial r;
  for (std::size_t k = 0; k < priority_.size(); ++k) r.set(k, m[priority_[k]]);
  return r;
}

Monomial MonomialOrder::from_ranked(const Monomial& m) const {
  if (identity_) return m;
  Monomial r;
  for (std::size_t k = 0; k < priority_.size(); ++k) r.set(priority_[k], m[k]);
  return r;
}

std::string MonomialOrder::describe(const VariableSet& vars) const {
  std::string out;
  for (std::size_t k = 0; k < priority_.size(); ++k) {
    if (k) out += " > ";
    out += vars[priority_[k]].name;
  }
  return out;
}

}  // namespace hesspatch
