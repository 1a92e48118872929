#pragma once

// Internal helpers shared by the Groebner sources. Every algorithm runs on
// polynomials whose variables have been permuted so that the active order is
// the plain byte-wise lexicographic order; RankedFrame does the translation.

#include <vector>

#include "hesspatch/groebner.hpp"

namespace hesspatch::detail {

struct RankedFrame {
  RankedFrame(const RingPtr& ring, const MonomialOrder& order);

  Polynomial in(const Polynomial& f) const;
  Polynomial out(const Polynomial& f) const;
  std::vector<Polynomial> in(const std::vector<Polynomial>& fs) const;
  std::vector<Polynomial> out(const std::vector<Polynomial>& fs) const;

  RingPtr original;
  RingPtr ranked;
  bool identity = true;
  std::vector<std::size_t> to_rank;
  std::vector<std::size_t> from_rank;
};

/// Division in a ring whose canonical order is the active order.
Division divide_lex(const Polynomial& f, const std::vector<Polynomial>& divisors, bool want_quotients);

}  // namespace hesspatch::detail
