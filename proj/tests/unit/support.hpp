#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hesspatch/field.hpp"
#include "hesspatch/parse.hpp"
#include "hesspatch/polynomial.hpp"
#include "hesspatch/ring.hpp"

namespace testing_support {

using namespace hesspatch;

inline RingPtr letters_ring(std::size_t count, const Field& field, std::optional<Grading> grading = std::nullopt) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return PolynomialRing::make(VariableSet::from_names(names), field, std::move(grading));
}

inline Coefficient random_coefficient(std::mt19937_64& rng, const Field& field, int bound = 5) {
  std::int64_t num = static_cast<std::int64_t>(rng() % (2 * bound + 1)) - bound;
  if (field.kind() == FieldKind::rationals && rng() % 4 == 0) {
    std::int64_t den = static_cast<std::int64_t>(rng() % 4) + 1;
    return field.from_rational(mpq_class(static_cast<long>(num), static_cast<unsigned long>(den)));
  }
  return field.from_int(num);
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_exp) {
  Monomial m;
  for (std::size_t v = 0; v < nvars; ++v) m.set(v, static_cast<unsigned>(rng() % (max_exp + 1)));
  return m;
}

inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_terms, unsigned max_exp) {
  std::vector<Term> terms;
  std::size_t count = rng() % (max_terms + 1);
  for (std::size_t i = 0; i < count; ++i) {
    terms.push_back(Term{random_monomial(rng, ring->num_variables(), max_exp), random_coefficient(rng, ring->field())});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Evaluates f at an integer point modulo p by direct summation, without
/// using any polynomial arithmetic.
inline std::uint64_t eval_mod(const Polynomial& f, const std::vector<std::uint64_t>& point, std::uint64_t p) {
  std::uint64_t total = 0;
  for (const auto& t : f.terms()) {
    mpq_class c = f.field().to_rational(t.coeff);
    mpz_class num = c.get_num() % static_cast<unsigned long>(p);
    if (num < 0) num += static_cast<unsigned long>(p);
    mpz_class den = c.get_den();
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
    mpz_class reduced = num * den_inv % static_cast<unsigned long>(p);
    std::uint64_t value = reduced.get_ui();
    for (std::size_t v = 0; v < point.size(); ++v) {
      for (unsigned e = 0; e < t.monomial[v]; ++e) value = value * point[v] % p;
    }
    total = (total + value) % p;
  }
  return total;
}

}  // namespace testing_support

namespace hesspatch {
inline void PrintTo(const Polynomial& f, std::ostream* os) {
  *os << (f.ring() ? format_poly(f) : std::string("<no ring>")) << " over "
      << (f.ring() ? f.field().name() : std::string("?"));
}
}  // namespace hesspatch
