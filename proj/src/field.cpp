#include "hesspatch/field.hpp"

#include <stdexcept>

#include "hesspatch/errors.hpp"

namespace hesspatch {

bool Coefficient::operator==(const Coefficient& other) const {
  if (is_residue() != other.is_residue()) return false;
  if (is_residue()) return residue() == other.residue();
  return rational() == other.rational();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not a prime below 2^32");
  }
  return Field(FieldKind::prime, p);
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::rationals:
      return "QQ";
    case FieldKind::integers:
      return "ZZ";
    case FieldKind::prime:
      return "GF(" + std::to_string(p_) + ")";
  }
  return "?";
}

Coefficient Field::zero() const { return from_int(0); }
Coefficient Field::one() const { return from_int(1); }

Coefficient Field::from_int(std::int64_t v) const {
  if (kind_ == FieldKind::prime) {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return Coefficient(static_cast<std::uint64_t>(r));
  }
  return Coefficient(mpq_class(mpz_class(static_cast<long>(v))));
}

Coefficient Field::from_rational(const mpq_class& value) const {
  mpq_class q = value;
  q.canonicalize();
  switch (kind_) {
    case FieldKind::rationals:
      return Coefficient(q);
    case FieldKind::integers:
      if (q.get_den() != 1) {
        throw DomainError("coefficient " + q.get_str() + " is not an integer");
      }
      return Coefficient(q);
    case FieldKind::prime: {
      mpz_class p(static_cast<unsigned long>(p_));
      mpz_class num = q.get_num() % p;
      if (num < 0) num += p;
      mpz_class den = q.get_den() % p;
      if (den == 0) {
        throw DomainError("denominator of " + q.get_str() + " vanishes mod " + std::to_string(p_));
      }
      Coefficient n(static_cast<std::uint64_t>(num.get_ui()));
      Coefficient d(static_cast<std::uint64_t>(den.get_ui()));
      return div(n, d);
    }
  }
  throw std::logic_error("unreachable");
}

Coefficient Field::convert(const Coefficient& c, const Field& source) const {
  if (source == *this) return c;
  if (source.kind_ == FieldKind::prime) {
    if (kind_ == FieldKind::prime) {
      throw DomainError("cannot convert between prime fields of different characteristic");
    }
    return from_rational(source.to_rational(c));
  }
  return from_rational(c.rational());
}

bool Field::is_zero(const Coefficient& a) const {
  if (kind_ == FieldKind::prime) return a.residue() == 0;
  return sgn(a.rational()) == 0;
}

bool Field::is_one(const Coefficient& a) const {
  if (kind_ == FieldKind::prime) return a.residue() == 1;
  return a.rational() == 1;
}

bool Field::is_unit(const Coefficient& a) const {
  if (kind_ == FieldKind::integers) return abs(a.rational()) == 1;
  return !is_zero(a);
}

Coefficient Field::add(const Coefficient& a, const Coefficient& b) const {
  if (kind_ == FieldKind::prime) {
    std::uint64_t s = a.residue() + b.residue();
    return Coefficient(s >= p_ ? s - p_ : s);
  }
  return Coefficient(mpq_class(a.rational() + b.rational()));
}

Coefficient Field::sub(const Coefficient& a, const Coefficient& b) const {
  if (kind_ == FieldKind::prime) {
    std::uint64_t x = a.residue();
    std::uint64_t y = b.residue();
    return Coefficient(x >= y ? x - y : x + p_ - y);
  }
  return Coefficient(mpq_class(a.rational() - b.rational()));
}

Coefficient Field::mul(const Coefficient& a, const Coefficient& b) const {
  if (kind_ == FieldKind::prime) return Coefficient((a.residue() * b.residue()) % p_);
  return Coefficient(mpq_class(a.rational() * b.rational()));
}

Coefficient Field::neg(const Coefficient& a) const {
  if (kind_ == FieldKind::prime) return Coefficient(a.residue() == 0 ? 0 : p_ - a.residue());
  return Coefficient(mpq_class(-a.rational()));
}

Coefficient Field::pow(const Coefficient& a, std::uint64_t e) const {
  Coefficient result = one();
  Coefficient base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coefficient Field::inv(const Coefficient& a) const {
  if (is_zero(a)) throw DomainError("inverse of zero");
  switch (kind_) {
    case FieldKind::prime:
      return pow(a, p_ - 2);
    case FieldKind::integers:
      if (!is_unit(a)) throw DomainError("inverse of non-unit integer " + a.rational().get_str());
      return a;
    case FieldKind::rationals:
      return Coefficient(mpq_class(1 / a.rational()));
  }
  throw std::logic_error("unreachable");
}

int Field::print_sign(const Coefficient& a) const {
  if (kind_ == FieldKind::prime) return a.residue() > p_ / 2 ? -1 : 1;
  return sgn(a.rational()) < 0 ? -1 : 1;
}

mpq_class Field::to_rational(const Coefficient& a) const {
  if (kind_ == FieldKind::prime) {
    std::uint64_t r = a.residue();
    if (r > p_ / 2) return mpq_class(-mpz_class(static_cast<unsigned long>(p_ - r)));
    return mpq_class(mpz_class(static_cast<unsigned long>(r)));
  }
  return a.rational();
}

std::string Field::to_string(const Coefficient& a) const { return to_rational(a).get_str(); }

}  // namespace hesspatch
