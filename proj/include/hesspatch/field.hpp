#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace hesspatch {

/// A scalar living in one of the supported coefficient domains. The domain
/// itself is carried by the owning ring's Field; a Coefficient on its own is
/// just a value (an exact rational, or a residue in [0, p-1]).
class Coefficient {
 public:
  Coefficient() : value_(std::uint64_t{0}) {}
  explicit Coefficient(std::uint64_t residue) : value_(residue) {}
  explicit Coefficient(mpq_class q) : value_(std::move(q)) {}

  bool is_residue() const { return std::holds_alternative<std::uint64_t>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  bool operator==(const Coefficient& other) const;

 private:
  std::variant<std::uint64_t, mpq_class> value_;
};

enum class FieldKind { rationals, integers, prime };

/// Coefficient domain descriptor: QQ, ZZ or F_p. All scalar arithmetic goes
/// through here so that a Coefficient never has to know its own domain.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::rationals, 0); }
  static Field integers() { return Field(FieldKind::integers, 0); }
  /// Throws std::invalid_argument unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != FieldKind::integers; }
  bool is_prime_field() const { return kind_ == FieldKind::prime; }
  std::string name() const;

  bool operator==(const Field& other) const = default;

  Coefficient zero() const;
  Coefficient one() const;
  Coefficient from_int(std::int64_t v) const;
  /// Exact conversion; throws DomainError when q is not representable
  /// (a non-integer over ZZ, or a denominator divisible by p).
  Coefficient from_rational(const mpq_class& q) const;
  /// Reinterprets a coefficient of `source` in this field (ZZ -> QQ, QQ -> F_p, ...).
  Coefficient convert(const Coefficient& c, const Field& source) const;

  bool is_zero(const Coefficient& a) const;
  bool is_one(const Coefficient& a) const;
  bool is_unit(const Coefficient& a) const;

  Coefficient add(const Coefficient& a, const Coefficient& b) const;
  Coefficient sub(const Coefficient& a, const Coefficient& b) const;
  Coefficient mul(const Coefficient& a, const Coefficient& b) const;
  Coefficient neg(const Coefficient& a) const;
  /// Multiplicative inverse; over ZZ only +-1 are invertible.
  Coefficient inv(const Coefficient& a) const;
  Coefficient div(const Coefficient& a, const Coefficient& b) const { return mul(a, inv(b)); }
  Coefficient pow(const Coefficient& a, std::uint64_t e) const;

  /// Sign used by the printer: -1 when the canonical rendering starts with '-'.
  /// Prime-field residues are printed in the symmetric range (-p/2, p/2].
  int print_sign(const Coefficient& a) const;
  std::string to_string(const Coefficient& a) const;
  /// Rational view of the value (residues mapped to the symmetric range).
  mpq_class to_rational(const Coefficient& a) const;

 private:
  Field(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace hesspatch
