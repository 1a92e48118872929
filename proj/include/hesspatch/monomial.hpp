#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>

namespace hesspatch {

/// Upper bound on the number of ring variables. The n = 7 chart has 21
/// variables and the elimination constructions add one more.
inline constexpr std::size_t kMaxVariables = 32;
inline constexpr unsigned kMaxExponent = 255;

/// Exponent vector with a fixed-width byte per variable. Slots beyond the
/// ring's variable count stay zero, so byte-wise comparison is the
/// lexicographic order in which variable 0 is the most significant.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial variable(std::size_t index, unsigned exponent = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);

  bool is_one() const;
  unsigned total_degree() const;
  std::size_t support_size() const;
  bool is_squarefree() const;

  /// Throws DomainError when an exponent would exceed kMaxExponent.
  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  /// Precondition: other divides *this.
  Monomial operator/(const Monomial& other) const;
  Monomial pow(unsigned e) const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  std::strong_ordering operator<=>(const Monomial& other) const {
    int c = std::memcmp(exps_.data(), other.exps_.data(), kMaxVariables);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  bool operator==(const Monomial& other) const {
    return std::memcmp(exps_.data(), other.exps_.data(), kMaxVariables) == 0;
  }

  std::size_t hash() const;
  const std::uint8_t* data() const { return exps_.data(); }

 private:
  std::array<std::uint8_t, kMaxVariables> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace hesspatch
