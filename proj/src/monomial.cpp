#include "hesspatch/monomial.hpp"

#include <algorithm>
#include <string>

#include "hesspatch/errors.hpp"

namespace hesspatch {

namespace {

void overflow() {
  throw DomainError("monomial exponent exceeds " + std::to_string(kMaxExponent));
}

}  // namespace

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  Monomial m;
  m.set(index, exponent);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw DomainError("variable index out of range");
  if (e > kMaxExponent) overflow();
  exps_[i] = static_cast<std::uint8_t>(e);
}

bool Monomial::is_one() const {
  for (auto e : exps_) {
    if (e) return false;
  }
  return true;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

std::size_t Monomial::support_size() const {
  std::size_t s = 0;
  for (auto e : exps_) s += e != 0;
  return s;
}

bool Monomial::is_squarefree() const {
  for (auto e : exps_) {
    if (e > 1) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  unsigned high = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned s = unsigned{exps_[i]} + other.exps_[i];
    high |= s;
    exps_[i] = static_cast<std::uint8_t>(s);
  }
  if (high > kMaxExponent) overflow();
  return *this;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (other.exps_[i] > exps_[i]) throw DomainError("monomial division is not exact");
    r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - other.exps_[i]);
  }
  return r;
}

Monomial Monomial::pow(unsigned e) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned v = unsigned{exps_[i]} * e;
    if (v > kMaxExponent) overflow();
    r.exps_[i] = static_cast<std::uint8_t>(v);
  }
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] && other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t words[kMaxVariables / 8];
  std::memcpy(words, exps_.data(), kMaxVariables);
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace hesspatch
