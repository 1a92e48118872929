#include "hesspatch/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "hesspatch/errors.hpp"

namespace hesspatch {

namespace {

bool term_greater(const Term& a, const Term& b) { return a.monomial > b.monomial; }

std::vector<Term> collect_residues(std::unordered_map<Monomial, std::uint64_t, MonomialHash>& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back(Term{m, Coefficient(c)});
  }
  std::sort(out.begin(), out.end(), term_greater);
  return out;
}

std::vector<Term> collect_rationals(std::unordered_map<Monomial, mpq_class, MonomialHash>& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) out.push_back(Term{m, Coefficient(std::move(c))});
  }
  std::sort(out.begin(), out.end(), term_greater);
  return out;
}

}  // namespace

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Field& k = ring->field();
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = k.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
  Polynomial p(std::move(ring));
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::from_canonical_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Coefficient& c) {
  return monomial(std::move(ring), Monomial(), c);
}

Polynomial Polynomial::from_int(RingPtr ring, std::int64_t c) {
  Coefficient v = ring->field().from_int(c);
  return constant(std::move(ring), v);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_variables()) throw DomainError("variable index out of range");
  Coefficient one = ring->field().one();
  return monomial(std::move(ring), Monomial::variable(index), one);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Coefficient& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back(Term{m, c});
  return p;
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.monomial > x; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return field().zero();
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (!ring_ || !other.ring_) throw RingMismatchError("polynomial without a ring");
  if (!ring_->compatible(*other.ring_)) {
    throw RingMismatchError("operands belong to different polynomial rings");
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(other);
  const Field& k = field();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = other.terms_[j];
    if (a.monomial > b.monomial) {
      out.push_back(a);
      ++i;
    } else if (b.monomial > a.monomial) {
      out.push_back(b);
      ++j;
    } else {
      Coefficient c = k.add(a.coeff, b.coeff);
      if (!k.is_zero(c)) out.push_back(Term{a.monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  out.insert(out.end(), other.terms_.begin() + static_cast<std::ptrdiff_t>(j), other.terms_.end());
  return from_canonical_terms(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial, field().neg(t.coeff)});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_ring(other);
  return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  if (terms_.size() == 1) return other.mul_term(terms_[0].monomial, terms_[0].coeff);
  if (other.terms_.size() == 1) return mul_term(other.terms_[0].monomial, other.terms_[0].coeff);
  const Field& k = field();
  if (k.is_prime_field()) {
    const std::uint64_t p = k.characteristic();
    std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
    acc.reserve(terms_.size() * other.terms_.size() / 2 + 16);
    for (const auto& a : terms_) {
      const std::uint64_t ca = a.coeff.residue();
      for (const auto& b : other.terms_) {
        auto& slot = acc[a.monomial * b.monomial];
        slot = (slot + ca * b.coeff.residue()) % p;
      }
    }
    return from_canonical_terms(ring_, collect_residues(acc));
  }
  std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size() / 2 + 16);
  mpq_class prod;
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      prod = a.coeff.rational() * b.coeff.rational();
      acc[a.monomial * b.monomial] += prod;
    }
  }
  return from_canonical_terms(ring_, collect_rationals(acc));
}

Polynomial Polynomial::scale(const Coefficient& c) const {
  const Field& k = field();
  if (k.is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coefficient v = k.mul(t.coeff, c);
    if (!k.is_zero(v)) r.terms_.push_back(Term{t.monomial, std::move(v)});
  }
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Coefficient& c) const {
  const Field& k = field();
  if (k.is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the lexicographic order of terms.
  for (const auto& t : terms_) {
    Coefficient v = k.mul(t.coeff, c);
    if (!k.is_zero(v)) r.terms_.push_back(Term{t.monomial * m, std::move(v)});
  }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = from_int(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!ring_ || !other.ring_ || !ring_->compatible(*other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial)) return false;
    if (!(terms_[i].coeff == other.terms_[i].coeff)) return false;
  }
  return true;
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
  if (is_zero()) throw DomainError("leading term of the zero polynomial");
  if (order.is_identity()) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  }
  return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  Term lt = leading_term(order);
  return scale(field().inv(lt.coeff));
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

std::vector<bool> Polynomial::variables_used() const {
  std::vector<bool> used(ring_->num_variables(), false);
  for (const auto& t : terms_) {
    for (std::size_t v = 0; v < used.size(); ++v) {
      if (t.monomial[v]) used[v] = true;
    }
  }
  return used;
}

Polynomial Polynomial::change_ring(const RingPtr& target) const {
  if (target->num_variables() != ring_->num_variables()) {
    throw RingMismatchError("change_ring needs matching variable counts");
  }
  const Field& k = target->field();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coefficient c = k.convert(t.coeff, field());
    if (!k.is_zero(c)) out.push_back(Term{t.monomial, std::move(c)});
  }
  return from_canonical_terms(target, std::move(out));
}

Polynomial Polynomial::rename(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
  if (var_map.size() != ring_->num_variables()) throw RingMismatchError("rename map has wrong length");
  const Field& k = target->field();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t v = 0; v < var_map.size(); ++v) {
      if (t.monomial[v]) {
        if (var_map[v] >= target->num_variables()) throw RingMismatchError("rename target out of range");
        m.set(var_map[v], m[var_map[v]] + t.monomial[v]);
      }
    }
    out.push_back(Term{m, k.convert(t.coeff, field())});
  }
  return from_terms(target, std::move(out));
}

WeightedDegree weighted_degree(const Polynomial& f, const Grading& grading) {
  WeightedDegree result;
  if (f.is_zero()) return result;
  if (grading.weights().size() != f.ring()->num_variables()) {
    throw RingMismatchError("grading does not match the ring");
  }
  const Term& first = f.terms().front();
  result.kind = WeightedDegree::Kind::homogeneous;
  result.degree = grading.degree(first.monomial);
  for (const auto& t : f.terms()) {
    if (grading.degree(t.monomial) != result.degree) {
      result.kind = WeightedDegree::Kind::inhomogeneous;
      result.offending.emplace_back(first.monomial, t.monomial);
    }
  }
  return result;
}

}  // namespace hesspatch
