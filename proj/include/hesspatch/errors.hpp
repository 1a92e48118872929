#pragma once

#include <stdexcept>
#include <string>

namespace hesspatch {

/// Operands from different polynomial rings were combined.
class RingMismatchError : public std::logic_error {
 public:
  explicit RingMismatchError(const std::string& what) : std::logic_error(what) {}
};

/// Input text does not follow the polynomial grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A mathematically undefined request: leading term of zero, inverse of a
/// non-unit, a value outside the coefficient domain, and similar.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A verification step rejected its input. Carries the step and check name so
/// callers (and the CLI exit code) can name what failed.
class CheckFailure : public std::runtime_error {
 public:
  CheckFailure(std::string step, std::string check, const std::string& detail)
      : std::runtime_error(step + ": check '" + check + "' failed: " + detail),
        step_(std::move(step)),
        check_(std::move(check)) {}
  const std::string& step() const { return step_; }
  const std::string& check() const { return check_; }

 private:
  std::string step_;
  std::string check_;
};

}  // namespace hesspatch
