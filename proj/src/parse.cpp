#include "hesspatch/parse.hpp"

#include <algorithm>
#include <cctype>

#include "hesspatch/errors.hpp"

namespace hesspatch {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial run() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Polynomial result = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return at_end() ? '\0' : text_[pos_];
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    char next = peek();
    if (next != '\0' && next != '+' && next != '-' && next != ')') {
      throw ParseError("expected operator (implicit multiplication is not allowed)", pos_);
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      mpz_class e = integer();
      if (e > 10000) throw ParseError("exponent too large", start);
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  mpz_class integer() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial base() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      mpq_class value(integer());
      if (accept('/')) {
        mpz_class den = integer();
        if (den == 0) throw ParseError("zero denominator", start);
        value /= mpq_class(den);
        value.canonicalize();
      }
      return Polynomial::constant(ring_, ring_->field().from_rational(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Polynomial variable() {
    std::size_t start = pos_;
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      name += text_[pos_++];
    }
    if (peek() == '[') {
      accept('[');
      mpz_class row = integer();
      if (!accept(',')) throw ParseError("expected ',' in variable index", pos_);
      mpz_class col = integer();
      if (!accept(']')) throw ParseError("expected ']' in variable index", pos_);
      name += "[" + row.get_str() + "," + col.get_str() + "]";
    }
    auto idx = ring_->variables().find(name);
    if (!idx) throw ParseError("unknown variable " + name, start);
    return Polynomial::variable(ring_, *idx);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).run(); }

std::string format_monomial(const Monomial& m, const VariableSet& vars) {
  std::string out;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (!m[v]) continue;
    if (!out.empty()) out += "*";
    out += vars[v].name;
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

std::string format_poly(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  const Field& k = f.field();
  const VariableSet& vars = f.ring()->variables();
  std::vector<const Term*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  if (!order.is_identity()) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term* a, const Term* b) { return order.compare(a->monomial, b->monomial) > 0; });
  }
  std::string out;
  for (const Term* t : terms) {
    mpq_class c = k.to_rational(t->coeff);
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = c == 1;
    if (t->monomial.is_one()) {
      out += c.get_str();
    } else {
      if (!unit) out += c.get_str() + "*";
      out += format_monomial(t->monomial, vars);
    }
  }
  return out;
}

std::string format_poly(const Polynomial& f) {
  return format_poly(f, MonomialOrder::identity(f.ring()->num_variables()));
}

}  // namespace hesspatch
