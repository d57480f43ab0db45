#include "growthlab/ordinal.hpp"

#include <cctype>
#include <stdexcept>

namespace growthlab {

Ordinal Ordinal::from_natural(std::uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back({Ordinal(), n});
  return o;
}

Ordinal Ordinal::omega() { return omega_power(from_natural(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient) {
  Ordinal o;
  if (coefficient == 0) return o;
  o.terms_.push_back({exponent, coefficient});
  return o;
}

std::uint64_t Ordinal::natural_value() const {
  if (!is_natural()) throw std::invalid_argument("ordinal is not a natural number");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

std::uint64_t Ordinal::degree() const {
  if (is_zero()) return 0;
  return terms_[0].exponent.natural_value();
}

int ord_compare(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = ord_compare(a.terms_[i].exponent, b.terms_[i].exponent);
    if (c != 0) return c;
    if (a.terms_[i].coefficient != b.terms_[i].coefficient)
      return a.terms_[i].coefficient < b.terms_[i].coefficient ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return ord_compare(a, b) == 0; }

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  Ordinal out;
  const Ordinal& lead = b.terms_[0].exponent;
  // keep the terms of a that survive absorption by b's leading term
  for (const auto& t : a.terms_) {
    int c = ord_compare(t.exponent, lead);
    if (c > 0) {
      out.terms_.push_back(t);
    } else if (c == 0) {
      std::uint64_t merged = t.coefficient + b.terms_[0].coefficient;
      if (merged < t.coefficient) throw std::overflow_error("ordinal coefficient overflow");
      out.terms_.push_back({t.exponent, merged});
      out.terms_.insert(out.terms_.end(), b.terms_.begin() + 1, b.terms_.end());
      return out;
    } else {
      break;
    }
  }
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
  Ordinal out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& t : b.terms_) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      // a * n: multiply the leading coefficient, keep the tail
      piece.terms_ = a.terms_;
      unsigned __int128 scaled =
          static_cast<unsigned __int128>(piece.terms_[0].coefficient) * t.coefficient;
      if (scaled > UINT64_MAX) throw std::overflow_error("ordinal coefficient overflow");
      piece.terms_[0].coefficient = static_cast<std::uint64_t>(scaled);
    } else {
      piece.terms_.push_back({ord_add(a.terms_[0].exponent, t.exponent), t.coefficient});
    }
    out = ord_add(out, piece);
  }
  return out;
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    const Term& t = terms_[i];
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    if (t.exponent == from_natural(1)) {
      out += "w";
    } else if (t.exponent.is_natural()) {
      out += "w^" + std::to_string(t.exponent.natural_value());
    } else {
      out += "w^(" + t.exponent.to_string() + ")";
    }
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

namespace {

struct OrdCursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("ordinal expression: " + msg + " at position " +
                                std::to_string(pos));
  }

  std::uint64_t number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (v > (1ull << 62)) fail("number out of range");
      ++pos;
    }
    return v;
  }

  Ordinal expr();

  Ordinal factor() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Ordinal inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'w') {
      ++pos;
      if (eat('^')) {
        skip_ws();
        if (pos < text.size() && text[pos] == 'w') {
          ++pos;
          return Ordinal::omega_power(Ordinal::omega());
        }
        if (pos < text.size() && text[pos] == '(') {
          ++pos;
          Ordinal e = expr();
          if (!eat(')')) fail("expected ')'");
          return Ordinal::omega_power(e);
        }
        return Ordinal::omega_power(Ordinal::from_natural(number()));
      }
      return Ordinal::omega();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Ordinal::from_natural(number());
    fail("expected 'w', a number, or '('");
  }

  Ordinal term() {
    Ordinal out = factor();
    while (eat('*')) out = ord_mul(out, factor());
    return out;
  }
};

Ordinal OrdCursor::expr() {
  Ordinal out = term();
  while (eat('+')) out = ord_add(out, term());
  return out;
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  OrdCursor cur{text};
  Ordinal out = cur.expr();
  cur.skip_ws();
  if (cur.pos != text.size()) cur.fail("trailing input");
  return out;
}

}  // namespace growthlab
