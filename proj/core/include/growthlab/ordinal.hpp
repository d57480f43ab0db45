#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace growthlab {

/// Ordinal below epsilon_0 in Cantor normal form: a finite sum of terms
/// w^exponent * coefficient with strictly decreasing ordinal exponents and
/// positive coefficients. The empty sum is 0.
class Ordinal {
 public:
  struct Term;  // completed below; vector supports the incomplete type

  Ordinal() = default;
  static Ordinal from_natural(std::uint64_t n);
  static Ordinal omega();
  static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);

  bool is_zero() const;
  bool is_natural() const;
  std::uint64_t natural_value() const;  // throws unless is_natural()

  const std::vector<Term>& terms() const { return terms_; }

  /// Leading exponent as a natural number; throws when the exponent is not
  /// natural (only needed by the canonical realization).
  std::uint64_t degree() const;

  std::string to_string() const;  // "w^2*3 + w + 4" style

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend bool operator!=(const Ordinal& a, const Ordinal& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;  // strictly decreasing exponents
  friend int ord_compare(const Ordinal& a, const Ordinal& b);
  friend Ordinal ord_add(const Ordinal& a, const Ordinal& b);
  friend Ordinal ord_mul(const Ordinal& a, const Ordinal& b);
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient;
};

inline bool Ordinal::is_zero() const { return terms_.empty(); }

inline bool Ordinal::is_natural() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

/// Total order: -1, 0, +1.
int ord_compare(const Ordinal& a, const Ordinal& b);

/// CNF addition: lower-degree left terms are absorbed. Associative, not
/// commutative (1 + w = w, w + 1 > w).
Ordinal ord_add(const Ordinal& a, const Ordinal& b);

/// CNF multiplication. Associative, left-distributive over addition.
Ordinal ord_mul(const Ordinal& a, const Ordinal& b);

/// Expression grammar: sums of products of factors, a factor being `w`
/// (optionally `w^k` with a natural k), a natural number, or a
/// parenthesized expression. Example: "w^2*3 + w + 4".
Ordinal parse_ordinal(std::string_view text);

}  // namespace growthlab
