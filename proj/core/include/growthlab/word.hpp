#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace growthlab {

/// A letter is a generator index with a sign, packed into one byte as
/// 2*index + (0 for the generator, 1 for its formal inverse). The induced
/// byte order g < g^-1 < h < h^-1 < ... is exactly the letter order used
/// by shortlex, so plain string comparison on packed words is lexicographic.
class Letter {
 public:
  Letter() = default;
  constexpr explicit Letter(unsigned char code) : code_(code) {}
  constexpr Letter(int generator_index, int sign)
      : code_(static_cast<unsigned char>(2 * generator_index + (sign < 0 ? 1 : 0))) {}

  constexpr int generator() const { return code_ >> 1; }
  constexpr int sign() const { return (code_ & 1) ? -1 : +1; }
  constexpr unsigned char code() const { return code_; }
  constexpr Letter inverse() const { return Letter(static_cast<unsigned char>(code_ ^ 1)); }

  friend constexpr bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }
  friend constexpr bool operator!=(Letter a, Letter b) { return a.code_ != b.code_; }
  friend constexpr bool operator<(Letter a, Letter b) { return a.code_ < b.code_; }

 private:
  unsigned char code_ = 0;
};

/// A freely reduced word over a signed alphabet. The representation is the
/// packed byte string of its letters; the class maintains the invariant that
/// no letter is adjacent to its inverse. The empty word is the identity.
///
/// Words do not carry their alphabet; parsing and printing take an Alphabet,
/// and contexts that mix words from several presentations are responsible
/// for validating letter ranges (see GenSetSpec).
class Word {
 public:
  Word() = default;

  /// Builds a word from arbitrary letters, freely reducing them.
  static Word reduce(const std::vector<Letter>& letters);

  /// Wraps an already-reduced packed string. Checked in debug builds only;
  /// the hot paths (census enumeration) rely on this being free.
  static Word from_reduced(std::string packed) { return Word(std::move(packed)); }

  bool empty() const { return packed_.empty(); }
  std::size_t length() const { return packed_.size(); }

  Letter letter(std::size_t i) const { return Letter(static_cast<unsigned char>(packed_[i])); }
  const std::string& packed() const { return packed_; }

  Word inverse() const;
  Word cyclically_reduced() const;

  /// Largest generator index used, or -1 for the empty word.
  int max_generator() const;

  friend bool operator==(const Word& a, const Word& b) { return a.packed_ == b.packed_; }
  friend bool operator!=(const Word& a, const Word& b) { return a.packed_ != b.packed_; }

 private:
  explicit Word(std::string packed) : packed_(std::move(packed)) {}
  std::string packed_;
};

/// Free reduction of a packed letter string; the workhorse shared by all
/// word constructors. Single left-to-right pass with a stack.
std::string reduce_packed(std::string_view letters);

/// Appends `rhs` to the reduced word `lhs` in place, cancelling at the seam.
/// Both inputs must be reduced; the result is reduced.
void append_reduced(std::string& lhs, std::string_view rhs);

inline std::string inverse_packed(std::string_view w) {
  std::string out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(static_cast<char>(static_cast<unsigned char>(*it) ^ 1));
  return out;
}

/// multiply(u, v) = free_reduce(u v); associative with the empty word as
/// two-sided identity.
Word multiply(const Word& u, const Word& v);

inline Word invert(const Word& w) { return w.inverse(); }
inline Word free_reduce(const std::vector<Letter>& letters) { return Word::reduce(letters); }
Word cyclically_reduce(const Word& w);

/// Shortlex: by length, then by packed byte order (= letter order).
inline bool shortlex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}
inline bool shortlex_less(const Word& a, const Word& b) {
  return shortlex_less(a.packed(), b.packed());
}

inline const Word& shortlex_min(const Word& a, const Word& b) {
  return shortlex_less(b, a) ? b : a;
}

}  // namespace growthlab
