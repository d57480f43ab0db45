#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "growthlab/word.hpp"

namespace growthlab {

/// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct GeneratorSymbol {
  std::string name;  // nonempty, [A-Za-z][A-Za-z0-9_]*
  int index = 0;     // dense id within the owning alphabet
};

/// Ordered list of generator symbols with unique names. Letter codes are
/// 2*index (generator) and 2*index+1 (inverse).
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(symbols_.size()); }
  const GeneratorSymbol& symbol(int index) const { return symbols_[index]; }
  const std::vector<GeneratorSymbol>& symbols() const { return symbols_; }

  /// Index of `name`, or -1 if absent.
  int find(std::string_view name) const;

  std::string print_letter(Letter l) const;
  std::string print_word(const Word& w) const;  // "1" for the empty word

  friend bool operator==(const Alphabet& a, const Alphabet& b);

 private:
  std::vector<GeneratorSymbol> symbols_;
};

/// A finite presentation <S | R>. Relators are stored cyclically reduced and
/// nonempty; relators that reduce to the empty word are dropped.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;

  bool is_free() const { return relators.empty(); }
  std::size_t max_relator_length() const;
};

/// Grammar: `< g1, g2, ... | w1, w2, ... >`. Whitespace is insignificant.
/// A word is a juxtaposition of symbols; for single-letter symbols the
/// uppercase form denotes the inverse; `name^-1` and `name^k` (k >= 1) are
/// allowed as suffixes. The relator list may be empty.
Presentation parse_presentation(std::string_view text);

/// Parses one word over `alphabet` (same grammar as in relator lists).
/// "1" is accepted for the empty word.
Word parse_word(const Alphabet& alphabet, std::string_view text, int line = 1);

/// Like parse_word but keeps the spelled letter sequence without free
/// reduction; used for rewriting-rule sides.
std::string parse_letters(const Alphabet& alphabet, std::string_view text, int line = 1);

/// Generating-set file: one word per line, `#` starts a comment.
std::vector<Word> parse_genset_file(const Alphabet& alphabet, std::string_view text);

/// A finite set of candidate generators, given as words over a presentation's
/// alphabet. Normalized at construction: empty words dropped, duplicates
/// dropped, and of a mutually inverse pair only the shortlex-smaller member
/// is kept. Downstream ball counts are with respect to members and their
/// inverses (the Cayley graph is symmetric).
class GenSetSpec {
 public:
  GenSetSpec() = default;
  GenSetSpec(const Alphabet& alphabet, std::vector<Word> members);

  const std::vector<Word>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  /// Members and their inverses, deduplicated, in a fixed order; these are
  /// the Cayley-graph edges.
  const std::vector<Word>& symmetrized() const { return symmetrized_; }

  std::size_t total_spelled_length() const;
  std::string print(const Alphabet& alphabet) const;

  friend bool operator==(const GenSetSpec& a, const GenSetSpec& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<Word> members_;      // shortlex-sorted
  std::vector<Word> symmetrized_;  // members + inverses, deduplicated
};

/// FNV-1a digest of the presentation text form; used to key caches and to
/// stamp emitted records.
std::uint64_t presentation_digest(const Presentation& p);
std::string digest_hex(std::uint64_t digest);

}  // namespace growthlab
