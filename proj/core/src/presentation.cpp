#include "growthlab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>

namespace growthlab {

namespace {

bool valid_symbol_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

/// Cursor over presentation text, tracking 1-based line/column.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (done() || peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
    advance();
  }

  std::string read_name() {
    skip_ws();
    if (done() || !std::isalpha(static_cast<unsigned char>(peek())))
      fail("expected a generator name");
    std::string name;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      name.push_back(peek());
      advance();
    }
    return name;
  }

  long read_int() {
    skip_ws();
    bool neg = false;
    if (!done() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      advance();
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) fail("exponent out of range");
      advance();
    }
    return neg ? -v : v;
  }
};

/// Reads symbols by longest match against the declared names, so words are
/// plain juxtapositions ("abA") for single-letter alphabets and
/// space-separated for longer names. An uppercase letter that is not itself
/// a declared name denotes the inverse of the lowercase generator.
/// `name^-1` and `name^k` are allowed as suffixes.
void read_word_into(Cursor& cur, const Alphabet& alphabet, std::string& packed) {
  for (;;) {
    cur.skip_ws();
    if (cur.done()) break;
    char c = cur.peek();
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') break;
    if (c == '1') {
      // "1" denotes the empty word; consume and continue.
      cur.advance();
      continue;
    }
    int err_line = cur.line, err_col = cur.col;
    std::string_view rest = cur.text.substr(cur.pos);
    std::size_t best_len = 0;
    int index = -1;
    int sign = +1;
    for (const auto& sym : alphabet.symbols()) {
      if (sym.name.size() > best_len && rest.substr(0, sym.name.size()) == sym.name) {
        best_len = sym.name.size();
        index = sym.index;
        sign = +1;
      }
    }
    if (index < 0 && std::isupper(static_cast<unsigned char>(c))) {
      std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      int li = alphabet.find(lower);
      if (li >= 0) {
        best_len = 1;
        index = li;
        sign = -1;
      }
    }
    if (index < 0) {
      std::string name;
      while (!cur.done() &&
             (std::isalnum(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_')) {
        name.push_back(cur.peek());
        cur.advance();
      }
      throw ParseError("unknown generator symbol '" + name + "'", err_line, err_col);
    }
    for (std::size_t i = 0; i < best_len; ++i) cur.advance();
    long exponent = 1;
    if (!cur.done() && cur.peek() == '^') {
      cur.advance();
      exponent = cur.read_int();
      if (exponent == 0) throw ParseError("exponent must be nonzero", err_line, err_col);
    }
    if (exponent < 0) {
      sign = -sign;
      exponent = -exponent;
    }
    Letter l(index, sign);
    for (long i = 0; i < exponent; ++i) packed.push_back(static_cast<char>(l.code()));
  }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) {
  std::set<std::string> seen;
  symbols_.reserve(names.size());
  for (auto& name : names) {
    if (!valid_symbol_name(name))
      throw std::invalid_argument("invalid generator name '" + name + "'");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate generator name '" + name + "'");
    symbols_.push_back({std::move(name), static_cast<int>(symbols_.size())});
  }
}

int Alphabet::find(std::string_view name) const {
  for (const auto& s : symbols_)
    if (s.name == name) return s.index;
  return -1;
}

std::string Alphabet::print_letter(Letter l) const {
  const std::string& name = symbols_[l.generator()].name;
  if (l.sign() > 0) return name;
  if (name.size() == 1 && std::islower(static_cast<unsigned char>(name[0])))
    return std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(name[0]))));
  return name + "^-1";
}

std::string Alphabet::print_word(const Word& w) const {
  if (w.empty()) return "1";
  bool plain = true;  // juxtapose only when every name is one lowercase letter
  for (const auto& s : symbols_)
    if (s.name.size() != 1 || !std::islower(static_cast<unsigned char>(s.name[0])))
      plain = false;
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (!plain && i) out.push_back(' ');
    out += print_letter(w.letter(i));
  }
  return out;
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  if (a.symbols_.size() != b.symbols_.size()) return false;
  for (std::size_t i = 0; i < a.symbols_.size(); ++i)
    if (a.symbols_[i].name != b.symbols_[i].name) return false;
  return true;
}

std::size_t Presentation::max_relator_length() const {
  std::size_t m = 0;
  for (const auto& r : relators) m = std::max(m, r.length());
  return m;
}

Presentation parse_presentation(std::string_view text) {
  Cursor cur{text};
  cur.expect('<', "to open the presentation");

  std::vector<std::string> names;
  cur.skip_ws();
  if (cur.done()) cur.fail("unterminated presentation");
  if (cur.peek() != '|') {
    for (;;) {
      names.push_back(cur.read_name());
      cur.skip_ws();
      if (!cur.done() && cur.peek() == ',') {
        cur.advance();
        continue;
      }
      break;
    }
  }
  if (names.empty()) cur.fail("empty alphabet");
  Alphabet alphabet{names};

  cur.expect('|', "between generators and relators");

  std::vector<Word> relators;
  for (;;) {
    cur.skip_ws();
    if (cur.done()) cur.fail("unterminated presentation");
    if (cur.peek() == '>') break;
    std::string packed;
    read_word_into(cur, alphabet, packed);
    Word relator = Word::from_reduced(reduce_packed(packed)).cyclically_reduced();
    if (!relator.empty()) relators.push_back(relator);
    cur.skip_ws();
    if (!cur.done() && cur.peek() == ',') {
      cur.advance();
      continue;
    }
    break;
  }
  cur.expect('>', "to close the presentation");
  cur.skip_ws();
  if (!cur.done()) cur.fail("trailing input after presentation");

  return Presentation{std::move(alphabet), std::move(relators)};
}

Word parse_word(const Alphabet& alphabet, std::string_view text, int line) {
  return Word::from_reduced(reduce_packed(parse_letters(alphabet, text, line)));
}

std::string parse_letters(const Alphabet& alphabet, std::string_view text, int line) {
  Cursor cur{text, 0, line, 1};
  std::string packed;
  read_word_into(cur, alphabet, packed);
  cur.skip_ws();
  if (!cur.done()) cur.fail("unexpected character in word");
  return packed;
}

std::vector<Word> parse_genset_file(const Alphabet& alphabet, std::string_view text) {
  std::vector<Word> words;
  int line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) words.push_back(parse_word(alphabet, line, line_no));
    if (end == text.size()) break;
    start = end + 1;
    ++line_no;
  }
  return words;
}

GenSetSpec::GenSetSpec(const Alphabet& alphabet, std::vector<Word> members) {
  for (const auto& w : members) {
    if (w.max_generator() >= alphabet.size())
      throw std::invalid_argument("generating-set word uses a symbol outside the alphabet");
  }
  std::sort(members.begin(), members.end(),
            [](const Word& a, const Word& b) { return shortlex_less(a, b); });
  members.erase(std::unique(members.begin(), members.end()), members.end());

  for (const auto& w : members) {
    if (w.empty()) continue;
    Word inv = w.inverse();
    // Of a mutually inverse pair keep the shortlex-smaller member; w is kept
    // unless its inverse is also present and smaller.
    if (shortlex_less(inv, w) &&
        std::binary_search(members.begin(), members.end(), inv,
                           [](const Word& a, const Word& b) { return shortlex_less(a, b); }))
      continue;
    members_.push_back(w);
  }

  for (const auto& w : members_) {
    symmetrized_.push_back(w);
    Word inv = w.inverse();
    if (inv != w) symmetrized_.push_back(inv);
  }
  std::sort(symmetrized_.begin(), symmetrized_.end(),
            [](const Word& a, const Word& b) { return shortlex_less(a, b); });
  symmetrized_.erase(std::unique(symmetrized_.begin(), symmetrized_.end()), symmetrized_.end());
}

std::size_t GenSetSpec::total_spelled_length() const {
  std::size_t n = 0;
  for (const auto& w : members_) n += w.length();
  return n;
}

std::string GenSetSpec::print(const Alphabet& alphabet) const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ", ";
    out += alphabet.print_word(members_[i]);
  }
  out += "}";
  return out;
}

std::uint64_t presentation_digest(const Presentation& p) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::string_view s) {
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (const auto& s : p.alphabet.symbols()) mix(s.name);
  mix("|");
  for (const auto& r : p.relators) mix(r.packed());
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  static const char* hexdig = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hexdig[digest & 0xf];
    digest >>= 4;
  }
  return out;
}

}  // namespace growthlab
