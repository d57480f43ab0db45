#pragma once

// Test-only oracles, independent of the library's computation paths: a
// stack-free random-order reducer, integer models of the fixture groups, a
// brute-force ball counter over model elements, and the closed forms the
// acceptance criteria compare against.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "growthlab/presentation.hpp"
#include "growthlab/word.hpp"

namespace oracles {

using growthlab::Word;

// Free reduction by repeatedly deleting one cancelling adjacent pair chosen
// by the given RNG; confluence says the result must match any other order.
inline std::string random_order_reduce(std::string letters, std::mt19937& rng) {
  for (;;) {
    std::vector<std::size_t> cancelling;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if ((static_cast<unsigned char>(letters[i]) ^ 1) ==
          static_cast<unsigned char>(letters[i + 1]))
        cancelling.push_back(i);
    }
    if (cancelling.empty()) return letters;
    std::size_t pick = cancelling[rng() % cancelling.size()];
    letters.erase(pick, 2);
  }
}

// --- integer models of the fixtures -------------------------------------

// Element of Z^2; letters 0,1 are a^(+-1), letters 2,3 are b^(+-1).
struct Z2Model {
  using Element = std::pair<long, long>;
  static Element identity() { return {0, 0}; }
  static Element mul_letter(Element e, unsigned char code) {
    int delta = (code & 1) ? -1 : +1;
    if ((code >> 1) == 0)
      e.first += delta;
    else
      e.second += delta;
    return e;
  }
};

// Z/n generated by a single letter.
struct CyclicModel {
  long n;
  using Element = long;
  Element identity() const { return 0; }
  Element mul_letter(Element e, unsigned char code) const {
    int delta = (code & 1) ? -1 : +1;
    return ((e + delta) % n + n) % n;
  }
};

// Free group: elements are reduced strings; reduction by an independent
// in-place scan (not the library's).
struct FreeModel {
  using Element = std::string;
  static Element identity() { return {}; }
  static Element mul_letter(Element e, unsigned char code) {
    if (!e.empty() && (static_cast<unsigned char>(e.back()) ^ 1) == code)
      e.pop_back();
    else
      e.push_back(static_cast<char>(code));
    return e;
  }
};

template <typename Model>
typename Model::Element apply_word(const Model& model, typename Model::Element e,
                                   const Word& w) {
  for (std::size_t i = 0; i < w.length(); ++i)
    e = model.mul_letter(e, w.letter(i).code());
  return e;
}

// Brute-force Cayley ball sizes over model elements: plain set-based BFS.
template <typename Model>
std::vector<std::uint64_t> model_ball_sizes(const Model& model,
                                            const std::vector<Word>& members, unsigned n_max) {
  std::set<typename Model::Element> seen;
  std::vector<typename Model::Element> frontier;
  seen.insert(model.identity());
  frontier.push_back(model.identity());
  std::vector<std::uint64_t> sizes{1};

  std::vector<Word> edges;
  for (const Word& w : members) {
    edges.push_back(w);
    edges.push_back(w.inverse());
  }

  for (unsigned level = 0; level < n_max; ++level) {
    std::vector<typename Model::Element> next;
    for (const auto& e : frontier) {
      for (const Word& t : edges) {
        auto img = apply_word(model, e, t);
        if (seen.insert(img).second) next.push_back(img);
      }
    }
    sizes.push_back(sizes.back() + next.size());
    frontier = std::move(next);
  }
  return sizes;
}

// --- closed forms ---------------------------------------------------------

inline std::uint64_t free_sphere(unsigned rank, unsigned n) {
  if (n == 0) return 1;
  std::uint64_t s = 2 * rank;
  for (unsigned i = 1; i < n; ++i) s *= 2 * rank - 1;
  return s;
}

inline std::uint64_t free_ball(unsigned rank, unsigned n) {
  std::uint64_t total = 0;
  for (unsigned i = 0; i <= n; ++i) total += free_sphere(rank, i);
  return total;
}

inline std::uint64_t z2_ball(unsigned n) { return 2ull * n * n + 2ull * n + 1; }

// --- helpers over the library's parsing (shared fixture setup) ------------

inline growthlab::Presentation free_group(int rank) {
  std::string text = "< ";
  for (int i = 0; i < rank; ++i) {
    if (i) text += ", ";
    text += static_cast<char>('a' + i);
  }
  text += " | >";
  return growthlab::parse_presentation(text);
}

inline growthlab::Presentation z2() { return growthlab::parse_presentation("< a, b | a b A B >"); }

inline growthlab::Presentation z_mod(int n) {
  std::string text = "< a | a^" + std::to_string(n) + " >";
  return growthlab::parse_presentation(text);
}

inline growthlab::Presentation surface_genus2() {
  return growthlab::parse_presentation("< a, b, c, d | a b A B c d C D >");
}

inline growthlab::Word word(const growthlab::Presentation& p, const std::string& text) {
  return growthlab::parse_word(p.alphabet, text);
}

inline growthlab::GenSetSpec genset(const growthlab::Presentation& p,
                                    const std::vector<std::string>& words) {
  std::vector<growthlab::Word> members;
  for (const auto& w : words) members.push_back(word(p, w));
  return growthlab::GenSetSpec(p.alphabet, members);
}

}  // namespace oracles
