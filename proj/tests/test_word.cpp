#include <doctest.h>

#include <random>

#include "growthlab/word.hpp"
#include "oracles.hpp"

using namespace growthlab;

namespace {

Word w(std::initializer_list<std::pair<int, int>> letters) {
  std::vector<Letter> ls;
  for (auto [g, s] : letters) ls.push_back(Letter(g, s));
  return Word::reduce(ls);
}

std::string random_reduced_letters(std::mt19937& rng, int letters, std::size_t max_len) {
  std::string out;
  std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(static_cast<char>(rng() % letters));
  return out;
}

}  // namespace

TEST_CASE("free reduction of the spec examples") {
  CHECK(w({{0, 1}, {0, -1}, {1, 1}}) == w({{1, 1}}));               // a a^-1 b = b
  CHECK(w({{0, 1}, {1, 1}, {1, -1}, {0, -1}}).empty());             // a b b^-1 a^-1 = 1
  CHECK(w({{0, 1}, {1, 1}, {0, -1}}).length() == 3);                // a b a^-1 unchanged
}

TEST_CASE("multiplication, identity and inverse laws") {
  Word ab = w({{0, 1}, {1, 1}});
  Word Ba = w({{1, -1}, {0, 1}});
  CHECK(multiply(ab, Ba) == w({{0, 1}, {0, 1}}));  // (ab)(b^-1 a) = aa
  CHECK(multiply(ab, ab.inverse()).empty());
  CHECK(multiply(Word(), ab) == ab);
  CHECK(multiply(ab, Word()) == ab);
}

TEST_CASE("inversion") {
  Word aB = w({{0, 1}, {1, -1}});
  CHECK(aB.inverse() == w({{1, 1}, {0, -1}}));  // (a b^-1)^-1 = b a^-1
  CHECK(Word().inverse().empty());
  CHECK(w({{0, 1}}).inverse() == w({{0, -1}}));
  CHECK(aB.inverse().inverse() == aB);
}

TEST_CASE("cyclic reduction") {
  CHECK(cyclically_reduce(w({{0, 1}, {1, 1}, {0, -1}})) == w({{1, 1}}));  // a b a^-1 -> b
  Word commutator = w({{0, 1}, {1, 1}, {0, -1}, {1, -1}});
  CHECK(cyclically_reduce(commutator) == commutator);  // already cyclically reduced
  // a b b^-1 a^-1 a reduces freely to a, then cyclically to a
  CHECK(cyclically_reduce(w({{0, 1}, {1, 1}, {1, -1}, {0, -1}, {0, 1}})) == w({{0, 1}}));
}

TEST_CASE("free reduction is confluent under random cancellation orders") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 400; ++trial) {
    std::string letters = random_reduced_letters(rng, 4, 40);
    std::string expected = reduce_packed(letters);
    for (int pass = 0; pass < 3; ++pass)
      CHECK(oracles::random_order_reduce(letters, rng) == expected);
  }
}

TEST_CASE("group axioms on sampled words") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = Word::from_reduced(reduce_packed(random_reduced_letters(rng, 6, 12)));
    Word v = Word::from_reduced(reduce_packed(random_reduced_letters(rng, 6, 12)));
    Word z = Word::from_reduced(reduce_packed(random_reduced_letters(rng, 6, 12)));
    CHECK(multiply(multiply(u, v), z) == multiply(u, multiply(v, z)));
    CHECK(multiply(u, u.inverse()).empty());
    CHECK(multiply(u, Word()) == u);
  }
}

TEST_CASE("shortlex is a total order refining length") {
  std::mt19937 rng(99);
  std::vector<Word> words;
  for (int trial = 0; trial < 60; ++trial)
    words.push_back(Word::from_reduced(reduce_packed(random_reduced_letters(rng, 4, 6))));
  for (const Word& a : words) {
    for (const Word& b : words) {
      int ab = shortlex_less(a, b), ba = shortlex_less(b, a);
      if (a == b) {
        CHECK(!ab);
        CHECK(!ba);
      } else {
        CHECK(ab != ba);  // total
        if (a.length() != b.length()) CHECK(shortlex_less(a, b) == (a.length() < b.length()));
      }
      for (const Word& c : words)  // transitivity
        if (shortlex_less(a, b) && shortlex_less(b, c)) CHECK(shortlex_less(a, c));
    }
  }
  // letter order: g < g^-1 < h < h^-1
  CHECK(shortlex_less(w({{0, 1}}), w({{0, -1}})));
  CHECK(shortlex_less(w({{0, -1}}), w({{1, 1}})));
  CHECK(shortlex_less(w({{1, 1}}), w({{1, -1}})));
}
