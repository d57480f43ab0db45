#include <doctest.h>

#include "growthlab/presentation.hpp"
#include "oracles.hpp"

using namespace growthlab;

TEST_CASE("parsing the fixture presentations") {
  Presentation free2 = parse_presentation("< a, b | >");
  CHECK(free2.alphabet.size() == 2);
  CHECK(free2.relators.empty());
  CHECK(free2.is_free());

  Presentation z2 = parse_presentation("< a, b | a b A B >");
  REQUIRE(z2.relators.size() == 1);
  CHECK(z2.relators[0].length() == 4);

  Presentation z6 = parse_presentation("< a | a a a a a a >");
  REQUIRE(z6.relators.size() == 1);
  CHECK(z6.relators[0].length() == 6);
  CHECK(z6.relators[0] == parse_word(z6.alphabet, "a^6"));
}

TEST_CASE("word grammar: inverses, powers, multi-character names") {
  Presentation p = parse_presentation("< a, b | >");
  CHECK(parse_word(p.alphabet, "abA") == parse_word(p.alphabet, "a b a^-1"));
  CHECK(parse_word(p.alphabet, "a^3") == parse_word(p.alphabet, "aaa"));
  CHECK(parse_word(p.alphabet, "a^-2") == parse_word(p.alphabet, "AA"));
  CHECK(parse_word(p.alphabet, "1").empty());

  Presentation named = parse_presentation("< g1, g2 | g1 g2 g1^-1 g2^-1 >");
  CHECK(named.relators.size() == 1);
  CHECK(named.alphabet.print_word(named.relators[0]) == "g1 g2 g1^-1 g2^-1");
}

TEST_CASE("relators are stored cyclically reduced") {
  Presentation p = parse_presentation("< a, b | b a b A B B >");
  REQUIRE(p.relators.size() == 1);
  // b (a b A B) B is conjugate to the commutator
  CHECK(p.relators[0] == parse_word(p.alphabet, "abAB"));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_presentation("< | a >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a, b | a c >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("a, b | >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a, b | a b"), ParseError);
  try {
    parse_presentation("< a,\nb | a\nx >");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 1);
  }
}

TEST_CASE("generating-set files: one word per line, # comments") {
  Presentation p = parse_presentation("< a, b | >");
  std::vector<Word> words = parse_genset_file(p.alphabet,
                                              "# standard basis plus a product\n"
                                              "a\n"
                                              "b   # the second generator\n"
                                              "\n"
                                              "ab\n");
  REQUIRE(words.size() == 3);
  CHECK(words[2] == parse_word(p.alphabet, "ab"));
}

TEST_CASE("generating-set normalization") {
  Presentation p = parse_presentation("< a, b | >");
  // duplicates collapse, identities are dropped
  GenSetSpec s1(p.alphabet, {oracles::word(p, "a"), oracles::word(p, "a"),
                             oracles::word(p, "1"), oracles::word(p, "b")});
  CHECK(s1.size() == 2);

  // of a mutually inverse pair only the shortlex-smaller member survives
  GenSetSpec s2(p.alphabet, {oracles::word(p, "A"), oracles::word(p, "a")});
  REQUIRE(s2.size() == 1);
  CHECK(s2.members()[0] == oracles::word(p, "a"));

  // a lone inverse stays as written
  GenSetSpec s3(p.alphabet, {oracles::word(p, "A")});
  REQUIRE(s3.size() == 1);
  CHECK(s3.members()[0] == oracles::word(p, "A"));
  CHECK(s3.symmetrized().size() == 2);

  GenSetSpec s4(p.alphabet, {oracles::word(p, "ab"), oracles::word(p, "BA")});
  CHECK(s4.size() == 1);

  CHECK_THROWS(GenSetSpec(Alphabet({"a"}), {oracles::word(p, "b")}));
}

TEST_CASE("presentation digests separate the fixtures") {
  auto d1 = presentation_digest(oracles::z2());
  auto d2 = presentation_digest(oracles::free_group(2));
  auto d3 = presentation_digest(oracles::z_mod(6));
  CHECK(d1 != d2);
  CHECK(d2 != d3);
  CHECK(digest_hex(d1).size() == 16);
  CHECK(presentation_digest(oracles::z2()) == d1);  // stable
}
