#include <doctest.h>

#include "growthlab/consequences.hpp"
#include "oracles.hpp"

using namespace growthlab;

TEST_CASE("seeding discovers the relators and their inverses") {
  Presentation z2 = oracles::z2();
  ConsequenceLog log(z2);
  CHECK(log.discovered_count() == 0);
  log.advance(1);
  CHECK(log.contains(oracles::word(z2, "abAB")));
  CHECK(log.contains(oracles::word(z2, "baBA")));
}

TEST_CASE("cyclic conjugates and a combined consequence appear") {
  Presentation z2 = oracles::z2();
  ConsequenceLog log(z2);
  log.advance(400);
  CHECK(log.contains(oracles::word(z2, "bABa")));
  CHECK(log.contains(oracles::word(z2, "ABab")));
  // a^2 b a^-2 b^-1 = (a (abAB) a^-1) * (abAB), a product of conjugates
  CHECK(log.contains(oracles::word(z2, "aabAAB")));
}

TEST_CASE("every discovered word replays to its derivation in the free group") {
  Presentation z2 = oracles::z2();
  ConsequenceLog log(z2);
  log.advance(300);
  REQUIRE(log.discovered_count() > 4);
  for (std::size_t i = 0; i < log.discovered_count(); ++i) {
    Word replayed = evaluate_derivation(z2, log.derivation(i));
    CHECK(replayed == log.discovered(i));
  }
}

TEST_CASE("free presentations have an empty normal closure") {
  ConsequenceLog log(oracles::free_group(2));
  log.advance(2000);
  CHECK(log.discovered_count() == 0);
  CHECK(log.rule_count() == 0);
}

TEST_CASE("equal_semi on the spec examples") {
  Presentation z2 = oracles::z2();
  ConsequenceLog log(z2);
  Word ab = oracles::word(z2, "ab");
  Word ba = oracles::word(z2, "ba");
  CHECK(log.equal(ab, ab) == SemiAnswer::Yes);  // identical words, step 0
  CHECK(log.equal(ab, ba) == SemiAnswer::Unknown);
  log.advance(1);  // the relator alone merges ab and ba
  CHECK(log.equal(ab, ba) == SemiAnswer::Yes);

  ConsequenceLog free_log(oracles::free_group(2));
  Presentation f2 = oracles::free_group(2);
  free_log.advance(5000);
  CHECK(free_log.equal(oracles::word(f2, "ab"), oracles::word(f2, "ba")) ==
        SemiAnswer::Unknown);
}

TEST_CASE("knowledge grows monotonically and Yes answers are permanent") {
  Presentation z2 = oracles::z2();
  ConsequenceLog log(z2);
  std::vector<Word> snapshot;
  std::vector<std::pair<Word, Word>> yes_pairs;

  for (int round = 0; round < 6; ++round) {
    log.advance(50);
    for (const Word& w : snapshot) CHECK(log.contains(w));
    snapshot.clear();
    for (std::size_t i = 0; i < log.discovered_count(); ++i)
      snapshot.push_back(log.discovered(i));
    for (const auto& [u, v] : yes_pairs) CHECK(log.equal(u, v) == SemiAnswer::Yes);
    // record some fresh Yes pairs from the current knowledge
    for (std::size_t i = 0; i < log.discovered_count(); i += 7)
      yes_pairs.push_back({log.discovered(i), Word()});
  }
}

TEST_CASE("runs with equal budgets are identical") {
  Presentation z2 = oracles::z2();
  ConsequenceLog a(z2), b(z2);
  a.advance(137);
  b.advance(137);
  REQUIRE(a.discovered_count() == b.discovered_count());
  for (std::size_t i = 0; i < a.discovered_count(); ++i)
    CHECK(a.discovered(i) == b.discovered(i));
  CHECK(a.rule_count() == b.rule_count());
}

TEST_CASE("rewriting by discovered identities is sound and length-safe") {
  Presentation z2 = oracles::z2();
  ConsequenceLog log(z2);
  log.advance(200);
  oracles::Z2Model model;
  std::string cur;
  auto rec = [&](auto&& self) -> void {
    for (int code = 0; code < 4; ++code) {
      cur.push_back(static_cast<char>(code));
      std::string reduced = reduce_packed(cur);
      std::string rewritten = log.rewrite(reduced);
      CHECK(rewritten.size() <= reduced.size());
      Word before = Word::from_reduced(reduced);
      Word after = Word::from_reduced(rewritten);
      CHECK(oracles::apply_word(model, model.identity(), before) ==
            oracles::apply_word(model, model.identity(), after));
      if (cur.size() < 5) self(self);
    }
  };
  rec(rec);
}
