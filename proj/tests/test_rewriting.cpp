#include <doctest.h>

#include <set>

#include "growthlab/rewriting.hpp"
#include "oracles.hpp"

using namespace growthlab;

namespace {

// Replays each rule's derivation in the free group (independent reducer) and
// compares against lhs rhs^-1.
void check_rule_soundness(const Presentation& p, const RewritingSystem& rws) {
  for (const auto& rule : rws.rules()) {
    std::string witness;
    oracles::FreeModel model;
    oracles::FreeModel::Element acc;
    for (const auto& factor : rule.derivation) {
      for (char c : factor.conjugator) acc = model.mul_letter(acc, static_cast<unsigned char>(c));
      const std::string& r = p.relators[factor.relator].packed();
      std::string rel = factor.exponent > 0 ? r : inverse_packed(r);
      for (char c : rel) acc = model.mul_letter(acc, static_cast<unsigned char>(c));
      for (char c : inverse_packed(factor.conjugator))
        acc = model.mul_letter(acc, static_cast<unsigned char>(c));
    }
    std::string target = rule.lhs;
    for (char c : inverse_packed(rule.rhs))
      target.push_back(c);
    oracles::FreeModel::Element reduced_target;
    for (char c : target)
      reduced_target = model.mul_letter(reduced_target, static_cast<unsigned char>(c));
    CHECK(acc == reduced_target);
    (void)witness;
  }
}

std::set<std::string> normal_forms_up_to(const RewritingSystem& rws, int letters, int max_len) {
  std::set<std::string> forms{""};
  std::string cur;
  auto rec = [&](auto&& self) -> void {
    for (int code = 0; code < letters; ++code) {
      cur.push_back(static_cast<char>(code));
      if (rws.rewrite(cur) == cur) {
        forms.insert(cur);
        if (static_cast<int>(cur.size()) < max_len) self(self);
      }
      cur.pop_back();
    }
  };
  rec(rec);
  return forms;
}

}  // namespace

TEST_CASE("free presentation completes to the cancellation rules") {
  CompletionResult r = kb_complete(oracles::free_group(2), 64, 16);
  CHECK(r.complete);
  CHECK(r.system.confluent());
  CHECK(r.system.rules().size() == 4);  // the four cancellation pairs
}

TEST_CASE("Z^2 completes; normal forms are sorted power words") {
  Presentation z2 = oracles::z2();
  CompletionResult r = kb_complete(z2, 64, 16);
  REQUIRE(r.complete);
  REQUIRE(r.system.confluent());
  check_rule_soundness(z2, r.system);

  // b a -> a b from the completed system
  CHECK(r.system.normal_form(oracles::word(z2, "ba")) == oracles::word(z2, "ab"));
  CHECK(r.system.normal_form(oracles::word(z2, "abAB")).empty());

  // normal forms of length <= 4 are exactly the a^i b^j with |i|+|j| <= 4
  auto forms = normal_forms_up_to(r.system, 4, 4);
  CHECK(forms.size() == oracles::z2_ball(4));

  // agreement with the integer model on all short words
  oracles::Z2Model model;
  std::string cur;
  auto rec = [&](auto&& self) -> void {
    for (int code = 0; code < 4; ++code) {
      cur.push_back(static_cast<char>(code));
      Word w = Word::from_reduced(reduce_packed(cur));
      auto lhs = oracles::apply_word(model, model.identity(), w);
      auto nf = r.system.normal_form(w);
      auto rhs = oracles::apply_word(model, model.identity(), nf);
      CHECK(lhs == rhs);
      if (cur.size() < 5) self(self);
    }
  };
  rec(rec);
}

TEST_CASE("Z/6 completes with the expected normal forms") {
  Presentation z6 = oracles::z_mod(6);
  CompletionResult r = kb_complete(z6, 64, 16);
  REQUIRE(r.complete);
  REQUIRE(r.system.confluent());
  check_rule_soundness(z6, r.system);

  auto forms = normal_forms_up_to(r.system, 2, 8);
  std::set<std::string> expected;
  for (const char* t : {"", "a", "aa", "aaa", "A", "AA"})
    expected.insert(oracles::word(z6, t).packed());
  CHECK(forms == expected);

  // a^4 normalizes to a^-2 (shortlex-least representative)
  CHECK(r.system.normal_form(oracles::word(z6, "a^4")) == oracles::word(z6, "A^2"));
}

TEST_CASE("budget exhaustion returns a sound partial system") {
  Presentation surface = oracles::surface_genus2();
  CompletionResult r = kb_complete(surface, 80, 12);
  // whether or not completion succeeds at this budget, every rule must
  // carry a replayable witness
  check_rule_soundness(surface, r.system);
  if (!r.complete) CHECK_FALSE(r.system.confluent());
}

TEST_CASE("budget validation") {
  CHECK_THROWS_AS(kb_complete(oracles::z2(), 0, 16), std::invalid_argument);
  CHECK_THROWS_AS(kb_complete(oracles::z2(), 64, 0), std::invalid_argument);
  CHECK_THROWS_AS(kb_complete(oracles::z2(), 0, 0), std::invalid_argument);
}

TEST_CASE("serialization round trip") {
  Presentation z2 = oracles::z2();
  CompletionResult r = kb_complete(z2, 64, 16);
  std::string text = r.system.serialize(z2.alphabet);
  RewritingSystem back = parse_rewriting_system(z2.alphabet, text);
  CHECK(back.confluent() == r.system.confluent());
  REQUIRE(back.rules().size() == r.system.rules().size());
  for (std::size_t i = 0; i < back.rules().size(); ++i) {
    CHECK(back.rules()[i].lhs == r.system.rules()[i].lhs);
    CHECK(back.rules()[i].rhs == r.system.rules()[i].rhs);
  }
  // same normal forms through the round trip
  CHECK(back.rewrite(oracles::word(z2, "baba").packed()) ==
        r.system.rewrite(oracles::word(z2, "baba").packed()));

  CHECK(rws_cache_key(z2, 64, 16) != rws_cache_key(z2, 64, 17));
}
