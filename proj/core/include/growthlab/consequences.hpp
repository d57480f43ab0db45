#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "growthlab/presentation.hpp"
#include "growthlab/rewriting.hpp"
#include "growthlab/word.hpp"

namespace growthlab {

enum class SemiAnswer { Yes, Unknown };

/// Fair enumeration of the normal closure of the relators in F(S).
///
/// The schedule: step 1 seeds the freely reduced relators and their inverses.
/// Each later step takes the next seeded-or-discovered word w (cycling
/// through the whole discovered list once per stage) and inserts the free
/// reductions of x w x^-1 for all conjugators x of length <= stage, and of
/// w d and d w for previously discovered d, truncated to length <= stage +
/// max relator length. The stage advances when the cursor wraps, so every
/// word is eventually revisited with longer conjugators: in the limit every
/// element of the normal closure is discovered.
///
/// Every insertion carries a derivation (product of conjugates of relators)
/// that evaluate_derivation can replay.
///
/// Identity rewriting: each discovered identity w contributes the rewrite
/// rules u -> z^-1 for every split u z of every rotation of w and w^-1 with
/// z^-1 shortlex-below u. Rules become visible in generations, closed by
/// advance(); rewrite() applies the generations in order, each to a fixed
/// point. Because later generations only postprocess earlier results, a word
/// once rewritten to the empty word stays empty under any further budget:
/// Yes answers are permanent.
class ConsequenceLog {
 public:
  explicit ConsequenceLog(Presentation p);

  const Presentation& presentation() const { return presentation_; }
  std::uint64_t steps() const { return steps_; }
  std::size_t discovered_count() const { return entries_.size(); }

  bool contains(const Word& w) const { return index_.count(w.packed()) > 0; }
  const Word& discovered(std::size_t i) const { return entries_[i].word; }
  const Derivation& derivation(std::size_t i) const { return entries_[i].derivation; }

  /// Runs `steps` schedule steps (>= 1) and closes a rule generation.
  void advance(std::uint64_t steps);

  /// Staged rewriting by the discovered identities; sound (never changes the
  /// group element) and length-nonincreasing.
  std::string rewrite(std::string_view packed) const;

  /// Rewriting restricted to the first `generations` rule generations; with
  /// generations = generation_count() this is rewrite(). Lets census series
  /// re-evaluate earlier budget checkpoints after the log has moved on.
  std::string rewrite_with_generations(std::string_view packed, std::size_t generations) const;

  /// Yes iff free_reduce(u v^-1) rewrites to the empty word under the
  /// current generations.
  SemiAnswer equal(const Word& u, const Word& v) const;

  std::size_t rule_count() const { return rules_.size(); }
  std::size_t generation_count() const { return generation_ends_.size(); }

 private:
  struct Entry {
    Word word;
    Derivation derivation;
  };

  void step_once();
  void insert(Word w, Derivation d);
  void harvest_rules(const Word& identity);

  Presentation presentation_;
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::uint64_t steps_ = 0;
  bool seeded_ = false;
  std::size_t stage_ = 1;
  std::size_t cursor_ = 0;
  std::size_t stage_limit_ = 0;

  struct IdentityRule {
    std::string lhs;
    std::string rhs;
  };
  std::vector<IdentityRule> rules_;          // in harvest order
  std::vector<IdentityRule> pending_rules_;  // harvested since last advance()
  std::unordered_set<std::string> rule_keys_;
  std::vector<std::size_t> generation_ends_;  // prefix lengths into rules_
};

inline SemiAnswer equal_semi(const ConsequenceLog& log, const Word& u, const Word& v) {
  return log.equal(u, v);
}

}  // namespace growthlab
