#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growthlab/presentation.hpp"
#include "growthlab/word.hpp"

namespace growthlab {

/// One factor x r^e x^-1 of a normal-closure witness; r is a relator of the
/// owning presentation, addressed by index.
struct ConjugateFactor {
  std::string conjugator;  // packed, freely reduced
  int relator = 0;
  int exponent = +1;  // +1 or -1
};

/// A product of conjugates of relators. Equations and rules carry one of
/// these as a machine-checkable certificate that lhs rhs^-1 lies in the
/// normal closure of the relators.
using Derivation = std::vector<ConjugateFactor>;

Derivation inverse_derivation(const Derivation& d);
Derivation conjugate_derivation(std::string_view prefix, const Derivation& d);
Derivation concat_derivations(Derivation a, const Derivation& b);

/// Multiplies the factors out in the free group; the replay oracle for
/// soundness checks.
Word evaluate_derivation(const Presentation& p, const Derivation& d);

/// lhs -> rhs with lhs shortlex-greater; rewriting is therefore terminating.
struct RewriteRule {
  std::string lhs;  // packed, nonempty
  std::string rhs;  // packed
  Derivation derivation;
};

/// A terminating string-rewriting system over the letter alphabet of a
/// presentation (generators and formal inverses are distinct letters; the
/// free cancellation rules x x^-1 -> 1 are ordinary rules of the system).
class RewritingSystem {
 public:
  RewritingSystem() = default;
  explicit RewritingSystem(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {}

  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool confluent() const { return confluent_; }
  void mark_confluent() { confluent_ = true; }

  /// Rewrites to normal form: repeatedly applies the first matching rule at
  /// the leftmost matching position. Deterministic.
  std::string rewrite(std::string_view packed) const;
  Word normal_form(const Word& w) const { return Word::from_reduced(rewrite(w.packed())); }

  std::string serialize(const Alphabet& alphabet) const;

 private:
  std::vector<RewriteRule> rules_;
  bool confluent_ = false;
};

RewritingSystem parse_rewriting_system(const Alphabet& alphabet, std::string_view text);

struct CompletionResult {
  RewritingSystem system;
  bool complete = false;       // queue drained with nothing discarded
  std::size_t equations_processed = 0;
  std::size_t pairs_generated = 0;
  std::size_t rules_discarded = 0;  // oriented equations over the lhs budget
};

/// Shortlex Knuth-Bendix completion of a group presentation. Seeds the rule
/// set with the cancellation rules and one equation r = 1 per relator, then
/// processes critical pairs with interreduction until the queue drains or a
/// budget is hit. On success the returned system is verified confluent (all
/// critical pairs of the final rules resolve). On budget exhaustion the
/// partial system is still sound: every rule carries a replayable derivation.
///
/// Budgets: max_rules bounds the number of live rules, max_lhs_len discards
/// oriented equations with longer left-hand sides. Both must be positive and
/// max_rules must cover the relator count.
CompletionResult kb_complete(const Presentation& p, std::size_t max_rules,
                             std::size_t max_lhs_len);

/// Digest for rewriting-system caches: presentation plus budget parameters.
std::uint64_t rws_cache_key(const Presentation& p, std::size_t max_rules,
                            std::size_t max_lhs_len);

}  // namespace growthlab
