#pragma once

#include <memory>
#include <stdexcept>

#include "growthlab/consequences.hpp"
#include "growthlab/presentation.hpp"
#include "growthlab/rewriting.hpp"

namespace growthlab {

/// Word-problem backend. FreeGroup and Confluent are exact: normalize()
/// computes unique normal forms. SemiDecision wraps a ConsequenceLog and
/// only ever answers equality positively.
class Oracle {
 public:
  enum class Kind { FreeGroup, Confluent, SemiDecision };

  static Oracle free_group(Presentation p) {
    if (!p.relators.empty())
      throw std::invalid_argument("free-group oracle requires a presentation without relators");
    return Oracle(Kind::FreeGroup, std::move(p), {}, nullptr);
  }

  static Oracle confluent(Presentation p, RewritingSystem system) {
    if (!system.confluent())
      throw std::invalid_argument("confluent oracle requires a verified confluent system");
    return Oracle(Kind::Confluent, std::move(p), std::move(system), nullptr);
  }

  static Oracle semi_decision(std::shared_ptr<ConsequenceLog> log) {
    Presentation p = log->presentation();
    return Oracle(Kind::SemiDecision, std::move(p), {}, std::move(log));
  }

  Kind kind() const { return kind_; }
  bool exact() const { return kind_ != Kind::SemiDecision; }
  const Presentation& presentation() const { return presentation_; }

  const RewritingSystem& system() const {
    if (kind_ != Kind::Confluent) throw std::logic_error("oracle has no rewriting system");
    return system_;
  }

  ConsequenceLog& log() const {
    if (kind_ != Kind::SemiDecision) throw std::logic_error("oracle has no consequence log");
    return *log_;
  }

  /// Unique normal form; exact oracles only.
  Word normalize(const Word& w) const {
    switch (kind_) {
      case Kind::FreeGroup:
        return w;  // words are freely reduced by construction
      case Kind::Confluent:
        return system_.normal_form(w);
      case Kind::SemiDecision:
        throw std::logic_error("normalize is undefined for the semi-decision oracle");
    }
    throw std::logic_error("corrupt oracle");
  }

 private:
  Oracle(Kind kind, Presentation p, RewritingSystem system, std::shared_ptr<ConsequenceLog> log)
      : kind_(kind),
        presentation_(std::move(p)),
        system_(std::move(system)),
        log_(std::move(log)) {}

  Kind kind_;
  Presentation presentation_;
  RewritingSystem system_;
  std::shared_ptr<ConsequenceLog> log_;
};

/// Picks the strongest available backend: FreeGroup for free presentations,
/// a confluent system if completion succeeds within the budgets, otherwise
/// the semi-decision engine.
Oracle auto_oracle(const Presentation& p, std::size_t max_rules = 4096,
                   std::size_t max_lhs_len = 24);

}  // namespace growthlab
