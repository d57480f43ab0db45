#include "growthlab/oracle.hpp"

namespace growthlab {

Oracle auto_oracle(const Presentation& p, std::size_t max_rules, std::size_t max_lhs_len) {
  if (p.is_free()) return Oracle::free_group(p);
  CompletionResult completion = kb_complete(p, max_rules, max_lhs_len);
  if (completion.complete && completion.system.confluent())
    return Oracle::confluent(p, std::move(completion.system));
  return Oracle::semi_decision(std::make_shared<ConsequenceLog>(p));
}

}  // namespace growthlab
