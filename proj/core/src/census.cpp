#include "growthlab/census.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace growthlab {

namespace {

/// Generic class-counting BFS: keys are canonical forms produced by
/// `canon`, edges multiply by the symmetrized members. Returns ball sizes
/// for every radius whose frontier was fully expanded under the cap.
template <typename Canon>
std::vector<BigInt> class_bfs(const GenSetSpec& s, unsigned n_max, std::size_t node_cap,
                              Canon&& canon) {
  std::vector<BigInt> sizes;
  std::unordered_set<std::string> seen;
  std::vector<std::string> frontier;

  std::string root = canon(std::string());
  seen.insert(root);
  frontier.push_back(root);
  sizes.push_back(1);

  for (unsigned level = 0; level < n_max; ++level) {
    std::vector<std::string> next;
    for (const std::string& form : frontier) {
      for (const Word& t : s.symmetrized()) {
        std::string raw = form;
        append_reduced(raw, t.packed());
        std::string key = canon(std::move(raw));
        if (seen.size() >= node_cap && !seen.count(key)) return sizes;  // cap: stop here
        if (seen.insert(key).second) next.push_back(std::move(key));
      }
    }
    sizes.push_back(sizes.back() + next.size());
    frontier = std::move(next);
    if (frontier.empty()) break;  // ball saturated (finite group)
  }
  while (sizes.size() < static_cast<std::size_t>(n_max) + 1)
    sizes.push_back(sizes.back());
  return sizes;
}

/// Aho-Corasick automaton over the forbidden factors (rule left-hand
/// sides); states are trie nodes, a state is dead when any suffix completes
/// a factor.
struct FactorAutomaton {
  std::vector<std::vector<int>> next;  // state x letter -> state
  std::vector<bool> dead;

  FactorAutomaton(const std::vector<std::string>& forbidden, int letters) {
    next.push_back(std::vector<int>(letters, 0));
    dead.push_back(false);
    std::vector<int> fail(1, 0);
    std::vector<std::vector<int>> children(1, std::vector<int>(letters, -1));

    for (const std::string& f : forbidden) {
      int state = 0;
      for (char c : f) {
        int letter = static_cast<unsigned char>(c);
        if (children[state][letter] < 0) {
          children[state][letter] = static_cast<int>(children.size());
          children.push_back(std::vector<int>(letters, -1));
          fail.push_back(0);
          dead.push_back(false);
        }
        state = children[state][letter];
      }
      dead[state] = true;
    }

    // breadth-first failure links; dead status propagates along them
    std::deque<int> queue;
    for (int c = 0; c < letters; ++c) {
      int child = children[0][c];
      if (child >= 0) {
        fail[child] = 0;
        queue.push_back(child);
      }
    }
    std::vector<int> order;
    while (!queue.empty()) {
      int state = queue.front();
      queue.pop_front();
      order.push_back(state);
      if (dead[fail[state]]) dead[state] = true;
      for (int c = 0; c < letters; ++c) {
        int child = children[state][c];
        if (child < 0) continue;
        int f = fail[state];
        while (f != 0 && children[f][c] < 0) f = fail[f];
        fail[child] = children[f][c] >= 0 && children[f][c] != child ? children[f][c] : 0;
        queue.push_back(child);
      }
    }

    next.assign(children.size(), std::vector<int>(letters, 0));
    // goto function: trie edge if present, else follow failure of the state
    std::deque<int> bfs{0};
    std::vector<bool> visited(children.size(), false);
    visited[0] = true;
    while (!bfs.empty()) {
      int state = bfs.front();
      bfs.pop_front();
      for (int c = 0; c < letters; ++c) {
        int child = children[state][c];
        if (child >= 0) {
          next[state][c] = child;
          if (!visited[child]) {
            visited[child] = true;
            bfs.push_back(child);
          }
        } else {
          next[state][c] = state == 0 ? 0 : next[fail[state]][c];
        }
      }
    }
  }
};

}  // namespace

std::vector<BigInt> automaton_ball_sizes(const std::vector<std::string>& forbidden,
                                         int letter_count, unsigned n_max) {
  FactorAutomaton automaton(forbidden, letter_count);
  const std::size_t states = automaton.next.size();

  std::vector<BigInt> counts(states, 0);
  counts[0] = 1;
  std::vector<BigInt> sizes{1};
  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<BigInt> step(states, 0);
    for (std::size_t q = 0; q < states; ++q) {
      if (counts[q] == 0 || automaton.dead[q]) continue;
      for (int c = 0; c < letter_count; ++c) {
        int to = automaton.next[q][c];
        if (automaton.dead[to]) continue;
        step[to] += counts[q];
      }
    }
    counts = std::move(step);
    BigInt sphere = 0;
    for (std::size_t q = 0; q < states; ++q)
      if (!automaton.dead[q]) sphere += counts[q];
    sizes.push_back(sizes.back() + sphere);
  }
  return sizes;
}

BallCensus exact_balls(const Oracle& oracle, const GenSetSpec& s, unsigned n_max,
                       const CensusOptions& opts) {
  if (!oracle.exact())
    throw std::invalid_argument("exact_balls requires an exact oracle");

  std::vector<Word> forms;
  for (const Word& m : s.members()) {
    Word nf = oracle.normalize(m);
    if (nf.empty())
      throw std::invalid_argument("generating-set member is the identity in the group");
    forms.push_back(std::move(nf));
  }

  // Standard-basis fast path: the symmetrized normal forms are exactly the
  // single letters, so distance equals normal-form length and ball sizes are
  // path counts in the normal-form automaton.
  const int letters = 2 * oracle.presentation().alphabet.size();
  {
    std::set<std::string> letter_set;
    for (const Word& nf : forms) {
      letter_set.insert(nf.packed());
      letter_set.insert(nf.inverse().packed());
    }
    bool standard = static_cast<int>(letter_set.size()) == letters;
    for (const auto& p : letter_set)
      if (p.size() != 1) standard = false;
    if (standard) {
      std::vector<std::string> forbidden;
      if (oracle.kind() == Oracle::Kind::FreeGroup) {
        for (int c = 0; c < letters; c += 2) {
          forbidden.push_back(std::string{static_cast<char>(c), static_cast<char>(c + 1)});
          forbidden.push_back(std::string{static_cast<char>(c + 1), static_cast<char>(c)});
        }
      } else {
        for (const auto& rule : oracle.system().rules()) forbidden.push_back(rule.lhs);
      }
      BallCensus census{s, automaton_ball_sizes(forbidden, letters, n_max), true};
      return census;
    }
  }

  auto canon = [&oracle](std::string raw) {
    return oracle.normalize(Word::from_reduced(std::move(raw))).packed();
  };
  BallCensus census{s, class_bfs(s, n_max, opts.node_cap, canon), true};
  return census;
}

UpperCensusSeries::UpperCensusSeries(Presentation p, GenSetSpec s,
                                     std::uint64_t checkpoint_unit, const CensusOptions& opts)
    : presentation_(std::move(p)),
      genset_(std::move(s)),
      unit_(checkpoint_unit == 0 ? 1 : checkpoint_unit),
      opts_(opts),
      log_(std::make_shared<ConsequenceLog>(presentation_)) {
  census_.genset = genset_;
  checkpoint_generations_.push_back(0);  // checkpoint 0 = untouched log
  checkpoint_radius_.push_back(0);
  census_.upper_sizes.push_back(1);
}

void UpperCensusSeries::fold_checkpoint(unsigned checkpoint, unsigned n_max) {
  const std::size_t generations = checkpoint_generations_[checkpoint];
  auto canon = [this, generations](std::string raw) {
    return log_->rewrite_with_generations(raw, generations);
  };
  std::vector<BigInt> sizes = class_bfs(genset_, n_max, opts_.node_cap, canon);
  for (std::size_t n = 0; n < sizes.size(); ++n) {
    if (n < census_.upper_sizes.size())
      census_.upper_sizes[n] = std::min(census_.upper_sizes[n], sizes[n]);
    else
      census_.upper_sizes.push_back(sizes[n]);
  }
  if (sizes.size() < static_cast<std::size_t>(n_max) + 1) {
    // node cap reached; rerunning this checkpoint cannot go deeper
    checkpoint_radius_[checkpoint] = ~0u;
  } else {
    checkpoint_radius_[checkpoint] =
        std::max(checkpoint_radius_[checkpoint], static_cast<unsigned>(sizes.size()) - 1);
  }
}

const UpperCensus& UpperCensusSeries::ensure(unsigned budget_index, unsigned n_max) {
  for (unsigned b = static_cast<unsigned>(checkpoint_generations_.size()); b <= budget_index;
       ++b) {
    log_->advance(unit_);
    checkpoint_generations_.push_back(log_->generation_count());
    checkpoint_radius_.push_back(0);
  }
  for (unsigned b = 0; b <= budget_index; ++b)
    if (checkpoint_radius_[b] < n_max) fold_checkpoint(b, n_max);
  census_.log_steps = log_->steps();
  return census_;
}

UpperCensus upper_balls(const Presentation& p, const GenSetSpec& s, unsigned n_max,
                        std::uint64_t log_steps, std::uint64_t checkpoint_unit,
                        const CensusOptions& opts) {
  UpperCensusSeries series(p, s, checkpoint_unit, opts);
  unsigned budget_index =
      static_cast<unsigned>((log_steps + series.checkpoint_unit() - 1) /
                            series.checkpoint_unit());
  if (log_steps == 0) budget_index = 0;
  UpperCensus census = series.ensure(budget_index, n_max);
  return census;
}

GenerationStatus generates_semi(const Presentation& p, const GenSetSpec& s,
                                std::uint64_t budget, const GeneratesOptions& opts) {
  GenerationStatus status;
  const int k = p.alphabet.size();
  status.witnesses.assign(k, {});
  status.witness_words.assign(k, Word());
  std::vector<bool> matched(k, false);

  ConsequenceLog log(p);

  struct Product {
    Word word;
    std::vector<std::pair<int, int>> expr;
  };
  std::vector<Product> products;
  std::unordered_set<std::string> seen;
  std::vector<std::size_t> frontier;

  // member t with exponent e, as (member index, +1/-1)
  auto push_product = [&](Word w, std::vector<std::pair<int, int>> expr) {
    if (w.empty()) return;
    if (products.size() >= opts.product_cap) return;
    if (!seen.insert(w.packed()).second) return;
    frontier.push_back(products.size());
    products.push_back({std::move(w), std::move(expr)});
  };

  auto check_matches = [&]() {
    for (int g = 0; g < k; ++g) {
      if (matched[g]) continue;
      Word target = Word::reduce({Letter(g, +1)});
      for (const Product& prod : products) {
        if (log.equal(prod.word, target) == SemiAnswer::Yes) {
          matched[g] = true;
          status.witnesses[g] = prod.expr;
          status.witness_words[g] = prod.word;
          break;
        }
      }
    }
    return std::all_of(matched.begin(), matched.end(), [](bool b) { return b; });
  };

  for (;;) {
    // one length stage of product enumeration
    std::vector<std::size_t> previous = std::move(frontier);
    frontier.clear();
    if (previous.empty() && products.empty()) {
      for (std::size_t mi = 0; mi < s.members().size(); ++mi) {
        push_product(s.members()[mi], {{static_cast<int>(mi), +1}});
        Word inv = s.members()[mi].inverse();
        push_product(std::move(inv), {{static_cast<int>(mi), -1}});
      }
    } else {
      for (std::size_t pi : previous) {
        for (std::size_t mi = 0; mi < s.members().size(); ++mi) {
          for (int e = +1; e >= -1; e -= 2) {
            Word w = multiply(products[pi].word,
                              e > 0 ? s.members()[mi] : s.members()[mi].inverse());
            auto expr = products[pi].expr;
            expr.push_back({static_cast<int>(mi), e});
            push_product(std::move(w), std::move(expr));
          }
        }
      }
    }

    if (check_matches()) {
      status.generates = true;
      status.budget_consumed = log.steps();
      return status;
    }
    if (log.steps() >= budget) {
      status.budget_consumed = log.steps();
      return status;  // Unknown
    }
    std::uint64_t slice = std::min<std::uint64_t>(opts.steps_per_stage, budget - log.steps());
    if (slice == 0) slice = 1;
    log.advance(slice);
    if (check_matches()) {
      status.generates = true;
      status.budget_consumed = log.steps();
      return status;
    }
  }
}

}  // namespace growthlab
