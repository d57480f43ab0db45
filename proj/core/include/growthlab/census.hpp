#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "growthlab/consequences.hpp"
#include "growthlab/oracle.hpp"
#include "growthlab/presentation.hpp"

namespace growthlab {

using BigInt = boost::multiprecision::cpp_int;

/// Ball sizes gr(Gamma, S', n) of the Cayley graph with respect to the
/// symmetrized generating set, by radius. Members of S' have edge length 1
/// regardless of their spelled length; radius 0 holds only the identity.
struct BallCensus {
  GenSetSpec genset;
  std::vector<BigInt> ball_sizes;  // index = radius
  bool exact = true;

  unsigned max_radius() const { return static_cast<unsigned>(ball_sizes.size()) - 1; }
  BigInt sphere_size(unsigned n) const {
    return n == 0 ? ball_sizes[0] : ball_sizes[n] - ball_sizes[n - 1];
  }
};

/// Certified over-approximation: upper_sizes[n] >= gr(n), obtained by
/// counting distinct identity-rewritten forms reachable in <= n edge steps.
/// Entries are running minima over all budget checkpoints evaluated so far,
/// so they are nonincreasing in the budget by construction.
struct UpperCensus {
  GenSetSpec genset;
  std::vector<BigInt> upper_sizes;  // valid up to max_radius()
  std::uint64_t log_steps = 0;      // consequence budget actually consumed

  unsigned max_radius() const { return static_cast<unsigned>(upper_sizes.size()) - 1; }
};

struct CensusOptions {
  std::size_t node_cap = 2'000'000;  // BFS class cap; deeper radii are dropped
};

/// Exact census. Uses a path-counting automaton over the normal-form
/// language when the generating set normalizes to the full letter set
/// (standard-basis style), and hashed-normal-form BFS otherwise. Throws if a
/// member is the identity in the group. The BFS route drops radii whose
/// expansion would exceed the node cap; ball_sizes then ends early.
BallCensus exact_balls(const Oracle& oracle, const GenSetSpec& s, unsigned n_max,
                       const CensusOptions& opts = {});

/// Counts words of spelled length <= n in the normal-form language of a
/// confluent system (or of free reduction when `forbidden` holds just the
/// cancellation pairs). Exact for standard-basis generating sets because
/// shortlex normal forms are geodesic.
std::vector<BigInt> automaton_ball_sizes(const std::vector<std::string>& forbidden,
                                         int letter_count, unsigned n_max);

/// Anytime upper censuses over one consequence log. Budgets advance in
/// fixed-size checkpoints; each checkpoint runs a fresh class-counting BFS
/// against the identities known at that point and folds the counts into a
/// running minimum.
class UpperCensusSeries {
 public:
  UpperCensusSeries(Presentation p, GenSetSpec s, std::uint64_t checkpoint_unit = 64,
                    const CensusOptions& opts = {});

  /// Ensures checkpoints 0..budget_index exist and radii up to n_max are
  /// covered where the node cap allows; returns the folded census.
  const UpperCensus& ensure(unsigned budget_index, unsigned n_max);

  const UpperCensus& current() const { return census_; }
  const ConsequenceLog& log() const { return *log_; }
  std::uint64_t checkpoint_unit() const { return unit_; }

 private:
  void fold_checkpoint(unsigned checkpoint, unsigned n_max);

  Presentation presentation_;
  GenSetSpec genset_;
  std::uint64_t unit_;
  CensusOptions opts_;
  std::shared_ptr<ConsequenceLog> log_;
  std::vector<std::size_t> checkpoint_generations_;  // generation count per checkpoint
  std::vector<unsigned> checkpoint_radius_;          // deepest radius folded per checkpoint
  UpperCensus census_;
};

/// One-shot upper census: advances a fresh log to `log_steps` in checkpoint
/// increments and evaluates the census at every checkpoint.
UpperCensus upper_balls(const Presentation& p, const GenSetSpec& s, unsigned n_max,
                        std::uint64_t log_steps, std::uint64_t checkpoint_unit = 64,
                        const CensusOptions& opts = {});

/// Witnessed generation verdict. Each witness is a product of generating-set
/// members (index, exponent) whose free reduction is equal to the alphabet
/// generator under equal_semi at the final log.
struct GenerationStatus {
  bool generates = false;
  std::vector<std::vector<std::pair<int, int>>> witnesses;  // per generator
  std::vector<Word> witness_words;
  std::uint64_t budget_consumed = 0;
};

struct GeneratesOptions {
  std::uint64_t steps_per_stage = 1000;  // consequence steps per product stage
  std::size_t product_cap = 200'000;     // distinct product words kept
};

/// Semi-decides whether s generates: enumerates products of members by
/// length, interleaved with consequence enumeration; Generates verdicts are
/// permanent, Unknown means the budget ran out.
GenerationStatus generates_semi(const Presentation& p, const GenSetSpec& s,
                                std::uint64_t budget, const GeneratesOptions& opts = {});

}  // namespace growthlab
