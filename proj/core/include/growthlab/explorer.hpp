#pragma once

#include <optional>
#include <string>
#include <vector>

#include "growthlab/bounds.hpp"
#include "growthlab/census.hpp"
#include "growthlab/cuts.hpp"
#include "growthlab/nielsen.hpp"
#include "growthlab/oracle.hpp"

namespace growthlab {

struct GenSetEnumeration {
  std::vector<GenSetSpec> verified;    // generation-checked, in (length, shortlex) order
  std::vector<GenSetSpec> unverified;  // side channel: Unknown at the per-set budget
};

/// All normalized size-m word sets of total spelled length <= max_total_length,
/// generation-checked with a per-set budget.
GenSetEnumeration enumerate_gensets(const Presentation& p, std::size_t size,
                                    std::size_t max_total_length,
                                    std::uint64_t per_set_budget = 4000,
                                    const GeneratesOptions& gen_opts = {});

struct EGRSampleEntry {
  GenSetSpec genset;
  BallCensus census;  // exact or upper counts, per sample flag
  EgrUpperBound bound;
  std::optional<RatioEstimate> ratio;  // exact censuses only
  std::optional<OrbitKey> orbit;       // free presentations only
  std::size_t multiplicity = 1;        // generating sets collapsed onto this orbit
};

/// Sampled upper bounds on EGR(Gamma) over a family of generating sets.
/// Entries are sorted by bound (exact comparison), ties by the shortlex of
/// the generating set; orbit duplicates are collapsed with multiplicity.
/// Values are finite-radius upper bounds, not growth rates; slack_median
/// (bound minus ratio estimate) quantifies the truncation slack.
struct EGRSample {
  Presentation presentation;
  unsigned radius = 0;
  bool exact = false;
  std::vector<EGRSampleEntry> entries;
  std::vector<double> bounds_in_enumeration_order;  // pre-collapse, probe input
  double slack_median = 0.0;
};

struct SampleOptions {
  std::uint64_t upper_budget = 512;  // semi-decision regime only
  CensusOptions census;
  std::size_t kb_max_rules = 4096;
  std::size_t kb_max_lhs = 24;
};

EGRSample sample_egr(const Presentation& p, const std::vector<GenSetSpec>& gensets,
                     unsigned radius, const SampleOptions& opts = {});

struct ValueCluster {
  double representative = 0.0;  // largest member
  double min_value = 0.0;
  std::size_t count = 0;
};

/// Finite-sample well-order probe: epsilon-clusters of the values, the least
/// cluster, the longest strictly decreasing run (consecutive in the given
/// order, every drop > epsilon), and one adaptive derived-set pass as the
/// accumulation summary. Long decreasing runs in bound samples reflect bound
/// slack rather than true growth rates; the note says so.
struct WellOrderReport {
  double epsilon = 0.0;
  std::vector<ValueCluster> clusters;  // ascending
  std::size_t minimum_cluster = 0;     // index of the least cluster (always 0)
  std::size_t longest_decreasing_run = 1;
  std::size_t accumulation_clusters = 0;  // clusters of one adaptive derived pass
  double accumulation_epsilon = 0.0;
  std::string note;
};

WellOrderReport wellorder_report(const std::vector<double>& values_in_order, double epsilon);

/// Default probe epsilon: 10x the sample's median slack diagnostic.
double default_wellorder_epsilon(const EGRSample& sample);

struct CuspStep {
  Word extra_word;
  GenSetSpec genset;
  BallCensus census;
  EgrUpperBound bound;
  bool dominated = false;  // census <= extension census at every radius
};

/// The one-step growth-ordinal experiment: generating sets S + {w_i} of the
/// base group against S + {t} of base * Z.
struct CuspSequence {
  Presentation base;
  GenSetSpec base_genset;
  Presentation extension;      // base * Z, fresh generator appended
  GenSetSpec extension_genset; // S + {t}
  BallCensus extension_census;
  EgrUpperBound extension_bound;
  std::vector<CuspStep> steps;
  bool pointwise_domination = true;
};

/// Default schedule w_i = a b a b^2 ... a b^i over the first two generators;
/// lengths grow so that small balls of (base, S + {w_i}) look like balls of
/// base * Z.
std::vector<Word> default_cusp_schedule(const Presentation& base, unsigned count);

CuspSequence cusp_sequence(const Presentation& base, const GenSetSpec& s,
                           const std::vector<Word>& schedule, unsigned radius,
                           const SampleOptions& opts = {});

}  // namespace growthlab
