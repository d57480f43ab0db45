#pragma once

#include <optional>
#include <set>
#include <vector>

#include "growthlab/bounds.hpp"
#include "growthlab/census.hpp"
#include "growthlab/oracle.hpp"

namespace growthlab {

/// Stern-Brocot enumeration of the rationals > 1: level L holds 2^(L-1)
/// fractions in increasing order of tree depth; every rational > 1 appears
/// exactly once. Rows are materialized on demand.
class SternBrocot {
 public:
  const std::vector<BigRat>& level(unsigned l);

 private:
  struct Span {
    BigInt lo_num, lo_den, hi_num, hi_den;
  };
  std::vector<std::vector<Span>> rows_;
  std::vector<std::vector<BigRat>> values_;
};

/// One emission of the rational upper-cut enumerator: x with an integer
/// certificate x^n > m >= gr(n). The inequality is exact:
/// num(x)^n > m * den(x)^n.
struct CutItem {
  BigRat x;
  unsigned radius = 0;
  BigInt bound_m;
  std::uint64_t budget = 0;   // consequence steps behind the census
  bool census_exact = false;  // m = gr(n) rather than m >= gr(n)
};

/// Exact check of a cut certificate; everything downstream of `verify` goes
/// through this.
bool cut_certificate_holds(const CutItem& item);

struct CutOptions {
  unsigned weight_level = 1;
  unsigned weight_radius = 1;
  unsigned weight_budget = 1;
  std::uint64_t budget_unit = 64;
  CensusOptions census;
  bool force_semi = false;        // ignore exact oracles (semi-decision regime)
  bool generation_checked = false;
  std::size_t kb_max_rules = 4096;
  std::size_t kb_max_lhs = 24;
};

/// Resumable enumerator of A(S') = { x in Q | x > egr(Gamma, S') }.
///
/// Dovetails (Stern-Brocot level, radius, budget index) by increasing total
/// weight; emits x the first time the integer check x^n > m succeeds against
/// the census at radius n and budget index b. Extending the sweep never
/// retracts an emission, and no rational is emitted twice. For a free
/// presentation, candidates at or below the rank floor 2k-1 are skipped.
class CutStream {
 public:
  CutStream(Presentation p, GenSetSpec s, CutOptions opts = {});

  /// Advances the sweep through all triples of total weight <= max_weight
  /// or until emit_limit emissions have accumulated.
  void run_to_weight(unsigned max_weight, std::size_t emit_limit = SIZE_MAX);

  const std::vector<CutItem>& emitted() const { return emitted_; }
  bool exact_engine() const { return oracle_.has_value(); }
  unsigned weight_reached() const { return next_weight_ - 1; }
  const Presentation& presentation() const { return presentation_; }
  const GenSetSpec& genset() const { return genset_; }
  const CutOptions& options() const { return opts_; }

 private:
  std::optional<BigInt> census_value(unsigned radius, unsigned budget_index);

  Presentation presentation_;
  GenSetSpec genset_;
  CutOptions opts_;
  std::optional<Oracle> oracle_;               // exact engine
  std::optional<BallCensus> exact_census_;     // grown as radii are requested
  std::optional<UpperCensusSeries> series_;    // semi-decision engine
  SternBrocot sb_;
  std::optional<BigRat> floor_;                // free-rank pruning floor
  std::set<BigRat> emitted_values_;
  std::vector<CutItem> emitted_;
  unsigned next_weight_ = 2;  // smallest meaningful total weight (level 1, radius 1)
};

/// Emission of the below-threshold enumerator: a generating set certified to
/// generate, with a cut certificate x < r.
struct BelowREmission {
  GenSetSpec genset;
  GenerationStatus generation;
  CutItem certificate;
};

struct BelowROptions {
  std::size_t max_total_length = 6;
  std::uint64_t generation_budget = 4000;
  unsigned cut_weight_step = 2;
  unsigned cut_weight_cap = 60;
  CutOptions cut;
  GeneratesOptions generates;
};

/// Resumable enumerator of { S' | egr(Gamma, S') < r }: candidate sets by
/// (total spelled length, shortlex), each dovetailing its generation check
/// and its cut stream. r <= 1 yields an empty stream with a warning flag.
class BelowRStream {
 public:
  BelowRStream(Presentation p, BigRat r, BelowROptions opts = {});

  /// One round admits the next candidate (if any) and gives every live
  /// candidate one slice of work.
  void run_rounds(unsigned rounds, std::size_t emit_limit = SIZE_MAX);

  const std::vector<BelowREmission>& emitted() const { return emitted_; }
  const std::vector<GenSetSpec>& unresolved() const { return unresolved_; }
  bool degenerate_threshold() const { return degenerate_; }
  const BigRat& threshold() const { return r_; }

 private:
  struct Candidate {
    GenSetSpec genset;
    std::optional<GenerationStatus> generation;
    std::optional<CutStream> cuts;
    unsigned weight = 0;
    std::size_t reported = 0;
  };

  bool admit_next();
  void advance_candidate(Candidate& c);

  Presentation presentation_;
  BigRat r_;
  BelowROptions opts_;
  bool degenerate_ = false;
  std::vector<GenSetSpec> queue_;  // all candidates up to the length cap
  std::size_t next_candidate_ = 0;
  std::vector<Candidate> live_;
  std::vector<BelowREmission> emitted_;
  std::vector<GenSetSpec> unresolved_;
};

/// All normalized generating-set candidates with the given total spelled
/// length, every member nonempty, ordered by the shortlex of their sorted
/// member tuples. Used by BelowRStream and the explorer.
std::vector<GenSetSpec> gensets_of_total_length(const Presentation& p, std::size_t total_length,
                                                std::optional<std::size_t> exact_size = {});

}  // namespace growthlab
