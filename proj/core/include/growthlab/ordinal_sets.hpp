#pragma once

#include <optional>
#include <vector>

#include "growthlab/ordinal.hpp"

namespace growthlab {

/// Finite sorted sample of reals with a declared tolerance; duplicates
/// within tolerance merge with multiplicity.
struct RealSample {
  std::vector<double> values;  // ascending
  double tolerance = 0.0;
  std::vector<std::size_t> multiplicities;  // parallel to values

  static RealSample from_values(std::vector<double> raw, double tolerance);
};

/// Finite truncation of a canonical well-ordered subset of the reals of
/// order type x (natural exponents only; w^w has no bounded realization
/// here).
///
/// Layout: one segment per CNF copy, in CNF order, at integer offsets
/// (stride 3 after a copy of exponent >= 1, stride 1 after a point).
/// A copy of exponent e spans width q^(E-e) where E is the degree of x and
/// q = 1/(8 (depth+1) (depth+2)); inside a copy, block n sits at relative
/// offset 1 - 1/n (n = 1..depth) and holds the copy of exponent e-1. For
/// x = w this is exactly the truncated set {1 - 1/n}; nesting levels live in
/// separated gap bands, which is what the estimator's scale detection needs.
RealSample canonical_set(const Ordinal& x, unsigned depth);

/// One epsilon-derived-set pass: points with >= K predecessors within
/// epsilon are accumulation marks; a cluster is a connected group around the
/// marks and is replaced by its largest point (the limit proxy).
struct DerivedPass {
  std::vector<double> proxies;        // one per cluster, ascending
  std::size_t cluster_count = 0;
  std::size_t isolated_total = 0;     // points in no cluster
  std::size_t isolated_above = 0;     // isolated points above every proxy
  double epsilon = 0.0;
};

DerivedPass derived_pass(const std::vector<double>& points, double epsilon, int min_predecessors);

/// Scale detection for one pass: the epsilon sits inside the largest
/// multiplicative jump of the sorted gap sequence (preferring the
/// smallest-scale jump of ratio >= 4), falling back to the largest ratio
/// when no clean band split exists.
double adaptive_epsilon(const std::vector<double>& points);

struct OrdinalEstimate {
  Ordinal estimate;
  bool lower_bound_only = false;  // explicit schedule ran out before exhaustion
  bool unstable = false;          // cluster counts moved under epsilon perturbation
  std::vector<std::size_t> level_cluster_counts;
  std::vector<double> epsilons_used;
};

/// Iterated derived-set analysis. Level j counts the isolated points above
/// the last proxy as the coefficient of w^j and recurses on the proxies;
/// exhaustion (no clusters) ends the recursion with the remaining points as
/// the top coefficient. An empty schedule selects the adaptive per-level
/// epsilon; an explicit schedule must be positive and strictly decreasing.
/// Explicitly a heuristic: the estimate is only meaningful when the sample's
/// scales match the schedule.
OrdinalEstimate order_type_estimate(const RealSample& sample, std::vector<double> schedule = {},
                                    int min_predecessors = 3);

}  // namespace growthlab
