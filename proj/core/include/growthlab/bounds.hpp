#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "growthlab/census.hpp"

namespace growthlab {

using BigRat = boost::multiprecision::cpp_rational;

/// Certified upper bound on the exponential growth rate: semantically the
/// exact real witness_count^(1/witness_radius). The double is display-only;
/// every comparison is an exact integer comparison on the pair (m, n).
struct EgrUpperBound {
  BigInt witness_count;       // m >= gr(n), or m = gr(n) when certified_exact
  unsigned witness_radius;    // n >= 1
  bool certified_exact;

  double approx() const;
  std::string decimal(int digits = 6) const;
};

/// Exact order: m1^(1/n1) vs m2^(1/n2) as m1^n2 vs m2^n1.
int compare_bounds(const EgrUpperBound& a, const EgrUpperBound& b);

/// Exact order of the rational x against m^(1/n): x^n vs m.
int compare_rational_to_root(const BigRat& x, const BigInt& m, unsigned n);

/// min over stored radii n >= 1 of ball(n)^(1/n), with the smallest
/// minimizing radius as witness. Throws when the census stops at radius 0.
EgrUpperBound egr_upper(const BallCensus& census);
EgrUpperBound egr_upper(const UpperCensus& census);

/// Paper floor 2k-1 for rank-k free groups; every generating set of F_k has
/// growth rate at least this, so cut candidates at or below it are skipped.
BigRat free_rank_floor(unsigned rank);

/// Least-order exact linear recurrence for the sphere sequence, when one of
/// order <= 4 fits. Coefficients satisfy
///   sphere[n] = sum_i coeffs[i] * sphere[n-1-i]   on the verified range.
struct SphereRecurrence {
  unsigned order = 0;
  std::vector<BigRat> coeffs;
  bool holdout_verified = false;  // confirmed on 3 radii not used for fitting
};

/// Non-certified growth-rate point estimate from the last sphere ratio, with
/// the recurrence fit as a diagnostic. A zero sphere marks a finite group:
/// the ratio is reported as 1.
struct RatioEstimate {
  double ratio = 1.0;
  bool finite_group = false;
  std::optional<SphereRecurrence> recurrence;
};

RatioEstimate ratio_estimate(const BallCensus& census);

}  // namespace growthlab
