#include "growthlab/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace growthlab {

namespace {

using boost::multiprecision::numerator;
using boost::multiprecision::denominator;
using boost::multiprecision::pow;

BigInt ipow(const BigInt& base, unsigned e) {
  BigInt out = 1;
  BigInt b = base;
  while (e) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

template <typename Census, typename Sizes>
EgrUpperBound egr_upper_impl(const Sizes& sizes, bool exact) {
  if (sizes.size() < 2)
    throw std::invalid_argument("egr bound needs a census of radius >= 1");
  EgrUpperBound best{sizes[1], 1, exact};
  for (unsigned n = 2; n < sizes.size(); ++n) {
    EgrUpperBound candidate{sizes[n], n, exact};
    if (compare_bounds(candidate, best) < 0) best = candidate;
  }
  return best;
}

}  // namespace

double EgrUpperBound::approx() const {
  return std::exp(std::log(witness_count.convert_to<double>()) / witness_radius);
}

std::string EgrUpperBound::decimal(int digits) const {
  std::ostringstream out;
  out.precision(digits);
  out << std::fixed << approx();
  return out.str();
}

int compare_bounds(const EgrUpperBound& a, const EgrUpperBound& b) {
  BigInt lhs = ipow(a.witness_count, b.witness_radius);
  BigInt rhs = ipow(b.witness_count, a.witness_radius);
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

int compare_rational_to_root(const BigRat& x, const BigInt& m, unsigned n) {
  if (x <= 0) return m > 0 ? -1 : 0;
  BigInt lhs = ipow(numerator(x), n);
  BigInt rhs = m * ipow(denominator(x), n);
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

EgrUpperBound egr_upper(const BallCensus& census) {
  return egr_upper_impl<BallCensus>(census.ball_sizes, census.exact);
}

EgrUpperBound egr_upper(const UpperCensus& census) {
  return egr_upper_impl<UpperCensus>(census.upper_sizes, false);
}

BigRat free_rank_floor(unsigned rank) {
  if (rank == 0) throw std::invalid_argument("free rank must be >= 1");
  return BigRat(2 * static_cast<long>(rank) - 1);
}

namespace {

/// Solves the d x d rational system A c = b by Gaussian elimination;
/// nullopt when singular.
std::optional<std::vector<BigRat>> solve(std::vector<std::vector<BigRat>> a,
                                         std::vector<BigRat> b) {
  const std::size_t d = b.size();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && a[pivot][col] == 0) ++pivot;
    if (pivot == d) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < d; ++row) {
      if (row == col || a[row][col] == 0) continue;
      BigRat f = a[row][col] / a[col][col];
      for (std::size_t c2 = col; c2 < d; ++c2) a[row][c2] -= f * a[col][c2];
      b[row] -= f * b[col];
    }
  }
  std::vector<BigRat> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

RatioEstimate ratio_estimate(const BallCensus& census) {
  if (!census.exact)
    throw std::invalid_argument("ratio estimate requires an exact census");
  const unsigned n_max = census.max_radius();
  if (n_max < 4)
    throw std::invalid_argument("ratio estimate needs radius >= 4");

  std::vector<BigInt> spheres;  // spheres[i] = sphere size at radius i+1
  for (unsigned n = 1; n <= n_max; ++n) spheres.push_back(census.sphere_size(n));

  RatioEstimate est;
  for (const BigInt& s : spheres)
    if (s == 0) est.finite_group = true;
  if (est.finite_group) {
    est.ratio = 1.0;
    return est;
  }

  est.ratio = spheres.back().convert_to<double>() / spheres[spheres.size() - 2].convert_to<double>();

  const std::size_t count = spheres.size();
  for (unsigned d = 1; d <= 4; ++d) {
    if (count < 2 * d) break;
    // fit on the first d usable rows, verify on everything after them
    std::vector<std::vector<BigRat>> a(d, std::vector<BigRat>(d));
    std::vector<BigRat> b(d);
    for (unsigned row = 0; row < d; ++row) {
      for (unsigned col = 0; col < d; ++col) a[row][col] = BigRat(spheres[d + row - 1 - col]);
      b[row] = BigRat(spheres[d + row]);
    }
    auto coeffs = solve(std::move(a), std::move(b));
    if (!coeffs) continue;
    bool holds = true;
    for (std::size_t n = d; n < count && holds; ++n) {
      BigRat predicted = 0;
      for (unsigned i = 0; i < d; ++i) predicted += (*coeffs)[i] * BigRat(spheres[n - 1 - i]);
      if (predicted != BigRat(spheres[n])) holds = false;
    }
    if (!holds) continue;
    SphereRecurrence rec;
    rec.order = d;
    rec.coeffs = *coeffs;
    rec.holdout_verified = count >= 2 * d + 3;  // at least 3 rows beyond the fit
    est.recurrence = std::move(rec);
    break;
  }
  return est;
}

}  // namespace growthlab
