#include "growthlab/ordinal_sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace growthlab {

RealSample RealSample::from_values(std::vector<double> raw, double tolerance) {
  std::sort(raw.begin(), raw.end());
  RealSample s;
  s.tolerance = tolerance;
  for (double v : raw) {
    if (!s.values.empty() && v - s.values.back() <= tolerance) {
      ++s.multiplicities.back();
    } else {
      s.values.push_back(v);
      s.multiplicities.push_back(1);
    }
  }
  return s;
}

namespace {

void realize_copy(std::uint64_t exponent, double base, double width, unsigned depth,
                  double squash, std::vector<double>& out) {
  if (exponent == 0) {
    out.push_back(base);
    return;
  }
  for (unsigned n = 1; n <= depth; ++n) {
    double block = base + width * (1.0 - 1.0 / n);
    realize_copy(exponent - 1, block, width * squash, depth, squash, out);
  }
}

}  // namespace

RealSample canonical_set(const Ordinal& x, unsigned depth) {
  if (depth == 0) throw std::invalid_argument("canonical_set needs depth >= 1");
  for (const auto& t : x.terms())
    if (!t.exponent.is_natural())
      throw std::invalid_argument(
          "canonical_set supports natural exponents only (no bounded w^w realization)");

  const std::uint64_t degree = x.is_zero() ? 0 : x.degree();
  const double squash = 1.0 / (8.0 * (depth + 1) * (depth + 2));

  std::vector<double> values;
  double offset = 0.0;
  for (const auto& t : x.terms()) {
    const std::uint64_t e = t.exponent.natural_value();
    const double width = std::pow(squash, static_cast<double>(degree - e));
    for (std::uint64_t copy = 0; copy < t.coefficient; ++copy) {
      realize_copy(e, offset, width, depth, squash, values);
      offset += e == 0 ? 1.0 : 3.0;
    }
  }

  double min_gap = 1.0;
  for (std::size_t i = 1; i < values.size(); ++i)
    min_gap = std::min(min_gap, values[i] - values[i - 1]);
  RealSample s;
  s.values = std::move(values);
  s.multiplicities.assign(s.values.size(), 1);
  s.tolerance = s.values.size() > 1 ? min_gap / 4.0 : 0.0;
  return s;
}

DerivedPass derived_pass(const std::vector<double>& points, double epsilon,
                         int min_predecessors) {
  DerivedPass pass;
  pass.epsilon = epsilon;
  const std::size_t n = points.size();
  if (n == 0) return pass;

  // mark accumulation points: >= K predecessors within epsilon
  std::vector<int> cluster_of(n, -1);
  std::size_t window_start = 0;
  std::vector<std::pair<std::size_t, std::size_t>> spans;  // [first, last] index ranges
  for (std::size_t i = 0; i < n; ++i) {
    while (points[i] - points[window_start] > epsilon) ++window_start;
    std::size_t predecessors = i - window_start;
    if (predecessors >= static_cast<std::size_t>(min_predecessors)) {
      // the mark and its in-window predecessors form one cluster span;
      // overlapping spans are the same cluster
      if (!spans.empty() && window_start <= spans.back().second) {
        spans.back().second = i;
        spans.back().first = std::min(spans.back().first, window_start);
      } else {
        spans.push_back({window_start, i});
      }
    }
  }

  for (const auto& span : spans) {
    pass.proxies.push_back(points[span.second]);
    for (std::size_t i = span.first; i <= span.second; ++i) cluster_of[i] = 1;
  }
  pass.cluster_count = spans.size();

  const double top_proxy = pass.proxies.empty()
                               ? -std::numeric_limits<double>::infinity()
                               : pass.proxies.back();
  for (std::size_t i = 0; i < n; ++i) {
    if (cluster_of[i] >= 0) continue;
    ++pass.isolated_total;
    if (pass.proxies.empty() || points[i] > top_proxy) ++pass.isolated_above;
  }
  return pass;
}

double adaptive_epsilon(const std::vector<double>& points) {
  std::vector<double> gaps;
  for (std::size_t i = 1; i < points.size(); ++i) {
    double g = points[i] - points[i - 1];
    if (g > 0) gaps.push_back(g);
  }
  if (gaps.empty()) return 1.0;
  std::sort(gaps.begin(), gaps.end());

  // prefer the smallest-scale clean band split (ratio >= 4)
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
    if (gaps[i + 1] / gaps[i] >= 4.0) return std::sqrt(gaps[i] * gaps[i + 1]);
  }
  // otherwise the largest jump anywhere
  double best_ratio = 1.0;
  double best = gaps[0] / 2.0;
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
    double ratio = gaps[i + 1] / gaps[i];
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = std::sqrt(gaps[i] * gaps[i + 1]);
    }
  }
  if (best_ratio < 1.5) return gaps[0] / 2.0;  // no scale structure at all
  return best;
}

OrdinalEstimate order_type_estimate(const RealSample& sample, std::vector<double> schedule,
                                    int min_predecessors) {
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] <= 0) throw std::invalid_argument("epsilon schedule must be positive");
    if (i > 0 && schedule[i] >= schedule[i - 1])
      throw std::invalid_argument("epsilon schedule must be strictly decreasing");
  }

  OrdinalEstimate est;
  std::vector<double> points = sample.values;
  std::vector<std::uint64_t> coefficients;  // index = level

  for (std::size_t level = 0;; ++level) {
    if (points.empty()) break;
    if (points.size() <= static_cast<std::size_t>(min_predecessors)) {
      coefficients.push_back(points.size());
      est.level_cluster_counts.push_back(0);
      break;
    }
    double eps;
    if (!schedule.empty()) {
      if (level >= schedule.size()) {
        est.lower_bound_only = true;  // structure left but the schedule ran out
        coefficients.push_back(points.size());
        break;
      }
      eps = schedule[level];
    } else {
      eps = adaptive_epsilon(points);
    }
    est.epsilons_used.push_back(eps);

    DerivedPass pass = derived_pass(points, eps, min_predecessors);
    est.level_cluster_counts.push_back(pass.cluster_count);
    if (pass.cluster_count == 0) {
      coefficients.push_back(points.size());
      break;
    }

    DerivedPass lo = derived_pass(points, eps / 1.3, min_predecessors);
    DerivedPass hi = derived_pass(points, eps * 1.3, min_predecessors);
    if (lo.cluster_count != pass.cluster_count || hi.cluster_count != pass.cluster_count)
      est.unstable = true;

    coefficients.push_back(pass.isolated_above);
    points = std::move(pass.proxies);
  }

  Ordinal total;
  for (std::size_t level = coefficients.size(); level-- > 0;) {
    if (coefficients[level] == 0) continue;
    total = ord_add(total, Ordinal::omega_power(Ordinal::from_natural(level),
                                                coefficients[level]));
  }
  est.estimate = total;
  return est;
}

}  // namespace growthlab
