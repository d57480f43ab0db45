#pragma once

#include <string>
#include <vector>

#include "growthlab/bounds.hpp"
#include "growthlab/census.hpp"
#include "growthlab/cuts.hpp"
#include "growthlab/explorer.hpp"
#include "growthlab/ordinal_sets.hpp"

namespace growthlab {

/// Line-delimited JSON records, version-stamped, with sorted keys: byte
/// identical for identical inputs. Certified integers are decimal strings so
/// third parties can re-verify with exact arithmetic.
namespace records {

std::string census_record(const Presentation& p, const BallCensus& census,
                          std::uint64_t budget);
std::string upper_census_record(const Presentation& p, const UpperCensus& census);
std::string egr_record(const Presentation& p, const GenSetSpec& s, const EgrUpperBound& bound,
                       std::uint64_t budget);
std::string cut_record(const Presentation& p, const GenSetSpec& s, const CutItem& item,
                       bool generation_checked);
std::string below_r_record(const Presentation& p, const BigRat& r, const BelowREmission& e);
std::string explore_entry_record(const Presentation& p, const EGRSampleEntry& entry,
                                 unsigned radius);
std::string wellorder_record(const WellOrderReport& report);
std::string cusp_step_record(const Presentation& base, const CuspSequence& seq,
                             std::size_t step_index);
std::string cusp_extension_record(const CuspSequence& seq);
std::string ordinal_record(const std::string& expr, const Ordinal& value,
                           const RealSample* realization, unsigned depth);
std::string estimate_record(std::size_t input_size, const OrdinalEstimate& estimate);

struct VerifyResult {
  bool ok = true;
  std::size_t records_checked = 0;
  std::size_t failed_line = 0;  // 1-based; 0 when ok
  std::string message;
};

/// Re-checks every record in a line-delimited file with exact integer and
/// rational arithmetic only: cut inequalities, threshold comparisons, census
/// monotonicity and submultiplicativity, bound witnesses, domination
/// inequalities, ordinal canonical forms. Stops at the first failure and
/// names the line.
VerifyResult verify_records(const std::string& file_text);

}  // namespace records
}  // namespace growthlab
