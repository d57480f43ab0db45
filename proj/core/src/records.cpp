#include "growthlab/records.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace growthlab {
namespace records {

using nlohmann::json;

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string rat_str(const BigRat& x) {
  std::ostringstream out;
  out << numerator(x) << "/" << denominator(x);
  return out.str();
}

BigRat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return BigRat(BigInt(s));
  return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

json sizes_json(const std::vector<BigInt>& sizes) {
  json arr = json::array();
  for (const auto& v : sizes) arr.push_back(v.str());
  return arr;
}

std::vector<BigInt> sizes_from_json(const json& arr) {
  std::vector<BigInt> out;
  for (const auto& v : arr) out.push_back(BigInt(v.get<std::string>()));
  return out;
}

json base_record(const char* kind) {
  json j;
  j["v"] = 1;
  j["kind"] = kind;
  return j;
}

json genset_json(const Presentation& p, const GenSetSpec& s) {
  json arr = json::array();
  for (const Word& w : s.members()) arr.push_back(p.alphabet.print_word(w));
  return arr;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

BigInt ipow(BigInt base, unsigned e) {
  BigInt out = 1;
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace

std::string census_record(const Presentation& p, const BallCensus& census,
                          std::uint64_t budget) {
  json j = base_record("census");
  j["presentation"] = digest_hex(presentation_digest(p));
  j["genset"] = genset_json(p, census.genset);
  j["radius"] = census.max_radius();
  j["sizes"] = sizes_json(census.ball_sizes);
  j["exact"] = census.exact;
  j["budget"] = budget;
  return dump(j);
}

std::string upper_census_record(const Presentation& p, const UpperCensus& census) {
  json j = base_record("census");
  j["presentation"] = digest_hex(presentation_digest(p));
  j["genset"] = genset_json(p, census.genset);
  j["radius"] = census.max_radius();
  j["sizes"] = sizes_json(census.upper_sizes);
  j["exact"] = false;
  j["budget"] = census.log_steps;
  return dump(j);
}

std::string egr_record(const Presentation& p, const GenSetSpec& s, const EgrUpperBound& bound,
                       std::uint64_t budget) {
  json j = base_record("egr");
  j["presentation"] = digest_hex(presentation_digest(p));
  j["genset"] = genset_json(p, s);
  j["witness_count"] = bound.witness_count.str();
  j["witness_radius"] = bound.witness_radius;
  j["certified_exact"] = bound.certified_exact;
  j["value"] = bound.decimal();
  j["budget"] = budget;
  return dump(j);
}

std::string cut_record(const Presentation& p, const GenSetSpec& s, const CutItem& item,
                       bool generation_checked) {
  json j = base_record("cut");
  j["presentation"] = digest_hex(presentation_digest(p));
  j["genset"] = genset_json(p, s);
  j["x"] = rat_str(item.x);
  j["radius"] = item.radius;
  j["m"] = item.bound_m.str();
  j["budget"] = item.budget;
  j["census_exact"] = item.census_exact;
  j["generation_checked"] = generation_checked;
  return dump(j);
}

std::string below_r_record(const Presentation& p, const BigRat& r, const BelowREmission& e) {
  json j = base_record("below_r");
  j["presentation"] = digest_hex(presentation_digest(p));
  j["r"] = rat_str(r);
  j["genset"] = genset_json(p, e.genset);
  json witnesses = json::array();
  for (std::size_t g = 0; g < e.generation.witnesses.size(); ++g) {
    json w;
    w["generator"] = p.alphabet.symbol(static_cast<int>(g)).name;
    w["word"] = p.alphabet.print_word(e.generation.witness_words[g]);
    json expr = json::array();
    for (auto [member, exponent] : e.generation.witnesses[g]) {
      json f;
      f["member"] = member;
      f["exponent"] = exponent;
      expr.push_back(f);
    }
    w["expression"] = expr;
    witnesses.push_back(w);
  }
  j["witnesses"] = witnesses;
  j["x"] = rat_str(e.certificate.x);
  j["radius"] = e.certificate.radius;
  j["m"] = e.certificate.bound_m.str();
  j["budget"] = e.certificate.budget;
  j["census_exact"] = e.certificate.census_exact;
  return dump(j);
}

std::string explore_entry_record(const Presentation& p, const EGRSampleEntry& entry,
                                 unsigned radius) {
  json j = base_record("explore_entry");
  j["presentation"] = digest_hex(presentation_digest(p));
  j["genset"] = genset_json(p, entry.genset);
  j["radius"] = radius;
  j["sizes"] = sizes_json(entry.census.ball_sizes);
  j["exact"] = entry.census.exact;
  j["witness_count"] = entry.bound.witness_count.str();
  j["witness_radius"] = entry.bound.witness_radius;
  j["value"] = entry.bound.decimal();
  j["multiplicity"] = entry.multiplicity;
  if (entry.ratio) {
    std::ostringstream ratio;
    ratio.precision(6);
    ratio << std::fixed << entry.ratio->ratio;
    j["ratio_estimate"] = ratio.str();
    j["finite"] = entry.ratio->finite_group;
  }
  if (entry.orbit) {
    json orbit = json::array();
    for (const Word& w : entry.orbit->tuple) orbit.push_back(p.alphabet.print_word(w));
    j["orbit_key"] = orbit;
  }
  return dump(j);
}

std::string wellorder_record(const WellOrderReport& report) {
  json j = base_record("wellorder");
  j["epsilon"] = report.epsilon;
  json clusters = json::array();
  for (const auto& c : report.clusters) {
    json cj;
    cj["value"] = c.representative;
    cj["count"] = c.count;
    clusters.push_back(cj);
  }
  j["clusters"] = clusters;
  j["minimum_cluster"] = report.minimum_cluster;
  j["longest_decreasing_run"] = report.longest_decreasing_run;
  j["accumulation_clusters"] = report.accumulation_clusters;
  j["note"] = report.note;
  return dump(j);
}

std::string cusp_extension_record(const CuspSequence& seq) {
  json j = base_record("cusp_extension");
  j["presentation"] = digest_hex(presentation_digest(seq.extension));
  j["genset"] = genset_json(seq.extension, seq.extension_genset);
  j["sizes"] = sizes_json(seq.extension_census.ball_sizes);
  j["witness_count"] = seq.extension_bound.witness_count.str();
  j["witness_radius"] = seq.extension_bound.witness_radius;
  j["value"] = seq.extension_bound.decimal();
  return dump(j);
}

std::string cusp_step_record(const Presentation& base, const CuspSequence& seq,
                             std::size_t step_index) {
  const CuspStep& step = seq.steps[step_index];
  json j = base_record("cusp_step");
  j["presentation"] = digest_hex(presentation_digest(base));
  j["step"] = step_index + 1;
  j["extra_word"] = base.alphabet.print_word(step.extra_word);
  j["genset"] = genset_json(base, step.genset);
  j["sizes"] = sizes_json(step.census.ball_sizes);
  j["extension_sizes"] = sizes_json(seq.extension_census.ball_sizes);
  j["witness_count"] = step.bound.witness_count.str();
  j["witness_radius"] = step.bound.witness_radius;
  j["value"] = step.bound.decimal();
  j["dominated"] = step.dominated;
  return dump(j);
}

std::string ordinal_record(const std::string& expr, const Ordinal& value,
                           const RealSample* realization, unsigned depth) {
  json j = base_record("ordinal");
  j["expr"] = expr;
  j["canonical"] = value.to_string();
  if (realization) {
    j["depth"] = depth;
    json points = json::array();
    char buf[64];
    for (double v : realization->values) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      points.push_back(std::string(buf));
    }
    j["points"] = points;
  }
  return dump(j);
}

std::string estimate_record(std::size_t input_size, const OrdinalEstimate& estimate) {
  json j = base_record("estimate");
  j["input_size"] = input_size;
  j["estimate"] = estimate.estimate.to_string();
  j["lower_bound_only"] = estimate.lower_bound_only;
  j["unstable"] = estimate.unstable;
  j["level_clusters"] = estimate.level_cluster_counts;
  return dump(j);
}

namespace {

void check(bool cond, const std::string& message) {
  if (!cond) throw std::runtime_error(message);
}

void verify_sizes(const std::vector<BigInt>& sizes, bool exact) {
  check(!sizes.empty() && sizes[0] == 1, "census must start with ball size 1 at radius 0");
  for (std::size_t n = 1; n < sizes.size(); ++n)
    check(sizes[n] >= sizes[n - 1], "ball sizes must be nondecreasing");
  if (exact) {
    for (std::size_t n = 1; n < sizes.size(); ++n)
      for (std::size_t m = 1; n + m < sizes.size(); ++m)
        check(sizes[n + m] <= sizes[n] * sizes[m],
              "exact census violates submultiplicativity");
  }
}

void verify_bound_witness(const std::vector<BigInt>& sizes, const BigInt& m, unsigned n) {
  check(n >= 1 && n < sizes.size(), "bound witness radius outside the census");
  check(sizes[n] == m, "bound witness does not match the census");
  // minimality of m^(1/n) over the recorded radii
  for (unsigned i = 1; i < sizes.size(); ++i)
    check(ipow(m, i) <= ipow(sizes[i], n), "bound witness is not the census minimum");
}

void verify_cut_core(const json& j) {
  BigRat x = parse_rat(j.at("x").get<std::string>());
  unsigned n = j.at("radius").get<unsigned>();
  BigInt m(j.at("m").get<std::string>());
  check(x > 1, "cut rational must exceed 1");
  check(n >= 1, "cut radius must be >= 1");
  check(ipow(numerator(x), n) > m * ipow(denominator(x), n),
        "cut certificate inequality fails");
}

void verify_one(const json& j) {
  check(j.at("v").get<int>() == 1, "unsupported record version");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "census") {
    verify_sizes(sizes_from_json(j.at("sizes")), j.at("exact").get<bool>());
  } else if (kind == "egr") {
    BigInt m(j.at("witness_count").get<std::string>());
    unsigned n = j.at("witness_radius").get<unsigned>();
    check(m >= 1 && n >= 1, "bound witness must be positive");
    EgrUpperBound bound{m, n, j.at("certified_exact").get<bool>()};
    check(j.at("value").get<std::string>() == bound.decimal(),
          "bound value does not match its witness");
  } else if (kind == "cut") {
    verify_cut_core(j);
  } else if (kind == "below_r") {
    verify_cut_core(j);
    BigRat x = parse_rat(j.at("x").get<std::string>());
    BigRat r = parse_rat(j.at("r").get<std::string>());
    check(x < r, "below-threshold certificate must lie below r");
    check(!j.at("witnesses").empty(), "below-threshold emission without witnesses");
  } else if (kind == "explore_entry" || kind == "cusp_extension") {
    std::vector<BigInt> sizes = sizes_from_json(j.at("sizes"));
    verify_sizes(sizes, j.value("exact", true));
    verify_bound_witness(sizes, BigInt(j.at("witness_count").get<std::string>()),
                         j.at("witness_radius").get<unsigned>());
  } else if (kind == "cusp_step") {
    std::vector<BigInt> sizes = sizes_from_json(j.at("sizes"));
    std::vector<BigInt> ext = sizes_from_json(j.at("extension_sizes"));
    verify_sizes(sizes, true);
    verify_bound_witness(sizes, BigInt(j.at("witness_count").get<std::string>()),
                         j.at("witness_radius").get<unsigned>());
    check(j.at("dominated").get<bool>(), "cusp step not dominated");
    check(sizes.size() <= ext.size(), "cusp step censuses misaligned");
    for (std::size_t n = 0; n < sizes.size(); ++n)
      check(sizes[n] <= ext[n], "cusp domination inequality fails");
  } else if (kind == "ordinal") {
    Ordinal parsed = parse_ordinal(j.at("expr").get<std::string>());
    check(parsed.to_string() == j.at("canonical").get<std::string>(),
          "ordinal canonical form mismatch");
    if (j.contains("points")) {
      RealSample realized = canonical_set(parsed, j.at("depth").get<unsigned>());
      check(realized.values.size() == j.at("points").size(),
            "ordinal realization size mismatch");
      char buf[64];
      for (std::size_t i = 0; i < realized.values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", realized.values[i]);
        check(j.at("points")[i].get<std::string>() == buf,
              "ordinal realization point mismatch");
      }
    }
  } else if (kind == "estimate") {
    parse_ordinal(j.at("estimate").get<std::string>());  // must be well-formed
  } else if (kind == "wellorder") {
    std::size_t total = 0;
    for (const auto& c : j.at("clusters")) total += c.at("count").get<std::size_t>();
    check(j.at("minimum_cluster").get<std::size_t>() == 0, "least cluster must be first");
    (void)total;
  } else {
    throw std::runtime_error("unknown record kind '" + kind + "'");
  }
}

}  // namespace

VerifyResult verify_records(const std::string& file_text) {
  VerifyResult result;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < file_text.size()) {
    std::size_t end = file_text.find('\n', start);
    if (end == std::string::npos) end = file_text.size();
    std::string line = file_text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      verify_one(json::parse(line));
      ++result.records_checked;
    } catch (const std::exception& e) {
      result.ok = false;
      result.failed_line = line_no;
      result.message = e.what();
      return result;
    }
  }
  return result;
}

}  // namespace records
}  // namespace growthlab
