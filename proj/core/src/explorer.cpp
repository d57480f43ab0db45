#include "growthlab/explorer.hpp"

#include <algorithm>
#include <map>

#include "growthlab/ordinal_sets.hpp"

namespace growthlab {

GenSetEnumeration enumerate_gensets(const Presentation& p, std::size_t size,
                                    std::size_t max_total_length,
                                    std::uint64_t per_set_budget,
                                    const GeneratesOptions& gen_opts) {
  if (size == 0) throw std::invalid_argument("generating sets need at least one member");
  GenSetEnumeration out;
  for (std::size_t len = size; len <= max_total_length; ++len) {
    for (GenSetSpec& spec : gensets_of_total_length(p, len, size)) {
      GenerationStatus status = generates_semi(p, spec, per_set_budget, gen_opts);
      if (status.generates)
        out.verified.push_back(std::move(spec));
      else
        out.unverified.push_back(std::move(spec));
    }
  }
  return out;
}

EGRSample sample_egr(const Presentation& p, const std::vector<GenSetSpec>& gensets,
                     unsigned radius, const SampleOptions& opts) {
  if (radius < 2) throw std::invalid_argument("sampling needs radius >= 2");

  EGRSample sample;
  sample.presentation = p;
  sample.radius = radius;

  std::optional<Oracle> oracle;
  if (p.is_free()) {
    oracle = Oracle::free_group(p);
  } else {
    CompletionResult completion = kb_complete(p, opts.kb_max_rules, opts.kb_max_lhs);
    if (completion.complete && completion.system.confluent())
      oracle = Oracle::confluent(p, std::move(completion.system));
  }
  sample.exact = oracle.has_value();

  std::map<std::string, std::size_t> orbit_index;  // packed orbit key -> entry
  std::vector<double> slacks;

  for (const GenSetSpec& s : gensets) {
    std::optional<OrbitKey> orbit;
    if (p.is_free()) orbit = nielsen_canonicalize(p, s.members());

    if (orbit) {
      auto it = orbit_index.find(orbit->packed_key());
      if (it != orbit_index.end()) {
        ++sample.entries[it->second].multiplicity;
        sample.bounds_in_enumeration_order.push_back(
            sample.entries[it->second].bound.approx());
        continue;
      }
    }

    EGRSampleEntry entry;
    entry.genset = s;
    entry.orbit = orbit;
    if (oracle) {
      entry.census = exact_balls(*oracle, s, radius, opts.census);
      entry.bound = egr_upper(entry.census);
      entry.ratio = ratio_estimate(entry.census);
      slacks.push_back(entry.bound.approx() - entry.ratio->ratio);
    } else {
      UpperCensus upper = upper_balls(p, s, radius, opts.upper_budget, 64, opts.census);
      entry.census = BallCensus{s, upper.upper_sizes, false};
      entry.bound = egr_upper(upper);
    }
    sample.bounds_in_enumeration_order.push_back(entry.bound.approx());
    if (orbit) orbit_index.emplace(orbit->packed_key(), sample.entries.size());
    sample.entries.push_back(std::move(entry));
  }

  std::sort(sample.entries.begin(), sample.entries.end(),
            [](const EGRSampleEntry& a, const EGRSampleEntry& b) {
              int c = compare_bounds(a.bound, b.bound);
              if (c != 0) return c < 0;
              const auto& am = a.genset.members();
              const auto& bm = b.genset.members();
              for (std::size_t i = 0; i < std::min(am.size(), bm.size()); ++i)
                if (am[i] != bm[i]) return shortlex_less(am[i], bm[i]);
              return am.size() < bm.size();
            });

  if (!slacks.empty()) {
    std::sort(slacks.begin(), slacks.end());
    sample.slack_median = slacks[slacks.size() / 2];
  }
  return sample;
}

WellOrderReport wellorder_report(const std::vector<double>& values_in_order, double epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  WellOrderReport report;
  report.epsilon = epsilon;

  std::vector<double> sorted = values_in_order;
  std::sort(sorted.begin(), sorted.end());
  for (double v : sorted) {
    if (!report.clusters.empty() && v - report.clusters.back().representative <= epsilon) {
      report.clusters.back().representative = v;
      ++report.clusters.back().count;
    } else {
      report.clusters.push_back({v, v, 1});
    }
  }
  report.minimum_cluster = 0;

  std::size_t run = values_in_order.empty() ? 0 : 1;
  std::size_t best = run;
  for (std::size_t i = 1; i < values_in_order.size(); ++i) {
    if (values_in_order[i] < values_in_order[i - 1] - epsilon)
      ++run;
    else
      run = 1;
    best = std::max(best, run);
  }
  report.longest_decreasing_run = best;

  if (sorted.size() > 1) {
    report.accumulation_epsilon = adaptive_epsilon(sorted);
    DerivedPass pass = derived_pass(sorted, report.accumulation_epsilon, 3);
    report.accumulation_clusters = pass.cluster_count;
  }

  report.note =
      "finite-sample probe: values are finite-radius upper bounds, and long decreasing "
      "runs reflect bound slack, not growth rates";
  return report;
}

double default_wellorder_epsilon(const EGRSample& sample) {
  double eps = 10.0 * sample.slack_median;
  return eps > 0 ? eps : 0.05;
}

std::vector<Word> default_cusp_schedule(const Presentation& base, unsigned count) {
  if (base.alphabet.size() < 2)
    throw std::invalid_argument("the default cusp schedule needs two generators");
  std::vector<Word> schedule;
  Word w;
  for (unsigned i = 1; i <= count; ++i) {
    std::vector<Letter> block;
    block.push_back(Letter(0, +1));
    for (unsigned j = 0; j < i; ++j) block.push_back(Letter(1, +1));
    w = multiply(w, Word::reduce(block));
    schedule.push_back(w);
  }
  return schedule;
}

CuspSequence cusp_sequence(const Presentation& base, const GenSetSpec& s,
                           const std::vector<Word>& schedule, unsigned radius,
                           const SampleOptions& opts) {
  Oracle base_oracle = [&]() {
    if (base.is_free()) return Oracle::free_group(base);
    CompletionResult completion = kb_complete(base, opts.kb_max_rules, opts.kb_max_lhs);
    if (!completion.complete || !completion.system.confluent())
      throw std::invalid_argument("cusp sequences need an exact oracle for the base group");
    return Oracle::confluent(base, std::move(completion.system));
  }();

  CuspSequence seq;
  seq.base = base;
  seq.base_genset = s;

  // base * Z: append a fresh generator; the relators are untouched
  std::string fresh = "t";
  while (base.alphabet.find(fresh) >= 0) fresh += "t";
  std::vector<std::string> names;
  for (const auto& sym : base.alphabet.symbols()) names.push_back(sym.name);
  names.push_back(fresh);
  seq.extension.alphabet = Alphabet(names);
  seq.extension.relators = base.relators;

  Oracle ext_oracle = [&]() {
    if (seq.extension.is_free()) return Oracle::free_group(seq.extension);
    CompletionResult completion =
        kb_complete(seq.extension, opts.kb_max_rules, opts.kb_max_lhs);
    if (!completion.complete || !completion.system.confluent())
      throw std::invalid_argument("cusp sequences need an exact oracle for the extension");
    return Oracle::confluent(seq.extension, std::move(completion.system));
  }();

  const int fresh_index = seq.extension.alphabet.size() - 1;
  std::vector<Word> ext_members = s.members();
  ext_members.push_back(Word::reduce({Letter(fresh_index, +1)}));
  seq.extension_genset = GenSetSpec(seq.extension.alphabet, ext_members);
  seq.extension_census = exact_balls(ext_oracle, seq.extension_genset, radius, opts.census);
  seq.extension_bound = egr_upper(seq.extension_census);

  for (const Word& w : schedule) {
    if (base_oracle.normalize(w).empty())
      throw std::invalid_argument("cusp schedule word is the identity in the base group");
    CuspStep step;
    step.extra_word = w;
    std::vector<Word> members = s.members();
    members.push_back(w);
    step.genset = GenSetSpec(base.alphabet, members);
    step.census = exact_balls(base_oracle, step.genset, radius, opts.census);
    step.bound = egr_upper(step.census);
    step.dominated = true;
    for (unsigned n = 0; n <= radius && n <= step.census.max_radius() &&
                         n <= seq.extension_census.max_radius();
         ++n) {
      if (step.census.ball_sizes[n] > seq.extension_census.ball_sizes[n])
        step.dominated = false;
    }
    if (!step.dominated) seq.pointwise_domination = false;
    seq.steps.push_back(std::move(step));
  }
  return seq;
}

}  // namespace growthlab
