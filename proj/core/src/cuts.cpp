#include "growthlab/cuts.hpp"

#include <algorithm>

namespace growthlab {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

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

const std::vector<BigRat>& SternBrocot::level(unsigned l) {
  if (l == 0) throw std::invalid_argument("Stern-Brocot levels start at 1");
  while (values_.size() < l) {
    if (rows_.empty()) {
      rows_.push_back({Span{1, 1, 1, 0}});
      values_.push_back({BigRat(2)});  // mediant of 1/1 and 1/0
      continue;
    }
    const auto& prev = rows_.back();
    std::vector<Span> row;
    std::vector<BigRat> vals;
    row.reserve(prev.size() * 2);
    for (const Span& s : prev) {
      BigInt mn = s.lo_num + s.hi_num;
      BigInt md = s.lo_den + s.hi_den;
      row.push_back(Span{s.lo_num, s.lo_den, mn, md});
      row.push_back(Span{mn, md, s.hi_num, s.hi_den});
    }
    for (const Span& s : row) {
      BigInt mn = s.lo_num + s.hi_num;
      BigInt md = s.lo_den + s.hi_den;
      vals.push_back(BigRat(mn, md));
    }
    rows_.push_back(std::move(row));
    values_.push_back(std::move(vals));
  }
  return values_[l - 1];
}

bool cut_certificate_holds(const CutItem& item) {
  if (item.radius == 0) return false;
  BigInt lhs = ipow(numerator(item.x), item.radius);
  BigInt rhs = item.bound_m * ipow(denominator(item.x), item.radius);
  return lhs > rhs;
}

CutStream::CutStream(Presentation p, GenSetSpec s, CutOptions opts)
    : presentation_(std::move(p)), genset_(std::move(s)), opts_(opts) {
  if (opts_.weight_level == 0 || opts_.weight_radius == 0 || opts_.weight_budget == 0)
    throw std::invalid_argument("sweep weights must be positive");
  if (!opts_.force_semi) {
    if (presentation_.is_free()) {
      oracle_ = Oracle::free_group(presentation_);
    } else {
      CompletionResult completion =
          kb_complete(presentation_, opts_.kb_max_rules, opts_.kb_max_lhs);
      if (completion.complete && completion.system.confluent())
        oracle_ = Oracle::confluent(presentation_, std::move(completion.system));
    }
  }
  if (!oracle_)
    series_.emplace(presentation_, genset_, opts_.budget_unit, opts_.census);
  if (presentation_.is_free())
    floor_ = free_rank_floor(static_cast<unsigned>(presentation_.alphabet.size()));
}

std::optional<BigInt> CutStream::census_value(unsigned radius, unsigned budget_index) {
  if (oracle_) {
    if (!exact_census_ || exact_census_->max_radius() < radius) {
      BallCensus grown = exact_balls(*oracle_, genset_, radius, opts_.census);
      if (!exact_census_ || grown.max_radius() > exact_census_->max_radius())
        exact_census_ = std::move(grown);
    }
    if (exact_census_->max_radius() < radius) return std::nullopt;  // node cap
    return exact_census_->ball_sizes[radius];
  }
  const UpperCensus& census = series_->ensure(budget_index, radius);
  if (census.max_radius() < radius) return std::nullopt;
  return census.upper_sizes[radius];
}

void CutStream::run_to_weight(unsigned max_weight, std::size_t emit_limit) {
  for (unsigned weight = next_weight_; weight <= max_weight; ++weight) {
    next_weight_ = weight + 1;
    for (unsigned l = 1; opts_.weight_level * l < weight; ++l) {
      for (unsigned n = 1;; ++n) {
        unsigned base = opts_.weight_level * l + opts_.weight_radius * n;
        if (base > weight) break;
        unsigned rest = weight - base;
        if (rest % opts_.weight_budget != 0) continue;
        unsigned b = rest / opts_.weight_budget;
        if (oracle_ && b != 0) continue;  // exact engine: no budget axis

        std::optional<BigInt> m;  // fetched lazily, only if a candidate is live
        for (const BigRat& x : sb_.level(l)) {
          if (emitted_.size() >= emit_limit) return;
          if (emitted_values_.count(x)) continue;
          if (floor_ && x <= *floor_) continue;
          if (!m) {
            m = census_value(n, b);
            if (!m) break;  // radius unavailable at this budget (node cap)
          }
          CutItem item{x, n, *m, b * opts_.budget_unit, oracle_.has_value()};
          if (!cut_certificate_holds(item)) continue;
          emitted_values_.insert(x);
          emitted_.push_back(std::move(item));
        }
      }
    }
  }
}

std::vector<GenSetSpec> gensets_of_total_length(const Presentation& p, std::size_t total_length,
                                                std::optional<std::size_t> exact_size) {
  // reduced words by length, shortlex order within each length
  std::vector<std::vector<Word>> by_length(total_length + 1);
  {
    std::string cur;
    const int letters = 2 * p.alphabet.size();
    auto rec = [&](auto&& self) -> void {
      for (int code = 0; code < letters; ++code) {
        if (!cur.empty() &&
            (static_cast<unsigned char>(cur.back()) ^ 1) == static_cast<unsigned>(code))
          continue;
        cur.push_back(static_cast<char>(code));
        by_length[cur.size()].push_back(Word::from_reduced(cur));
        if (cur.size() < total_length) self(self);
        cur.pop_back();
      }
    };
    if (total_length > 0) rec(rec);
    for (auto& words : by_length)
      std::sort(words.begin(), words.end(),
                [](const Word& a, const Word& b) { return shortlex_less(a, b); });
  }

  std::vector<GenSetSpec> out;
  std::vector<Word> current;

  // members chosen in strictly increasing shortlex order; sums to total_length
  auto rec = [&](auto&& self, std::size_t remaining) -> void {
    if (remaining == 0) {
      if (exact_size && current.size() != *exact_size) return;
      GenSetSpec spec(p.alphabet, current);
      if (spec.members() == current) out.push_back(std::move(spec));  // already normalized
      return;
    }
    if (exact_size && current.size() >= *exact_size &&
        remaining > 0)
      return;
    for (std::size_t len = 1; len <= remaining; ++len) {
      for (const Word& w : by_length[len]) {
        if (!current.empty() && !shortlex_less(current.back(), w)) continue;
        current.push_back(w);
        self(self, remaining - len);
        current.pop_back();
      }
    }
  };
  rec(rec, total_length);
  return out;
}

BelowRStream::BelowRStream(Presentation p, BigRat r, BelowROptions opts)
    : presentation_(std::move(p)), r_(std::move(r)), opts_(std::move(opts)) {
  if (r_ <= 1) {
    degenerate_ = true;  // no generating set has egr below 1
    return;
  }
  for (std::size_t len = 1; len <= opts_.max_total_length; ++len) {
    auto batch = gensets_of_total_length(presentation_, len);
    queue_.insert(queue_.end(), batch.begin(), batch.end());
  }
}

bool BelowRStream::admit_next() {
  if (next_candidate_ >= queue_.size()) return false;
  Candidate c;
  c.genset = queue_[next_candidate_++];
  live_.push_back(std::move(c));
  return true;
}

void BelowRStream::advance_candidate(Candidate& c) {
  if (!c.generation) {
    GenerationStatus status =
        generates_semi(presentation_, c.genset, opts_.generation_budget, opts_.generates);
    if (!status.generates) {
      unresolved_.push_back(c.genset);
      c.generation = std::move(status);  // parked; no cut stream
      return;
    }
    c.generation = std::move(status);
    CutOptions cut_opts = opts_.cut;
    cut_opts.generation_checked = true;
    c.cuts.emplace(presentation_, c.genset, cut_opts);
    c.weight = 0;
  }
  if (!c.cuts) return;  // parked as unresolved
  if (c.weight >= opts_.cut_weight_cap) return;
  c.weight = std::min(c.weight + opts_.cut_weight_step, opts_.cut_weight_cap);
  c.cuts->run_to_weight(c.weight);
  for (; c.reported < c.cuts->emitted().size(); ++c.reported) {
    const CutItem& item = c.cuts->emitted()[c.reported];
    if (item.x < r_) {
      emitted_.push_back({c.genset, *c.generation, item});
      c.weight = opts_.cut_weight_cap;  // retire: one certificate suffices
      return;
    }
  }
}

void BelowRStream::run_rounds(unsigned rounds, std::size_t emit_limit) {
  if (degenerate_) return;
  for (unsigned round = 0; round < rounds; ++round) {
    if (emitted_.size() >= emit_limit) return;
    admit_next();
    for (Candidate& c : live_) {
      if (emitted_.size() >= emit_limit) return;
      bool already_emitted = false;
      for (const auto& e : emitted_)
        if (e.genset == c.genset) already_emitted = true;
      if (!already_emitted) advance_candidate(c);
    }
  }
}

}  // namespace growthlab
