#include "growthlab/consequences.hpp"

#include <algorithm>

namespace growthlab {

namespace {

/// Feeds every freely reduced word of length 1..max_len over 2k letters to
/// `fn`, in prefix (depth-first) order. The order only fixes insertion
/// determinism; the set is what matters.
template <typename Fn>
void for_each_reduced_word(int letters, std::size_t max_len, Fn&& fn) {
  if (letters <= 0 || max_len == 0) return;
  std::string cur;
  auto rec = [&](auto&& self) -> void {
    for (int code = 0; code < letters; ++code) {
      if (!cur.empty() &&
          (static_cast<unsigned char>(cur.back()) ^ 1) == static_cast<unsigned>(code))
        continue;
      cur.push_back(static_cast<char>(code));
      fn(cur);
      if (cur.size() < max_len) self(self);
      cur.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

ConsequenceLog::ConsequenceLog(Presentation p) : presentation_(std::move(p)) {}

void ConsequenceLog::insert(Word w, Derivation d) {
  if (w.empty()) return;
  if (index_.count(w.packed())) return;
  Word inv = w.inverse();
  index_.emplace(w.packed(), entries_.size());
  harvest_rules(w);
  entries_.push_back({std::move(w), std::move(d)});
  if (!index_.count(inv.packed())) {
    index_.emplace(inv.packed(), entries_.size());
    harvest_rules(inv);
    Derivation dinv = inverse_derivation(entries_.back().derivation);
    entries_.push_back({std::move(inv), std::move(dinv)});
  }
}

void ConsequenceLog::harvest_rules(const Word& identity) {
  // Cyclic reduction is a conjugate, so still an identity; rules from its
  // rotations reach every reduced conjugate form.
  Word cyc = identity.cyclically_reduced();
  if (cyc.empty()) return;
  const std::string base = cyc.packed();
  const std::size_t n = base.size();
  for (int invert_pass = 0; invert_pass < 2; ++invert_pass) {
    std::string w = invert_pass ? inverse_packed(base) : base;
    for (std::size_t rot = 0; rot < n; ++rot) {
      std::string rotated = w.substr(rot) + w.substr(0, rot);
      for (std::size_t cut = 1; cut <= n; ++cut) {
        std::string lhs = rotated.substr(0, cut);
        std::string rhs = inverse_packed(rotated.substr(cut));
        if (!shortlex_less(rhs, lhs)) continue;
        std::string key = lhs + '\x7f' + rhs;
        if (!rule_keys_.insert(std::move(key)).second) continue;
        pending_rules_.push_back({std::move(lhs), std::move(rhs)});
      }
    }
  }
}

void ConsequenceLog::step_once() {
  ++steps_;
  if (!seeded_) {
    seeded_ = true;
    for (int i = 0; i < static_cast<int>(presentation_.relators.size()); ++i)
      insert(presentation_.relators[i], {{"", i, +1}});
    stage_limit_ = entries_.size();
    return;
  }
  if (entries_.empty()) return;  // free presentation: closure is empty
  if (cursor_ >= stage_limit_) {
    ++stage_;
    cursor_ = 0;
    stage_limit_ = entries_.size();
  }
  const std::size_t wi = cursor_++;
  const std::string w = entries_[wi].word.packed();
  const Derivation wd = entries_[wi].derivation;
  const std::size_t max_len = stage_ + presentation_.max_relator_length();

  for_each_reduced_word(2 * presentation_.alphabet.size(), stage_, [&](const std::string& x) {
    std::string conj = x;
    append_reduced(conj, w);
    append_reduced(conj, inverse_packed(x));
    if (conj.empty() || conj.size() > max_len) return;
    insert(Word::from_reduced(conj), conjugate_derivation(x, wd));
  });

  const std::size_t snapshot = entries_.size();
  for (std::size_t di = 0; di < snapshot; ++di) {
    // copies: insert() below may reallocate entries_
    const std::string d = entries_[di].word.packed();
    const Derivation dd = entries_[di].derivation;
    std::string left = w;
    append_reduced(left, d);
    if (!left.empty() && left.size() <= max_len)
      insert(Word::from_reduced(left), concat_derivations(wd, dd));
    std::string right = d;
    append_reduced(right, w);
    if (!right.empty() && right.size() <= max_len)
      insert(Word::from_reduced(right), concat_derivations(dd, wd));
  }
}

void ConsequenceLog::advance(std::uint64_t steps) {
  for (std::uint64_t i = 0; i < steps; ++i) step_once();
  if (!pending_rules_.empty()) {
    std::sort(pending_rules_.begin(), pending_rules_.end(),
              [](const IdentityRule& a, const IdentityRule& b) {
                if (a.lhs != b.lhs) return shortlex_less(a.lhs, b.lhs);
                return shortlex_less(a.rhs, b.rhs);
              });
    for (auto& r : pending_rules_) rules_.push_back(std::move(r));
    pending_rules_.clear();
    generation_ends_.push_back(rules_.size());
  }
}

std::string ConsequenceLog::rewrite(std::string_view packed) const {
  return rewrite_with_generations(packed, generation_ends_.size());
}

std::string ConsequenceLog::rewrite_with_generations(std::string_view packed,
                                                     std::size_t generations) const {
  std::string cur(packed);
  for (std::size_t gi = 0; gi < std::min(generations, generation_ends_.size()); ++gi) {
    const std::size_t end = generation_ends_[gi];
    // fixed point under the first `end` rules; replacements are followed by
    // free reduction and are strictly shortlex-decreasing, so this halts
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t pos = 0; pos < cur.size() && !changed; ++pos) {
        for (std::size_t ri = 0; ri < end && !changed; ++ri) {
          const IdentityRule& r = rules_[ri];
          if (r.lhs.size() > cur.size() - pos) continue;
          if (cur.compare(pos, r.lhs.size(), r.lhs) != 0) continue;
          std::string next = cur.substr(0, pos);
          append_reduced(next, r.rhs);
          append_reduced(next, std::string_view(cur).substr(pos + r.lhs.size()));
          cur = std::move(next);
          changed = true;
        }
      }
    }
  }
  return cur;
}

SemiAnswer ConsequenceLog::equal(const Word& u, const Word& v) const {
  std::string diff = u.packed();
  append_reduced(diff, inverse_packed(v.packed()));
  if (diff.empty()) return SemiAnswer::Yes;
  return rewrite(diff).empty() ? SemiAnswer::Yes : SemiAnswer::Unknown;
}

}  // namespace growthlab
