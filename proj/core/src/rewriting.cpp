#include "growthlab/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace growthlab {

Derivation inverse_derivation(const Derivation& d) {
  Derivation out;
  out.reserve(d.size());
  for (auto it = d.rbegin(); it != d.rend(); ++it)
    out.push_back({it->conjugator, it->relator, -it->exponent});
  return out;
}

Derivation conjugate_derivation(std::string_view prefix, const Derivation& d) {
  Derivation out;
  out.reserve(d.size());
  for (const auto& f : d) {
    std::string conj(prefix);
    append_reduced(conj, f.conjugator);
    out.push_back({std::move(conj), f.relator, f.exponent});
  }
  return out;
}

Derivation concat_derivations(Derivation a, const Derivation& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word evaluate_derivation(const Presentation& p, const Derivation& d) {
  std::string acc;
  for (const auto& f : d) {
    if (f.relator < 0 || f.relator >= static_cast<int>(p.relators.size()))
      throw std::invalid_argument("derivation references an unknown relator");
    const std::string& r = p.relators[f.relator].packed();
    append_reduced(acc, f.conjugator);
    append_reduced(acc, f.exponent > 0 ? r : inverse_packed(r));
    append_reduced(acc, inverse_packed(f.conjugator));
  }
  return Word::from_reduced(reduce_packed(acc));
}

namespace {

/// Position of the first match of any rule, scanning positions left to right
/// and rules in index order at each position. Returns {pos, rule} or nullopt.
struct Match {
  std::size_t pos;
  std::size_t rule;
};

std::optional<Match> find_match(std::string_view s, const std::vector<RewriteRule>& rules,
                                const std::vector<bool>* active) {
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    for (std::size_t ri = 0; ri < rules.size(); ++ri) {
      if (active && !(*active)[ri]) continue;
      const std::string& l = rules[ri].lhs;
      if (l.size() <= s.size() - pos && s.compare(pos, l.size(), l) == 0)
        return Match{pos, ri};
    }
  }
  return std::nullopt;
}

std::string apply_at(std::string_view s, std::size_t pos, const std::string& lhs,
                     const std::string& rhs) {
  std::string out;
  out.reserve(s.size() - lhs.size() + rhs.size());
  out.append(s.substr(0, pos));
  out.append(rhs);
  out.append(s.substr(pos + lhs.size()));
  return out;
}

}  // namespace

std::string RewritingSystem::rewrite(std::string_view packed) const {
  std::string cur(packed);
  while (auto m = find_match(cur, rules_, nullptr)) {
    cur = apply_at(cur, m->pos, rules_[m->rule].lhs, rules_[m->rule].rhs);
  }
  return cur;
}

std::string RewritingSystem::serialize(const Alphabet& alphabet) const {
  // sides are serialized letter by letter; they need not be freely reduced
  std::string out = confluent_ ? "# confluent: yes\n" : "# confluent: no\n";
  for (const auto& r : rules_) {
    std::string lhs_txt, rhs_txt;
    for (std::size_t i = 0; i < r.lhs.size(); ++i) {
      if (i) lhs_txt += ' ';
      lhs_txt += alphabet.print_letter(Letter(static_cast<unsigned char>(r.lhs[i])));
    }
    for (std::size_t i = 0; i < r.rhs.size(); ++i) {
      if (i) rhs_txt += ' ';
      rhs_txt += alphabet.print_letter(Letter(static_cast<unsigned char>(r.rhs[i])));
    }
    if (rhs_txt.empty()) rhs_txt = "1";
    out += lhs_txt + " -> " + rhs_txt + "\n";
  }
  return out;
}

RewritingSystem parse_rewriting_system(const Alphabet& alphabet, std::string_view text) {
  std::vector<RewriteRule> rules;
  bool confluent = false;
  int line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (line.rfind("# confluent: yes", 0) == 0) confluent = true;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
    if (!blank) {
      auto arrow = line.find("->");
      if (arrow == std::string_view::npos)
        throw ParseError("expected 'lhs -> rhs'", line_no, 1);
      // sides are letter sequences; parse them without free reduction
      auto parse_side = [&](std::string_view side) {
        return parse_letters(alphabet, side, line_no);
      };
      std::string lhs = parse_side(line.substr(0, arrow));
      std::string rhs = parse_side(line.substr(arrow + 2));
      if (lhs.empty()) throw ParseError("rule with empty left-hand side", line_no, 1);
      rules.push_back({std::move(lhs), std::move(rhs), {}});
    }
    if (end == text.size()) break;
    start = end + 1;
    ++line_no;
  }
  RewritingSystem rws(std::move(rules));
  if (confluent) rws.mark_confluent();
  return rws;
}

namespace {

struct Equation {
  std::string lhs;
  std::string rhs;
  Derivation derivation;  // witnesses lhs rhs^-1
};

struct Completion {
  const Presentation& p;
  std::vector<RewriteRule> rules;
  std::vector<bool> active;
  std::deque<Equation> queue;
  std::size_t max_rules;
  std::size_t max_lhs_len;
  CompletionResult stats;

  std::size_t live_rules() const {
    std::size_t n = 0;
    for (bool a : active) n += a;
    return n;
  }

  /// Rewrites one side to normal form, maintaining the equation derivation.
  /// `on_lhs` selects which side of the witness the applied rule enters.
  void normalize_side(std::string& side, Derivation& d, bool on_lhs) const {
    while (auto m = find_match(side, rules, &active)) {
      const RewriteRule& r = rules[m->rule];
      std::string prefix = reduce_packed(side.substr(0, m->pos));
      if (on_lhs) {
        // new_lhs rhs^-1 = (prefix r.rhs r.lhs^-1 prefix^-1)(lhs rhs^-1)
        d = concat_derivations(conjugate_derivation(prefix, inverse_derivation(r.derivation)),
                               d);
      } else {
        // lhs new_rhs^-1 = (lhs rhs^-1)(prefix r.lhs r.rhs^-1 prefix^-1)
        d = concat_derivations(std::move(d), conjugate_derivation(prefix, r.derivation));
      }
      side = apply_at(side, m->pos, r.lhs, r.rhs);
    }
  }

  void push_pairs_with(std::size_t ri) {
    const std::string& l1 = rules[ri].lhs;
    for (std::size_t rj = 0; rj < rules.size(); ++rj) {
      if (!active[rj] || !active[ri]) continue;
      // overlaps l1 = a c, l2 = c b with c proper and nonempty, both ways
      for (int dir = 0; dir < 2; ++dir) {
        std::size_t i = dir == 0 ? ri : rj;
        std::size_t j = dir == 0 ? rj : ri;
        if (dir == 1 && ri == rj) continue;
        const std::string& li = rules[i].lhs;
        const std::string& lj = rules[j].lhs;
        std::size_t max_o = std::min(li.size(), lj.size()) - 1;
        for (std::size_t o = 1; o <= max_o; ++o) {
          if (li.compare(li.size() - o, o, lj, 0, o) != 0) continue;
          std::string a = li.substr(0, li.size() - o);
          std::string b = lj.substr(o);
          Equation eq;
          eq.lhs = rules[i].rhs + b;
          eq.rhs = a + rules[j].rhs;
          eq.derivation = concat_derivations(
              inverse_derivation(rules[i].derivation),
              conjugate_derivation(reduce_packed(a), rules[j].derivation));
          queue.push_back(std::move(eq));
          ++stats.pairs_generated;
        }
      }
    }
  }

  /// Deactivates rules whose lhs contains the new rule's lhs and requeues
  /// them; rewrites right-hand sides that the new rule touches.
  void interreduce(std::size_t ri) {
    const std::string& l = rules[ri].lhs;
    for (std::size_t rj = 0; rj < rules.size(); ++rj) {
      if (rj == ri || !active[rj]) continue;
      if (rules[rj].lhs.find(l) != std::string::npos) {
        active[rj] = false;
        queue.push_back({rules[rj].lhs, rules[rj].rhs, rules[rj].derivation});
        continue;
      }
      while (auto m = find_match(rules[rj].rhs, rules, &active)) {
        const RewriteRule& r = rules[m->rule];
        std::string prefix = reduce_packed(rules[rj].rhs.substr(0, m->pos));
        rules[rj].derivation = concat_derivations(
            std::move(rules[rj].derivation), conjugate_derivation(prefix, r.derivation));
        rules[rj].rhs = apply_at(rules[rj].rhs, m->pos, r.lhs, r.rhs);
      }
    }
  }

  bool process(Equation eq) {
    ++stats.equations_processed;
    normalize_side(eq.lhs, eq.derivation, /*on_lhs=*/true);
    normalize_side(eq.rhs, eq.derivation, /*on_lhs=*/false);
    if (eq.lhs == eq.rhs) return true;
    if (shortlex_less(eq.lhs, eq.rhs)) {
      std::swap(eq.lhs, eq.rhs);
      eq.derivation = inverse_derivation(eq.derivation);
    }
    if (eq.lhs.size() > max_lhs_len) {
      ++stats.rules_discarded;
      return true;
    }
    if (live_rules() >= max_rules) return false;
    rules.push_back({std::move(eq.lhs), std::move(eq.rhs), std::move(eq.derivation)});
    active.push_back(true);
    interreduce(rules.size() - 1);
    push_pairs_with(rules.size() - 1);
    return true;
  }
};

}  // namespace

CompletionResult kb_complete(const Presentation& p, std::size_t max_rules,
                             std::size_t max_lhs_len) {
  if (max_rules == 0 || max_lhs_len == 0)
    throw std::invalid_argument("completion budgets must be positive");
  if (max_rules < p.relators.size())
    throw std::invalid_argument("max_rules must cover the relator count");

  Completion c{p, {}, {}, {}, max_rules, max_lhs_len, {}};

  // cancellation rules x x^-1 -> 1; free identities, so the witness is empty
  for (int g = 0; g < p.alphabet.size(); ++g) {
    for (int s = 0; s < 2; ++s) {
      Letter x(g, s == 0 ? +1 : -1);
      std::string lhs;
      lhs.push_back(static_cast<char>(x.code()));
      lhs.push_back(static_cast<char>(x.inverse().code()));
      c.rules.push_back({std::move(lhs), "", {}});
      c.active.push_back(true);
    }
  }
  for (std::size_t i = 0; i + 1 < c.rules.size(); ++i) c.push_pairs_with(i);
  c.push_pairs_with(c.rules.size() - 1);

  for (int ri = 0; ri < static_cast<int>(p.relators.size()); ++ri) {
    Equation eq;
    eq.lhs = p.relators[ri].packed();
    eq.rhs = "";
    eq.derivation = {{"", ri, +1}};
    c.queue.push_back(std::move(eq));
  }

  bool budget_hit = false;
  while (!c.queue.empty()) {
    Equation eq = std::move(c.queue.front());
    c.queue.pop_front();
    if (!c.process(std::move(eq))) {
      budget_hit = true;
      break;
    }
  }

  std::vector<RewriteRule> live;
  for (std::size_t i = 0; i < c.rules.size(); ++i)
    if (c.active[i]) live.push_back(std::move(c.rules[i]));

  CompletionResult result = c.stats;
  result.system = RewritingSystem(std::move(live));
  result.complete = !budget_hit && result.rules_discarded == 0;

  if (result.complete) {
    // validation pass: every critical pair of the final rules must resolve
    const auto& rules = result.system.rules();
    bool ok = true;
    for (std::size_t i = 0; i < rules.size() && ok; ++i) {
      for (std::size_t j = 0; j < rules.size() && ok; ++j) {
        const std::string& li = rules[i].lhs;
        const std::string& lj = rules[j].lhs;
        std::size_t max_o = std::min(li.size(), lj.size()) - 1;
        for (std::size_t o = 1; o <= max_o && ok; ++o) {
          if (li.compare(li.size() - o, o, lj, 0, o) != 0) continue;
          std::string super = li.substr(0, li.size() - o) + lj;
          std::string one = rules[i].rhs + lj.substr(o);
          std::string two = li.substr(0, li.size() - o) + rules[j].rhs;
          if (result.system.rewrite(one) != result.system.rewrite(two)) ok = false;
        }
      }
    }
    if (ok) result.system.mark_confluent();
    else result.complete = false;
  }
  return result;
}

std::uint64_t rws_cache_key(const Presentation& p, std::size_t max_rules,
                            std::size_t max_lhs_len) {
  std::uint64_t h = presentation_digest(p);
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(max_rules);
  mix(max_lhs_len);
  return h;
}

}  // namespace growthlab
