#include "growthlab/nielsen.hpp"

#include <algorithm>
#include <stdexcept>

namespace growthlab {

namespace {

std::size_t total_length(const std::vector<Word>& tuple) {
  std::size_t n = 0;
  for (const auto& w : tuple) n += w.length();
  return n;
}

/// Member-inversion normalization plus shortlex sort; both are Nielsen
/// moves, so the normalized tuple stays in the orbit.
void normalize_tuple(std::vector<Word>& tuple) {
  for (auto& w : tuple) {
    Word inv = w.inverse();
    if (shortlex_less(inv, w)) w = std::move(inv);
  }
  std::sort(tuple.begin(), tuple.end(),
            [](const Word& a, const Word& b) { return shortlex_less(a, b); });
}

bool tuple_less(const std::vector<Word>& a, const std::vector<Word>& b) {
  std::size_t la = total_length(a), lb = total_length(b);
  if (la != lb) return la < lb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return shortlex_less(a[i], b[i]);
  }
  return false;
}

}  // namespace

std::string OrbitKey::packed_key() const {
  std::string out;
  for (const auto& w : tuple) {
    out += w.packed();
    out.push_back('\x7f');
  }
  return out;
}

OrbitKey nielsen_canonicalize(const Presentation& p, std::vector<Word> tuple,
                              std::size_t max_moves) {
  if (!p.is_free())
    throw std::invalid_argument("orbit keys are only supported for free presentations");

  OrbitKey key;
  normalize_tuple(tuple);

  for (std::size_t move = 0; move < max_moves; ++move) {
    std::vector<Word> best;
    std::string best_desc;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      for (std::size_t j = 0; j < tuple.size(); ++j) {
        if (i == j) continue;
        const Word& ti = tuple[i];
        for (int shape = 0; shape < 4; ++shape) {
          Word tj = shape % 2 ? tuple[j].inverse() : tuple[j];
          Word replaced = shape < 2 ? multiply(ti, tj) : multiply(tj, ti);
          if (replaced.length() >= ti.length()) continue;  // strict member reduction
          std::vector<Word> candidate = tuple;
          candidate[i] = std::move(replaced);
          normalize_tuple(candidate);
          if (best.empty() || tuple_less(candidate, best)) {
            best = std::move(candidate);
            best_desc = "t" + std::to_string(i) + (shape < 2 ? " * t" : " <- t") +
                        std::to_string(j) + (shape % 2 ? "^-1" : "");
          }
        }
      }
    }
    if (best.empty()) break;
    tuple = std::move(best);
    key.trace.push_back(best_desc);
  }

  key.tuple = std::move(tuple);
  return key;
}

bool nielsen_reaches_basis(const Presentation& p, const std::vector<Word>& tuple) {
  OrbitKey key = nielsen_canonicalize(p, tuple);
  if (static_cast<int>(key.tuple.size()) != p.alphabet.size()) return false;
  for (int g = 0; g < p.alphabet.size(); ++g) {
    Word basis = Word::reduce({Letter(g, +1)});
    if (key.tuple[g] != basis) return false;
  }
  return true;
}

}  // namespace growthlab
