#pragma once

#include <string>
#include <vector>

#include "growthlab/presentation.hpp"
#include "growthlab/word.hpp"

namespace growthlab {

/// Heuristic Aut-orbit key for tuples of words in a free group: the tuple
/// after greedy Nielsen reduction, with each member replaced by the
/// shortlex-smaller of itself and its inverse and the tuple sorted. The key
/// is invariant under member permutations and inversions; length-minimal
/// tuples in the same orbit may still receive different keys (the reduction
/// is greedy, not a full Whitehead minimization), which only under-merges.
struct OrbitKey {
  std::vector<Word> tuple;
  std::vector<std::string> trace;  // applied moves, for reports

  std::string packed_key() const;  // hashable encoding of the tuple

  friend bool operator==(const OrbitKey& a, const OrbitKey& b) { return a.tuple == b.tuple; }
};

/// Greedy Nielsen reduction: repeatedly applies the length-reducing
/// replacement t_i <- t_i t_j^e or t_j^e t_i whose resulting normalized
/// tuple is smallest in (total length, sorted shortlex) order. Throws for
/// non-free presentations (orbit keys are only supported for free groups).
OrbitKey nielsen_canonicalize(const Presentation& p, std::vector<Word> tuple,
                              std::size_t max_moves = 4096);

/// True when greedy reduction of `tuple` reaches the standard basis of the
/// free presentation; for free groups this certifies generation.
bool nielsen_reaches_basis(const Presentation& p, const std::vector<Word>& tuple);

}  // namespace growthlab
