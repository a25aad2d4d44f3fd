#pragma once

#include <optional>

#include "alignh/core.hpp"
#include "alignh/witness.hpp"

namespace alignh {

struct SolveResult {
  Weight best_weight = Weight(0);
  // true iff some valid alignment exists (for the monotone solver: some
  // positive-weight monotone alignment); distinguishes "best is 0" from
  // "nothing found".
  bool found = false;
  std::optional<Alignment> best_alignment;
  // Canonical witnesses of best_alignment.  The partition witness is set
  // only when every f-phrase is a singleton.
  std::optional<PartitionWitness> partition_witness;
  std::optional<DualWitness> dual_witness;
};

// Exhaustive exact solver: enumerates e-partitions and equal-size
// f-partitions in lexicographic boundary order and takes the best bijection
// per pair ({0,1} weights: perfect matching; general weights: permutation
// brute force up to 9 phrases, Hungarian assignment on logs beyond).  Ties
// resolve to the lexicographically smallest witness (e_bits || f_bits),
// then the lexicographically smallest link set.
// Throws on one-sided empty instances ("empty instance mismatch") and on
// sentences beyond the partition guard.
SolveResult solve_exact(const WsaInstance& inst,
                        int guard = kDefaultPartitionGuard);

// true iff a weight->=1 alignment exists (== solve_exact best >= 1).  For
// {0,1} instances runs a memoized exact-cover search over (e-position,
// f-word mask) with interchangeable-word canonicalization instead of full
// enumeration; both paths agree by construction and by test.
bool decide_weight_one(const WsaInstance& inst,
                       int guard = kDefaultPartitionGuard);

// Phrase-to-word solver: f-phrases fixed to singletons, {0,1} weights,
// |f| <= |e|.  Returns the lexicographically smallest e-partition witness
// (popcount |f|-1) admitting a perfect matching, with the lex-min matching
// as the alignment; found=false when none exists.
SolveResult solve_pwsa(const WsaInstance& inst,
                       int guard = kDefaultPartitionGuard);

// Order-preserving restriction: best[i][k] = max over j<i, l<k of
// best[j][l] * phi([j,i],[l,k]).  Polynomial; only positive-weight
// monotone alignments are ranked (found=false when best is 0, no
// alignment returned).  Requires nonempty sentences.
SolveResult solve_monotone_dp(const WsaInstance& inst);

}  // namespace alignh
