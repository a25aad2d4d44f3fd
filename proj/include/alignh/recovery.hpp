#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alignh/cnf.hpp"
#include "alignh/core.hpp"
#include "alignh/reductions.hpp"
#include "alignh/witness.hpp"

namespace alignh {

// Decoders from witnesses back to source-problem solutions, the corruption
// adversaries, and the nearest-pattern (majority) decoders.

// Rebuilds the phrase partition from w, perfect-matches phrases to f-words
// over weight-1 links (lexicographically smallest feasible matching), then
// reads each variable off its slack span: all positive copies covered ->
// false, all negative -> true, both -> true (tie rule).  Returns nullopt
// when no perfect matching exists.  Throws on popcount mismatch and when
// the decoded assignment fails to satisfy the formula.
std::optional<Assignment> decode_assignment(const PartitionWitness& w,
                                            const SatReductionMap& map,
                                            const WsaInstance& inst);

// The canonical alignment behind decode_assignment / witness_from_assignment.
std::optional<Alignment> alignment_from_witness(const PartitionWitness& w,
                                                const SatReductionMap& map,
                                                const WsaInstance& inst);

// Block readout per the 1...10...0 / 0...01...1 rule; nullopt when the block
// matches neither ideal form.  Requires >= 2 copies per polarity or a
// dummy-pair block (otherwise the two forms are ambiguous).
std::optional<bool> direct_block_readout(const PartitionWitness& w,
                                         const SatReductionMap& map, int v);

// Vertices whose block is not linked to any t word.  Verifies the result
// covers all edges within the k budget; throws otherwise (invalid witness).
VertexSet decode_cover(const Alignment& a, const VcReductionMap& map);

// Builds the canonical weight-1 alignment of a satisfying assignment:
// clause words consume copies front-first for true variables, back-first
// for false ones; slack takes the remaining contiguous span.  Throws when
// asg does not satisfy the formula.
Alignment alignment_from_assignment(const SatReductionMap& map,
                                    const Assignment& asg,
                                    const WsaInstance& inst);
PartitionWitness witness_from_assignment(const SatReductionMap& map,
                                         const Assignment& asg,
                                         const WsaInstance& inst);

// Corruption ---------------------------------------------------------------

enum class CorruptionMode { kHamming, kEdit };
enum class CorruptionStrategy { kRandom, kAdversarialBlock };

struct CorruptionBudget {
  int amount = 0;  // max_flips (Hamming) or max_operations (edit)
  CorruptionMode mode = CorruptionMode::kHamming;
  CorruptionStrategy strategy = CorruptionStrategy::kRandom;
  Span target;          // adversarial-block target (witness bit indices)
  uint64_t seed = 0;    // random strategy / spillover order
};

// Hamming mode flips exactly `amount` distinct positions (adversarial:
// left-to-right inside the target span first, then outside).  Edit mode
// applies `amount` operations in a length-preserving script: adversarial
// uses replacements at damaging positions; random mixes replacements and
// delete+insert pairs (a pair costs 2 operations).
std::string corrupt(const std::string& w, const CorruptionBudget& budget);

// Readout patterns ---------------------------------------------------------

struct BlockPattern {
  Span span;  // bit-index range [begin, end) within the witness string
  std::string true_pattern;
  std::string false_pattern;

  int length() const { return static_cast<int>(true_pattern.size()); }
  // positions (relative to the block) where the two patterns differ
  std::vector<int> copy_positions() const;
};

// Ideal patterns of variable v's block inside a partition witness:
//   plain block   true = 1^p 0^(q-1)   false = 0^(p-1) 1^q
//   dummy block   true = 1^p 0^(q+1)   false = 0^(p+1) 1^q
// where p/q count the real copies.
BlockPattern ideal_block_pattern(const SatReductionMap& map, int v);

// Nearest-pattern decode: distance to true-pattern < false-pattern -> true,
// > -> false, tie -> true.
bool majority_decode(const std::string& w_corrupt, const BlockPattern& pattern);

// Experiments --------------------------------------------------------------

enum class WitnessKind { kPartition, kDual };

struct ExperimentConfig {
  CnfFormula formula;
  int amplify_var = 1;
  int amplify_copies = 0;          // A; 0 = no amplification
  WitnessKind witness = WitnessKind::kPartition;
  CorruptionMode metric = CorruptionMode::kHamming;
  CorruptionStrategy strategy = CorruptionStrategy::kAdversarialBlock;
  std::optional<int> budget;       // explicit; otherwise floor(c*N - N^eps)
  double c = 0.5;                  // 1/2 partition witness, 2/3 dual
  double epsilon = 0.25;
  int trials = 100;
  uint64_t seed = 1;
};

struct TrialRow {
  int trial = 0;
  int budget = 0;
  bool decoded = false;
  bool truth = false;
  bool success = false;
};

struct ExperimentReport {
  ExperimentConfig config;
  int witness_length = 0;          // N
  std::vector<TrialRow> rows;
  double success_rate = 0.0;
};

// Per trial: amplify, reduce, build the true witness from a canonical
// satisfying assignment, corrupt within budget, majority-decode the
// amplified block, record success.  Throws on unsatisfiable formulas and
// on budget formulas that go negative.
ExperimentReport run_recovery_experiment(const ExperimentConfig& config);

}  // namespace alignh
