#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alignh/core.hpp"

namespace alignh {

// Witness encodings for alignments.
//
// Partition witness: boundary bitstring of the e-side partition, length
// |e|-1; meaningful for phrase-to-word instances where the f side is fixed
// to singletons (a valid witness then has popcount |f|-1).
//
// Dual witness: boundary bitstrings of both sides plus (optionally) the
// phrase permutation.  Distances on dual witnesses act on e_bits || f_bits;
// the permutation is excluded.
//
// Matrix witness: the |f| x |e| 0/1 link matrix with cell (k, i) set iff the
// alignment links the phrase containing f-word k to the phrase containing
// e-word i.

struct PartitionWitness {
  std::string bits;  // '0'/'1', length |e|-1
  bool operator==(const PartitionWitness&) const = default;
};

struct DualWitness {
  std::string e_bits;
  std::string f_bits;
  // f-phrase index (0-based, f-phrases in span order) per e-phrase in order;
  // empty when the permutation is not tracked.
  std::vector<int> permutation;

  std::string concat_bits() const { return e_bits + f_bits; }
  bool operator==(const DualWitness&) const = default;
};

struct MatrixWitness {
  int rows = 0;  // |f|
  int cols = 0;  // |e|
  std::vector<uint8_t> cells;  // row-major, rows*cols

  uint8_t at(int r, int c) const { return cells[r * cols + c]; }
  int ones() const;
  bool operator==(const MatrixWitness&) const = default;
};

// Encoding.  All three require a valid alignment (checked; throws with the
// violation otherwise).  encode_partition additionally requires every f-span
// of the alignment to be a singleton.
PartitionWitness encode_partition(const WsaInstance& inst, const Alignment& a);
DualWitness encode_dual(const WsaInstance& inst, const Alignment& a,
                        bool with_permutation = true);
MatrixWitness encode_matrix(const WsaInstance& inst, const Alignment& a);

// Decoding a partition witness against an instance: rebuilds the e-side
// spans; throws on length or alphabet errors.  The popcount check (|f|-1
// ones) applies when check_popcount is set.
std::vector<Span> decode_partition_spans(const std::string& bits, int e_size);
PartitionWitness make_partition_witness(const std::string& bits, int e_size,
                                        std::optional<int> f_size);

// Distances --------------------------------------------------------------

// Hamming distance; throws on length mismatch.
int hamming_distance(const std::string& a, const std::string& b);

// Levenshtein distance (unit insert/delete/replace); with `transpositions`
// adjacent-swap counts as one operation (OSA variant).
int edit_distance(const std::string& a, const std::string& b,
                  bool transpositions = false);

int dual_witness_distance(const DualWitness& a, const DualWitness& b);

// Matrix Hamming distance; throws on dimension mismatch.
int matrix_hamming(const MatrixWitness& a, const MatrixWitness& b);

// Baselines ---------------------------------------------------------------

// The near-diagonal baseline: the valid alignment matching the first |f|-1
// words of e one-to-one with the first |f|-1 words of f and all remaining
// e-words as one phrase to the last f word.  Its matrix is within
// |e|*|f| - 2|f| Hamming distance of any PWSA-form alignment matrix.
// Requires |e| >= |f| >= 1.
MatrixWitness trivial_matrix_baseline(const WsaInstance& inst);
long trivial_matrix_bound(const WsaInstance& inst);  // |e|*|f| - 2|f|

// Uniform random bitstring of length n with exactly `ones` ones; seeded
// deterministically.
PartitionWitness random_partition_baseline(int n, int ones, uint64_t seed);

}  // namespace alignh
