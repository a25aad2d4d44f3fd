#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alignh/cnf.hpp"
#include "alignh/core.hpp"
#include "alignh/graph.hpp"

namespace alignh {

// Gadget constructions mapping CNF satisfiability and vertex cover onto
// weighted sentence alignment, plus the hardness-amplification gadgets.
//
// SAT instance layout (per variable i with p_i positive / q_i negative
// occurrences, in index order):
//   e: block_i = x_i#1 .. x_i#p_i  ~x_i#1 .. ~x_i#q_i
//      (the uniqueness variant inserts the dummy pair v_i ~v_i in between)
//   f: c_1 .. c_m  s_1 .. s_n
// phi = 1 links:
//   clause word c_j <-> every single copy of each literal occurring in
//     clause j (any copy may satisfy the clause; the canonical alignment
//     built in recovery packs consumed copies against the slack-free end
//     of their segment)
//   slack word s_i <-> any block span containing all positive or all
//     negative copies (and the dummy pair, in the uniqueness variant)
//
// VC instance layout for budget k (vertex i has deg_i + 1 copies):
//   e: block_i = v_i#1 .. v_i#(deg_i+1)
//   f: c_1 .. c_m  s_1 .. s_n  t_1 .. t_{n-k}
// phi = 1 links:
//   edge word c_l <-> every single copy of either endpoint
//   slack word s_i <-> every suffix of block_i (including the last copy
//     alone)
//   t word t_l <-> the first deg_i copies of any block_i (vertices matched
//     to a t word sit outside the cover)

struct SatReductionMap {
  struct VarBlock {
    int var = 0;
    Span block;                 // whole block within e
    Span positive;              // positive copies (may be empty when repaired)
    Span negative;              // negative copies
    std::optional<Span> dummy;  // the inserted v ~v pair, if any
  };
  std::vector<VarBlock> blocks;       // index var-1
  std::vector<int> clause_word;       // clause j (0-based) -> f word (1-based)
  std::vector<int> slack_word;        // var i (1-based, entry i-1) -> f word
  CnfFormula formula;                 // the formula that was reduced
  // Set by amplification-aware callers; 0/absent when unamplified.
  int amplified_var = 0;
  int amplified_copies = 0;

  const VarBlock& block_of(int var) const;
};

struct VcReductionMap {
  struct VertexBlock {
    int vertex = 0;
    Span block;
    int copies = 0;  // deg + 1
  };
  Graph graph;
  int k = 0;
  std::vector<VertexBlock> blocks;  // index vertex-1
  std::vector<int> edge_word;       // edge l (0-based) -> f word (1-based)
  std::vector<int> slack_word;      // vertex i -> f word
  std::vector<int> t_words;         // f words t_1..t_{n-k}

  const VertexBlock& block_of(int vertex) const;
};

// 3SAT -> WSA (clauses of 1..3 literals).  Requires every variable to occur
// in both polarities; with repair_single_polarity set, offending variables
// get a dummy pair inserted instead of an error.
// |e| = total occurrences (3m for all-3-literal formulas), |f| = m + n.
std::pair<WsaInstance, SatReductionMap> sat_to_wsa(
    const CnfFormula& f, bool repair_single_polarity = false);

// Uniqueness variant: every block carries the dummy pair, slack spans must
// include it.  |e| = total occurrences + 2n, |f| = m + n.
std::pair<WsaInstance, SatReductionMap> sat_to_pwsa_unique(const CnfFormula& f);

// VertexCover -> WSA.  Requires 1 <= k <= n and min degree >= 1.
// |e| = 2m + n, |f| = m + 2n - k.
std::pair<WsaInstance, VcReductionMap> vc_to_wsa(const Graph& g, int k);

// Appends A copies of the tautological dummy clause (v OR ~v); the block of
// v grows by A copies per polarity.  Satisfiability is unchanged.
CnfFormula amplify_sat_dummy_clauses(const CnfFormula& f, int v, int copies);

// Adds fresh variables y_1..y_A with clauses (~z OR y_i) AND (z OR ~y_i),
// forcing y_i == z in every satisfying assignment.
struct EquivVarLayout {
  int source_var = 0;
  std::vector<int> copy_vars;   // y_1..y_A (fresh ids)
  std::vector<int> layout;      // witness order: copies first, then originals
};
std::pair<CnfFormula, EquivVarLayout> amplify_sat_equiv_vars(
    const CnfFormula& f, int z, int copies);

// Adds a copy v' of v (adjacent to v's neighbors) joined to v by an
// even-length path with 2L-1 interior vertices; the minimum cover grows by
// exactly L.  A cover containing v extends with all u-vertices (v' among
// them); a cover avoiding v uses all w-vertices.
struct PathGadget {
  int base_vertex = 0;
  int copy_vertex = 0;          // v'
  std::vector<int> u_ids;       // in the cover iff v is      (L vertices)
  std::vector<int> w_ids;       // in the cover iff v is not  (L vertices)
  std::vector<int> layout;      // witness order: u's, originals, w's
};
std::pair<Graph, PathGadget> amplify_vc_path(const Graph& g, int v, int L);

}  // namespace alignh
