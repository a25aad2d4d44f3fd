#pragma once

#include <functional>
#include <random>
#include <vector>

#include "alignh/cnf.hpp"
#include "alignh/graph.hpp"

namespace alignh {

// Instance families for the equivalence suites (CLI `verify` and the
// acceptance gate).  Enumeration is canonical and deterministic; random
// generators draw only from the passed engine.

// All clauses of 1..3 distinct literals over variables 1..num_vars, each
// sorted internally, the pool sorted lexicographically.
std::vector<std::vector<int>> three_cnf_clause_pool(int num_vars);

// Streams every formula over exactly num_vars variables built as a multiset
// of 1..max_clauses pool clauses (non-decreasing pool indices, so clause
// order is modded out) in which every variable occurs in both polarities.
// Stops early when fn returns false.
void for_each_both_polarity_formula(
    int num_vars, int max_clauses,
    const std::function<bool(const CnfFormula&)>& fn);

// Random formula with both polarities guaranteed: the 2n literals are dealt
// round-robin across m clauses, remaining slots filled randomly.
CnfFormula random_both_polarity_formula(int num_vars, int num_clauses,
                                        std::mt19937_64& rng);

// Streams every simple graph on exactly num_vertices labeled vertices with
// minimum degree >= 1 (all edge subsets, filtered).
void for_each_min_degree_one_graph(int num_vertices,
                                   const std::function<bool(const Graph&)>& fn);

Graph random_min_degree_one_graph(int num_vertices, std::mt19937_64& rng);

}  // namespace alignh
