#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace alignh {

// Simple undirected graphs, 1-based vertex ids, no self-loops or parallel
// edges.  Edge order is preserved (reductions index f-words by it).
struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // (u, v) with u < v after normalize

  int num_edges() const { return static_cast<int>(edges.size()); }
  void normalize();  // orient u < v, drop duplicates, validate range
  std::vector<int> degrees() const;            // index 1..n
  std::vector<std::set<int>> neighbors() const;  // index 1..n
  bool operator==(const Graph&) const = default;
};

using VertexSet = std::set<int>;

bool is_vertex_cover(const Graph& g, const VertexSet& c);

// Brute-force cover oracles (2^n subsets).
bool brute_force_has_cover(const Graph& g, int k);
std::optional<VertexSet> brute_force_min_cover(const Graph& g);

// Search-to-decision driver: queries in ascending vertex order; a vertex
// goes in the cover when deleting it keeps a (k-1)-cover, otherwise all of
// its neighbors enter the cover.  Returns nullopt when the oracle rejects
// (G, k).  Throws std::runtime_error when the final set fails verification
// (inconsistent oracle).
using VcOracle = std::function<bool(const Graph&, int)>;
std::optional<VertexSet> vc_search_via_decision(const Graph& g, int k,
                                                const VcOracle& oracle);

// Characteristic bitstring of a vertex set over ids 1..n (or a custom
// layout order).
std::string cover_witness_bits(const VertexSet& c, int n);
std::string cover_witness_bits(const VertexSet& c,
                               const std::vector<int>& layout);

// DIMACS-style edge lists ("p edge <n> <m>", lines "e u v", 'c' comments).
// Parse errors carry 1-based line numbers.
Graph parse_dimacs_graph(std::istream& in);
Graph parse_dimacs_graph_string(const std::string& text);
std::string to_dimacs_graph(const Graph& g);

}  // namespace alignh
