#include "alignh/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace alignh {

void Graph::normalize() {
  std::vector<std::pair<int, int>> cleaned;
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > num_vertices || v > num_vertices)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    cleaned.emplace_back(u, v);
  }
  // Drop duplicates, keep first-occurrence order.
  std::vector<std::pair<int, int>> unique;
  for (auto& e : cleaned) {
    if (std::find(unique.begin(), unique.end(), e) == unique.end())
      unique.push_back(e);
  }
  edges = std::move(unique);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(num_vertices + 1, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::set<int>> Graph::neighbors() const {
  std::vector<std::set<int>> nbr(num_vertices + 1);
  for (auto [u, v] : edges) {
    nbr[u].insert(v);
    nbr[v].insert(u);
  }
  return nbr;
}

bool is_vertex_cover(const Graph& g, const VertexSet& c) {
  for (auto [u, v] : g.edges) {
    if (!c.count(u) && !c.count(v)) return false;
  }
  return true;
}

bool brute_force_has_cover(const Graph& g, int k) {
  if (k < 0) return false;
  if (g.num_vertices > 24)
    throw std::invalid_argument("brute-force oracle capped at 24 vertices");
  const uint64_t total = uint64_t(1) << g.num_vertices;
  for (uint64_t mask = 0; mask < total; ++mask) {
    if (std::popcount(mask) > k) continue;
    VertexSet c;
    for (int v = 1; v <= g.num_vertices; ++v)
      if ((mask >> (v - 1)) & 1) c.insert(v);
    if (is_vertex_cover(g, c)) return true;
  }
  return false;
}

std::optional<VertexSet> brute_force_min_cover(const Graph& g) {
  if (g.num_vertices > 24)
    throw std::invalid_argument("brute-force oracle capped at 24 vertices");
  std::optional<VertexSet> best;
  const uint64_t total = uint64_t(1) << g.num_vertices;
  for (uint64_t mask = 0; mask < total; ++mask) {
    if (best && std::popcount(mask) >= static_cast<int>(best->size())) continue;
    VertexSet c;
    for (int v = 1; v <= g.num_vertices; ++v)
      if ((mask >> (v - 1)) & 1) c.insert(v);
    if (is_vertex_cover(g, c)) best = std::move(c);
  }
  return best;
}

namespace {

// Graph minus a vertex set, original ids kept (edges dropped).
Graph remove_vertices(const Graph& g, const VertexSet& gone) {
  Graph out;
  out.num_vertices = g.num_vertices;
  for (auto [u, v] : g.edges) {
    if (!gone.count(u) && !gone.count(v)) out.edges.emplace_back(u, v);
  }
  return out;
}

}  // namespace

std::optional<VertexSet> vc_search_via_decision(const Graph& g, int k,
                                                const VcOracle& oracle) {
  if (!oracle(g, k)) return std::nullopt;
  VertexSet cover;
  Graph current = g;
  VertexSet removed;
  int budget = k;
  for (int v = 1; v <= g.num_vertices; ++v) {
    if (removed.count(v)) continue;
    bool incident = false;
    for (auto [a, b] : current.edges)
      if (a == v || b == v) {
        incident = true;
        break;
      }
    if (!incident) continue;  // nothing to decide for isolated vertices
    VertexSet without_v = removed;
    without_v.insert(v);
    Graph reduced = remove_vertices(g, without_v);
    if (budget > 0 && oracle(reduced, budget - 1)) {
      cover.insert(v);
      removed = std::move(without_v);
      current = std::move(reduced);
      --budget;
    } else {
      // v stays out, so every remaining neighbor joins the cover.
      auto nbr = current.neighbors();
      for (int u : nbr[v]) {
        cover.insert(u);
        removed.insert(u);
        --budget;
      }
      removed.insert(v);
      current = remove_vertices(g, removed);
    }
  }
  if (budget < 0 || !is_vertex_cover(g, cover) ||
      static_cast<int>(cover.size()) > k)
    throw std::runtime_error("inconsistent oracle: search output fails verification");
  return cover;
}

std::string cover_witness_bits(const VertexSet& c, int n) {
  std::string bits(n, '0');
  for (int v : c) {
    if (v < 1 || v > n)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
    bits[v - 1] = '1';
  }
  return bits;
}

std::string cover_witness_bits(const VertexSet& c,
                               const std::vector<int>& layout) {
  std::string bits(layout.size(), '0');
  for (std::size_t i = 0; i < layout.size(); ++i)
    if (c.count(layout[i])) bits[i] = '1';
  return bits;
}

Graph parse_dimacs_graph(std::istream& in) {
  Graph g;
  bool seen_header = false;
  int declared_edges = 0;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c') continue;
    if (first == "p") {
      std::string kind;
      if (seen_header) fail("duplicate header");
      if (!(ls >> kind >> g.num_vertices >> declared_edges) || kind != "edge")
        fail("expected 'p edge <vertices> <edges>'");
      if (g.num_vertices < 0 || declared_edges < 0)
        fail("negative counts in header");
      seen_header = true;
      continue;
    }
    if (first == "e") {
      if (!seen_header) fail("edge before 'p edge' header");
      int u, v;
      if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
      if (u < 1 || v < 1 || u > g.num_vertices || v > g.num_vertices)
        fail("edge (" + std::to_string(u) + "," + std::to_string(v) +
             ") out of range");
      if (u == v) fail("self-loop at vertex " + std::to_string(u));
      g.edges.emplace_back(u, v);
      continue;
    }
    fail("unrecognized line '" + first + "...'");
  }
  if (!seen_header) fail("missing 'p edge' header");
  if (static_cast<int>(g.edges.size()) != declared_edges)
    fail("edge count " + std::to_string(g.edges.size()) + " != declared " +
         std::to_string(declared_edges));
  g.normalize();
  return g;
}

Graph parse_dimacs_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs_graph(in);
}

std::string to_dimacs_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices << " " << g.edges.size() << "\n";
  for (auto [u, v] : g.edges) out << "e " << u << " " << v << "\n";
  return out.str();
}

}  // namespace alignh
