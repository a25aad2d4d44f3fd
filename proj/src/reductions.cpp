#include "alignh/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace alignh {

const SatReductionMap::VarBlock& SatReductionMap::block_of(int var) const {
  if (var < 1 || var > static_cast<int>(blocks.size()))
    throw std::invalid_argument("no block for variable " + std::to_string(var));
  return blocks[var - 1];
}

const VcReductionMap::VertexBlock& VcReductionMap::block_of(int vertex) const {
  if (vertex < 1 || vertex > static_cast<int>(blocks.size()))
    throw std::invalid_argument("no block for vertex " + std::to_string(vertex));
  return blocks[vertex - 1];
}

namespace {

// Shared builder for sat_to_wsa and sat_to_pwsa_unique.  dummy_pair_vars
// selects which blocks carry the v ~v pair.
std::pair<WsaInstance, SatReductionMap> build_sat_instance(
    const CnfFormula& f, const std::vector<bool>& dummy_pair_vars) {
  PolarityProfile prof = polarity_profile(f);
  const int n = f.num_vars;
  const int m = f.num_clauses();
  if (n < 1) throw std::invalid_argument("formula needs at least one variable");

  WsaInstance inst;
  SatReductionMap map;
  map.formula = f;

  // e: per-variable blocks x#1..x#p [v ~v] ~x#1..~x#q.
  for (int v = 1; v <= n; ++v) {
    const int p = prof.positive[v];
    const int q = prof.negative[v];
    const bool dummy = dummy_pair_vars[v];
    if (!dummy && (p == 0 || q == 0))
      throw std::invalid_argument(
          "variable x" + std::to_string(v) +
          " occurs in one polarity only (repair or add a dummy pair)");
    SatReductionMap::VarBlock block;
    block.var = v;
    int b0 = inst.e.size();
    for (int i = 1; i <= p; ++i)
      inst.e.tokens.push_back("x" + std::to_string(v) + "#" + std::to_string(i));
    block.positive = Span(b0, b0 + p);
    if (dummy) {
      int d0 = inst.e.size();
      inst.e.tokens.push_back("v" + std::to_string(v));
      inst.e.tokens.push_back("~v" + std::to_string(v));
      block.dummy = Span(d0, d0 + 2);
    }
    int n0 = inst.e.size();
    for (int i = 1; i <= q; ++i)
      inst.e.tokens.push_back("~x" + std::to_string(v) + "#" + std::to_string(i));
    block.negative = Span(n0, n0 + q);
    block.block = Span(b0, inst.e.size());
    map.blocks.push_back(block);
  }

  // f: clause words then slack words.
  for (int j = 1; j <= m; ++j) {
    inst.f.tokens.push_back("c" + std::to_string(j));
    map.clause_word.push_back(j);
  }
  for (int v = 1; v <= n; ++v) {
    inst.f.tokens.push_back("s" + std::to_string(v));
    map.slack_word.push_back(m + v);
  }

  // Clause links: clause j <-> every single copy of each literal in it.
  // All copies are eligible, which is what makes any satisfying assignment
  // realizable as a weight-1 alignment (consumed copies can always be
  // packed against one end of their segment).
  for (int j = 0; j < m; ++j) {
    const int fw = map.clause_word[j];
    for (int lit : f.clauses[j]) {
      const auto& block = map.blocks[std::abs(lit) - 1];
      const Span& seg = lit > 0 ? block.positive : block.negative;
      for (int a = seg.begin; a < seg.end; ++a)
        inst.phi.set(Link(Span(a, a + 1), Span(fw - 1, fw)), Weight(1));
    }
  }

  // Slack links: within-block spans containing all positive or all negative
  // copies (and the dummy pair when present).  Prefixes [B0, b] with
  // b >= end-of-positives hold every positive copy; suffixes [a, B1] with
  // a <= begin-of-negatives hold every negative one.
  for (int v = 1; v <= n; ++v) {
    const auto& block = map.blocks[v - 1];
    const int fw = map.slack_word[v - 1];
    const int b0 = block.block.begin;
    const int b1 = block.block.end;
    const int pos_end = block.positive.end;
    const int neg_begin = block.negative.begin;
    // prefix spans [B0, b]: contain all positives (and the pair); choose b
    // so the span reaches past the dummy pair and the positive part.
    int prefix_min_end = block.dummy ? block.dummy->end : pos_end;
    for (int b = std::max(prefix_min_end, b0 + 1); b <= b1; ++b)
      inst.phi.set(Link(Span(b0, b), Span(fw - 1, fw)), Weight(1));
    // suffix spans [a, B1]: contain all negatives (and the pair).  The
    // whole-block span appears in both families; re-setting it is a no-op.
    int suffix_max_begin = block.dummy ? block.dummy->begin : neg_begin;
    for (int a = b0; a <= std::min(suffix_max_begin, b1 - 1); ++a)
      inst.phi.set(Link(Span(a, b1), Span(fw - 1, fw)), Weight(1));
  }
  return {std::move(inst), std::move(map)};
}

}  // namespace

std::pair<WsaInstance, SatReductionMap> sat_to_wsa(const CnfFormula& f,
                                                   bool repair_single_polarity) {
  std::vector<bool> dummies(f.num_vars + 1, false);
  PolarityProfile prof = polarity_profile(f);
  for (int v = 1; v <= f.num_vars; ++v) {
    bool single = prof.positive[v] == 0 || prof.negative[v] == 0;
    if (single && !repair_single_polarity)
      throw std::invalid_argument("variable x" + std::to_string(v) +
                                  " occurs in one polarity only");
    dummies[v] = single && repair_single_polarity;
  }
  return build_sat_instance(f, dummies);
}

std::pair<WsaInstance, SatReductionMap> sat_to_pwsa_unique(const CnfFormula& f) {
  std::vector<bool> dummies(f.num_vars + 1, true);
  return build_sat_instance(f, dummies);
}

std::pair<WsaInstance, VcReductionMap> vc_to_wsa(const Graph& g, int k) {
  Graph graph = g;
  graph.normalize();
  const int n = graph.num_vertices;
  const int m = graph.num_edges();
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (k < 1 || k > n)
    throw std::invalid_argument("cover budget k=" + std::to_string(k) +
                                " outside 1..n");
  std::vector<int> deg = graph.degrees();
  for (int v = 1; v <= n; ++v) {
    if (deg[v] == 0)
      throw std::invalid_argument("isolated vertex " + std::to_string(v) +
                                  " (blocks need degree >= 1)");
  }

  WsaInstance inst;
  VcReductionMap map;
  map.graph = graph;
  map.k = k;

  // e: blocks of deg+1 copies per vertex.
  for (int v = 1; v <= n; ++v) {
    VcReductionMap::VertexBlock block;
    block.vertex = v;
    block.copies = deg[v] + 1;
    int b0 = inst.e.size();
    for (int i = 1; i <= block.copies; ++i)
      inst.e.tokens.push_back("v" + std::to_string(v) + "#" + std::to_string(i));
    block.block = Span(b0, inst.e.size());
    map.blocks.push_back(block);
  }

  // f: edge words, slack words, t words.
  for (int l = 1; l <= m; ++l) {
    inst.f.tokens.push_back("c" + std::to_string(l));
    map.edge_word.push_back(l);
  }
  for (int v = 1; v <= n; ++v) {
    inst.f.tokens.push_back("s" + std::to_string(v));
    map.slack_word.push_back(m + v);
  }
  for (int l = 1; l <= n - k; ++l) {
    inst.f.tokens.push_back("t" + std::to_string(l));
    map.t_words.push_back(m + n + l);
  }

  // Edge links: any single copy of either endpoint.
  for (int l = 0; l < m; ++l) {
    const int fw = map.edge_word[l];
    for (int endpoint : {graph.edges[l].first, graph.edges[l].second}) {
      const auto& block = map.blocks[endpoint - 1];
      for (int a = block.block.begin; a < block.block.end; ++a)
        inst.phi.set(Link(Span(a, a + 1), Span(fw - 1, fw)), Weight(1));
    }
  }
  // Slack links: every suffix of the block (the last copy alone included).
  for (int v = 1; v <= n; ++v) {
    const auto& block = map.blocks[v - 1];
    const int fw = map.slack_word[v - 1];
    for (int a = block.block.begin; a < block.block.end; ++a)
      inst.phi.set(Link(Span(a, block.block.end), Span(fw - 1, fw)), Weight(1));
  }
  // t links: the first deg(v) copies of any block.
  for (int t : map.t_words) {
    for (int v = 1; v <= n; ++v) {
      const auto& block = map.blocks[v - 1];
      inst.phi.set(Link(Span(block.block.begin, block.block.end - 1),
                        Span(t - 1, t)),
                   Weight(1));
    }
  }
  return {std::move(inst), std::move(map)};
}

CnfFormula amplify_sat_dummy_clauses(const CnfFormula& f, int v, int copies) {
  if (v < 1 || v > f.num_vars)
    throw std::invalid_argument("variable x" + std::to_string(v) +
                                " out of range");
  if (copies < 0) throw std::invalid_argument("negative copy count");
  CnfFormula out = f;
  for (int i = 0; i < copies; ++i) out.clauses.push_back({v, -v});
  return out;
}

std::pair<CnfFormula, EquivVarLayout> amplify_sat_equiv_vars(
    const CnfFormula& f, int z, int copies) {
  if (z < 1 || z > f.num_vars)
    throw std::invalid_argument("variable x" + std::to_string(z) +
                                " out of range");
  if (copies < 0) throw std::invalid_argument("negative copy count");
  CnfFormula out = f;
  EquivVarLayout layout;
  layout.source_var = z;
  for (int i = 0; i < copies; ++i) {
    int y = ++out.num_vars;
    layout.copy_vars.push_back(y);
    out.clauses.push_back({-z, y});   // z -> y
    out.clauses.push_back({z, -y});   // y -> z
  }
  layout.layout = layout.copy_vars;
  for (int v = 1; v <= f.num_vars; ++v) layout.layout.push_back(v);
  return {std::move(out), std::move(layout)};
}

std::pair<Graph, PathGadget> amplify_vc_path(const Graph& g, int v, int L) {
  if (v < 1 || v > g.num_vertices)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  if (L < 1) throw std::invalid_argument("path half-length must be >= 1");
  Graph out = g;
  out.normalize();
  PathGadget gadget;
  gadget.base_vertex = v;

  // Path v - a1 - a2 - ... - a_{2L-1} - v' of even length 2L.  Odd-position
  // interior vertices (a1, a3, ...) form the cover when v stays out; the
  // even-position ones plus v' join when v is in.
  const int copy = ++out.num_vertices;  // v'
  gadget.copy_vertex = copy;
  std::vector<int> interior;
  for (int i = 1; i <= 2 * L - 1; ++i) interior.push_back(++out.num_vertices);

  int prev = v;
  for (int a : interior) {
    out.edges.emplace_back(prev, a);
    prev = a;
  }
  out.edges.emplace_back(prev, copy);
  const auto nbr = g.neighbors();
  for (int u : nbr[v]) out.edges.emplace_back(copy, u);
  out.normalize();

  for (int i = 2; i <= 2 * L - 2; i += 2) gadget.u_ids.push_back(interior[i - 1]);
  gadget.u_ids.push_back(copy);
  for (int i = 1; i <= 2 * L - 1; i += 2) gadget.w_ids.push_back(interior[i - 1]);

  gadget.layout = gadget.u_ids;
  for (int u = 1; u <= g.num_vertices; ++u) gadget.layout.push_back(u);
  for (int w : gadget.w_ids) gadget.layout.push_back(w);
  return {std::move(out), std::move(gadget)};
}

}  // namespace alignh
