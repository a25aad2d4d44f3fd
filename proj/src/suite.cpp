#include "alignh/suite.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace alignh {

namespace {

// Coverage bit for literal lit over n variables: positive occurrences use
// even bits, negative odd ones.
uint32_t literal_bit(int lit) {
  int v = std::abs(lit);
  return uint32_t(1) << (2 * (v - 1) + (lit > 0 ? 0 : 1));
}

uint32_t clause_coverage(const std::vector<int>& clause) {
  uint32_t mask = 0;
  for (int lit : clause) mask |= literal_bit(lit);
  return mask;
}

}  // namespace

std::vector<std::vector<int>> three_cnf_clause_pool(int num_vars) {
  if (num_vars < 1 || num_vars > 15)
    throw std::invalid_argument("clause pool wants 1..15 variables");
  // literal ids in sort order: 1, -1, 2, -2, ...
  std::vector<int> literals;
  for (int v = 1; v <= num_vars; ++v) {
    literals.push_back(v);
    literals.push_back(-v);
  }
  const int l = static_cast<int>(literals.size());
  std::vector<std::vector<int>> pool;
  for (int i = 0; i < l; ++i) {
    pool.push_back({literals[i]});
    for (int j = i + 1; j < l; ++j) {
      pool.push_back({literals[i], literals[j]});
      for (int k = j + 1; k < l; ++k)
        pool.push_back({literals[i], literals[j], literals[k]});
    }
  }
  return pool;
}

void for_each_both_polarity_formula(
    int num_vars, int max_clauses,
    const std::function<bool(const CnfFormula&)>& fn) {
  std::vector<std::vector<int>> pool = three_cnf_clause_pool(num_vars);
  const int pool_size = static_cast<int>(pool.size());
  std::vector<uint32_t> coverage(pool_size);
  for (int i = 0; i < pool_size; ++i) coverage[i] = clause_coverage(pool[i]);
  const uint32_t full = (uint32_t(1) << (2 * num_vars)) - 1;

  CnfFormula formula;
  formula.num_vars = num_vars;
  bool stop = false;
  // Non-decreasing index sequences; each multiset visited exactly once.
  auto dfs = [&](auto&& self, int first, uint32_t covered, int depth) -> void {
    if (stop || depth == max_clauses) return;
    for (int i = first; i < pool_size && !stop; ++i) {
      uint32_t next = covered | coverage[i];
      // Even three fresh literals per clause cannot close a bigger gap.
      int missing = std::popcount(full & ~next);
      if (missing > 3 * (max_clauses - depth - 1)) continue;
      formula.clauses.push_back(pool[i]);
      if (next == full && !fn(formula)) stop = true;
      if (!stop) self(self, i, next, depth + 1);
      formula.clauses.pop_back();
    }
  };
  dfs(dfs, 0, 0, 0);
}

CnfFormula random_both_polarity_formula(int num_vars, int num_clauses,
                                        std::mt19937_64& rng) {
  if (num_vars < 1) throw std::invalid_argument("need at least one variable");
  if (3 * num_clauses < 2 * num_vars)
    throw std::invalid_argument("too few clause slots to cover both polarities");
  CnfFormula f;
  f.num_vars = num_vars;
  f.clauses.assign(num_clauses, {});
  // Deal all 2n literals round-robin so every polarity appears, then pad
  // random clauses with random fresh literals up to size <= 3.
  std::vector<int> literals;
  for (int v = 1; v <= num_vars; ++v) {
    literals.push_back(v);
    literals.push_back(-v);
  }
  std::shuffle(literals.begin(), literals.end(), rng);
  for (std::size_t i = 0; i < literals.size(); ++i)
    f.clauses[i % num_clauses].push_back(literals[i]);
  std::uniform_int_distribution<int> var_pick(1, num_vars);
  std::uniform_int_distribution<int> sign_pick(0, 1);
  std::uniform_int_distribution<int> extra_pick(0, 2);
  for (auto& clause : f.clauses) {
    int room = 3 - static_cast<int>(clause.size());
    if (room < 0)
      throw std::logic_error("round-robin deal overflowed a clause");
    int extras = std::min(room, extra_pick(rng));
    for (int t = 0; t < extras; ++t) {
      int lit = var_pick(rng) * (sign_pick(rng) ? 1 : -1);
      if (std::find(clause.begin(), clause.end(), lit) == clause.end())
        clause.push_back(lit);
    }
    std::sort(clause.begin(), clause.end(),
              [](int a, int b) {
                int va = std::abs(a), vb = std::abs(b);
                return va != vb ? va < vb : a > b;
              });
  }
  return f;
}

void for_each_min_degree_one_graph(int num_vertices,
                                   const std::function<bool(const Graph&)>& fn) {
  if (num_vertices < 2 || num_vertices > 8)
    throw std::invalid_argument("graph enumeration wants 2..8 vertices");
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= num_vertices; ++u)
    for (int v = u + 1; v <= num_vertices; ++v) slots.emplace_back(u, v);
  const int s = static_cast<int>(slots.size());
  for (uint32_t mask = 1; mask < (uint32_t(1) << s); ++mask) {
    Graph g;
    g.num_vertices = num_vertices;
    for (int i = 0; i < s; ++i)
      if ((mask >> i) & 1) g.edges.push_back(slots[i]);
    std::vector<int> deg = g.degrees();
    bool ok = true;
    for (int v = 1; v <= num_vertices && ok; ++v) ok = deg[v] >= 1;
    if (!ok) continue;
    if (!fn(g)) return;
  }
}

Graph random_min_degree_one_graph(int num_vertices, std::mt19937_64& rng) {
  if (num_vertices < 2)
    throw std::invalid_argument("need at least two vertices");
  Graph g;
  g.num_vertices = num_vertices;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int u = 1; u <= num_vertices; ++u)
    for (int v = u + 1; v <= num_vertices; ++v)
      if (coin(rng)) g.edges.emplace_back(u, v);
  std::vector<int> deg = g.degrees();
  std::uniform_int_distribution<int> other(1, num_vertices - 1);
  for (int v = 1; v <= num_vertices; ++v) {
    if (deg[v] >= 1) continue;
    int u = other(rng);
    if (u >= v) ++u;  // uniform over the other vertices
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
    ++deg[v];
    ++deg[u];
  }
  g.normalize();
  return g;
}

}  // namespace alignh
