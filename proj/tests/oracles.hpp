#pragma once

// Reference implementations used to cross-check the library.  Everything in
// here is written straight from the problem definitions and shares no logic
// with src/: alignment search is plain enumeration, edit distance is a
// memoized recursion (the library uses an iterative table) plus a true
// breadth-first search over edit neighbors for small strings.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "alignh/core.hpp"
#include "alignh/graph.hpp"
#include "alignh/reductions.hpp"
#include "alignh/weight.hpp"

namespace oracles {

using alignh::Alignment;
using alignh::Graph;
using alignh::Link;
using alignh::Span;
using alignh::VcReductionMap;
using alignh::VertexSet;
using alignh::Weight;
using alignh::WsaInstance;

// All ordered partitions of [0, n) into contiguous spans (2^(n-1) of them).
inline std::vector<std::vector<Span>> all_partitions(int n) {
  std::vector<std::vector<Span>> out;
  if (n == 0) return out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<Span> spans;
    int begin = 0;
    for (int p = 1; p < n; ++p) {
      if (mask & (1u << (p - 1))) {
        spans.emplace_back(begin, p);
        begin = p;
      }
    }
    spans.emplace_back(begin, n);
    out.push_back(std::move(spans));
  }
  return out;
}

struct BruteBest {
  bool found = false;
  Weight best = Weight(0);
};

// Best alignment weight by full enumeration: every e-partition, every
// equal-size f-partition, every bijection between them.
inline BruteBest brute_force_best(const WsaInstance& inst) {
  BruteBest r;
  const int ne = inst.e.size(), nf = inst.f.size();
  if (ne == 0 && nf == 0) {
    r.found = true;
    r.best = Weight(1);
    return r;
  }
  if (ne == 0 || nf == 0) return r;
  const auto pe_all = all_partitions(ne);
  const auto pf_all = all_partitions(nf);
  for (const auto& pe : pe_all) {
    for (const auto& pf : pf_all) {
      if (pe.size() != pf.size()) continue;
      std::vector<int> perm(pf.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        Weight w(1);
        for (std::size_t i = 0; i < pe.size(); ++i)
          w *= inst.phi(pe[i], pf[perm[i]]);
        r.found = true;
        if (w > r.best) r.best = w;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return r;
}

// Same restricted to order-preserving pairings; only positive weights count
// (found stays false when every monotone alignment has weight 0).
inline BruteBest brute_force_monotone(const WsaInstance& inst) {
  BruteBest r;
  const int ne = inst.e.size(), nf = inst.f.size();
  if (ne == 0 || nf == 0) return r;
  for (const auto& pe : all_partitions(ne)) {
    for (const auto& pf : all_partitions(nf)) {
      if (pe.size() != pf.size()) continue;
      Weight w(1);
      for (std::size_t i = 0; i < pe.size(); ++i) w *= inst.phi(pe[i], pf[i]);
      if (w > r.best) {
        r.best = w;
        r.found = true;
      }
    }
  }
  return r;
}

// Memoized recursion on (prefix of a, prefix of b).
inline int edit_memo_rec(const std::string& a, const std::string& b, int i,
                         int j, bool transpositions,
                         std::map<std::pair<int, int>, int>& memo) {
  if (i == 0) return j;
  if (j == 0) return i;
  auto key = std::make_pair(i, j);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int best = edit_memo_rec(a, b, i - 1, j, transpositions, memo) + 1;
  best = std::min(best, edit_memo_rec(a, b, i, j - 1, transpositions, memo) + 1);
  int sub = edit_memo_rec(a, b, i - 1, j - 1, transpositions, memo) +
            (a[i - 1] != b[j - 1] ? 1 : 0);
  best = std::min(best, sub);
  if (transpositions && i >= 2 && j >= 2 && a[i - 1] == b[j - 2] &&
      a[i - 2] == b[j - 1] && a[i - 1] != a[i - 2]) {
    best = std::min(
        best, edit_memo_rec(a, b, i - 2, j - 2, transpositions, memo) + 1);
  }
  memo[key] = best;
  return best;
}

inline int edit_oracle(const std::string& a, const std::string& b,
                       bool transpositions = false) {
  std::map<std::pair<int, int>, int> memo;
  return edit_memo_rec(a, b, static_cast<int>(a.size()),
                       static_cast<int>(b.size()), transpositions, memo);
}

// Breadth-first search over single-operation neighbors; exact but huge, so
// only used on short strings.  Alphabet is {0,1}.
inline int edit_bfs(const std::string& a, const std::string& b,
                    bool transpositions = false) {
  if (a == b) return 0;
  const std::size_t cap = std::max(a.size(), b.size()) + 1;
  std::unordered_set<std::string> seen{a};
  std::queue<std::pair<std::string, int>> q;
  q.emplace(a, 0);
  while (!q.empty()) {
    auto [cur, d] = q.front();
    q.pop();
    std::vector<std::string> next;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      std::string t = cur;
      t[i] = t[i] == '0' ? '1' : '0';  // replace
      next.push_back(t);
      next.push_back(cur.substr(0, i) + cur.substr(i + 1));  // delete
    }
    for (std::size_t i = 0; i <= cur.size(); ++i)
      for (char c : {'0', '1'})
        next.push_back(cur.substr(0, i) + c + cur.substr(i));  // insert
    if (transpositions) {
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        std::string t = cur;
        std::swap(t[i], t[i + 1]);
        next.push_back(t);
      }
    }
    for (auto& t : next) {
      if (t == b) return d + 1;
      if (t.size() > cap + 2) continue;
      if (seen.insert(t).second) q.emplace(t, d + 1);
    }
  }
  return -1;  // unreachable for binary strings
}

// Length-preserving edit script steps: a replacement costs 1, a paired
// delete+insert costs 2.
inline std::string apply_replace(const std::string& s, int pos, char bit) {
  std::string t = s;
  t[pos] = bit;
  return t;
}

inline std::string apply_delete_insert(const std::string& s, int del_pos,
                                       int ins_pos, char bit) {
  std::string t = s.substr(0, del_pos) + s.substr(del_pos + 1);
  return t.substr(0, ins_pos) + bit + t.substr(ins_pos);
}

// Builds the weight-1 alignment that witnesses a k-cover: every edge word
// consumes a copy of one cover endpoint (front-first), t words take the
// first deg copies of the non-cover blocks, slack words the remaining
// suffix.  The cover is padded to exactly k vertices first so the t words
// match up one-to-one with the complement.
inline Alignment alignment_from_cover(const VcReductionMap& map,
                                      const VertexSet& cover,
                                      const WsaInstance& inst) {
  const int n = map.graph.num_vertices;
  VertexSet padded = cover;
  for (int v = 1; v <= n && static_cast<int>(padded.size()) < map.k; ++v)
    padded.insert(v);
  Alignment a;
  std::vector<int> used(n + 1, 0);  // copies consumed per block
  for (int l = 0; l < map.graph.num_edges(); ++l) {
    auto [u, v] = map.graph.edges[l];
    const int pick = padded.count(u) ? u : v;
    const auto& blk = map.block_of(pick);
    const int pos = blk.block.begin + used[pick]++;
    a.links.emplace_back(Span(pos, pos + 1),
                         Span(map.edge_word[l] - 1, map.edge_word[l]));
  }
  int next_t = 0;
  for (int v = 1; v <= n; ++v) {
    const auto& blk = map.block_of(v);
    int slack_from = blk.block.begin + used[v];
    if (!padded.count(v)) {
      // t word takes the first deg copies, slack the last one
      const int tw = map.t_words.at(next_t++);
      a.links.emplace_back(Span(blk.block.begin, blk.block.end - 1),
                           Span(tw - 1, tw));
      slack_from = blk.block.end - 1;
    }
    a.links.emplace_back(Span(slack_from, blk.block.end),
                         Span(map.slack_word[v - 1] - 1, map.slack_word[v - 1]));
  }
  a.normalize();
  if (alignh::alignment_weight(inst, a) != Weight(1))
    throw std::logic_error("cover alignment is not weight 1");
  return a;
}

}  // namespace oracles
