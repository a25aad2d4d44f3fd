#include "alignh/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "alignh/matching.hpp"

namespace alignh {

namespace {

void check_nonempty_pair(const WsaInstance& inst) {
  if ((inst.e.size() == 0) != (inst.f.size() == 0))
    throw std::invalid_argument("empty instance mismatch: |e|=" +
                                std::to_string(inst.e.size()) + ", |f|=" +
                                std::to_string(inst.f.size()));
}

void check_guard(int n, int guard, const char* side) {
  if (n > guard)
    throw std::invalid_argument("size-guard: |" + std::string(side) + "|=" +
                                std::to_string(n) + " exceeds guard " +
                                std::to_string(guard) + " (raise via " +
                                kGuardEnvVar + " or --guard)");
}

SolveResult empty_result() {
  SolveResult r;
  r.best_weight = Weight(1);
  r.found = true;
  r.best_alignment = Alignment{};
  r.partition_witness = PartitionWitness{""};
  r.dual_witness = DualWitness{"", "", {}};
  return r;
}

void attach_witnesses(SolveResult& r, const WsaInstance& inst) {
  if (!r.best_alignment) return;
  Alignment a = *r.best_alignment;
  a.normalize();
  r.best_alignment = a;
  bool f_singletons = std::all_of(a.links.begin(), a.links.end(),
                                  [](const Link& l) { return l.f.length() == 1; });
  if (f_singletons) r.partition_witness = encode_partition(inst, a);
  r.dual_witness = encode_dual(inst, a, /*with_permutation=*/true);
}

// ---- {0,1} fast decision: memoized exact cover over (e-position, f-mask) --

struct ZeroOneIndex {
  int ne = 0;
  int nf = 0;
  int max_f_len = 1;                          // longest weight-1 f-span
  std::vector<std::vector<Link>> by_e_begin;  // weight-1 links per e.begin
  // Interchangeable f words: every weight-1 link touching the word is the
  // word's own singleton, and the partner e-span sets coincide.
  std::vector<int> group_of;                  // f bit -> group id or -1
  std::vector<std::vector<int>> group_members;

  uint32_t f_bits(const Span& f) const {
    return ((uint32_t(1) << f.length()) - 1) << f.begin;
  }
};

ZeroOneIndex build_zero_one_index(const WsaInstance& inst) {
  ZeroOneIndex idx;
  idx.ne = inst.e.size();
  idx.nf = inst.f.size();
  idx.by_e_begin.assign(idx.ne + 1, {});
  std::vector<std::vector<Span>> singleton_partners(idx.nf);
  std::vector<char> only_singletons(idx.nf, 1);
  for (const auto& [link, w] : inst.phi.entries()) {
    if (w != Weight(1)) continue;
    if (link.e.end > idx.ne || link.f.end > idx.nf) continue;  // out-of-range entries are inert
    idx.by_e_begin[link.e.begin].push_back(link);
    idx.max_f_len = std::max(idx.max_f_len, link.f.length());
    if (link.f.length() == 1) {
      singleton_partners[link.f.begin].push_back(link.e);
    } else {
      for (int w2 = link.f.begin; w2 < link.f.end; ++w2) only_singletons[w2] = 0;
    }
  }
  for (auto& spans : singleton_partners) std::sort(spans.begin(), spans.end());
  idx.group_of.assign(idx.nf, -1);
  std::map<std::vector<Span>, int> signature_group;
  for (int w = 0; w < idx.nf; ++w) {
    if (!only_singletons[w] || singleton_partners[w].empty()) continue;
    auto [it, inserted] = signature_group.try_emplace(
        singleton_partners[w], static_cast<int>(idx.group_members.size()));
    if (inserted) idx.group_members.emplace_back();
    idx.group_of[w] = it->second;
    idx.group_members[it->second].push_back(w);
  }
  return idx;
}

uint32_t canonical_mask(uint32_t mask, const ZeroOneIndex& idx) {
  for (const auto& members : idx.group_members) {
    int used = 0;
    for (int w : members) used += (mask >> w) & 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (static_cast<int>(i) < used)
        mask |= uint32_t(1) << members[i];
      else
        mask &= ~(uint32_t(1) << members[i]);
    }
  }
  return mask;
}

// In-group symmetry: only the lowest free member of a group is worth trying.
bool is_lowest_free_in_group(int w, uint32_t mask, const ZeroOneIndex& idx) {
  int g = idx.group_of[w];
  if (g < 0) return true;
  for (int member : idx.group_members[g]) {
    if (member == w) return true;
    if (!((mask >> member) & 1)) return false;
  }
  return true;
}

class ZeroOneDecider {
 public:
  explicit ZeroOneDecider(const WsaInstance& inst)
      : idx_(build_zero_one_index(inst)) {}

  bool decide() {
    if (idx_.ne == 0 && idx_.nf == 0) return true;
    full_ = idx_.nf >= 32 ? ~uint32_t(0) : (uint32_t(1) << idx_.nf) - 1;
    // Quick necessary conditions: every word on both sides must be touched
    // by some weight-1 link.
    std::vector<char> e_touch(idx_.ne, 0);
    uint32_t f_touch = 0;
    for (const auto& bucket : idx_.by_e_begin) {
      for (const Link& l : bucket) {
        for (int w = l.e.begin; w < l.e.end; ++w) e_touch[w] = 1;
        f_touch |= idx_.f_bits(l.f);
      }
    }
    if (f_touch != full_) return false;
    for (char t : e_touch)
      if (!t) return false;
    return search(0, 0);
  }

 private:
  bool search(int i, uint32_t mask) {
    if (i == idx_.ne) return mask == full_;
    // Each phrase consumes >= 1 e-word and covers <= max_f_len f-words.
    const int left = idx_.nf - std::popcount(mask);
    if (idx_.ne - i < (left + idx_.max_f_len - 1) / idx_.max_f_len)
      return false;
    uint64_t key = (uint64_t(i) << 32) | canonical_mask(mask, idx_);
    if (failed_.count(key)) return false;
    for (const Link& l : idx_.by_e_begin[i]) {
      uint32_t fb = idx_.f_bits(l.f);
      if (fb & mask) continue;
      if (l.f.length() == 1 &&
          !is_lowest_free_in_group(l.f.begin, mask, idx_))
        continue;
      if (search(l.e.end, mask | fb)) return true;
    }
    failed_.insert(key);
    return false;
  }

  ZeroOneIndex idx_;
  uint32_t full_ = 0;
  std::unordered_set<uint64_t> failed_;
};

// ---- exhaustive exact solver --------------------------------------------

struct PairResult {
  Weight weight{0};
  std::vector<Link> links;
};

// Best bijection between fixed partitions; canonical (lex-min) links.
PairResult evaluate_pair(const WsaInstance& inst, const std::vector<Span>& pe,
                         const std::vector<Span>& pf, bool zero_one) {
  const int p = static_cast<int>(pe.size());
  PairResult result;
  auto identity_links = [&] {
    std::vector<Link> links;
    links.reserve(p);
    for (int i = 0; i < p; ++i) links.emplace_back(pe[i], pf[i]);
    return links;
  };

  std::vector<std::vector<Weight>> w(p, std::vector<Weight>(p));
  bool dead_row = false;
  for (int i = 0; i < p && !dead_row; ++i) {
    bool any = false;
    for (int j = 0; j < p; ++j) {
      w[i][j] = inst.phi(pe[i], pf[j]);
      any = any || w[i][j] != Weight(0);
    }
    dead_row = !any;
  }
  if (dead_row) {
    result.links = identity_links();  // everything weighs 0 here
    return result;
  }

  if (zero_one) {
    std::vector<std::vector<int>> adj(p);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j)
        if (w[i][j] == Weight(1)) adj[i].push_back(j);
    BipartiteMatcher matcher(adj, p);
    std::vector<int> match = matcher.lex_min_perfect_matching();
    if (!match.empty()) {
      result.weight = Weight(1);
      for (int i = 0; i < p; ++i) result.links.emplace_back(pe[i], pf[match[i]]);
    } else {
      result.links = identity_links();
    }
    return result;
  }

  if (p <= 9) {
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    bool first = true;
    do {
      Weight total(1);
      for (int i = 0; i < p && total != Weight(0); ++i) total *= w[i][perm[i]];
      if (first || total > result.weight) {
        result.weight = total;
        result.links.clear();
        for (int i = 0; i < p; ++i) result.links.emplace_back(pe[i], pf[perm[i]]);
        first = false;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
  }

  // Larger general-weight pairs: exact assignment on -log weights; zero
  // weights are forbidden edges.  Deterministic, not guaranteed lex-min
  // among equal-weight maxima.
  const double kInf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> cost(p, std::vector<double>(p, kInf));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (w[i][j] != Weight(0))
        cost[i][j] = -std::log(boost::rational_cast<double>(w[i][j]));
  std::vector<int> assign = hungarian_min_assignment(cost);
  if (assign.empty()) {
    result.links = identity_links();
    return result;
  }
  result.weight = Weight(1);
  for (int i = 0; i < p; ++i) {
    result.weight *= w[i][assign[i]];
    result.links.emplace_back(pe[i], pf[assign[i]]);
  }
  return result;
}

}  // namespace

SolveResult solve_exact(const WsaInstance& inst, int guard) {
  check_nonempty_pair(inst);
  if (inst.e.size() == 0) return empty_result();
  check_guard(inst.e.size(), guard, "e");
  check_guard(inst.f.size(), guard, "f");
  const bool zero_one = inst.phi.is_zero_one();

  SolveResult best;
  bool stop = false;
  for_each_partition(inst.e.size(), std::nullopt, guard,
                     [&](const std::vector<Span>& pe) {
    const int p = static_cast<int>(pe.size());
    for_each_partition(inst.f.size(), p, guard,
                       [&](const std::vector<Span>& pf) {
      PairResult pair = evaluate_pair(inst, pe, pf, zero_one);
      if (!best.found || pair.weight > best.best_weight) {
        best.found = true;
        best.best_weight = pair.weight;
        best.best_alignment = Alignment{pair.links};
        if (zero_one && pair.weight == Weight(1)) stop = true;
      }
      return !stop;
    });
    return !stop;
  });
  attach_witnesses(best, inst);
  return best;
}

bool decide_weight_one(const WsaInstance& inst, int guard) {
  check_nonempty_pair(inst);
  if (inst.e.size() == 0) return true;
  if (inst.phi.is_zero_one() && inst.f.size() < 32) {
    ZeroOneDecider decider(inst);
    return decider.decide();
  }
  return solve_exact(inst, guard).best_weight >= Weight(1);
}

// ---- phrase-to-word solver ----------------------------------------------

namespace {

class PwsaSolver {
 public:
  PwsaSolver(const WsaInstance& inst, int guard) : inst_(inst), guard_(guard) {
    ne_ = inst.e.size();
    nf_ = inst.f.size();
    full_ = nf_ == 0 ? 0 : (uint32_t(1) << nf_) - 1;
    span_words_.assign(ne_ + 1, std::vector<uint32_t>(ne_ + 1, 0));
    for (const auto& [link, w] : inst.phi.entries()) {
      if (w != Weight(1) || link.f.length() != 1) continue;
      if (link.e.end > ne_ || link.f.end > nf_) continue;
      span_words_[link.e.begin][link.e.end] |= uint32_t(1) << link.f.begin;
    }
    idx_ = build_zero_one_index(strip_to_singletons());
  }

  SolveResult solve() {
    SolveResult result;
    if (!feasible(0, 0)) return result;
    std::string bits = extract_lex_min();
    std::vector<Span> phrases = spans_from_bits(bits);
    if (static_cast<int>(bits.size()) != std::max(0, ne_ - 1) ||
        static_cast<int>(phrases.size()) != nf_)
      throw std::logic_error("pwsa extraction lost phrases");
    // Canonical alignment: lex-min perfect matching of phrases to words.
    std::vector<std::vector<int>> adj(phrases.size());
    for (std::size_t i = 0; i < phrases.size(); ++i) {
      uint32_t words = span_words_[phrases[i].begin][phrases[i].end];
      for (int w = 0; w < nf_; ++w)
        if ((words >> w) & 1) adj[i].push_back(w);
    }
    BipartiteMatcher matcher(adj, nf_);
    std::vector<int> match = matcher.lex_min_perfect_matching();
    if (match.empty()) throw std::logic_error("pwsa witness lost its matching");
    result.found = true;
    result.best_weight = Weight(1);
    Alignment a;
    for (std::size_t i = 0; i < phrases.size(); ++i)
      a.links.emplace_back(phrases[i], Span(match[i], match[i] + 1));
    result.best_alignment = std::move(a);
    attach_witnesses(result, inst_);
    return result;
  }

 private:
  // The decider index wants an instance; rebuild phi from the singleton
  // links so multi-word f entries cannot interfere with grouping.
  WsaInstance strip_to_singletons() const {
    WsaInstance stripped;
    stripped.e = inst_.e;
    stripped.f = inst_.f;
    for (int b = 0; b < ne_; ++b)
      for (int e = b + 1; e <= ne_; ++e) {
        uint32_t words = span_words_[b][e];
        for (int w = 0; w < nf_; ++w)
          if ((words >> w) & 1)
            stripped.phi.set(Link(Span(b, e), Span(w, w + 1)), Weight(1));
      }
    return stripped;
  }

  bool feasible(int i, uint32_t mask) {
    if (i == ne_) return mask == full_;
    if (ne_ - i < nf_ - std::popcount(mask)) return false;
    uint64_t key = (uint64_t(i) << 32) | canonical_mask(mask, idx_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool ok = false;
    for (int j = i + 1; j <= ne_ && !ok; ++j) {
      uint32_t words = span_words_[i][j] & ~mask;
      while (words && !ok) {
        int w = std::countr_zero(words);
        words &= words - 1;
        if (!is_lowest_free_in_group(w, mask, idx_)) continue;
        ok = feasible(j, mask | (uint32_t(1) << w));
      }
    }
    memo_.emplace(key, ok);
    return ok;
  }

  std::string extract_lex_min() {
    std::string bits;
    std::vector<uint32_t> frontier{0};
    int i = 0;
    while (i < ne_) {
      bool advanced = false;
      for (int j = ne_; j > i && !advanced; --j) {
        // Longest feasible phrase first == lexicographically smallest bits.
        std::vector<uint32_t> next;
        for (uint32_t mask : frontier) {
          uint32_t words = span_words_[i][j] & ~mask;
          while (words) {
            int w = std::countr_zero(words);
            words &= words - 1;
            uint32_t grown = mask | (uint32_t(1) << w);
            if (feasible(j, grown)) next.push_back(canonical_mask(grown, idx_));
          }
        }
        if (next.empty()) continue;
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        bits.append(j - i - 1, '0');
        if (j < ne_) bits.push_back('1');
        frontier = std::move(next);
        i = j;
        advanced = true;
      }
      if (!advanced) throw std::logic_error("pwsa extraction stuck");
    }
    return bits;
  }

  const WsaInstance& inst_;
  int guard_ = 0;
  int ne_ = 0;
  int nf_ = 0;
  uint32_t full_ = 0;
  std::vector<std::vector<uint32_t>> span_words_;
  ZeroOneIndex idx_;
  std::unordered_map<uint64_t, bool> memo_;
};

}  // namespace

SolveResult solve_pwsa(const WsaInstance& inst, int guard) {
  check_nonempty_pair(inst);
  if (inst.e.size() == 0) return empty_result();
  if (!inst.phi.is_zero_one())
    throw std::invalid_argument("pwsa needs {0,1} link weights");
  if (inst.f.size() > inst.e.size())
    throw std::invalid_argument("pwsa needs |f| <= |e|, got |e|=" +
                                std::to_string(inst.e.size()) + ", |f|=" +
                                std::to_string(inst.f.size()));
  if (inst.f.size() <= 25) {
    PwsaSolver solver(inst, guard);
    return solver.solve();
  }
  // Very wide f side: fall back to guarded lexicographic enumeration.
  check_guard(inst.e.size(), guard, "e");
  SolveResult result;
  for_each_partition(inst.e.size(), inst.f.size(), guard,
                     [&](const std::vector<Span>& pe) {
    std::vector<std::vector<int>> adj(pe.size());
    for (std::size_t i = 0; i < pe.size(); ++i) {
      for (int w = 0; w < inst.f.size(); ++w)
        if (inst.phi(pe[i], Span(w, w + 1)) == Weight(1)) adj[i].push_back(w);
    }
    BipartiteMatcher matcher(adj, inst.f.size());
    std::vector<int> match = matcher.lex_min_perfect_matching();
    if (match.empty()) return true;
    result.found = true;
    result.best_weight = Weight(1);
    Alignment a;
    for (std::size_t i = 0; i < pe.size(); ++i)
      a.links.emplace_back(pe[i], Span(match[i], match[i] + 1));
    result.best_alignment = std::move(a);
    return false;  // first hit is the lex-min witness
  });
  attach_witnesses(result, inst);
  return result;
}

SolveResult solve_monotone_dp(const WsaInstance& inst) {
  const int ne = inst.e.size();
  const int nf = inst.f.size();
  if (ne == 0 || nf == 0)
    throw std::invalid_argument("monotone DP needs nonempty sentences");
  // best[i][k]: heaviest positive-weight monotone alignment of the prefixes
  // e[0..i], f[0..k]; 0 marks "unreachable with positive weight".
  std::vector<std::vector<Weight>> best(ne + 1, std::vector<Weight>(nf + 1, Weight(0)));
  best[0][0] = Weight(1);
  for (int i = 1; i <= ne; ++i) {
    for (int k = 1; k <= nf; ++k) {
      for (int j = 0; j < i; ++j) {
        for (int l = 0; l < k; ++l) {
          if (best[j][l] == Weight(0)) continue;
          Weight w = inst.phi(Span(j, i), Span(l, k));
          if (w == Weight(0)) continue;
          Weight candidate = best[j][l] * w;
          if (candidate > best[i][k]) best[i][k] = candidate;
        }
      }
    }
  }
  SolveResult result;
  if (best[ne][nf] == Weight(0)) return result;  // no positive monotone alignment
  result.found = true;
  result.best_weight = best[ne][nf];
  Alignment a;
  int i = ne, k = nf;
  while (i > 0 || k > 0) {
    bool stepped = false;
    for (int j = 0; j < i && !stepped; ++j) {
      for (int l = 0; l < k && !stepped; ++l) {
        if (best[j][l] == Weight(0)) continue;
        Weight w = inst.phi(Span(j, i), Span(l, k));
        if (w == Weight(0)) continue;
        if (best[j][l] * w == best[i][k]) {
          a.links.emplace_back(Span(j, i), Span(l, k));
          i = j;
          k = l;
          stepped = true;
        }
      }
    }
    if (!stepped) throw std::logic_error("monotone backtrack lost its path");
  }
  result.best_alignment = std::move(a);
  attach_witnesses(result, inst);
  return result;
}

}  // namespace alignh
