#include "alignh/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "alignh/matching.hpp"

namespace alignh {

namespace {

int expected_witness_length(const SatReductionMap& map) {
  if (map.blocks.empty()) throw std::invalid_argument("empty reduction map");
  return map.blocks.back().block.end - 1;
}

const SatReductionMap::VarBlock* block_containing(const SatReductionMap& map,
                                                  const Span& e_span) {
  for (const auto& block : map.blocks)
    if (block.block.contains(e_span)) return &block;
  return nullptr;
}

uint64_t mix_seed(uint64_t seed, uint64_t trial) {
  // splitmix64 step over seed ^ trial-offset; cheap per-trial stream split.
  uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::optional<Alignment> alignment_from_witness(const PartitionWitness& w,
                                                const SatReductionMap& /*map*/,
                                                const WsaInstance& inst) {
  PartitionWitness checked =
      make_partition_witness(w.bits, inst.e.size(), inst.f.size());
  std::vector<Span> phrases = decode_partition_spans(checked.bits, inst.e.size());
  const int nf = inst.f.size();
  std::vector<std::vector<int>> adj(phrases.size());
  for (std::size_t i = 0; i < phrases.size(); ++i)
    for (int word = 0; word < nf; ++word)
      if (inst.phi(phrases[i], Span(word, word + 1)) == Weight(1))
        adj[i].push_back(word);
  BipartiteMatcher matcher(adj, nf);
  std::vector<int> match = matcher.lex_min_perfect_matching();
  if (match.empty()) return std::nullopt;
  Alignment a;
  for (std::size_t i = 0; i < phrases.size(); ++i)
    a.links.emplace_back(phrases[i], Span(match[i], match[i] + 1));
  a.normalize();
  return a;
}

std::optional<Assignment> decode_assignment(const PartitionWitness& w,
                                            const SatReductionMap& map,
                                            const WsaInstance& inst) {
  std::optional<Alignment> a = alignment_from_witness(w, map, inst);
  if (!a) return std::nullopt;
  const int n = static_cast<int>(map.blocks.size());
  Assignment asg(n + 1, false);
  for (int v = 1; v <= n; ++v) {
    const auto& block = map.block_of(v);
    const int slack = map.slack_word[v - 1];  // 1-based f word
    const Span slack_f(slack - 1, slack);
    const Link* slack_link = nullptr;
    for (const Link& l : a->links)
      if (l.f == slack_f) slack_link = &l;
    if (!slack_link)
      throw std::logic_error("slack word s" + std::to_string(v) + " unmatched");
    const Span& span = slack_link->e;
    if (span.contains(block.negative))
      asg[v] = true;  // negatives unconsumed (covers the both/tie case)
    else if (span.contains(block.positive))
      asg[v] = false;  // positives unconsumed, clauses took negative copies
    else
      throw std::logic_error("slack span covers neither polarity of x" +
                             std::to_string(v));
  }
  if (!evaluate(map.formula, asg))
    throw std::runtime_error("decoded assignment does not satisfy the formula");
  return asg;
}

std::optional<bool> direct_block_readout(const PartitionWitness& w,
                                         const SatReductionMap& map, int v) {
  const auto& block = map.block_of(v);
  const int p = block.positive.length();
  const int q = block.negative.length();
  if (!block.dummy && (p < 2 || q < 2))
    throw std::invalid_argument(
        "block of x" + std::to_string(v) +
        " needs >= 2 copies per polarity (or a dummy pair) for readout");
  const int expected = expected_witness_length(map);
  if (static_cast<int>(w.bits.size()) != expected)
    throw std::invalid_argument("witness length " +
                                std::to_string(w.bits.size()) + ", expected " +
                                std::to_string(expected));
  BlockPattern pattern = ideal_block_pattern(map, v);
  std::string sub = w.bits.substr(pattern.span.begin, pattern.length());
  if (sub == pattern.true_pattern) return true;
  if (sub == pattern.false_pattern) return false;
  return std::nullopt;
}

VertexSet decode_cover(const Alignment& a, const VcReductionMap& map) {
  const int n = static_cast<int>(map.blocks.size());
  std::vector<char> outside(n + 1, 0);
  for (const Link& l : a.links) {
    if (l.f.length() != 1) continue;
    const int word = l.f.begin + 1;  // 1-based f word
    bool is_t = std::find(map.t_words.begin(), map.t_words.end(), word) !=
                map.t_words.end();
    if (!is_t) continue;
    bool placed = false;
    for (const auto& block : map.blocks) {
      if (block.block.contains(l.e)) {
        outside[block.vertex] = 1;
        placed = true;
        break;
      }
    }
    if (!placed)
      throw std::invalid_argument("t-word span " + span_to_string(l.e) +
                                  " lies in no vertex block");
  }
  VertexSet cover;
  for (int v = 1; v <= n; ++v)
    if (!outside[v]) cover.insert(v);
  if (!is_vertex_cover(map.graph, cover))
    throw std::invalid_argument("decoded set misses an edge (invalid alignment)");
  if (static_cast<int>(cover.size()) > map.k)
    throw std::invalid_argument("decoded cover has " +
                                std::to_string(cover.size()) +
                                " vertices, budget k=" + std::to_string(map.k));
  return cover;
}

Alignment alignment_from_assignment(const SatReductionMap& map,
                                    const Assignment& asg,
                                    const WsaInstance& inst) {
  const CnfFormula& formula = map.formula;
  if (!evaluate(formula, asg))
    throw std::invalid_argument("assignment does not satisfy the formula");
  const int n = static_cast<int>(map.blocks.size());

  // Each clause is satisfied by its first true literal; count per variable
  // how many clauses that consumes.
  std::vector<int> taken_pos(n + 1, 0), taken_neg(n + 1, 0);
  std::vector<int> chosen(formula.num_clauses(), 0);
  for (int j = 0; j < formula.num_clauses(); ++j) {
    for (int lit : formula.clauses[j]) {
      int v = std::abs(lit);
      if ((lit > 0) == asg[v]) {
        chosen[j] = lit;
        break;
      }
    }
    if (chosen[j] == 0) throw std::logic_error("satisfied clause chose nothing");
  }

  Alignment a;
  // True variables consume positive copies front-first, false ones negative
  // copies packed against the block end; either way the leftover block words
  // form one contiguous span for the slack word.
  std::vector<int> next_pos(n + 1, 0), next_neg(n + 1, 0);
  for (int j = 0; j < formula.num_clauses(); ++j) {
    int v = std::abs(chosen[j]);
    if (chosen[j] > 0) ++taken_pos[v];
    else ++taken_neg[v];
  }
  for (int v = 1; v <= n; ++v)
    next_neg[v] = map.blocks[v - 1].negative.length() - taken_neg[v];
  for (int j = 0; j < formula.num_clauses(); ++j) {
    const int v = std::abs(chosen[j]);
    const auto& block = map.blocks[v - 1];
    int pos;
    if (chosen[j] > 0)
      pos = block.positive.begin + next_pos[v]++;
    else
      pos = block.negative.begin + next_neg[v]++;
    const int cw = map.clause_word[j];
    a.links.emplace_back(Span(pos, pos + 1), Span(cw - 1, cw));
  }
  for (int v = 1; v <= n; ++v) {
    const auto& block = map.blocks[v - 1];
    Span slack_span = asg[v]
        ? Span(block.positive.begin + taken_pos[v], block.block.end)
        : Span(block.block.begin, block.negative.end - taken_neg[v]);
    const int sw = map.slack_word[v - 1];
    a.links.emplace_back(slack_span, Span(sw - 1, sw));
  }
  a.normalize();
  if (alignment_weight(inst, a) != Weight(1))
    throw std::logic_error("canonical alignment lost weight 1");
  return a;
}

PartitionWitness witness_from_assignment(const SatReductionMap& map,
                                         const Assignment& asg,
                                         const WsaInstance& inst) {
  return encode_partition(inst, alignment_from_assignment(map, asg, inst));
}

// ---- corruption ----------------------------------------------------------

namespace {

std::string corrupt_hamming(const std::string& w, const CorruptionBudget& b) {
  const int n = static_cast<int>(w.size());
  if (b.amount > n)
    throw std::invalid_argument("corruption budget " + std::to_string(b.amount) +
                                " exceeds witness length " + std::to_string(n));
  std::string out = w;
  auto flip = [&](int i) { out[i] = out[i] == '0' ? '1' : '0'; };
  if (b.strategy == CorruptionStrategy::kRandom) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::mt19937_64 rng(b.seed);
    for (int i = 0; i < b.amount; ++i) {
      std::uniform_int_distribution<int> pick(i, n - 1);
      std::swap(idx[i], idx[pick(rng)]);
      flip(idx[i]);
    }
  } else {
    // Left-to-right through the target span, spilling over to the rest of
    // the string; every copy position hit moves the block one step toward
    // the wrong pattern.
    int left = b.amount;
    for (int i = b.target.begin; i < b.target.end && left > 0; ++i, --left)
      flip(i);
    for (int i = 0; i < n && left > 0; ++i) {
      if (i >= b.target.begin && i < b.target.end) continue;
      flip(i);
      --left;
    }
  }
  return out;
}

std::string corrupt_edit(const std::string& w, const CorruptionBudget& b) {
  const int n = static_cast<int>(w.size());
  std::string out = w;
  if (b.strategy == CorruptionStrategy::kAdversarialBlock) {
    // Replacements at the damaging positions; same damage pattern as the
    // Hamming adversary, one operation each.
    CorruptionBudget h = b;
    h.mode = CorruptionMode::kHamming;
    return corrupt_hamming(w, h);
  }
  std::mt19937_64 rng(b.seed);
  int left = b.amount;
  while (left > 0 && n > 0) {
    bool do_pair = left >= 2 && std::uniform_int_distribution<int>(0, 1)(rng);
    if (do_pair) {
      // delete + insert, net length preserved, 2 operations
      int del = std::uniform_int_distribution<int>(0, n - 1)(rng);
      out.erase(del, 1);
      int ins = std::uniform_int_distribution<int>(0, n - 1)(rng);
      char bit = std::uniform_int_distribution<int>(0, 1)(rng) ? '1' : '0';
      out.insert(out.begin() + ins, bit);
      left -= 2;
    } else {
      int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
      out[i] = out[i] == '0' ? '1' : '0';
      left -= 1;
    }
  }
  return out;
}

}  // namespace

std::string corrupt(const std::string& w, const CorruptionBudget& budget) {
  if (budget.amount < 0)
    throw std::invalid_argument("negative corruption budget");
  if (budget.mode == CorruptionMode::kHamming)
    return corrupt_hamming(w, budget);
  return corrupt_edit(w, budget);
}

// ---- readout patterns ----------------------------------------------------

std::vector<int> BlockPattern::copy_positions() const {
  std::vector<int> out;
  for (int i = 0; i < length(); ++i)
    if (true_pattern[i] != false_pattern[i]) out.push_back(i);
  return out;
}

BlockPattern ideal_block_pattern(const SatReductionMap& map, int v) {
  const auto& block = map.block_of(v);
  const int p = block.positive.length();
  const int q = block.negative.length();
  BlockPattern pattern;
  pattern.span = Span(block.block.begin, block.block.end - 1);
  if (block.dummy) {
    pattern.true_pattern = std::string(p, '1') + std::string(q + 1, '0');
    pattern.false_pattern = std::string(p + 1, '0') + std::string(q, '1');
  } else {
    pattern.true_pattern = std::string(p, '1') + std::string(q - 1, '0');
    pattern.false_pattern = std::string(p - 1, '0') + std::string(q, '1');
  }
  return pattern;
}

bool majority_decode(const std::string& w_corrupt, const BlockPattern& pattern) {
  if (pattern.span.begin < 0 ||
      pattern.span.end > static_cast<int>(w_corrupt.size()))
    throw std::invalid_argument("pattern span outside the witness");
  std::string sub = w_corrupt.substr(pattern.span.begin, pattern.length());
  int d_true = hamming_distance(sub, pattern.true_pattern);
  int d_false = hamming_distance(sub, pattern.false_pattern);
  return d_true <= d_false;  // tie decodes true
}

// ---- experiments ---------------------------------------------------------

ExperimentReport run_recovery_experiment(const ExperimentConfig& config) {
  CnfFormula formula = config.formula;
  if (config.amplify_copies > 0)
    formula = amplify_sat_dummy_clauses(formula, config.amplify_var,
                                        config.amplify_copies);
  auto [inst, map] = sat_to_wsa(formula);
  map.amplified_var = config.amplify_var;
  map.amplified_copies = config.amplify_copies;

  SatOracle oracle = [](const CnfFormula& f) {
    return brute_force_satisfiable(f);
  };
  std::optional<Assignment> asg = sat_search_via_decision(formula, oracle);
  if (!asg)
    throw std::invalid_argument("experiment formula is unsatisfiable");

  Alignment truth_alignment = alignment_from_assignment(map, *asg, inst);
  PartitionWitness part = encode_partition(inst, truth_alignment);
  std::string base = part.bits;
  if (config.witness == WitnessKind::kDual) {
    DualWitness dual = encode_dual(inst, truth_alignment);
    base = dual.concat_bits();
  }

  ExperimentReport report;
  report.config = config;
  report.witness_length = static_cast<int>(base.size());
  const int N = report.witness_length;
  int budget;
  if (config.budget) {
    budget = *config.budget;
  } else {
    budget = static_cast<int>(std::floor(config.c * N - std::pow(N, config.epsilon)));
  }
  if (budget < 0)
    throw std::invalid_argument("corruption budget " + std::to_string(budget) +
                                " is negative (N=" + std::to_string(N) +
                                ", c=" + std::to_string(config.c) +
                                ", epsilon=" + std::to_string(config.epsilon) +
                                ")");

  BlockPattern pattern = ideal_block_pattern(map, config.amplify_var);
  const bool truth = (*asg)[config.amplify_var];
  int successes = 0;
  for (int t = 0; t < config.trials; ++t) {
    CorruptionBudget cb;
    cb.amount = budget;
    cb.mode = config.metric;
    cb.strategy = config.strategy;
    cb.target = pattern.span;
    cb.seed = mix_seed(config.seed, static_cast<uint64_t>(t));
    std::string corrupted = corrupt(base, cb);
    bool decoded = majority_decode(corrupted, pattern);
    TrialRow row;
    row.trial = t;
    row.budget = budget;
    row.decoded = decoded;
    row.truth = truth;
    row.success = decoded == truth;
    successes += row.success ? 1 : 0;
    report.rows.push_back(row);
  }
  report.success_rate =
      config.trials > 0 ? static_cast<double>(successes) / config.trials : 0.0;
  return report;
}

}  // namespace alignh
