#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "alignh/cnf.hpp"
#include "alignh/core.hpp"
#include "alignh/reductions.hpp"
#include "alignh/solvers.hpp"
#include "oracles.hpp"

using namespace alignh;

namespace {

Sentence words(int n, const std::string& stem = "w") {
  std::vector<std::string> t;
  for (int i = 1; i <= n; ++i) t.push_back(stem + std::to_string(i));
  return Sentence(std::move(t));
}

// Random sparse instance; zero_one restricts the weight pool to {0,1}.
WsaInstance random_instance(std::mt19937_64& rng, int max_e, int max_f,
                            bool zero_one) {
  std::uniform_int_distribution<int> esz(1, max_e), fsz(1, max_f);
  WsaInstance inst;
  inst.e = words(esz(rng), "e");
  inst.f = words(fsz(rng), "f");
  static const std::vector<Weight> pool = {
      Weight(0), Weight(1), Weight(1), Weight(1, 2),
      Weight(2), Weight(3, 2), Weight(1, 3)};
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> pick01(0, 1),
      pickw(0, static_cast<int>(pool.size()) - 1);
  for (int eb = 0; eb < inst.e.size(); ++eb)
    for (int ee = eb + 1; ee <= inst.e.size(); ++ee)
      for (int fb = 0; fb < inst.f.size(); ++fb)
        for (int fe = fb + 1; fe <= inst.f.size(); ++fe) {
          if (coin(rng) > 0.3) continue;
          Weight w = zero_one ? Weight(pick01(rng)) : pool[pickw(rng)];
          inst.phi.set(Link(Span(eb, ee), Span(fb, fe)), w);
        }
  return inst;
}

CnfFormula formula(int n, std::vector<std::vector<int>> clauses) {
  CnfFormula f;
  f.num_vars = n;
  f.clauses = std::move(clauses);
  return f;
}

const CnfFormula kF1 = formula(3, {{1, 2, 3}, {-1, -2, -3}});

}  // namespace

TEST_CASE("pwsa solver on the two-clause three-variable instance") {
  auto [inst, map] = sat_to_wsa(kF1);
  SolveResult res = solve_pwsa(inst);
  REQUIRE(res.found);
  CHECK(res.best_weight == Weight(1));
  REQUIRE(res.partition_witness.has_value());
  CHECK(res.partition_witness->bits == "01111");
  REQUIRE(res.best_alignment.has_value());
  CHECK(alignment_weight(inst, *res.best_alignment) == Weight(1));

  // no lexicographically smaller 4-boundary witness admits weight 1
  for (const auto& spans : enumerate_partitions(6, 5)) {
    std::string bits = boundary_bits(spans, 6);
    if (bits >= "01111") continue;
    bool feasible = false;
    std::vector<int> perm{0, 1, 2, 3, 4};
    do {
      Weight w(1);
      for (int i = 0; i < 5; ++i)
        w *= inst.phi(spans[i], Span(perm[i], perm[i] + 1));
      if (w == Weight(1)) feasible = true;
    } while (std::next_permutation(perm.begin(), perm.end()) && !feasible);
    CHECK_FALSE(feasible);
  }
}

TEST_CASE("exact solver agrees with the pwsa result when satisfiable") {
  auto [inst, map] = sat_to_wsa(kF1);
  SolveResult exact = solve_exact(inst);
  REQUIRE(exact.found);
  CHECK(exact.best_weight == Weight(1));
  REQUIRE(exact.partition_witness.has_value());
  CHECK(exact.partition_witness->bits == "01111");
  REQUIRE(exact.dual_witness.has_value());
  CHECK(exact.dual_witness->f_bits == "1111");
  CHECK(decide_weight_one(inst));
}

TEST_CASE("unsatisfiable reduction decides false") {
  CnfFormula f =
      formula(2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}});  // no model
  REQUIRE_FALSE(brute_force_satisfiable(f));
  auto [inst, map] = sat_to_wsa(f);
  CHECK_FALSE(decide_weight_one(inst));
  SolveResult exact = solve_exact(inst);
  CHECK(exact.found);
  CHECK(exact.best_weight == Weight(0));
  SolveResult pw = solve_pwsa(inst);
  CHECK_FALSE(pw.found);
  CHECK_FALSE(pw.partition_witness.has_value());
}

TEST_CASE("regression: clauses may take any copy of a literal") {
  // Satisfiable only by the all-true assignment; clause 2 needs the second
  // copy of y and clause 3 the second copy of x, so a solver restricted to
  // one designated copy per clause would wrongly decide false.
  CnfFormula f = formula(
      3, {{1, 2}, {2, -3}, {1, -3}, {-1, 3}, {-2, 3}});
  auto model = brute_force_satisfying(f);
  REQUIRE(model.has_value());
  CHECK((*model)[1]);
  CHECK((*model)[2]);
  CHECK((*model)[3]);
  auto [inst, map] = sat_to_wsa(f);
  CHECK(decide_weight_one(inst));
  auto [uinst, umap] = sat_to_pwsa_unique(f);
  CHECK(decide_weight_one(uinst));
  SolveResult res = solve_pwsa(uinst);
  REQUIRE(res.found);
  CHECK(res.best_weight == Weight(1));
}

TEST_CASE("decide matches exhaustive enumeration on random 0/1 instances") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    WsaInstance inst = random_instance(rng, 5, 5, true);
    auto oracle = oracles::brute_force_best(inst);
    CHECK(decide_weight_one(inst) == (oracle.found && oracle.best >= Weight(1)));
    SolveResult exact = solve_exact(inst);
    CHECK(exact.found == oracle.found);
    CHECK(exact.best_weight == oracle.best);
    if (exact.best_alignment)
      CHECK(alignment_weight(inst, *exact.best_alignment) == exact.best_weight);
  }
}

TEST_CASE("exact solver matches enumeration on general weights") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 120; ++trial) {
    WsaInstance inst = random_instance(rng, 5, 4, false);
    auto oracle = oracles::brute_force_best(inst);
    SolveResult exact = solve_exact(inst);
    CHECK(exact.found == oracle.found);
    CHECK(exact.best_weight == oracle.best);
    CHECK(decide_weight_one(inst) == (oracle.best >= Weight(1)));
  }
}

TEST_CASE("pwsa solver matches enumeration on singleton-link instances") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<int> esz(1, 7);
    WsaInstance inst;
    inst.e = words(esz(rng), "e");
    std::uniform_int_distribution<int> fsz(1, inst.e.size());
    inst.f = words(fsz(rng), "f");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int eb = 0; eb < inst.e.size(); ++eb)
      for (int ee = eb + 1; ee <= inst.e.size(); ++ee)
        for (int k = 0; k < inst.f.size(); ++k)
          if (coin(rng) < 0.35)
            inst.phi.set(Link(Span(eb, ee), Span(k, k + 1)), Weight(1));
    SolveResult res = solve_pwsa(inst);
    // oracle: first feasible partition in lexicographic boundary order
    std::optional<std::string> expect;
    for (const auto& spans : enumerate_partitions(inst.e.size(), inst.f.size())) {
      std::vector<int> perm(inst.f.size());
      std::iota(perm.begin(), perm.end(), 0);
      bool ok = false;
      do {
        Weight w(1);
        for (int i = 0; i < inst.f.size(); ++i)
          w *= inst.phi(spans[i], Span(perm[i], perm[i] + 1));
        if (w == Weight(1)) ok = true;
      } while (!ok && std::next_permutation(perm.begin(), perm.end()));
      if (ok) {
        expect = boundary_bits(spans, inst.e.size());
        break;
      }
    }
    CHECK(res.found == expect.has_value());
    if (expect) {
      REQUIRE(res.partition_witness.has_value());
      CHECK(res.partition_witness->bits == *expect);
      CHECK(alignment_weight(inst, *res.best_alignment) == Weight(1));
    }
  }
}

TEST_CASE("monotone dp matches order-preserving enumeration") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    WsaInstance inst = random_instance(rng, 6, 6, false);
    auto oracle = oracles::brute_force_monotone(inst);
    SolveResult dp = solve_monotone_dp(inst);
    CHECK(dp.found == oracle.found);
    if (oracle.found) {
      CHECK(dp.best_weight == oracle.best);
      REQUIRE(dp.best_alignment.has_value());
      CHECK(alignment_weight(inst, *dp.best_alignment) == oracle.best);
    }
  }
}

TEST_CASE("monotone dp misses crossing-only alignments by design") {
  WsaInstance inst;
  inst.e = words(2, "e");
  inst.f = words(2, "f");
  inst.phi.set(Link(Span(0, 1), Span(1, 2)), Weight(1));
  inst.phi.set(Link(Span(1, 2), Span(0, 1)), Weight(1));
  CHECK(solve_exact(inst).best_weight == Weight(1));
  SolveResult dp = solve_monotone_dp(inst);
  CHECK_FALSE(dp.found);
  CHECK(dp.best_weight == Weight(0));
}

TEST_CASE("solver preconditions and guards") {
  WsaInstance lop;
  lop.e = words(3, "e");
  CHECK_THROWS_WITH_AS(solve_exact(lop), doctest::Contains("empty"),
                       std::invalid_argument);
  CHECK_THROWS_AS(decide_weight_one(lop), std::invalid_argument);
  CHECK_THROWS_AS(solve_monotone_dp(lop), std::invalid_argument);

  WsaInstance both;
  SolveResult empty = solve_exact(both);
  CHECK(empty.found);
  CHECK(empty.best_weight == Weight(1));
  CHECK(decide_weight_one(both));

  WsaInstance big;
  big.e = words(21, "e");
  big.f = words(21, "f");
  big.phi.set(Link(Span(0, 1), Span(0, 1)), Weight(1, 2));  // not 0/1
  CHECK_THROWS_WITH_AS(solve_exact(big), doctest::Contains("size-guard"),
                       std::invalid_argument);
  CHECK_THROWS_AS(decide_weight_one(big), std::invalid_argument);

  WsaInstance small;  // explicit guard below |e| wins over the default
  small.e = words(5, "e");
  small.f = words(2, "f");
  CHECK_THROWS_AS(solve_exact(small, 4), std::invalid_argument);

  WsaInstance notz;
  notz.e = words(3, "e");
  notz.f = words(2, "f");
  notz.phi.set(Link(Span(0, 1), Span(0, 1)), Weight(1, 2));
  CHECK_THROWS_AS(solve_pwsa(notz), std::invalid_argument);

  WsaInstance wide;
  wide.e = words(2, "e");
  wide.f = words(3, "f");
  CHECK_THROWS_AS(solve_pwsa(wide), std::invalid_argument);
}

TEST_CASE("zero-one decide handles wide instances without enumeration") {
  // |e| = 24 exceeds the partition guard; the mask-based decider works.
  WsaInstance inst;
  inst.e = words(24, "e");
  inst.f = words(12, "f");
  for (int k = 0; k < 12; ++k)
    inst.phi.set(Link(Span(2 * k, 2 * k + 2), Span(k, k + 1)), Weight(1));
  CHECK(decide_weight_one(inst));
  inst.phi.set(Link(Span(22, 24), Span(11, 12)), Weight(0));
  CHECK_FALSE(decide_weight_one(inst));
}
