#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "alignh/cnf.hpp"
#include "alignh/graph.hpp"
#include "alignh/reductions.hpp"
#include "alignh/solvers.hpp"
#include "alignh/suite.hpp"

using namespace alignh;

namespace {

CnfFormula formula(int n, std::vector<std::vector<int>> clauses) {
  CnfFormula f;
  f.num_vars = n;
  f.clauses = std::move(clauses);
  return f;
}

Graph graph(int n, std::vector<std::pair<int, int>> edges) {
  Graph g;
  g.num_vertices = n;
  g.edges = std::move(edges);
  g.normalize();
  return g;
}

const CnfFormula kF1 = formula(3, {{1, 2, 3}, {-1, -2, -3}});
const Graph kK3 = graph(3, {{1, 2}, {1, 3}, {2, 3}});

}  // namespace

TEST_CASE("sat reduction layout") {
  auto [inst, map] = sat_to_wsa(kF1);
  CHECK(inst.e.size() == 6);  // 3m for all-3-literal clauses
  CHECK(inst.f.size() == 5);  // m + n
  CHECK(inst.e.tokens[0] == "x1#1");
  CHECK(inst.e.tokens[1] == "~x1#1");
  CHECK(inst.f.tokens ==
        std::vector<std::string>{"c1", "c2", "s1", "s2", "s3"});
  REQUIRE(map.blocks.size() == 3);
  CHECK(map.blocks[0].block == Span(0, 2));
  CHECK(map.blocks[0].positive == Span(0, 1));
  CHECK(map.blocks[0].negative == Span(1, 2));
  CHECK_FALSE(map.blocks[0].dummy.has_value());
  CHECK(map.clause_word == std::vector<int>{1, 2});
  CHECK(map.slack_word == std::vector<int>{3, 4, 5});
  CHECK(map.formula == kF1);

  // clause word 1 pairs with the positive copies it mentions
  CHECK(inst.phi(Span(0, 1), Span(0, 1)) == Weight(1));
  CHECK(inst.phi(Span(2, 3), Span(0, 1)) == Weight(1));
  CHECK(inst.phi(Span(4, 5), Span(0, 1)) == Weight(1));
  CHECK(inst.phi(Span(1, 2), Span(0, 1)) == Weight(0));  // wrong polarity
  // slack word 1 accepts the prefix, the suffix and the whole block
  CHECK(inst.phi(Span(0, 2), Span(2, 3)) == Weight(1));
  CHECK(inst.phi(Span(0, 1), Span(2, 3)) == Weight(1));
  CHECK(inst.phi(Span(1, 2), Span(2, 3)) == Weight(1));
  CHECK(inst.phi(Span(0, 2), Span(3, 4)) == Weight(0));  // wrong block
  CHECK(inst.phi.is_zero_one());
}

TEST_CASE("clause words link to every copy of their literals") {
  CnfFormula f = formula(2, {{1, 2}, {1, -2}, {-1, 2}});
  auto [inst, map] = sat_to_wsa(f);
  // var 1: p=2 (clauses 1,2), q=1 (clause 3); block [0,3]
  CHECK(map.blocks[0].positive == Span(0, 2));
  CHECK(map.blocks[0].negative == Span(2, 3));
  for (int copy = 0; copy < 2; ++copy) {
    CHECK(inst.phi(Span(copy, copy + 1), Span(0, 1)) == Weight(1));  // c1
    CHECK(inst.phi(Span(copy, copy + 1), Span(1, 2)) == Weight(1));  // c2
  }
  CHECK(inst.phi(Span(2, 3), Span(2, 3)) == Weight(1));  // ~x1 in c3
  CHECK(inst.phi(Span(2, 3), Span(0, 1)) == Weight(0));
}

TEST_CASE("single-polarity variables are rejected or repaired") {
  CnfFormula f = formula(2, {{1, 2}, {1, -2}});  // x1 never negative
  CHECK_THROWS_WITH_AS(sat_to_wsa(f), doctest::Contains("x1"),
                       std::invalid_argument);
  auto [inst, map] = sat_to_wsa(f, /*repair_single_polarity=*/true);
  REQUIRE(map.blocks[0].dummy.has_value());
  CHECK_FALSE(map.blocks[1].dummy.has_value());
  CHECK(inst.e.size() == 4 + 2);  // two occurrences repaired with v ~v
  CHECK(decide_weight_one(inst) == brute_force_satisfiable(f));
}

TEST_CASE("uniqueness variant inserts dummy pairs") {
  auto [inst, map] = sat_to_pwsa_unique(kF1);
  CHECK(inst.e.size() == 12);
  CHECK(inst.f.size() == 5);
  CHECK(inst.e.tokens[0] == "x1#1");
  CHECK(inst.e.tokens[1] == "v1");
  CHECK(inst.e.tokens[2] == "~v1");
  CHECK(inst.e.tokens[3] == "~x1#1");
  REQUIRE(map.blocks[0].dummy.has_value());
  CHECK(*map.blocks[0].dummy == Span(1, 3));

  // slack spans must include the dummy pair
  CHECK(inst.phi(Span(0, 3), Span(2, 3)) == Weight(1));  // x1 + dummy
  CHECK(inst.phi(Span(1, 4), Span(2, 3)) == Weight(1));  // dummy + ~x1
  CHECK(inst.phi(Span(0, 4), Span(2, 3)) == Weight(1));  // whole block
  CHECK(inst.phi(Span(0, 1), Span(2, 3)) == Weight(0));  // excludes dummy
  CHECK(inst.phi(Span(3, 4), Span(2, 3)) == Weight(0));
  CHECK(inst.phi(Span(1, 3), Span(2, 3)) == Weight(0));  // bare pair
  // clause links unchanged
  CHECK(inst.phi(Span(0, 1), Span(0, 1)) == Weight(1));
  CHECK(inst.phi(Span(3, 4), Span(1, 2)) == Weight(1));
}

TEST_CASE("vc reduction layout") {
  auto [inst, map] = vc_to_wsa(kK3, 2);
  CHECK(inst.e.size() == 9);   // 2m + n
  CHECK(inst.f.size() == 7);   // m + 2n - k
  CHECK(inst.e.tokens[0] == "v1#1");
  CHECK(inst.f.tokens ==
        std::vector<std::string>{"c1", "c2", "c3", "s1", "s2", "s3", "t1"});
  REQUIRE(map.blocks.size() == 3);
  CHECK(map.blocks[0].block == Span(0, 3));
  CHECK(map.blocks[0].copies == 3);
  CHECK(map.t_words == std::vector<int>{7});

  // edge words accept single copies of both endpoints
  CHECK(inst.phi(Span(0, 1), Span(0, 1)) == Weight(1));  // v1 copy, edge 1-2
  CHECK(inst.phi(Span(3, 4), Span(0, 1)) == Weight(1));  // v2 copy
  CHECK(inst.phi(Span(6, 7), Span(0, 1)) == Weight(0));  // v3 not on edge 1-2
  // slack accepts every suffix of the block
  CHECK(inst.phi(Span(0, 3), Span(3, 4)) == Weight(1));
  CHECK(inst.phi(Span(1, 3), Span(3, 4)) == Weight(1));
  CHECK(inst.phi(Span(2, 3), Span(3, 4)) == Weight(1));
  CHECK(inst.phi(Span(0, 2), Span(3, 4)) == Weight(0));  // not a suffix
  // t word takes the first deg copies of any block
  CHECK(inst.phi(Span(0, 2), Span(6, 7)) == Weight(1));
  CHECK(inst.phi(Span(3, 5), Span(6, 7)) == Weight(1));
  CHECK(inst.phi(Span(0, 3), Span(6, 7)) == Weight(0));

  CHECK(decide_weight_one(inst));
  auto [inst1, map1] = vc_to_wsa(kK3, 1);
  CHECK_FALSE(decide_weight_one(inst1));
}

TEST_CASE("vc reduction preconditions") {
  CHECK_THROWS_AS(vc_to_wsa(kK3, 0), std::invalid_argument);
  CHECK_THROWS_AS(vc_to_wsa(kK3, 4), std::invalid_argument);
  Graph isolated = graph(3, {{1, 2}});
  CHECK_THROWS_WITH_AS(vc_to_wsa(isolated, 1), doctest::Contains("isolated"),
                       std::invalid_argument);
}

TEST_CASE("dummy clause amplification") {
  CnfFormula amp = amplify_sat_dummy_clauses(kF1, 1, 4);
  CHECK(amp.num_clauses() == 6);
  CHECK(amp.num_vars == 3);
  for (int j = 2; j < 6; ++j)
    CHECK(amp.clauses[j] == std::vector<int>{1, -1});
  CHECK(brute_force_satisfiable(amp) == brute_force_satisfiable(kF1));
  auto [inst, map] = sat_to_wsa(amp);
  CHECK(map.blocks[0].block.length() == 10);  // (1+4) + (1+4)
  CHECK(map.blocks[1].block.length() == 2);
  CHECK(inst.f.size() == 6 + 3);

  CnfFormula unsat = formula(1, {{1}, {-1}});
  CnfFormula uamp = amplify_sat_dummy_clauses(unsat, 1, 3);
  CHECK_FALSE(brute_force_satisfiable(uamp));
}

TEST_CASE("equivalence variable amplification") {
  auto [amp, layout] = amplify_sat_equiv_vars(kF1, 1, 3);
  CHECK(amp.num_vars == 6);
  CHECK(amp.num_clauses() == 2 + 6);
  CHECK(layout.source_var == 1);
  CHECK(layout.copy_vars == std::vector<int>{4, 5, 6});
  CHECK(layout.layout == std::vector<int>{4, 5, 6, 1, 2, 3});
  // every satisfying assignment of the output has each copy equal to z
  for (unsigned m = 0; m < 64; ++m) {
    Assignment a(7);
    for (int v = 1; v <= 6; ++v) a[v] = (m >> (v - 1)) & 1;
    if (!evaluate(amp, a)) continue;
    for (int y : layout.copy_vars) CHECK(a[y] == a[1]);
  }
  auto [uamp, ulayout] = amplify_sat_equiv_vars(formula(1, {{1}, {-1}}), 1, 2);
  CHECK_FALSE(brute_force_satisfiable(uamp));
}

TEST_CASE("path amplification shifts the minimum cover by its half-length") {
  auto [g, gadget] = amplify_vc_path(kK3, 1, 2);
  CHECK(g.num_vertices == 3 + 4);  // 2L new vertices including the copy
  CHECK(gadget.base_vertex == 1);
  CHECK(gadget.u_ids.size() == 2);
  CHECK(gadget.w_ids.size() == 2);
  CHECK(std::count(gadget.u_ids.begin(), gadget.u_ids.end(),
                   gadget.copy_vertex) == 1);
  auto mc = brute_force_min_cover(g);
  REQUIRE(mc.has_value());
  CHECK(mc->size() == 4);  // 2 (triangle) + L

  // a cover with v extends by the u side, one without v by the w side
  VertexSet with_v = {1, 2};
  for (int u : gadget.u_ids) with_v.insert(u);
  CHECK(is_vertex_cover(g, with_v));
  CHECK(with_v.size() == 4);
  VertexSet without_v = {2, 3};
  for (int w : gadget.w_ids) without_v.insert(w);
  CHECK(is_vertex_cover(g, without_v));
  CHECK(without_v.size() == 4);

  // layout: u ids, originals with the copy, w ids
  REQUIRE(gadget.layout.size() == static_cast<std::size_t>(g.num_vertices));
  for (std::size_t i = 0; i < gadget.u_ids.size(); ++i)
    CHECK(gadget.layout[i] == gadget.u_ids[i]);
}

TEST_CASE("path amplification shift holds across small graphs") {
  std::mt19937_64 rng(7);
  auto check_graph = [](const Graph& g) {
    auto base = brute_force_min_cover(g);
    REQUIRE(base.has_value());
    for (int L = 1; L <= 3; ++L) {
      auto [amp, gadget] = amplify_vc_path(g, 1, L);
      auto shifted = brute_force_min_cover(amp);
      REQUIRE(shifted.has_value());
      CHECK(shifted->size() == base->size() + L);
    }
  };
  for (int nv = 2; nv <= 4; ++nv)
    for_each_min_degree_one_graph(nv, [&](const Graph& g) {
      check_graph(g);
      return true;
    });
  for (int nv = 5; nv <= 6; ++nv)
    for (int trial = 0; trial < 10; ++trial)
      check_graph(random_min_degree_one_graph(nv, rng));
}

TEST_CASE("search via decision drivers") {
  auto oracle = [](const CnfFormula& f) { return brute_force_satisfiable(f); };
  auto asg = sat_search_via_decision(kF1, oracle);
  REQUIRE(asg.has_value());
  CHECK(evaluate(kF1, *asg));
  // ascending order, prefer true: x1=T leaves (~x2 | ~x3), x2=T leaves (~x3)
  CHECK((*asg)[1]);
  CHECK((*asg)[2]);
  CHECK_FALSE((*asg)[3]);

  CHECK_FALSE(sat_search_via_decision(formula(1, {{1}, {-1}}), oracle)
                  .has_value());
  auto single = sat_search_via_decision(formula(1, {{1}}), oracle);
  REQUIRE(single.has_value());
  CHECK((*single)[1]);

  auto lying = [](const CnfFormula&) { return true; };
  CHECK_THROWS_AS(sat_search_via_decision(formula(1, {{1}, {-1}}), lying),
                  std::runtime_error);
}

TEST_CASE("cover search via decision") {
  auto oracle = [](const Graph& g, int k) { return brute_force_has_cover(g, k); };
  auto cover = vc_search_via_decision(kK3, 2, oracle);
  REQUIRE(cover.has_value());
  CHECK(*cover == VertexSet{1, 2});
  CHECK_FALSE(vc_search_via_decision(kK3, 1, oracle).has_value());
  Graph edgeless = graph(2, {});
  auto empty = vc_search_via_decision(edgeless, 0, oracle);
  REQUIRE(empty.has_value());
  CHECK(empty->empty());
}

TEST_CASE("cnf utilities") {
  CHECK(evaluate(kF1, {false, true, true, false}));
  CHECK_FALSE(evaluate(kF1, {false, true, true, true}));
  auto profile = polarity_profile(kF1);
  CHECK(profile.positive == std::vector<int>{0, 1, 1, 1});
  CHECK(profile.negative == std::vector<int>{0, 1, 1, 1});
  CHECK_FALSE(find_single_polarity_var(kF1).has_value());
  CHECK(find_single_polarity_var(formula(2, {{1, 2}, {1, -2}})) == 1);

  auto first = brute_force_satisfying(kF1);
  REQUIRE(first.has_value());
  // false-first lexicographic order finds (F,F,T)
  CHECK_FALSE((*first)[1]);
  CHECK_FALSE((*first)[2]);
  CHECK((*first)[3]);

  CnfFormula simplified = simplify(kF1, 1, true);
  CHECK(simplified.clauses == std::vector<std::vector<int>>{{-2, -3}});
  CnfFormula emptied = simplify(formula(1, {{1}}), 1, false);
  REQUIRE(emptied.num_clauses() == 1);
  CHECK(emptied.clauses[0].empty());
  CHECK_FALSE(brute_force_satisfiable(emptied));
}

TEST_CASE("cover witness bits") {
  CHECK(cover_witness_bits(VertexSet{1, 3}, 4) == "1010");
  CHECK(cover_witness_bits(VertexSet{}, 3) == "000");
  CHECK(cover_witness_bits(VertexSet{2}, std::vector<int>{2, 1}) == "10");
}
