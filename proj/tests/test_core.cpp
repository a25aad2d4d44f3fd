#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <set>
#include <stdexcept>

#include "alignh/core.hpp"

using namespace alignh;

namespace {

Sentence words(int n, const std::string& stem = "w") {
  std::vector<std::string> t;
  for (int i = 1; i <= n; ++i) t.push_back(stem + std::to_string(i));
  return Sentence(std::move(t));
}

}  // namespace

TEST_CASE("span geometry") {
  Span s(1, 4);
  CHECK(s.length() == 3);
  CHECK(s.contains(Span(1, 4)));
  CHECK(s.contains(Span(2, 3)));
  CHECK_FALSE(s.contains(Span(0, 2)));
  CHECK(s.overlaps(Span(3, 5)));
  CHECK_FALSE(s.overlaps(Span(4, 6)));
  CHECK(span_to_string(s) == "[1,4]");
  CHECK(link_to_string(Link(Span(0, 1), Span(2, 3))) == "[0,1]x[2,3]");
}

TEST_CASE("boundary bits round-trip") {
  CHECK(spans_from_bits("11110") ==
        std::vector<Span>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 6}});
  CHECK(spans_from_bits("00000") == std::vector<Span>{{0, 6}});
  CHECK(spans_from_bits("01111") ==
        std::vector<Span>{{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  CHECK(boundary_bits({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 6}}, 6) == "11110");
  for (int n = 1; n <= 8; ++n) {
    for (const auto& spans : enumerate_partitions(n)) {
      std::string bits = boundary_bits(spans, n);
      CHECK(spans_from_bits(bits) == spans);
    }
  }
}

TEST_CASE("partition enumeration counts and order") {
  CHECK(enumerate_partitions(1).size() == 1);
  CHECK(enumerate_partitions(5).size() == 16);
  CHECK(enumerate_partitions(5, 3).size() == 6);  // C(4,2)
  auto all = enumerate_partitions(6);
  std::string prev;
  bool first = true;
  for (const auto& spans : all) {
    std::string bits = boundary_bits(spans, 6);
    if (!first) CHECK(prev < bits);
    prev = bits;
    first = false;
  }
  // early stop after 3 partitions
  int seen = 0;
  for_each_partition(6, std::nullopt, kDefaultPartitionGuard,
                     [&](const std::vector<Span>&) { return ++seen < 3; });
  CHECK(seen == 3);
}

TEST_CASE("partition guard") {
  CHECK_THROWS_WITH_AS(enumerate_partitions(21),
                       doctest::Contains("size-guard"), std::invalid_argument);
  CHECK_NOTHROW(enumerate_partitions(6, std::nullopt, 6));
  CHECK_THROWS_AS(enumerate_partitions(7, std::nullopt, 6),
                  std::invalid_argument);
}

TEST_CASE("guard env var") {
  unsetenv(kGuardEnvVar);
  CHECK(partition_guard_from_env() == kDefaultPartitionGuard);
  setenv(kGuardEnvVar, "5", 1);
  CHECK(partition_guard_from_env() == 5);
  setenv(kGuardEnvVar, "junk", 1);
  CHECK_THROWS_AS(partition_guard_from_env(), std::invalid_argument);
  setenv(kGuardEnvVar, "0", 1);
  CHECK_THROWS_AS(partition_guard_from_env(), std::invalid_argument);
  unsetenv(kGuardEnvVar);
}

TEST_CASE("weight parsing") {
  CHECK(parse_weight("3/4") == Weight(3, 4));
  CHECK(parse_weight("2") == Weight(2));
  CHECK(parse_weight("0") == Weight(0));
  CHECK(parse_weight("2/4") == Weight(1, 2));  // normalized
  CHECK(format_weight(Weight(1, 2)) == "1/2");
  CHECK(format_weight(Weight(5)) == "5");
  CHECK(format_weight(parse_weight("6/4")) == "3/2");
  CHECK_THROWS_AS(parse_weight("-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight(""), std::invalid_argument);
}

TEST_CASE("weight function zero-one tracking") {
  WeightFn phi;
  CHECK(phi.is_zero_one());
  CHECK(phi(Span(0, 1), Span(0, 1)) == Weight(0));  // absent defaults to 0
  phi.set(Link(Span(0, 1), Span(0, 1)), Weight(1));
  phi.set(Link(Span(1, 2), Span(0, 1)), Weight(0));
  CHECK(phi.is_zero_one());
  phi.set(Link(Span(0, 2), Span(0, 1)), Weight(1, 2));
  CHECK_FALSE(phi.is_zero_one());
  phi.set(Link(Span(0, 2), Span(0, 1)), Weight(1));  // overwrite back
  CHECK(phi.is_zero_one());
  CHECK(phi.size() == 3);
  CHECK_THROWS_AS(phi.set(Link(Span(1, 1), Span(0, 1)), Weight(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(phi.set(Link(Span(0, 1), Span(0, 1)), Weight(-1)),
                  std::invalid_argument);
}

TEST_CASE("alignment validity") {
  WsaInstance inst;
  inst.e = words(3, "e");
  inst.f = words(2, "f");
  inst.phi.set(Link(Span(0, 2), Span(0, 1)), Weight(1, 2));
  inst.phi.set(Link(Span(2, 3), Span(1, 2)), Weight(3));

  Alignment good;
  good.links = {Link(Span(0, 2), Span(0, 1)), Link(Span(2, 3), Span(1, 2))};
  CHECK(is_valid_alignment(inst, good));
  CHECK(alignment_weight(inst, good) == Weight(3, 2));

  Alignment gap;  // e-word 3 uncovered
  gap.links = {Link(Span(0, 2), Span(0, 2))};
  auto rep = check_alignment(inst, gap);
  CHECK_FALSE(rep.valid);
  CHECK(rep.message.find("uncovered") != std::string::npos);

  Alignment twice;
  twice.links = {Link(Span(0, 2), Span(0, 1)), Link(Span(1, 3), Span(1, 2))};
  CHECK_FALSE(is_valid_alignment(inst, twice));
  CHECK_THROWS_AS(alignment_weight(inst, twice), std::invalid_argument);

  Alignment unlinked;  // links with phi = 0 are valid, weight 0
  unlinked.links = {Link(Span(0, 1), Span(0, 1)), Link(Span(1, 3), Span(1, 2))};
  CHECK(is_valid_alignment(inst, unlinked));
  CHECK(alignment_weight(inst, unlinked) == Weight(0));
}

TEST_CASE("empty alignment on empty instance") {
  WsaInstance inst;
  Alignment a;
  CHECK(is_valid_alignment(inst, a));
  CHECK(alignment_weight(inst, a) == Weight(1));
}

TEST_CASE("alignment normalize sorts links") {
  Alignment a;
  a.links = {Link(Span(2, 3), Span(0, 1)), Link(Span(0, 2), Span(1, 2))};
  a.normalize();
  CHECK(a.links[0].e == Span(0, 2));
  CHECK(a.links[1].e == Span(2, 3));
}

TEST_CASE("padding to bijective shape") {
  Sentence e = words(3, "e");
  Sentence f = words(1, "f");
  WeightFn phi;
  phi.set(Link(Span(0, 1), Span(0, 1)), Weight(1));
  WsaInstance padded = pad_to_bijective(e, f, phi);
  CHECK(padded.f.size() == 1 + 2);  // ceil(3/2) nulls
  CHECK(padded.f.tokens[1] == "null#1");
  // original links survive, all-null f-spans pair with every e-span
  CHECK(padded.phi(Span(0, 1), Span(0, 1)) == Weight(1));
  CHECK(padded.phi(Span(1, 3), Span(1, 3)) == Weight(1));
  CHECK(padded.phi(Span(0, 2), Span(2, 3)) == Weight(1));
  // spans mixing null and real words stay at 0
  CHECK(padded.phi(Span(0, 2), Span(0, 2)) == Weight(0));
  CHECK_THROWS_AS(pad_to_bijective(words(2), words(2), WeightFn()),
                  std::invalid_argument);
}
