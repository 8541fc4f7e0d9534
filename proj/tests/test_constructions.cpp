#include <doctest.h>

#include <numeric>
#include <set>

#include "ramsey/constructions.hpp"
#include "ramsey/counting.hpp"

using namespace ramsey;
using constructions::build_prefix;
using constructions::ground_sequence;

TEST_SUITE("constructions") {

TEST_CASE("ground partition takes odd, doubly even, quadruply even entries") {
  ground_sequence g(10);
  std::iota(g.begin(), g.end(), 10);
  auto parts = constructions::partition_ground(g, 3);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == ground_sequence({11, 13, 15, 17, 19}));
  CHECK(parts[1] == ground_sequence({12, 16}));
  CHECK(parts[2] == ground_sequence({14}));

  CHECK_THROWS_AS(constructions::partition_ground({0, 1, 2, 3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(constructions::partition_ground({3, 3, 4}, 1), std::invalid_argument);
  CHECK_THROWS_AS(constructions::partition_ground(g, 63), std::invalid_argument);
}

TEST_CASE("the first copy of w is the ground itself") {
  auto h = build_prefix(parse_ordinal("w"), 5);
  REQUIRE(h.elements.size() == 5);
  for (std::uint64_t t = 0; t < 5; ++t) {
    CHECK(h.elements[t].origin == 1);
    CHECK(h.elements[t].lead == 0);
    CHECK(h.elements[t].tail == std::vector<std::uint64_t>{t});
  }
}

TEST_CASE("copies of w*k live on disjoint slices told apart by lead") {
  auto h = build_prefix(parse_ordinal("w*3"), 9);
  REQUIRE(h.elements.size() == 9);
  std::vector<ordinal_element> expected = {
      {1, 0, {2}}, {1, 0, {6}}, {1, 0, {10}},
      {1, 1, {4}}, {1, 1, {12}}, {1, 1, {20}},
      {1, 2, {8}}, {1, 2, {24}}, {1, 2, {40}},
  };
  CHECK(h.elements == expected);

  auto singles = constructions::verify_prefix(h, 1);
  CHECK(singles.total_edges == 9);
  CHECK(singles.all_satisfied);
  CHECK(singles.distinct_rules == 3);
  CHECK(singles.rule_bound == 3);

  auto pairs = constructions::verify_prefix(h, 2);
  CHECK(pairs.total_edges == 36);
  CHECK(pairs.all_satisfied);
  CHECK(pairs.distinct_rules == 9);
  CHECK(pairs.rule_bound == 9);
}

TEST_CASE("copies of w^2 open with a low coefficient from the lead slice") {
  auto h = build_prefix(parse_ordinal("w^2"), 12);
  REQUIRE(h.elements.size() == 12);
  std::vector<ordinal_element> expected = {
      {2, 0, {1, 2}},  {2, 0, {1, 6}},  {2, 0, {1, 10}},
      {2, 0, {3, 4}},  {2, 0, {3, 12}}, {2, 0, {3, 20}},
      {2, 0, {5, 8}},  {2, 0, {5, 24}}, {2, 0, {5, 40}},
      {2, 0, {7, 16}}, {2, 0, {7, 48}}, {2, 0, {7, 80}},
  };
  CHECK(h.elements == expected);

  auto pairs = constructions::verify_prefix(h, 2);
  CHECK(pairs.total_edges == 66);
  CHECK(pairs.all_satisfied);
  CHECK(pairs.distinct_rules == 4);
  CHECK(pairs.rule_bound == 4);
}

TEST_CASE("nested copies keep every pair on a rule") {
  auto h = build_prefix(parse_ordinal("w^3"), 4);
  std::vector<ordinal_element> expected = {
      {3, 0, {1, 6, 10}}, {3, 0, {1, 14, 18}}, {3, 0, {3, 12, 20}}, {3, 0, {3, 28, 36}},
  };
  CHECK(h.elements == expected);
  auto pairs = constructions::verify_prefix(h, 2);
  CHECK(pairs.total_edges == 6);
  CHECK(pairs.all_satisfied);
  CHECK(pairs.within_bound);
}

TEST_CASE("summands build on disjoint slices of the ground") {
  auto h = build_prefix(parse_ordinal("w^2+w"), 8);
  REQUIRE(h.elements.size() == 8);
  std::set<std::uint64_t> high, low;
  for (const auto& el : h.elements)
    for (std::uint64_t c : el.tail) (el.origin == 2 ? high : low).insert(c);
  for (std::uint64_t c : low) CHECK(high.count(c) == 0);

  auto pairs = constructions::verify_prefix(h, 2);
  CHECK(pairs.total_edges == 28);
  CHECK(pairs.all_satisfied);
  CHECK(pairs.within_bound);

  auto mixed = build_prefix(parse_ordinal("w*2+1"), 7);
  auto singles = constructions::verify_prefix(mixed, 1);
  CHECK(singles.distinct_rules == 3);
  CHECK(singles.rule_bound == 3);
  auto mixed_pairs = constructions::verify_prefix(mixed, 2);
  CHECK(mixed_pairs.all_satisfied);
  CHECK(mixed_pairs.distinct_rules == 6);
  CHECK(mixed_pairs.rule_bound == 6);
}

TEST_CASE("the empty subset is classified once") {
  auto h = build_prefix(parse_ordinal("w^2"), 3);
  auto report = constructions::verify_prefix(h, 0);
  CHECK(report.total_edges == 1);
  CHECK(report.satisfied_edges == 1);
  CHECK(report.distinct_rules == 1);
  CHECK(report.rule_bound == 1);
}

TEST_CASE("an explicit ground substitutes values for indices") {
  auto h = build_prefix(parse_ordinal("w"), {5, 7, 9, 11, 13}, 5);
  REQUIRE(h.elements.size() == 5);
  for (std::uint64_t t = 0; t < 5; ++t)
    CHECK(h.elements[t].tail == std::vector<std::uint64_t>{5 + 2 * t});

  ground_sequence big(41);
  std::iota(big.begin(), big.end(), 0);
  for (auto& v : big) v = 2 * v + 3;
  auto copies = build_prefix(parse_ordinal("w*3"), big, 9);
  std::set<std::uint64_t> pool(big.begin(), big.end());
  for (const auto& el : copies.elements)
    for (std::uint64_t c : el.tail) CHECK(pool.count(c) == 1);
  auto pairs = constructions::verify_prefix(copies, 2);
  CHECK(pairs.all_satisfied);
  CHECK(pairs.distinct_rules == 9);

  ground_sequence identity(81);
  std::iota(identity.begin(), identity.end(), 0);
  auto same = build_prefix(parse_ordinal("w^2"), identity, 12);
  CHECK(same.elements == build_prefix(parse_ordinal("w^2"), 12).elements);

  CHECK_THROWS_AS(build_prefix(parse_ordinal("w"), {4, 4, 5}, 3), std::invalid_argument);
}

TEST_CASE("a short ground reports the exact length needed") {
  ground_sequence g(80);
  std::iota(g.begin(), g.end(), 0);
  try {
    build_prefix(parse_ordinal("w^2"), g, 12);
    FAIL("expected insufficient_ground");
  } catch (const constructions::insufficient_ground& e) {
    CHECK(e.required() == 81);
  }
  g.push_back(80);
  CHECK(build_prefix(parse_ordinal("w^2"), g, 12).elements.size() == 12);

  CHECK_THROWS_AS(build_prefix(parse_ordinal("w"), {5, 7}, 3), constructions::insufficient_ground);
}

TEST_CASE("prefixes reject what the ordinal cannot hold") {
  CHECK_THROWS_AS(build_prefix(ordinal(3), 4), std::invalid_argument);
  CHECK_THROWS_AS(build_prefix(ordinal(0), 1), std::invalid_argument);
  CHECK(build_prefix(ordinal(0), 0).elements.empty());
  CHECK(build_prefix(ordinal(3), 3).elements.size() == 3);
  CHECK_THROWS_AS(build_prefix(parse_ordinal("w^62"), 3), std::overflow_error);
}

}  // TEST_SUITE
