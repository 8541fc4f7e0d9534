#include <doctest.h>

#include <numeric>
#include <set>

#include "ramsey/colorings.hpp"
#include "ramsey/counting.hpp"

using namespace ramsey;
using colorings::color_id;

namespace {

rules::edge mk_edge(const std::string& ambient, const std::string& elements) {
  ordinal amb = parse_ordinal(ambient);
  return rules::edge(amb, parse_element_list(amb, elements));
}

std::set<color_id> full_palette(color_id count) {
  std::set<color_id> out;
  for (color_id c = 1; c <= count; ++c) out.insert(c);
  return out;
}

}  // namespace

TEST_SUITE("colorings") {

TEST_CASE("the canonical coloring numbers edges by their rule") {
  colorings::canonical_coloring col(2, parse_ordinal("w^2"));
  REQUIRE(col.rule_list().size() == 4);

  CHECK(col(mk_edge("w^2", "w*1+2, w*3+4")) == 1);
  CHECK(col(mk_edge("w^2", "w*1+3, w*2+4")) == 2);
  CHECK(col(mk_edge("w^2", "w*2+3, w*2+4")) == 3);
  CHECK(col(mk_edge("w^2", "w*2+3, w*1+4")) == 4);

  // rule-free edges fall back to color 1
  CHECK(col(mk_edge("w^2", "w*3+1, w*4+2")) == 1);
  CHECK(col(mk_edge("w^2", "w*1+4, w*2+4")) == 1);

  CHECK(col.color_of_rule(col.rule_list()[2]) == 3);
  auto foreign = rules::enumerate_rules(2, parse_ordinal("w^2*2"))[0];
  CHECK_FALSE(col.color_of_rule(foreign).has_value());

  CHECK_THROWS_AS(col(mk_edge("w^2", "w*1+2")), std::invalid_argument);
  CHECK_THROWS_AS(col(mk_edge("w^3", "w*1+2, w*3+4")), std::invalid_argument);
}

TEST_CASE("one-shot classification matches the indexed coloring") {
  ordinal amb = parse_ordinal("w^2*2");
  colorings::canonical_coloring col(2, amb);
  auto sample = colorings::witness_sample(2, amb);
  auto agree = [&](const std::vector<ordinal_element>& subset) {
    rules::edge e(amb, subset);
    CHECK(colorings::canonical_color(e) == col(e));
    return col(e);
  };
  auto seen = colorings::realized_colors(sample, 2, agree);
  CHECK(seen == full_palette(14));
}

TEST_CASE("integer sign sequences order by magnitude with negatives first") {
  CHECK(colorings::zeta_color({}) == std::vector<int>{});
  CHECK(colorings::zeta_color({7}) == std::vector<int>{1});
  CHECK(colorings::zeta_color({-7}) == std::vector<int>{0});
  CHECK(colorings::zeta_color({3, -1, 4, -5}) == std::vector<int>{0, 1, 1, 0});
  CHECK(colorings::zeta_color({2, -2}) == std::vector<int>{0, 1});
  CHECK(colorings::zeta_color({-9, 9, 1}) == std::vector<int>{1, 0, 1});

  CHECK_THROWS_AS(colorings::zeta_color({0}), std::invalid_argument);
  CHECK_THROWS_AS(colorings::zeta_color({3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(colorings::zeta_color({INT64_MIN}), std::invalid_argument);

  CHECK(colorings::zeta_color_code({}) == 0);
  CHECK(colorings::zeta_color_code({0, 1, 1, 0}) == 6);
  CHECK(colorings::zeta_color_code({1, 0, 0}) == 4);
  CHECK_THROWS_AS(colorings::zeta_color_code(std::vector<int>(64, 1)), std::invalid_argument);
}

TEST_CASE("a window of n distinct magnitudes realizes every sign sequence") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m : {n, n + 1, 2 * n}) {
      std::vector<std::int64_t> sample;
      for (std::size_t v = 1; v <= m; ++v) {
        sample.push_back(static_cast<std::int64_t>(v));
        sample.push_back(-static_cast<std::int64_t>(v));
      }
      auto seen = colorings::realized_colors(sample, n, [](const std::vector<std::int64_t>& s) {
        return colorings::zeta_color_code(colorings::zeta_color(s));
      });
      CAPTURE(n);
      CAPTURE(m);
      CHECK(seen.size() == (std::uint64_t{1} << n));
      CHECK(counting::zeta_degree(n) == seen.size());
    }
    std::vector<std::int64_t> narrow;
    for (std::size_t v = 1; v + 1 <= n; ++v) {
      narrow.push_back(static_cast<std::int64_t>(v));
      narrow.push_back(-static_cast<std::int64_t>(v));
    }
    auto seen = colorings::realized_colors(narrow, n, [](const std::vector<std::int64_t>& s) {
      return colorings::zeta_color_code(colorings::zeta_color(s));
    });
    CHECK(seen.size() < (std::uint64_t{1} << n));
  }
}

TEST_CASE("copy sequences order by value and break ties by copy") {
  using pair_list = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  CHECK(colorings::omega_copy_color({}) == std::vector<std::uint64_t>{});
  CHECK(colorings::omega_copy_color({{3, 12}, {50, 2}, {110, 12}, {110, 7777}, {117, 3}}) ==
        std::vector<std::uint64_t>({50, 117, 3, 110, 110}));
  CHECK(colorings::omega_copy_color({{2, 5}, {1, 5}}) == std::vector<std::uint64_t>({1, 2}));

  CHECK_THROWS_AS(colorings::omega_copy_color({{0, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(colorings::omega_copy_color(pair_list{{2, 4}, {2, 4}}), std::invalid_argument);

  for (std::uint64_t k = 1; k <= 3; ++k) {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> sample;
      for (std::uint64_t copy = 1; copy <= k; ++copy)
        for (std::uint64_t value = 1; value <= n; ++value) sample.push_back({copy, value});
      auto seen = colorings::realized_colors(
          sample, n,
          [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& s) {
            return colorings::omega_copy_color(s);
          });
      CAPTURE(k);
      CAPTURE(n);
      std::uint64_t expect = 1;
      for (std::size_t i = 0; i < n; ++i) expect *= k;
      CHECK(seen.size() == expect);
      CHECK(counting::degree(n, ordinal::single_term(1, k)) == expect);
    }
  }
}

TEST_CASE("witness edges satisfy exactly their rule") {
  for (const char* text : {"w^2", "w^2*2", "w^2+w*2", "w*3+2"}) {
    ordinal amb = parse_ordinal(text);
    auto list = rules::enumerate_rules(2, amb);
    for (const auto& r : list) {
      CAPTURE(text);
      CAPTURE(rules::to_text(r));
      auto e = colorings::witness_edge(r);
      CHECK(rules::satisfies(e, r));
      auto back = rules::canonical_rule_of(e);
      REQUIRE(back.has_value());
      CHECK(*back == r);
    }
  }
}

TEST_CASE("witness samples realize the full palette") {
  struct target {
    const char* ambient;
    std::uint64_t n;
    color_id palette;
  };
  for (auto [text, n, palette] : {target{"w^2", 2, 4}, target{"w*3", 1, 3},
                                  target{"w*2", 2, 4}, target{"w^2*2", 2, 14}}) {
    ordinal amb = parse_ordinal(text);
    CAPTURE(text);
    CHECK(counting::degree(n, amb) == palette);
    auto sample = colorings::witness_sample(n, amb);
    colorings::canonical_coloring col(n, amb);
    auto seen = colorings::realized_colors(
        sample, n, [&](const std::vector<ordinal_element>& subset) {
          return col(rules::edge(amb, subset));
        });
    CHECK(seen == full_palette(palette));
  }
}

TEST_CASE("size-zero edges take a single color") {
  ordinal amb = parse_ordinal("w^2");
  colorings::canonical_coloring col(0, amb);
  REQUIRE(col.rule_list().size() == 1);
  auto sample = colorings::witness_sample(2, amb);
  auto seen = colorings::realized_colors(sample, 0, [&](const std::vector<ordinal_element>& s) {
    return col(rules::edge(amb, s));
  });
  CHECK(seen == full_palette(1));
}

}  // TEST_SUITE
