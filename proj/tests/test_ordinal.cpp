#include <doctest.h>

#include <random>

#include "ramsey/ordinal.hpp"

using namespace ramsey;

TEST_SUITE("ordinal") {

TEST_CASE("parsing reads Cantor normal form") {
  CHECK(parse_ordinal("0") == ordinal(0));
  CHECK(parse_ordinal("17") == ordinal(17));
  CHECK(parse_ordinal("w") == ordinal::single_term(1, 1));
  CHECK(parse_ordinal("w*9") == ordinal::single_term(1, 9));
  CHECK(parse_ordinal("w^5") == ordinal::single_term(5, 1));
  CHECK(parse_ordinal("w^2+w*8") == ordinal::from_coeffs({0, 8, 1}));
  CHECK(parse_ordinal(" w^2 + w * 8 ") == ordinal::from_coeffs({0, 8, 1}));
  CHECK(parse_ordinal("w^3+w^1*2+5") == ordinal::from_coeffs({5, 2, 0, 1}));
  CHECK(parse_ordinal("w^2+3") == ordinal::from_coeffs({3, 0, 1}));
}

TEST_CASE("parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_ordinal(""), parse_error);
  CHECK_THROWS_AS(parse_ordinal("w^2*0"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("w + 0"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("0 + w"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("w + w"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("1 + w"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("w^2 + w^2*3"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("w^"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("w*"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("2w"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("w^63"), parse_error);        // default exponent limit
  CHECK_THROWS_AS(parse_ordinal("x"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("w +"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("99999999999999999999"), parse_error);
  CHECK_NOTHROW(parse_ordinal("w^62"));

  try {
    parse_ordinal("w^2 + q");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("formatting round-trips") {
  CHECK(format_ordinal(ordinal(0)) == "0");
  CHECK(format_ordinal(ordinal::single_term(2, 1)) == "w^2");
  CHECK(format_ordinal(ordinal::single_term(1, 2)) == "w*2");
  CHECK(format_ordinal(ordinal::from_coeffs({3, 0, 2})) == "w^2*2 + 3");

  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> exp_dist(0, 6), coeff_dist(0, 9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(exp_dist(rng)) + 1);
    for (auto& c : coeffs) c = static_cast<std::uint64_t>(coeff_dist(rng));
    ordinal o = ordinal::from_coeffs(coeffs);
    CAPTURE(format_ordinal(o));
    CHECK(parse_ordinal(format_ordinal(o)) == o);
  }
}

TEST_CASE("ordinal order is lexicographic from the top exponent") {
  std::vector<ordinal> ascending = {
      parse_ordinal("0"),    parse_ordinal("1"),        parse_ordinal("2"),
      parse_ordinal("w"),    parse_ordinal("w+1"),      parse_ordinal("w*2"),
      parse_ordinal("w^2"),  parse_ordinal("w^2+w+3"),  parse_ordinal("w^2*2"),
      parse_ordinal("w^3")};
  for (std::size_t i = 0; i < ascending.size(); ++i)
    for (std::size_t j = 0; j < ascending.size(); ++j)
      CHECK((ascending[i] < ascending[j]) == (i < j));
}

TEST_CASE("elements decompose against the ambient summands") {
  ordinal amb = parse_ordinal("w^2+w*8");

  ordinal_element low = element_from_value(amb, parse_ordinal("w*6+2"));
  CHECK(low.origin == 2);
  CHECK(low.lead == 0);
  CHECK(low.tail == std::vector<std::uint64_t>{6, 2});

  ordinal_element high = element_from_value(amb, parse_ordinal("w^2+w*6+2"));
  CHECK(high.origin == 1);
  CHECK(high.lead == 6);
  CHECK(high.tail == std::vector<std::uint64_t>{2});

  CHECK_THROWS_AS(element_from_value(amb, amb), std::invalid_argument);
  CHECK_THROWS_AS(element_from_value(amb, parse_ordinal("w^2+w*8+1")), std::invalid_argument);
  CHECK_THROWS_AS(element_from_value(amb, parse_ordinal("w^3")), std::invalid_argument);
}

TEST_CASE("element order follows the ordinal order") {
  ordinal amb = parse_ordinal("w^2+w*8");
  std::mt19937 rng(20240818);
  std::uniform_int_distribution<int> pick(0, 2), small(0, 11);
  auto random_value = [&]() {
    std::vector<std::uint64_t> coeffs(3, 0);
    int shape = pick(rng);
    if (shape >= 1) coeffs[1] = static_cast<std::uint64_t>(small(rng));
    if (shape == 2) coeffs[2] = 1, coeffs[1] = static_cast<std::uint64_t>(small(rng)) % 8;
    coeffs[0] = static_cast<std::uint64_t>(small(rng));
    return ordinal::from_coeffs(coeffs);
  };
  for (int trial = 0; trial < 300; ++trial) {
    ordinal a = random_value(), b = random_value();
    if (a >= amb || b >= amb) continue;
    ordinal_element ea = element_from_value(amb, a), eb = element_from_value(amb, b);
    CHECK(element_value(amb, ea) == a);
    CHECK((ea < eb) == (a < b));
    CHECK((ea == eb) == (a == b));
  }
}

TEST_CASE("element text forms agree") {
  ordinal amb = parse_ordinal("w^2+w*8");

  ordinal_element lit = parse_element(amb, "c=2;b=0;a=6,2");
  CHECK(lit == element_from_value(amb, parse_ordinal("w*6+2")));
  CHECK(parse_element(amb, "w*6+2") == lit);
  CHECK(parse_element(amb, "w*6+2 @origin2") == lit);
  CHECK(format_element_literal(lit) == "c=2;b=0;a=6,2");
  CHECK(format_element(amb, lit) == "w*6 + 2");

  ordinal_element rel = parse_element(amb, "w*6+2 @origin1");
  CHECK(rel.origin == 1);
  CHECK(rel.lead == 6);
  CHECK(rel.tail == std::vector<std::uint64_t>{2});
  CHECK(element_value(amb, rel) == parse_ordinal("w^2+w*6+2"));

  ordinal fin = parse_ordinal("5");
  CHECK(parse_element(fin, "c=0;b=3") == ordinal_element{0, 3, {}});
  CHECK(parse_element(fin, "3") == ordinal_element{0, 3, {}});

  CHECK_THROWS_AS(parse_element(amb, "c=1;b=8;a=0"), parse_error);   // lead must stay below 8
  CHECK_THROWS_AS(parse_element(amb, "c=2;b=0;a=6"), parse_error);   // tail too short
  CHECK_THROWS_AS(parse_element(amb, "c=3;b=0;a=1,2,3"), parse_error);
  CHECK_THROWS_AS(parse_element(amb, "c=0;b=1"), parse_error);       // no finite summand here
  CHECK_THROWS_AS(parse_element(amb, "w*9 @origin1"), parse_error);
  CHECK_THROWS_AS(parse_element(amb, "w^2 @origin2"), parse_error);
  CHECK_THROWS_AS(parse_element(amb, ""), parse_error);
}

TEST_CASE("edge lists split on top-level commas only") {
  ordinal amb = parse_ordinal("w^2+w*8");
  auto els = parse_element_list(amb, "c=2;b=0;a=6,2, c=1;b=6;a=2");
  REQUIRE(els.size() == 2);
  CHECK(els[0] == parse_element(amb, "c=2;b=0;a=6,2"));
  CHECK(els[1] == parse_element(amb, "c=1;b=6;a=2"));

  auto mixed = parse_element_list(amb, "w*6+2, w^2+w*1+4");
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].origin == 2);
  CHECK(mixed[1].origin == 1);

  CHECK_THROWS_AS(parse_element_list(amb, ""), parse_error);
  CHECK_THROWS_AS(parse_element_list(amb, "c=2;b=0;a=6"), parse_error);
}

}  // TEST_SUITE
