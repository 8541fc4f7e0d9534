#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ramsey/ordinal.hpp"
#include "ramsey/rules.hpp"

namespace ramsey::colorings {

using color_id = std::uint64_t;

// Colors n-element subsets by the 1-based index of the rule they satisfy.
// Edges satisfying no rule share color 1 with the first rule.
class canonical_coloring {
 public:
  canonical_coloring(std::uint64_t n, ordinal ambient, rules::enumeration_options opts = {});

  color_id operator()(const rules::edge& e) const;
  const std::vector<rules::coloring_rule>& rule_list() const noexcept { return rules_; }
  std::optional<color_id> color_of_rule(const rules::coloring_rule& r) const;

 private:
  std::uint64_t n_;
  ordinal ambient_;
  std::vector<rules::coloring_rule> rules_;
  std::map<rules::coloring_rule, color_id> index_;
};

// One-shot variant: enumerates only as far as the edge's own rule.
color_id canonical_color(const rules::edge& e, const rules::enumeration_options& opts = {});

// Sign sequence of a finite set of nonzero integers ordered by magnitude,
// with the negative of a tied pair first; 1 marks a positive member.
std::vector<int> zeta_color(std::vector<std::int64_t> members);

// the sign sequence packed into a number, first member at the top bit
std::uint64_t zeta_color_code(const std::vector<int>& signs);

// Copy sequence of a finite subset of k disjoint copies of the naturals,
// given as (copy, value) pairs with 1-based copies, ordered by value with
// ties broken by copy.
std::vector<std::uint64_t> omega_copy_color(
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs);

// Every color the coloring takes on n-element subsets of the sample.
template <class Elem, class ColorFn>
auto realized_colors(const std::vector<Elem>& sample, std::size_t n, ColorFn&& color) {
  std::set<std::decay_t<decltype(color(std::vector<Elem>{}))>> out;
  if (n > sample.size()) return out;
  if (n == 0) {
    out.insert(color(std::vector<Elem>{}));
    return out;
  }
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  for (;;) {
    std::vector<Elem> subset;
    subset.reserve(n);
    for (std::size_t i : pick) subset.push_back(sample[i]);
    out.insert(color(subset));
    std::size_t t = n;
    while (t > 0 && pick[t - 1] + (n - t) + 1 >= sample.size()) --t;
    if (t == 0) return out;
    ++pick[t - 1];
    for (std::size_t u = t; u < n; ++u) pick[u] = pick[u - 1] + 1;
  }
}

// An edge designed to satisfy exactly this rule: walking the classes left to
// right hands out increasing coefficients.
rules::edge witness_edge(const rules::coloring_rule& r);

// Union of one witness edge per rule; its n-subsets realize every rule color.
std::vector<ordinal_element> witness_sample(std::uint64_t n, const ordinal& ambient,
                                            const rules::enumeration_options& opts = {});

}  // namespace ramsey::colorings
