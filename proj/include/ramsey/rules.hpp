#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/ordinal.hpp"

namespace ramsey::rules {

// One tail coefficient of one edge element: the coefficient of w^exponent in
// the element at the given 0-based slot.  Text output writes slots 1-based.
struct var_ref {
  std::uint32_t element = 0;
  std::uint32_t exponent = 0;
  friend auto operator<=>(const var_ref&, const var_ref&) = default;
};

// How an n-element subset sits inside an ambient ordinal: which summand each
// element falls in (origins, non-increasing), the coefficient it takes there
// (leads), and the ordered equivalence classes of the remaining coefficients.
// Classes are listed smallest first; variables in one class are tied.
//
// The constructor enforces structure only: matching lengths, every variable
// (i, j) with j < origins[i] in exactly one class, no stray variables.
// validate_rule decides whether the rule is canonical.
class coloring_rule {
 public:
  coloring_rule() = default;
  coloring_rule(ordinal ambient, std::vector<std::size_t> origins,
                std::vector<std::uint64_t> leads, std::vector<std::vector<var_ref>> classes);

  std::size_t edge_size() const noexcept { return origins_.size(); }
  std::size_t size() const noexcept { return classes_.size(); }
  const ordinal& ambient() const noexcept { return ambient_; }
  const std::vector<std::size_t>& origins() const noexcept { return origins_; }
  const std::vector<std::uint64_t>& leads() const noexcept { return leads_; }
  const std::vector<std::vector<var_ref>>& classes() const noexcept { return classes_; }

  // stable total order for use as a map key; unrelated to enumeration order
  friend auto operator<=>(const coloring_rule&, const coloring_rule&) = default;

 private:
  ordinal ambient_;
  std::vector<std::size_t> origins_;
  std::vector<std::uint64_t> leads_;
  std::vector<std::vector<var_ref>> classes_;
};

bool validate_rule(const coloring_rule& r);

std::string to_text(const coloring_rule& r);

// A finite subset of an ambient ordinal.  Elements are stored in increasing
// order of position; duplicates are rejected.
class edge {
 public:
  edge(ordinal ambient, std::vector<ordinal_element> elements);
  const ordinal& ambient() const noexcept { return ambient_; }
  const std::vector<ordinal_element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

 private:
  ordinal ambient_;
  std::vector<ordinal_element> elements_;
};

class budget_error : public std::runtime_error {
 public:
  explicit budget_error(std::uint64_t budget)
      : std::runtime_error("enumeration budget of " + std::to_string(budget) +
                           " candidate partial rules exceeded"),
        budget_(budget) {}
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

struct enumeration_options {
  std::optional<std::uint64_t> size_filter;  // keep only rules with this many classes
  std::uint64_t budget = 1'000'000;          // candidate partial rules before giving up
};

// Visits every valid rule on n-element subsets of the ambient ordinal, in
// canonical order.  fn returns false to stop early.  Throws budget_error
// when the search touches more partial rules than the budget allows.
void for_each_rule(std::uint64_t n, const ordinal& ambient, const enumeration_options& opts,
                   const std::function<bool(const coloring_rule&)>& fn);

std::vector<coloring_rule> enumerate_rules(std::uint64_t n, const ordinal& ambient,
                                           const enumeration_options& opts = {});

// Slot order the rule criteria assume: within one summand, elements are
// ranked by their lowest tail coefficient.  result[t] is the index into
// e.elements() that takes slot t.  Empty when two same-summand elements tie
// on that coefficient; no rule can mention such an edge.
std::optional<std::vector<std::size_t>> rule_index_assignment(const edge& e);

bool satisfies(const edge& e, const coloring_rule& r);

// The unique rule the edge satisfies, if any.
std::optional<coloring_rule> canonical_rule_of(const edge& e);

// Which slots of the merged class list the first rule's classes occupy.
struct interleaving {
  std::vector<std::size_t> positions;  // strictly increasing, 0-based
};

struct split_result {
  coloring_rule tau1;
  coloring_rule tau2;
  interleaving sigma;
  std::optional<std::uint64_t> lead_choice;
};

// Merges two rules into one on a larger ambient ordinal.  With lead_choice:
// tau1 lives on w^(d-1), tau2 on the single term w^d*k, the result puts
// tau1's elements into one fresh copy at that lead.  Without: tau1 lives on
// the single term w^d*k, tau2 on an ordinal below w^d, the result lives on
// their sum.  split is the exact inverse.
coloring_rule combine(const coloring_rule& tau1, const coloring_rule& tau2,
                      const interleaving& sigma,
                      std::optional<std::uint64_t> lead_choice = std::nullopt);

split_result split(const coloring_rule& r);

}  // namespace ramsey::rules
