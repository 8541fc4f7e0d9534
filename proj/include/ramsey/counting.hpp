#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "ramsey/bigcount.hpp"
#include "ramsey/ordinal.hpp"

namespace ramsey::counting {

// Exact binomial coefficient.  n may be far beyond any table (ambient
// coefficients are arbitrary 64-bit values), so large n falls back to the
// product formula.
big_count binomial(std::uint64_t n, std::uint64_t k);

// Memoized evaluator for the rule-count recurrences.  Results do not depend
// on the cache: construct with use_cache = false to recompute every
// subproblem.  Safe to share across threads; recomputation races are benign
// because a key always yields the same value.
class calculator {
 public:
  explicit calculator(bool use_cache = true) : use_cache_(use_cache) {}

  // rules with exactly p classes on n-element subsets of w^d * k
  big_count count_rules(std::uint64_t n, std::size_t d, std::uint64_t k, std::uint64_t p);
  big_count count_rules_total(std::uint64_t n, std::size_t d, std::uint64_t k);

  // general rules of size p on n-element subsets of alpha (any alpha < w^w)
  big_count count_general_rules(std::uint64_t n, const ordinal& alpha, std::uint64_t p);

  // the big Ramsey degree: total number of general rules over all sizes
  big_count degree(std::uint64_t n, const ordinal& alpha);

 private:
  using p_key = std::tuple<std::uint64_t, std::size_t, std::uint64_t, std::uint64_t>;
  using s_key = std::tuple<std::uint64_t, std::vector<std::uint64_t>, std::uint64_t>;

  bool use_cache_;
  std::mutex mutex_;
  std::map<p_key, big_count> p_cache_;
  std::map<s_key, big_count> s_cache_;
};

// one-shot conveniences over a fresh calculator
big_count degree(std::uint64_t n, const ordinal& alpha);

// degree of n-element subsets of the order type of the integers
big_count zeta_degree(std::uint64_t n);

// table[d][n] = degree(n, w^d) for d <= max_d, n <= max_n
std::vector<std::vector<big_count>> degree_table(std::uint64_t max_n, std::size_t max_d);

enum class oeis_id { a000311, a079309, a364026 };

// (index, value) pairs in b-file order; see the README for the exact
// alignment of each sequence
std::vector<std::pair<std::uint64_t, big_count>> oeis_terms(oeis_id id, std::size_t count);

}  // namespace ramsey::counting
