#include "ramsey/counting.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ramsey::counting {

namespace {

// rows of Pascal's triangle, grown on demand; beyond this the product
// formula is cheaper than the table would be
constexpr std::uint64_t kTriangleLimit = 2048;

big_count binomial_product(std::uint64_t n, std::uint64_t k) {
  big_count result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: the running product is C(n-k+i, i) * i!, divisible
  }
  return result;
}

big_count binomial_table(std::uint64_t n, std::uint64_t k) {
  static std::mutex mutex;
  static std::vector<std::vector<big_count>> rows;
  std::lock_guard lock(mutex);
  while (rows.size() <= n) {
    std::size_t r = rows.size();
    std::vector<big_count> row(r + 1, 1);
    for (std::size_t i = 1; i < r; ++i) row[i] = rows[r - 1][i - 1] + rows[r - 1][i];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

big_count power(std::uint64_t base, std::uint64_t exponent) {
  if (exponent > UINT32_MAX) throw std::invalid_argument("exponent too large");
  return boost::multiprecision::pow(big_count(base), static_cast<unsigned>(exponent));
}

}  // namespace

big_count binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  if (n <= kTriangleLimit) return binomial_table(n, k);
  return binomial_product(n, k);
}

big_count calculator::count_rules(std::uint64_t n, std::size_t d, std::uint64_t k,
                                  std::uint64_t p) {
  if (d == 0 && n > k) return 0;
  if (n == 0) return p == 0 ? 1 : 0;
  if (d == 0) return p == 0 ? binomial(k, n) : 0;
  if (d == 1) return p == n ? power(k, n) : 0;
  if (p == 0) return 0;

  p_key key{n, d, k, p};
  if (use_cache_) {
    std::lock_guard lock(mutex_);
    if (auto it = p_cache_.find(key); it != p_cache_.end()) return it->second;
  }

  // split off the elements sharing the first class: they form a rule on one
  // copy of w^(d-1), the rest keeps the ambient; the first class fixes a lead
  big_count total = 0;
  for (std::uint64_t j = 1; j <= n; ++j) {
    for (std::uint64_t i = 0; i < p; ++i) {
      big_count first = count_rules(j, d - 1, 1, i);
      if (first == 0) continue;
      big_count rest = count_rules(n - j, d, k, p - 1 - i);
      if (rest == 0) continue;
      total += binomial(p - 1, i) * first * rest;
    }
  }
  total *= k;

  if (use_cache_) {
    std::lock_guard lock(mutex_);
    p_cache_.emplace(key, total);
  }
  return total;
}

big_count calculator::count_rules_total(std::uint64_t n, std::size_t d, std::uint64_t k) {
  big_count total = 0;
  for (std::uint64_t p = 0; p <= n * d; ++p) total += count_rules(n, d, k, p);
  return total;
}

big_count calculator::count_general_rules(std::uint64_t n, const ordinal& alpha,
                                          std::uint64_t p) {
  if (alpha.degree() == 0) return count_rules(n, 0, alpha.coeff(0), p);
  std::size_t d = alpha.degree();
  if (alpha.term_count() == 1) return count_rules(n, d, alpha.coeff(d), p);

  s_key key{n, alpha.coeffs(), p};
  if (use_cache_) {
    std::lock_guard lock(mutex_);
    if (auto it = s_cache_.find(key); it != s_cache_.end()) return it->second;
  }

  // elements either originate in the leading summand or further down; the
  // leading part's classes interleave freely with the rest
  ordinal rest = alpha.tail();
  big_count total = 0;
  for (std::uint64_t j = 0; j <= n; ++j) {
    for (std::uint64_t i = 0; i <= p; ++i) {
      big_count leading = count_rules(j, d, alpha.coeff(d), i);
      if (leading == 0) continue;
      big_count lower = count_general_rules(n - j, rest, p - i);
      if (lower == 0) continue;
      total += binomial(p, i) * leading * lower;
    }
  }

  if (use_cache_) {
    std::lock_guard lock(mutex_);
    s_cache_.emplace(key, total);
  }
  return total;
}

big_count calculator::degree(std::uint64_t n, const ordinal& alpha) {
  std::uint64_t max_p = n * alpha.degree();
  big_count total = 0;
  for (std::uint64_t p = 0; p <= max_p; ++p) total += count_general_rules(n, alpha, p);
  return total;
}

big_count degree(std::uint64_t n, const ordinal& alpha) {
  calculator calc;
  return calc.degree(n, alpha);
}

big_count zeta_degree(std::uint64_t n) {
  if (n > UINT32_MAX) throw std::invalid_argument("n too large");
  return big_count(1) << static_cast<unsigned>(n);
}

std::vector<std::vector<big_count>> degree_table(std::uint64_t max_n, std::size_t max_d) {
  calculator calc;
  std::vector<std::vector<big_count>> table(max_d + 1);
  for (std::size_t d = 0; d <= max_d; ++d) {
    table[d].reserve(max_n + 1);
    for (std::uint64_t n = 0; n <= max_n; ++n)
      table[d].push_back(calc.degree(n, ordinal::single_term(d, 1)));
  }
  return table;
}

std::vector<std::pair<std::uint64_t, big_count>> oeis_terms(oeis_id id, std::size_t count) {
  calculator calc;
  std::vector<std::pair<std::uint64_t, big_count>> out;
  out.reserve(count);
  switch (id) {
    case oeis_id::a000311:
      // a(0) = 0, a(1) = 1, then a(n) = degree(n - 1, w^2)
      for (std::uint64_t n = 0; n < count; ++n)
        out.emplace_back(n, n == 0 ? big_count(0) : calc.degree(n - 1, ordinal::single_term(2, 1)));
      break;
    case oeis_id::a079309:
      // a(d) = degree(2, w^d), starting at d = 1
      for (std::uint64_t d = 1; d <= count; ++d)
        out.emplace_back(d, calc.degree(2, ordinal::single_term(static_cast<std::size_t>(d), 1)));
      break;
    case oeis_id::a364026:
      // degree table read by antidiagonals: within n + d = s the entries run
      // from (n, d) = (s, 0) to (0, s); 1-based positions
      for (std::uint64_t s = 0, k = 1; out.size() < count; ++s)
        for (std::uint64_t d = 0; d <= s && out.size() < count; ++d, ++k)
          out.emplace_back(k, calc.degree(s - d, ordinal::single_term(static_cast<std::size_t>(d), 1)));
      break;
  }
  return out;
}

}  // namespace ramsey::counting
