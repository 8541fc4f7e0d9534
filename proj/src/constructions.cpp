#include "ramsey/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>

#include "ramsey/counting.hpp"
#include "ramsey/rules.hpp"

namespace ramsey::constructions {

namespace {

// The recursion only ever works with arithmetic subsequences of the index
// line: taking "part i" of base + step * t gives another such sequence, so a
// slice is two numbers.  Values are looked up in the real ground at the end.
struct index_stream {
  std::uint64_t base = 0;
  std::uint64_t step = 1;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) throw std::overflow_error("ground index overflow");
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > UINT64_MAX - b) throw std::overflow_error("ground index overflow");
  return a + b;
}

std::uint64_t stream_at(const index_stream& s, std::uint64_t t, std::uint64_t& high_water) {
  std::uint64_t idx = checked_add(s.base, checked_mul(s.step, t));
  high_water = std::max(high_water, idx);
  return idx;
}

// part i of the sequence: indices 2^i * (2t + 1) relative to it
index_stream stream_part(const index_stream& s, std::size_t i) {
  std::uint64_t offset = checked_mul(s.step, std::uint64_t(1) << i);
  return {checked_add(s.base, offset), checked_mul(s.step, std::uint64_t(2) << i)};
}

// deal `count` items round-robin into `parts` slots; slot p holds at most
// capacity[p] (UINT64_MAX = unbounded)
std::vector<std::uint64_t> deal_quotas(std::uint64_t count, const std::vector<std::uint64_t>& capacity) {
  std::vector<std::uint64_t> quota(capacity.size(), 0);
  std::uint64_t left = count;
  while (left > 0) {
    bool moved = false;
    for (std::size_t p = 0; p < quota.size() && left > 0; ++p) {
      if (quota[p] < capacity[p]) {
        ++quota[p];
        --left;
        moved = true;
      }
    }
    if (!moved) throw std::invalid_argument("prefix longer than the ambient ordinal");
  }
  return quota;
}

// Elements come out with coefficients that are ground INDICES, increasing;
// the caller substitutes ground values afterwards.
std::vector<ordinal_element> build_indexed(const ordinal& ambient, const index_stream& g,
                                           std::uint64_t count, std::uint64_t& high_water) {
  std::vector<ordinal_element> out;
  if (count == 0) return out;
  if (ambient.is_zero()) throw std::invalid_argument("the zero ordinal has no elements");
  std::size_t d = ambient.degree();

  if (ambient.term_count() >= 2) {
    // one slice per summand; the finite summand can hold only coeff(0) many
    std::vector<std::uint64_t> capacity(d + 1, 0);
    for (std::size_t j = 0; j <= d; ++j)
      capacity[j] = ambient.coeff(j) == 0 ? 0 : (j == 0 ? ambient.coeff(0) : UINT64_MAX);
    std::vector<std::uint64_t> quota = deal_quotas(count, capacity);
    for (std::size_t j = d + 1; j-- > 0;) {
      if (quota[j] == 0) continue;
      auto part = build_indexed(ordinal::single_term(j, ambient.coeff(j)), stream_part(g, j + 1),
                                quota[j], high_water);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  std::uint64_t k = ambient.coeff(d);
  if (d == 0) {
    if (count > k) throw std::invalid_argument("prefix longer than the ambient ordinal");
    for (std::uint64_t b = 0; b < count; ++b) out.push_back({0, b, {}});
    return out;
  }
  if (d == 1 && k == 1) {
    // the copy is the ground itself
    for (std::uint64_t t = 0; t < count; ++t) out.push_back({1, 0, {stream_at(g, t, high_water)}});
    return out;
  }
  if (k >= 2) {
    // k fresh copies of w^d, one per slice, told apart by their lead
    std::vector<std::uint64_t> quota = deal_quotas(count, std::vector<std::uint64_t>(k, UINT64_MAX));
    for (std::uint64_t i = 1; i <= k; ++i) {
      if (quota[i - 1] == 0) continue;
      auto copy = build_indexed(ordinal::single_term(d, 1), stream_part(g, i), quota[i - 1], high_water);
      for (auto& el : copy) {
        assert(el.lead == 0);
        el.lead = i - 1;
        out.push_back(std::move(el));
      }
    }
    return out;
  }

  // w^d with d >= 2: ceil(sqrt(count)) nested copies of w^(d-1), each opened
  // by one value from slice 0 sitting below everything in its body slice
  std::uint64_t copies = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(count))));
  assert(copies * copies >= count && (copies - 1) * (copies - 1) < count);
  std::vector<std::uint64_t> quota = deal_quotas(count, std::vector<std::uint64_t>(copies, UINT64_MAX));
  index_stream leads = stream_part(g, 0);
  for (std::uint64_t i = 1; i <= copies; ++i) {
    if (quota[i - 1] == 0) continue;
    std::uint64_t opener = stream_at(leads, i - 1, high_water);
    auto body = build_indexed(ordinal::single_term(d - 1, 1), stream_part(g, i), quota[i - 1],
                              high_water);
    for (auto& el : body) {
      assert(el.origin == d - 1 && el.lead == 0);
      ordinal_element lifted;
      lifted.origin = d;
      lifted.lead = 0;
      lifted.tail.reserve(d);
      lifted.tail.push_back(opener);
      lifted.tail.insert(lifted.tail.end(), el.tail.begin(), el.tail.end());
      out.push_back(std::move(lifted));
    }
  }
  return out;
}

}  // namespace

std::vector<ground_sequence> partition_ground(const ground_sequence& g, std::size_t parts) {
  if (parts >= 63) throw std::invalid_argument("too many parts");
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    if (g[i] >= g[i + 1]) throw std::invalid_argument("ground must increase strictly");
  std::vector<ground_sequence> out(parts);
  for (std::size_t i = 0; i < parts; ++i) {
    for (std::uint64_t idx = std::uint64_t(1) << i; idx < g.size(); idx += std::uint64_t(2) << i)
      out[i].push_back(g[idx]);
    if (out[i].empty()) throw std::invalid_argument("ground too short for that many parts");
  }
  return out;
}

h_prefix build_prefix(const ordinal& ambient, std::size_t count) {
  std::uint64_t high_water = 0;
  h_prefix h{ambient, build_indexed(ambient, {}, count, high_water)};
  std::sort(h.elements.begin(), h.elements.end());
  assert(std::adjacent_find(h.elements.begin(), h.elements.end()) == h.elements.end());
  return h;
}

h_prefix build_prefix(const ordinal& ambient, const ground_sequence& g, std::size_t count) {
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    if (g[i] >= g[i + 1]) throw std::invalid_argument("ground must increase strictly");
  std::uint64_t high_water = 0;
  std::vector<ordinal_element> elements = build_indexed(ambient, {}, count, high_water);
  if (count > 0 && high_water >= g.size()) throw insufficient_ground(high_water + 1);
  // the ground is strictly increasing, so substituting values for indices
  // keeps every comparison between elements intact
  for (auto& el : elements)
    for (auto& coefficient : el.tail) coefficient = g[coefficient];
  h_prefix h{ambient, std::move(elements)};
  std::sort(h.elements.begin(), h.elements.end());
  assert(std::adjacent_find(h.elements.begin(), h.elements.end()) == h.elements.end());
  return h;
}

prefix_report verify_prefix(const h_prefix& h, std::uint64_t n) {
  prefix_report report;
  report.rule_bound = counting::degree(n, h.ambient);
  std::set<rules::coloring_rule> seen;

  const auto& els = h.elements;
  if (n <= els.size()) {
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    for (;;) {
      std::vector<ordinal_element> subset;
      subset.reserve(n);
      for (std::size_t i : pick) subset.push_back(els[i]);
      ++report.total_edges;
      auto rule = rules::canonical_rule_of(rules::edge(h.ambient, std::move(subset)));
      if (rule) {
        ++report.satisfied_edges;
        seen.insert(std::move(*rule));
      }
      if (n == 0) break;
      std::size_t t = n;
      while (t > 0 && pick[t - 1] + (n - t) + 1 >= els.size()) --t;
      if (t == 0) break;
      ++pick[t - 1];
      for (std::size_t u = t; u < n; ++u) pick[u] = pick[u - 1] + 1;
    }
  }

  report.distinct_rules = seen.size();
  report.all_satisfied = report.satisfied_edges == report.total_edges;
  report.within_bound = big_count(report.distinct_rules) <= report.rule_bound;
  return report;
}

}  // namespace ramsey::constructions
