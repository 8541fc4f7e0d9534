#include "ramsey/colorings.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace ramsey::colorings {

canonical_coloring::canonical_coloring(std::uint64_t n, ordinal ambient,
                                       rules::enumeration_options opts)
    : n_(n), ambient_(std::move(ambient)), rules_(rules::enumerate_rules(n, ambient_, opts)) {
  for (std::size_t t = 0; t < rules_.size(); ++t) index_.emplace(rules_[t], t + 1);
}

color_id canonical_coloring::operator()(const rules::edge& e) const {
  if (e.size() != n_) throw std::invalid_argument("edge size differs from the coloring's");
  if (e.ambient() != ambient_) throw std::invalid_argument("edge ambient differs from the coloring's");
  auto rule = rules::canonical_rule_of(e);
  if (!rule) return 1;
  auto it = index_.find(*rule);
  assert(it != index_.end());
  return it == index_.end() ? 1 : it->second;
}

std::optional<color_id> canonical_coloring::color_of_rule(const rules::coloring_rule& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

color_id canonical_color(const rules::edge& e, const rules::enumeration_options& opts) {
  auto rule = rules::canonical_rule_of(e);
  if (!rule) return 1;
  color_id found = 0;
  color_id at = 0;
  rules::for_each_rule(e.size(), e.ambient(), opts, [&](const rules::coloring_rule& r) {
    ++at;
    if (r == *rule) {
      found = at;
      return false;
    }
    return true;
  });
  assert(found != 0);
  if (found == 0) throw std::logic_error("edge satisfies a rule the enumeration missed");
  return found;
}

std::vector<int> zeta_color(std::vector<std::int64_t> members) {
  for (std::int64_t x : members) {
    if (x == 0) throw std::invalid_argument("0 is not a point of the integer order");
    if (x == INT64_MIN) throw std::invalid_argument("member magnitude too large");
  }
  // magnitude order with the negative of a tied pair first
  std::sort(members.begin(), members.end(), [](std::int64_t a, std::int64_t b) {
    std::int64_t ma = std::abs(a), mb = std::abs(b);
    return ma != mb ? ma < mb : a < b;
  });
  for (std::size_t i = 0; i + 1 < members.size(); ++i)
    if (members[i] == members[i + 1]) throw std::invalid_argument("repeated member");
  std::vector<int> signs;
  signs.reserve(members.size());
  for (std::int64_t x : members) signs.push_back(x > 0 ? 1 : 0);
  return signs;
}

std::uint64_t zeta_color_code(const std::vector<int>& signs) {
  if (signs.size() > 63) throw std::invalid_argument("too many members to pack");
  std::uint64_t code = 0;
  for (int s : signs) code = (code << 1) | static_cast<std::uint64_t>(s != 0);
  return code;
}

std::vector<std::uint64_t> omega_copy_color(
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs) {
  for (const auto& [copy, value] : pairs)
    if (copy == 0) throw std::invalid_argument("copies are numbered from 1");
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
    if (pairs[i] == pairs[i + 1]) throw std::invalid_argument("repeated member");
  std::vector<std::uint64_t> copies;
  copies.reserve(pairs.size());
  for (const auto& [copy, value] : pairs) copies.push_back(copy);
  return copies;
}

rules::edge witness_edge(const rules::coloring_rule& r) {
  // class t hands out coefficient t + 1, so the coefficient order reproduces
  // the class order exactly
  std::size_t n = r.edge_size();
  std::vector<std::vector<std::uint64_t>> coeff(n);
  for (std::size_t i = 0; i < n; ++i) coeff[i].assign(r.origins()[i], 0);
  for (std::size_t t = 0; t < r.classes().size(); ++t)
    for (const rules::var_ref& v : r.classes()[t]) coeff[v.element][v.exponent] = t + 1;

  std::vector<ordinal_element> elements;
  elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ordinal_element el;
    el.origin = r.origins()[i];
    el.lead = r.leads()[i];
    el.tail.resize(el.origin);
    for (std::size_t j = 0; j < el.origin; ++j) el.tail[j] = coeff[i][el.origin - 1 - j];
    elements.push_back(std::move(el));
  }
  return rules::edge(r.ambient(), std::move(elements));
}

std::vector<ordinal_element> witness_sample(std::uint64_t n, const ordinal& ambient,
                                            const rules::enumeration_options& opts) {
  std::set<ordinal_element> sample;
  rules::for_each_rule(n, ambient, opts, [&](const rules::coloring_rule& r) {
    rules::edge e = witness_edge(r);
    for (const ordinal_element& el : e.elements()) sample.insert(el);
    return true;
  });
  return std::vector<ordinal_element>(sample.begin(), sample.end());
}

}  // namespace ramsey::colorings
