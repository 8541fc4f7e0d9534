#include "ramsey/rules.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <tuple>

namespace ramsey::rules {

namespace {

constexpr std::size_t kNoClass = static_cast<std::size_t>(-1);

// pos[i][j] = index of the class holding (i, j)
std::vector<std::vector<std::size_t>> class_positions(const coloring_rule& r) {
  std::vector<std::vector<std::size_t>> pos(r.edge_size());
  for (std::size_t i = 0; i < r.edge_size(); ++i) pos[i].assign(r.origins()[i], kNoClass);
  for (std::size_t t = 0; t < r.classes().size(); ++t)
    for (const var_ref& v : r.classes()[t]) pos[v.element][v.exponent] = t;
  return pos;
}

}  // namespace

coloring_rule::coloring_rule(ordinal ambient, std::vector<std::size_t> origins,
                             std::vector<std::uint64_t> leads,
                             std::vector<std::vector<var_ref>> classes)
    : ambient_(std::move(ambient)),
      origins_(std::move(origins)),
      leads_(std::move(leads)),
      classes_(std::move(classes)) {
  if (origins_.size() != leads_.size()) throw std::invalid_argument("origins/leads length mismatch");
  std::vector<std::vector<bool>> seen(origins_.size());
  std::size_t expected = 0;
  for (std::size_t i = 0; i < origins_.size(); ++i) {
    seen[i].assign(origins_[i], false);
    expected += origins_[i];
  }
  std::size_t placed = 0;
  for (auto& cls : classes_) {
    if (cls.empty()) throw std::invalid_argument("empty class");
    std::sort(cls.begin(), cls.end());
    for (const var_ref& v : cls) {
      if (v.element >= origins_.size() || v.exponent >= origins_[v.element])
        throw std::invalid_argument("variable out of range");
      if (seen[v.element][v.exponent]) throw std::invalid_argument("variable in two classes");
      seen[v.element][v.exponent] = true;
      ++placed;
    }
  }
  if (placed != expected) throw std::invalid_argument("classes do not cover every variable");
}

bool validate_rule(const coloring_rule& r) {
  const ordinal& amb = r.ambient();
  const auto& origins = r.origins();
  const auto& leads = r.leads();
  std::size_t n = r.edge_size();

  for (std::size_t i = 0; i < n; ++i) {
    if (origins[i] > amb.degree() || amb.coeff(origins[i]) == 0) return false;
    if (leads[i] >= amb.coeff(origins[i])) return false;
    if (i > 0 && origins[i] > origins[i - 1]) return false;  // summands in display order
  }

  auto pos = class_positions(r);

  // a class never mixes exponents, summands, or leads
  for (const auto& cls : r.classes()) {
    const var_ref& head = cls.front();
    for (const var_ref& v : cls) {
      if (v.exponent != head.exponent) return false;
      if (origins[v.element] != origins[head.element]) return false;
      if (leads[v.element] != leads[head.element]) return false;
    }
  }

  // within an element, higher coefficients come strictly earlier
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = origins[i]; j-- > 1;)
      if (pos[i][j] >= pos[i][j - 1]) return false;

  // separation at one exponent forces separation below it
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t i2 = i + 1; i2 < n; ++i2) {
      if (origins[i] != origins[i2]) continue;
      for (std::size_t j = origins[i]; j-- > 1;)
        if (pos[i][j] != pos[i2][j] && pos[i][j - 1] == pos[i2][j - 1]) return false;
    }

  // elements of one summand are listed by their lowest coefficient; elements
  // of the finite summand are listed by lead and carry no tie class
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (origins[i] != origins[i + 1]) continue;
    if (origins[i] == 0) {
      if (leads[i] >= leads[i + 1]) return false;
    } else {
      if (pos[i][0] >= pos[i + 1][0]) return false;
    }
  }

  return true;
}

std::string to_text(const coloring_rule& r) {
  if (r.edge_size() == 0) return "(empty rule)";
  std::string out = "c: ";
  for (std::size_t i = 0; i < r.edge_size(); ++i) {
    if (i) out += ",";
    out += std::to_string(r.origins()[i]);
  }
  out += "; b: ";
  for (std::size_t i = 0; i < r.edge_size(); ++i) {
    if (i) out += ",";
    out += std::to_string(r.leads()[i]);
  }
  out += "; ";
  if (r.classes().empty()) {
    out += "(no tail variables)";
    return out;
  }
  for (std::size_t t = 0; t < r.classes().size(); ++t) {
    if (t) out += " < ";
    const auto& cls = r.classes()[t];
    for (std::size_t m = 0; m < cls.size(); ++m) {
      if (m) out += " = ";
      out += "a[" + std::to_string(cls[m].element + 1) + "," + std::to_string(cls[m].exponent) + "]";
    }
  }
  return out;
}

edge::edge(ordinal ambient, std::vector<ordinal_element> elements)
    : ambient_(std::move(ambient)), elements_(std::move(elements)) {
  for (const auto& e : elements_)
    if (!element_in(ambient_, e)) throw std::invalid_argument("element not in ambient ordinal");
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw std::invalid_argument("repeated element");
}

std::optional<std::vector<std::size_t>> rule_index_assignment(const edge& e) {
  const auto& els = e.elements();
  std::vector<std::size_t> result(els.size());
  for (std::size_t i = 0; i < result.size(); ++i) result[i] = i;
  // elements in position order already group by summand; rank each group of
  // a transfinite summand by the lowest tail coefficient instead
  std::size_t lo = 0;
  while (lo < els.size()) {
    std::size_t hi = lo;
    while (hi < els.size() && els[hi].origin == els[lo].origin) ++hi;
    if (els[lo].origin >= 1) {
      std::sort(result.begin() + lo, result.begin() + hi,
                [&](std::size_t a, std::size_t b) { return els[a].tail.back() < els[b].tail.back(); });
      for (std::size_t i = lo; i + 1 < hi; ++i)
        if (els[result[i]].tail.back() == els[result[i + 1]].tail.back()) return std::nullopt;
    }
    lo = hi;
  }
  return result;
}

bool satisfies(const edge& e, const coloring_rule& r) {
  if (e.ambient() != r.ambient()) throw std::invalid_argument("edge and rule ambient differ");
  if (e.size() != r.edge_size()) return false;
  auto assignment = rule_index_assignment(e);
  if (!assignment) return false;

  std::size_t n = e.size();
  std::vector<const ordinal_element*> at(n);
  for (std::size_t t = 0; t < n; ++t) at[t] = &e.elements()[(*assignment)[t]];
  for (std::size_t t = 0; t < n; ++t) {
    if (at[t]->origin != r.origins()[t]) return false;
    if (at[t]->lead != r.leads()[t]) return false;
  }

  // the class order must reproduce the order of the coefficients themselves
  auto pos = class_positions(r);
  std::vector<var_ref> vars;
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t j = 0; j < at[t]->origin; ++j)
      vars.push_back({static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(j)});
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b) {
      std::uint64_t va = at[vars[a].element]->coefficient(vars[a].exponent);
      std::uint64_t vb = at[vars[b].element]->coefficient(vars[b].exponent);
      std::size_t pa = pos[vars[a].element][vars[a].exponent];
      std::size_t pb = pos[vars[b].element][vars[b].exponent];
      if ((va < vb) != (pa < pb) || (va == vb) != (pa == pb)) return false;
    }
  return true;
}

std::optional<coloring_rule> canonical_rule_of(const edge& e) {
  auto assignment = rule_index_assignment(e);
  if (!assignment) return std::nullopt;

  std::size_t n = e.size();
  std::vector<std::size_t> origins(n);
  std::vector<std::uint64_t> leads(n);
  std::map<std::uint64_t, std::vector<var_ref>> by_value;
  for (std::size_t t = 0; t < n; ++t) {
    const ordinal_element& el = e.elements()[(*assignment)[t]];
    origins[t] = el.origin;
    leads[t] = el.lead;
    for (std::size_t j = 0; j < el.origin; ++j)
      by_value[el.coefficient(j)].push_back(
          {static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(j)});
  }
  std::vector<std::vector<var_ref>> classes;
  classes.reserve(by_value.size());
  for (auto& [value, members] : by_value) classes.push_back(std::move(members));

  coloring_rule r(e.ambient(), std::move(origins), std::move(leads), std::move(classes));
  if (!validate_rule(r)) return std::nullopt;
  return r;
}

namespace {

// Depth-first construction of the ordered class list.  Classes are appended
// smallest first; a variable (i, j) becomes available once (i, j') is placed
// for every j' > j.
struct partition_search {
  const ordinal* ambient;
  const std::vector<std::size_t>* origins;
  const std::vector<std::uint64_t>* leads;
  const enumeration_options* opts;
  const std::function<bool(const coloring_rule&)>* emit;
  std::uint64_t* budget_left;

  std::size_t n = 0;
  std::size_t total_vars = 0;
  std::size_t placed = 0;
  std::vector<std::size_t> remaining;   // unplaced variables per element
  std::vector<std::size_t> last_class;  // class of the most recent variable per element
  std::vector<std::vector<var_ref>> classes;

  void init() {
    n = origins->size();
    remaining.assign(n, 0);
    last_class.assign(n, kNoClass);
    total_vars = 0;
    placed = 0;
    classes.clear();
    for (std::size_t i = 0; i < n; ++i) {
      remaining[i] = (*origins)[i];
      total_vars += (*origins)[i];
    }
  }

  void charge_budget() {
    if (*budget_left == 0) throw budget_error(opts->budget);
    --*budget_left;
  }

  // every legal next class, in canonical (member-list) order
  std::vector<std::vector<var_ref>> candidates() const {
    // a new class at exponent j >= 1 may mix elements that agree on summand,
    // lead, and the class one exponent up; at exponent 0 it is the singleton
    // of the first unfinished element of its summand
    std::map<std::tuple<std::size_t, std::size_t, std::uint64_t, std::size_t>,
             std::vector<std::uint32_t>>
        pools;
    std::vector<std::vector<var_ref>> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (remaining[i] == 0) continue;
      std::size_t j = remaining[i] - 1;
      if (j == 0) {
        bool first_unfinished = true;
        for (std::size_t i2 = 0; i2 < i && first_unfinished; ++i2)
          if ((*origins)[i2] == (*origins)[i] && remaining[i2] != 0) first_unfinished = false;
        if (first_unfinished)
          out.push_back({{static_cast<std::uint32_t>(i), 0}});
      } else {
        std::size_t parent = remaining[i] == (*origins)[i] ? kNoClass : last_class[i];
        pools[{j, (*origins)[i], (*leads)[i], parent}].push_back(static_cast<std::uint32_t>(i));
      }
    }
    for (const auto& [key, members] : pools) {
      std::uint32_t j = static_cast<std::uint32_t>(std::get<0>(key));
      for (std::size_t mask = 1; mask < (std::size_t(1) << members.size()); ++mask) {
        std::vector<var_ref> cls;
        for (std::size_t b = 0; b < members.size(); ++b)
          if (mask & (std::size_t(1) << b)) cls.push_back({members[b], j});
        out.push_back(std::move(cls));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool run() {
    charge_budget();
    if (placed == total_vars) {
      if (opts->size_filter && classes.size() != *opts->size_filter) return true;
      coloring_rule r(*ambient, *origins, *leads, classes);
      assert(validate_rule(r));
      return (*emit)(r);
    }
    if (opts->size_filter) {
      std::size_t longest = *std::max_element(remaining.begin(), remaining.end());
      if (classes.size() + longest > *opts->size_filter) return true;
      if (classes.size() + (total_vars - placed) < *opts->size_filter) return true;
    }
    for (auto& cls : candidates()) {
      std::vector<std::size_t> saved;
      saved.reserve(cls.size());
      for (const var_ref& v : cls) {
        saved.push_back(last_class[v.element]);
        last_class[v.element] = classes.size();
        --remaining[v.element];
      }
      placed += cls.size();
      classes.push_back(cls);
      bool keep_going = run();
      classes.pop_back();
      placed -= cls.size();
      for (std::size_t m = cls.size(); m-- > 0;) {
        ++remaining[cls[m].element];
        last_class[cls[m].element] = saved[m];
      }
      if (!keep_going) return false;
    }
    return true;
  }
};

struct rule_search {
  std::uint64_t n;
  const ordinal* ambient;
  const enumeration_options* opts;
  const std::function<bool(const coloring_rule&)>* emit;

  std::uint64_t budget_left = 0;
  std::vector<std::size_t> allowed;  // summand exponents, largest first
  std::vector<std::size_t> origins;
  std::vector<std::uint64_t> leads;
  partition_search partitions;

  bool leads_rec(std::size_t slot) {
    if (slot == n) {
      partitions.init();
      return partitions.run();
    }
    std::uint64_t k = ambient->coeff(origins[slot]);
    std::uint64_t lo = 0;
    if (origins[slot] == 0 && slot > 0 && origins[slot - 1] == 0) lo = leads[slot - 1] + 1;
    for (std::uint64_t y = lo; y < k; ++y) {
      leads[slot] = y;
      if (!leads_rec(slot + 1)) return false;
    }
    return true;
  }

  bool origins_rec(std::size_t slot, std::size_t from) {
    if (slot == n) return leads_rec(0);
    for (std::size_t idx = from; idx < allowed.size(); ++idx) {
      origins[slot] = allowed[idx];
      if (!origins_rec(slot + 1, idx)) return false;
    }
    return true;
  }

  void run() {
    budget_left = opts->budget;
    origins.assign(n, 0);
    leads.assign(n, 0);
    for (std::size_t j = ambient->degree() + 1; j-- > 0;)
      if (ambient->coeff(j) != 0) allowed.push_back(j);  // largest summand first
    partitions.ambient = ambient;
    partitions.origins = &origins;
    partitions.leads = &leads;
    partitions.opts = opts;
    partitions.emit = emit;
    partitions.budget_left = &budget_left;
    origins_rec(0, 0);
  }
};

}  // namespace

void for_each_rule(std::uint64_t n, const ordinal& ambient, const enumeration_options& opts,
                   const std::function<bool(const coloring_rule&)>& fn) {
  if (n == 0) {
    if (!opts.size_filter || *opts.size_filter == 0)
      fn(coloring_rule(ambient, {}, {}, {}));
    return;
  }
  if (ambient.is_zero()) return;
  rule_search search{n, &ambient, &opts, &fn};
  search.run();
}

std::vector<coloring_rule> enumerate_rules(std::uint64_t n, const ordinal& ambient,
                                           const enumeration_options& opts) {
  std::vector<coloring_rule> out;
  for_each_rule(n, ambient, opts, [&](const coloring_rule& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

namespace {

// new index of every element once slots are reordered; order[t] = old index
std::vector<std::size_t> inverse_order(const std::vector<std::size_t>& order) {
  std::vector<std::size_t> inv(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) inv[order[t]] = t;
  return inv;
}

std::vector<std::vector<var_ref>> remap_elements(const std::vector<std::vector<var_ref>>& classes,
                                                 const std::vector<std::size_t>& new_index) {
  std::vector<std::vector<var_ref>> out;
  out.reserve(classes.size());
  for (const auto& cls : classes) {
    std::vector<var_ref> mapped;
    mapped.reserve(cls.size());
    for (const var_ref& v : cls)
      mapped.push_back({static_cast<std::uint32_t>(new_index[v.element]), v.exponent});
    out.push_back(std::move(mapped));
  }
  return out;
}

void check_interleaving(const interleaving& sigma, std::size_t take, std::size_t total) {
  if (sigma.positions.size() != take) throw std::invalid_argument("interleaving size mismatch");
  for (std::size_t t = 0; t < sigma.positions.size(); ++t) {
    if (sigma.positions[t] >= total) throw std::invalid_argument("interleaving position out of range");
    if (t > 0 && sigma.positions[t] <= sigma.positions[t - 1])
      throw std::invalid_argument("interleaving positions must increase");
  }
}

// lay tau1's classes at sigma's slots, tau2's (elements shifted by m) at the rest
std::vector<std::vector<var_ref>> merge_classes(const coloring_rule& tau1,
                                                const coloring_rule& tau2, const interleaving& sigma,
                                                std::size_t m) {
  std::size_t total = tau1.size() + tau2.size();
  std::vector<std::vector<var_ref>> merged(total);
  std::vector<bool> taken(total, false);
  for (std::size_t t = 0; t < sigma.positions.size(); ++t) {
    merged[sigma.positions[t]] = tau1.classes()[t];
    taken[sigma.positions[t]] = true;
  }
  std::size_t next = 0;
  for (const auto& cls : tau2.classes()) {
    while (taken[next]) ++next;
    std::vector<var_ref> shifted;
    shifted.reserve(cls.size());
    for (const var_ref& v : cls)
      shifted.push_back({static_cast<std::uint32_t>(v.element + m), v.exponent});
    merged[next] = std::move(shifted);
    taken[next] = true;
  }
  return merged;
}

coloring_rule combine_into_fresh_copy(const coloring_rule& tau1, const coloring_rule& tau2,
                                      const interleaving& sigma, std::uint64_t lead_choice) {
  const ordinal& amb = tau2.ambient();
  if (amb.is_zero() || amb.term_count() != 1 || amb.degree() < 1)
    throw std::invalid_argument("target ambient must be a single term w^d*k with d >= 1");
  std::size_t d = amb.degree();
  std::uint64_t k = amb.coeff(d);
  if (lead_choice >= k) throw std::invalid_argument("lead choice out of range");
  if (tau1.edge_size() == 0) throw std::invalid_argument("first rule must be nonempty");
  if (tau1.ambient() != ordinal::single_term(d - 1, 1))
    throw std::invalid_argument("first rule must live on one copy of w^(d-1)");
  std::size_t m = tau1.edge_size();
  check_interleaving(sigma, tau1.size(), tau1.size() + tau2.size());

  std::vector<std::vector<var_ref>> merged = merge_classes(tau1, tau2, sigma, m);
  std::size_t n = m + tau2.edge_size();

  // slot order of the result follows the classes of the lowest coefficients;
  // tau1's elements lack one when d = 1, their new top class precedes all
  std::vector<std::size_t> zero_pos(n, 0);
  for (std::size_t t = 0; t < merged.size(); ++t)
    for (const var_ref& v : merged[t])
      if (v.exponent == 0) zero_pos[v.element] = t + 1;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return zero_pos[a] < zero_pos[b]; });
  std::vector<std::size_t> new_index = inverse_order(order);

  merged = remap_elements(merged, new_index);
  std::vector<var_ref> top;
  for (std::size_t i = 0; i < m; ++i)
    top.push_back({static_cast<std::uint32_t>(new_index[i]), static_cast<std::uint32_t>(d - 1)});
  std::sort(top.begin(), top.end());
  merged.insert(merged.begin(), std::move(top));

  std::vector<std::size_t> origins(n, d);
  std::vector<std::uint64_t> leads(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    leads[new_index[i]] = i < m ? lead_choice : tau2.leads()[i - m];

  coloring_rule result(amb, std::move(origins), std::move(leads), std::move(merged));
  assert(validate_rule(result));
  return result;
}

coloring_rule combine_onto_sum(const coloring_rule& tau1, const coloring_rule& tau2,
                               const interleaving& sigma) {
  const ordinal& head = tau1.ambient();
  if (head.is_zero() || head.term_count() != 1 || head.degree() < 1)
    throw std::invalid_argument("first ambient must be a single term w^d*k with d >= 1");
  std::size_t d = head.degree();
  const ordinal& rest = tau2.ambient();
  if (rest.is_zero()) throw std::invalid_argument("second ambient must be nonzero");
  if (rest.degree() >= d) throw std::invalid_argument("second ambient must lie below w^d");
  std::size_t m = tau1.edge_size();
  check_interleaving(sigma, tau1.size(), tau1.size() + tau2.size());

  std::vector<std::vector<var_ref>> merged = merge_classes(tau1, tau2, sigma, m);
  std::vector<std::size_t> origins(tau1.origins());
  origins.insert(origins.end(), tau2.origins().begin(), tau2.origins().end());
  std::vector<std::uint64_t> leads(tau1.leads());
  leads.insert(leads.end(), tau2.leads().begin(), tau2.leads().end());

  std::vector<std::uint64_t> coeffs(d + 1, 0);
  for (std::size_t j = 0; j <= rest.degree(); ++j) coeffs[j] = rest.coeff(j);
  coeffs[d] = head.coeff(d);

  coloring_rule result(ordinal::from_coeffs(std::move(coeffs)), std::move(origins),
                       std::move(leads), std::move(merged));
  assert(validate_rule(result));
  return result;
}

}  // namespace

coloring_rule combine(const coloring_rule& tau1, const coloring_rule& tau2,
                      const interleaving& sigma, std::optional<std::uint64_t> lead_choice) {
  if (lead_choice) return combine_into_fresh_copy(tau1, tau2, sigma, *lead_choice);
  return combine_onto_sum(tau1, tau2, sigma);
}

split_result split(const coloring_rule& r) {
  const ordinal& amb = r.ambient();
  if (amb.is_zero() || r.edge_size() == 0) throw std::invalid_argument("nothing to split");

  split_result out;
  if (amb.term_count() == 1) {
    std::size_t d = amb.degree();
    if (d == 0) throw std::invalid_argument("a finite ambient does not split");
    // the first class names the elements sharing the freshest copy of w^(d-1)
    const auto& top = r.classes().front();
    std::vector<bool> in_copy(r.edge_size(), false);
    for (const var_ref& v : top) {
      assert(v.exponent == d - 1);
      in_copy[v.element] = true;
    }
    std::vector<std::size_t> new_index(r.edge_size(), 0);
    std::size_t m = 0, others = 0;
    for (std::size_t i = 0; i < r.edge_size(); ++i)
      new_index[i] = in_copy[i] ? m++ : others++;

    std::vector<std::vector<var_ref>> cls1, cls2;
    for (std::size_t t = 1; t < r.classes().size(); ++t) {
      const auto& cls = r.classes()[t];
      bool copy_side = in_copy[cls.front().element];
      for (const var_ref& v : cls) assert(in_copy[v.element] == copy_side);
      std::vector<var_ref> mapped;
      mapped.reserve(cls.size());
      for (const var_ref& v : cls)
        mapped.push_back({static_cast<std::uint32_t>(new_index[v.element]), v.exponent});
      if (copy_side) {
        out.sigma.positions.push_back(t - 1);
        cls1.push_back(std::move(mapped));
      } else {
        cls2.push_back(std::move(mapped));
      }
    }
    out.lead_choice = r.leads()[top.front().element];
    out.tau1 = coloring_rule(ordinal::single_term(d - 1, 1),
                             std::vector<std::size_t>(m, d - 1),
                             std::vector<std::uint64_t>(m, 0), std::move(cls1));
    out.tau2 = coloring_rule(amb, std::vector<std::size_t>(r.edge_size() - m, d),
                             [&] {
                               std::vector<std::uint64_t> l;
                               for (std::size_t i = 0; i < r.edge_size(); ++i)
                                 if (!in_copy[i]) l.push_back(r.leads()[i]);
                               return l;
                             }(),
                             std::move(cls2));
    assert(validate_rule(out.tau1) && validate_rule(out.tau2));
    return out;
  }

  // multi-term ambient: the leading summand's elements form a prefix
  std::size_t d = amb.degree();
  std::size_t m = 0;
  while (m < r.edge_size() && r.origins()[m] == d) ++m;
  std::vector<std::vector<var_ref>> cls1, cls2;
  for (std::size_t t = 0; t < r.classes().size(); ++t) {
    const auto& cls = r.classes()[t];
    bool head_side = cls.front().element < m;
    for (const var_ref& v : cls) assert((v.element < m) == head_side);
    if (head_side) {
      out.sigma.positions.push_back(t);
      cls1.push_back(cls);
    } else {
      std::vector<var_ref> shifted;
      shifted.reserve(cls.size());
      for (const var_ref& v : cls)
        shifted.push_back({static_cast<std::uint32_t>(v.element - m), v.exponent});
      cls2.push_back(std::move(shifted));
    }
  }
  out.tau1 = coloring_rule(amb.head(), std::vector<std::size_t>(r.origins().begin(), r.origins().begin() + m),
                           std::vector<std::uint64_t>(r.leads().begin(), r.leads().begin() + m),
                           std::move(cls1));
  out.tau2 = coloring_rule(amb.tail(),
                           std::vector<std::size_t>(r.origins().begin() + m, r.origins().end()),
                           std::vector<std::uint64_t>(r.leads().begin() + m, r.leads().end()),
                           std::move(cls2));
  out.lead_choice = std::nullopt;
  assert(validate_rule(out.tau1) && validate_rule(out.tau2));
  return out;
}

}  // namespace ramsey::rules
