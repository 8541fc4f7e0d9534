#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/colorings.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/ordinal.hpp"
#include "ramsey/rules.hpp"

namespace {

using nlohmann::json;
using namespace ramsey;

json rule_to_json(const rules::coloring_rule& r) {
  json classes = json::array();
  for (const auto& cls : r.classes()) {
    json members = json::array();
    for (const auto& v : cls) members.push_back({v.element + 1, v.exponent});
    classes.push_back(members);
  }
  return {{"origins", r.origins()},
          {"leads", r.leads()},
          {"classes", classes},
          {"text", rules::to_text(r)}};
}

void emit(bool structured, const json& payload, const std::string& text) {
  if (structured)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

int run_degree(bool structured, const std::string& ordinal_text, std::uint64_t n) {
  ordinal alpha = parse_ordinal(ordinal_text);
  big_count value = counting::degree(n, alpha);
  emit(structured,
       {{"command", "degree"}, {"ordinal", format_ordinal(alpha)}, {"n", n}, {"degree", value.str()}},
       "T(" + std::to_string(n) + ", " + format_ordinal(alpha) + ") = " + value.str() + "\n");
  return 0;
}

int run_table(bool structured, std::uint64_t max_n, std::uint64_t max_d) {
  auto table = counting::degree_table(max_n, static_cast<std::size_t>(max_d));
  if (structured) {
    json rows = json::array();
    for (const auto& row : table) {
      json cells = json::array();
      for (const auto& v : row) cells.push_back(v.str());
      rows.push_back(cells);
    }
    emit(true, {{"command", "table"}, {"max_n", max_n}, {"max_d", max_d}, {"degrees", rows}}, "");
    return 0;
  }
  std::vector<std::size_t> widths(max_n + 1, 1);
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    widths[n] = std::max(widths[n], std::to_string(n).size());
    for (const auto& row : table) widths[n] = std::max(widths[n], row[n].str().size());
  }
  std::ostringstream out;
  out << "d\\n";
  for (std::uint64_t n = 0; n <= max_n; ++n) out << "  " << std::setw(widths[n]) << n;
  out << "\n";
  for (std::uint64_t d = 0; d <= max_d; ++d) {
    out << std::setw(3) << d;
    for (std::uint64_t n = 0; n <= max_n; ++n) out << "  " << std::setw(widths[n]) << table[d][n].str();
    out << "\n";
  }
  std::cout << out.str();
  return 0;
}

int run_rules(bool structured, const std::string& ordinal_text, std::uint64_t n,
              const rules::enumeration_options& opts) {
  ordinal alpha = parse_ordinal(ordinal_text);
  auto list = rules::enumerate_rules(n, alpha, opts);
  if (structured) {
    json items = json::array();
    for (std::size_t t = 0; t < list.size(); ++t) {
      json j = rule_to_json(list[t]);
      j["index"] = t + 1;
      items.push_back(j);
    }
    emit(true,
         {{"command", "rules"},
          {"ordinal", format_ordinal(alpha)},
          {"n", n},
          {"count", list.size()},
          {"rules", items}},
         "");
    return 0;
  }
  std::ostringstream out;
  for (std::size_t t = 0; t < list.size(); ++t) out << (t + 1) << ": " << rules::to_text(list[t]) << "\n";
  out << "count: " << list.size() << "\n";
  std::cout << out.str();
  return 0;
}

int run_verify(bool structured, const std::string& ordinal_text, std::uint64_t n,
               const rules::enumeration_options& opts) {
  ordinal alpha = parse_ordinal(ordinal_text);
  std::map<std::size_t, std::uint64_t> by_size;
  rules::enumeration_options unfiltered = opts;
  unfiltered.size_filter.reset();
  rules::for_each_rule(n, alpha, unfiltered, [&](const rules::coloring_rule& r) {
    ++by_size[r.size()];
    return true;
  });

  counting::calculator calc;
  bool match = true;
  big_count recurrence_total = 0;
  std::uint64_t enumerated_total = 0;
  json sizes = json::array();
  std::ostringstream out;
  std::uint64_t max_p = n * alpha.degree();
  for (std::uint64_t p = 0; p <= max_p; ++p) {
    big_count expected = calc.count_general_rules(n, alpha, p);
    std::uint64_t got = by_size.count(p) ? by_size[p] : 0;
    recurrence_total += expected;
    enumerated_total += got;
    bool row_ok = expected == big_count(got);
    match = match && row_ok;
    if (expected != 0 || got != 0) {
      out << "p=" << p << ": recurrence " << expected.str() << ", enumerated " << got
          << (row_ok ? "" : "  <-- MISMATCH") << "\n";
      sizes.push_back({{"p", p}, {"recurrence", expected.str()}, {"enumerated", got}, {"match", row_ok}});
    }
  }
  out << (match ? "match" : "MISMATCH") << ": recurrence " << recurrence_total.str()
      << ", enumerated " << enumerated_total << "\n";
  emit(structured,
       {{"command", "verify"},
        {"ordinal", format_ordinal(alpha)},
        {"n", n},
        {"sizes", sizes},
        {"recurrence_total", recurrence_total.str()},
        {"enumerated_total", enumerated_total},
        {"match", match}},
       out.str());
  return match ? 0 : 1;
}

int run_oeis(const std::string& format, const std::string& id_text, std::uint64_t count) {
  counting::oeis_id id;
  if (id_text == "A000311")
    id = counting::oeis_id::a000311;
  else if (id_text == "A079309")
    id = counting::oeis_id::a079309;
  else if (id_text == "A364026")
    id = counting::oeis_id::a364026;
  else
    throw std::invalid_argument("unknown sequence (supported: A000311, A079309, A364026)");
  auto terms = counting::oeis_terms(id, static_cast<std::size_t>(count));
  if (format == "structured") {
    json items = json::array();
    for (const auto& [idx, value] : terms) items.push_back({idx, value.str()});
    emit(true, {{"command", "oeis"}, {"sequence", id_text}, {"terms", items}}, "");
    return 0;
  }
  std::ostringstream out;
  for (const auto& [idx, value] : terms) out << idx << " " << value.str() << "\n";
  std::cout << out.str();
  return 0;
}

int run_classify(bool structured, const std::string& ordinal_text, const std::string& edge_text,
                 const rules::enumeration_options& opts) {
  ordinal alpha = parse_ordinal(ordinal_text);
  rules::edge e(alpha, parse_element_list(alpha, edge_text));
  auto rule = rules::canonical_rule_of(e);
  colorings::color_id color = colorings::canonical_color(e, opts);
  json j{{"command", "classify"}, {"ordinal", format_ordinal(alpha)}, {"n", e.size()}, {"color", color}};
  std::ostringstream out;
  if (rule) {
    j["rule"] = rule_to_json(*rule);
    out << "rule: " << rules::to_text(*rule) << "\n";
  } else {
    j["rule"] = nullptr;
    out << "rule: (none)\n";
  }
  out << "color: " << color << "\n";
  emit(structured, j, out.str());
  return 0;
}

constructions::ground_sequence read_ground(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open ground file: " + path);
  constructions::ground_sequence g;
  std::uint64_t v;
  while (in >> v) g.push_back(v);
  if (!in.eof()) throw std::invalid_argument("ground file must hold whitespace-separated naturals");
  return g;
}

int run_witness(bool structured, const std::string& ordinal_text, std::uint64_t count,
                std::uint64_t n, const std::string& ground_path) {
  ordinal alpha = parse_ordinal(ordinal_text);
  constructions::h_prefix h =
      ground_path.empty()
          ? constructions::build_prefix(alpha, static_cast<std::size_t>(count))
          : constructions::build_prefix(alpha, read_ground(ground_path), static_cast<std::size_t>(count));
  auto report = constructions::verify_prefix(h, n);
  bool ok = report.all_satisfied && report.within_bound;

  if (structured) {
    json elements = json::array();
    for (const auto& el : h.elements) elements.push_back(format_element(alpha, el));
    emit(true,
         {{"command", "witness"},
          {"ordinal", format_ordinal(alpha)},
          {"count", count},
          {"n", n},
          {"elements", elements},
          {"total_edges", report.total_edges},
          {"satisfied_edges", report.satisfied_edges},
          {"distinct_rules", report.distinct_rules},
          {"rule_bound", report.rule_bound.str()},
          {"ok", ok}},
         "");
    return ok ? 0 : 1;
  }
  std::ostringstream out;
  out << "elements (" << h.elements.size() << "):\n";
  for (const auto& el : h.elements) out << "  " << format_element(alpha, el) << "\n";
  out << "edges of size " << n << ": " << report.total_edges << "; satisfied: "
      << report.satisfied_edges << "; distinct rules: " << report.distinct_rules << " (bound "
      << report.rule_bound.str() << ")\n"
      << (ok ? "ok" : "FAILED") << "\n";
  std::cout << out.str();
  return ok ? 0 : 1;
}

int run_realize_canonical(bool structured, const std::string& ordinal_text, std::uint64_t n,
                          const rules::enumeration_options& opts) {
  ordinal alpha = parse_ordinal(ordinal_text);
  colorings::canonical_coloring coloring(n, alpha, opts);
  auto sample = colorings::witness_sample(n, alpha, opts);
  auto colors = colorings::realized_colors(sample, static_cast<std::size_t>(n),
                                           [&](const std::vector<ordinal_element>& subset) {
                                             return coloring(rules::edge(alpha, subset));
                                           });
  big_count expected = counting::degree(n, alpha);
  bool match = big_count(colors.size()) == expected;
  emit(structured,
       {{"command", "realize"},
        {"coloring", "canonical"},
        {"ordinal", format_ordinal(alpha)},
        {"n", n},
        {"sample_size", sample.size()},
        {"colors_realized", colors.size()},
        {"degree", expected.str()},
        {"match", match}},
       "sample size: " + std::to_string(sample.size()) + "\ncolors realized: " +
           std::to_string(colors.size()) + "\ndegree: " + expected.str() + "\n" +
           (match ? "exact\n" : "MISMATCH\n"));
  return match ? 0 : 1;
}

int run_realize_zeta(bool structured, std::uint64_t n, std::uint64_t window) {
  if (window == 0) window = 2 * n;
  std::vector<std::int64_t> sample;
  for (std::uint64_t v = window; v >= 1; --v) sample.push_back(-static_cast<std::int64_t>(v));
  for (std::uint64_t v = 1; v <= window; ++v) sample.push_back(static_cast<std::int64_t>(v));
  auto colors = colorings::realized_colors(sample, static_cast<std::size_t>(n),
                                           [](const std::vector<std::int64_t>& subset) {
                                             return colorings::zeta_color(subset);
                                           });
  big_count expected = counting::zeta_degree(n);
  bool comparable = window >= n;  // smaller windows cannot carry every pattern
  bool match = big_count(colors.size()) == expected;
  emit(structured,
       {{"command", "realize"},
        {"coloring", "zeta"},
        {"n", n},
        {"window", window},
        {"colors_realized", colors.size()},
        {"degree", expected.str()},
        {"match", comparable ? json(match) : json(nullptr)}},
       "window: -" + std::to_string(window) + ".." + std::to_string(window) +
           " without 0\ncolors realized: " + std::to_string(colors.size()) + "\ndegree: " +
           expected.str() + "\n" + (!comparable ? "window too small to compare\n" : match ? "exact\n" : "MISMATCH\n"));
  return !comparable || match ? 0 : 1;
}

int run_realize_omegak(bool structured, std::uint64_t k, std::uint64_t n, std::uint64_t limit) {
  if (k == 0) throw std::invalid_argument("need at least one copy");
  if (limit == 0) limit = std::max<std::uint64_t>(1, n) * k;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> sample;
  for (std::uint64_t copy = 1; copy <= k; ++copy)
    for (std::uint64_t value = 0; value < limit; ++value) sample.push_back({copy, value});
  auto colors = colorings::realized_colors(
      sample, static_cast<std::size_t>(n),
      [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& subset) {
        return colorings::omega_copy_color(subset);
      });
  big_count expected = counting::degree(n, ordinal::single_term(1, k));
  bool comparable = limit >= n;
  bool match = big_count(colors.size()) == expected;
  emit(structured,
       {{"command", "realize"},
        {"coloring", "omegak"},
        {"k", k},
        {"n", n},
        {"limit", limit},
        {"colors_realized", colors.size()},
        {"degree", expected.str()},
        {"match", comparable ? json(match) : json(nullptr)}},
       "sample: copies 1.." + std::to_string(k) + ", values 0.." + std::to_string(limit - 1) +
           "\ncolors realized: " + std::to_string(colors.size()) + "\ndegree: " + expected.str() +
           "\n" + (!comparable ? "sample too small to compare\n" : match ? "exact\n" : "MISMATCH\n"));
  return !comparable || match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"big Ramsey degrees of the countable ordinals below w^w"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured", "bfile"}));
  std::uint64_t budget = rules::enumeration_options{}.budget;
  app.add_option("--budget", budget, "candidate partial rules the enumerator may explore")
      ->envname("RAMSEY_BUDGET");

  std::string arg_ordinal, arg_edge, arg_ground, arg_sequence;
  std::uint64_t arg_n = 0, arg_count = 10, arg_max_n = 5, arg_max_d = 5;
  std::uint64_t arg_size = 0, arg_k = 1, arg_window = 0, arg_limit = 0;

  auto* degree_cmd = app.add_subcommand("degree", "big Ramsey degree T(n, alpha)");
  degree_cmd->add_option("ordinal", arg_ordinal, "ambient ordinal, e.g. \"w^2+w*8\"")->required();
  degree_cmd->add_option("-n,--subset-size", arg_n, "edge size")->required();

  auto* table_cmd = app.add_subcommand("table", "degrees T(n, w^d) for a grid of n and d");
  table_cmd->add_option("--max-n", arg_max_n, "largest edge size");
  table_cmd->add_option("--max-d", arg_max_d, "largest exponent");

  auto* rules_cmd = app.add_subcommand("rules", "enumerate the rules in canonical order");
  rules_cmd->add_option("ordinal", arg_ordinal)->required();
  rules_cmd->add_option("-n,--subset-size", arg_n)->required();
  auto* size_opt = rules_cmd->add_option("--size", arg_size, "keep rules with this many classes");

  auto* verify_cmd =
      app.add_subcommand("verify", "check the enumeration against the counting recurrences");
  verify_cmd->add_option("ordinal", arg_ordinal)->required();
  verify_cmd->add_option("-n,--subset-size", arg_n)->required();

  auto* oeis_cmd = app.add_subcommand("oeis", "emit a recognized sequence as b-file lines");
  oeis_cmd->add_option("sequence", arg_sequence, "A000311, A079309 or A364026")->required();
  oeis_cmd->add_option("--count", arg_count, "number of terms");

  auto* classify_cmd = app.add_subcommand("classify", "rule and color of one edge");
  classify_cmd->add_option("ordinal", arg_ordinal)->required();
  classify_cmd->add_option("--edge", arg_edge, "comma-separated elements")->required();

  auto* witness_cmd = app.add_subcommand("witness", "build a prefix of the canonical copy and check it");
  witness_cmd->add_option("ordinal", arg_ordinal)->required();
  witness_cmd->add_option("--count", arg_count, "number of elements")->required();
  witness_cmd->add_option("-n,--subset-size", arg_n)->required();
  witness_cmd->add_option("--ground", arg_ground, "file of strictly increasing naturals");

  auto* realize_cmd = app.add_subcommand("realize", "count the colors a coloring attains");
  realize_cmd->require_subcommand(1);
  auto* canonical_cmd = realize_cmd->add_subcommand("canonical", "rule-index coloring on a witness sample");
  canonical_cmd->add_option("ordinal", arg_ordinal)->required();
  canonical_cmd->add_option("-n,--subset-size", arg_n)->required();
  auto* zeta_cmd = realize_cmd->add_subcommand("zeta", "sign-pattern coloring of the integer order");
  zeta_cmd->add_option("-n,--subset-size", arg_n)->required();
  zeta_cmd->add_option("--window", arg_window, "scan subsets of -window..window (default 2n)");
  auto* omegak_cmd = realize_cmd->add_subcommand("omegak", "copy-pattern coloring of w*k");
  omegak_cmd->add_option("-k,--copies", arg_k)->required();
  omegak_cmd->add_option("-n,--subset-size", arg_n)->required();
  omegak_cmd->add_option("--limit", arg_limit, "values per copy (default n*k)");

  // let --format and --budget appear after the subcommand as well
  for (auto* sub : {degree_cmd, table_cmd, rules_cmd, verify_cmd, oeis_cmd, classify_cmd,
                    witness_cmd, realize_cmd, canonical_cmd, zeta_cmd, omegak_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (format == "bfile" && !oeis_cmd->parsed()) {
    std::cerr << "error: --format bfile only applies to the oeis command\n";
    return 2;
  }

  bool structured = format == "structured";
  rules::enumeration_options opts;
  opts.budget = budget;
  if (*size_opt) opts.size_filter = arg_size;

  try {
    if (degree_cmd->parsed()) return run_degree(structured, arg_ordinal, arg_n);
    if (table_cmd->parsed()) return run_table(structured, arg_max_n, arg_max_d);
    if (rules_cmd->parsed()) return run_rules(structured, arg_ordinal, arg_n, opts);
    if (verify_cmd->parsed()) return run_verify(structured, arg_ordinal, arg_n, opts);
    if (oeis_cmd->parsed()) return run_oeis(format, arg_sequence, arg_count);
    if (classify_cmd->parsed()) return run_classify(structured, arg_ordinal, arg_edge, opts);
    if (witness_cmd->parsed()) return run_witness(structured, arg_ordinal, arg_count, arg_n, arg_ground);
    if (realize_cmd->parsed()) {
      if (canonical_cmd->parsed()) return run_realize_canonical(structured, arg_ordinal, arg_n, opts);
      if (zeta_cmd->parsed()) return run_realize_zeta(structured, arg_n, arg_window);
      if (omegak_cmd->parsed()) return run_realize_omegak(structured, arg_k, arg_n, arg_limit);
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
    return 2;
  } catch (const rules::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const constructions::insufficient_ground& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
