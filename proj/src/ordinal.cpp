#include "ramsey/ordinal.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace ramsey {

namespace {

struct cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  bool take(char c) {
    if (!at_end() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

std::uint64_t parse_natural(cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  if (c.at_end() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    throw parse_error("expected a number", c.pos);
  std::uint64_t value = 0;
  while (!c.at_end() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    std::uint64_t digit = static_cast<std::uint64_t>(c.peek() - '0');
    if (value > (UINT64_MAX - digit) / 10) throw parse_error("number too large", start);
    value = value * 10 + digit;
    ++c.pos;
  }
  return value;
}

void expect(cursor& c, char ch, const char* what) {
  c.skip_ws();
  if (!c.take(ch)) throw parse_error(what, c.pos);
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_pure_number(std::string_view s) {
  s = trimmed(s);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) {
    return std::isdigit(ch) != 0;
  });
}

}  // namespace

void ordinal::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ordinal ordinal::from_coeffs(std::vector<std::uint64_t> coeffs_ascending) {
  ordinal o;
  o.coeffs_ = std::move(coeffs_ascending);
  o.trim();
  return o;
}

ordinal ordinal::single_term(std::size_t exponent, std::uint64_t coefficient) {
  std::vector<std::uint64_t> cs(exponent + 1, 0);
  cs[exponent] = coefficient;
  return from_coeffs(std::move(cs));
}

std::size_t ordinal::term_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](std::uint64_t k) { return k != 0; }));
}

ordinal ordinal::head() const {
  assert(!is_zero());
  return single_term(degree(), coeffs_.back());
}

ordinal ordinal::tail() const {
  assert(!is_zero());
  std::vector<std::uint64_t> cs(coeffs_.begin(), coeffs_.end() - 1);
  return from_coeffs(std::move(cs));
}

std::strong_ordering operator<=>(const ordinal& a, const ordinal& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
  for (std::size_t j = a.coeffs_.size(); j-- > 0;)
    if (auto c = a.coeffs_[j] <=> b.coeffs_[j]; c != std::strong_ordering::equal) return c;
  return std::strong_ordering::equal;
}

ordinal parse_ordinal(std::string_view text, const parse_limits& limits) {
  cursor c{text};
  std::vector<std::pair<std::size_t, std::uint64_t>> terms;  // (exponent, coefficient)
  bool saw_bare_zero = false;
  for (;;) {
    c.skip_ws();
    std::size_t term_pos = c.pos;
    if (c.at_end()) throw parse_error("expected a term", c.pos);
    std::size_t exponent;
    std::uint64_t coefficient;
    if (c.peek() == 'w') {
      ++c.pos;
      exponent = 1;
      coefficient = 1;
      c.skip_ws();
      if (c.take('^')) {
        std::size_t expo_pos = c.pos;
        std::uint64_t e = parse_natural(c);
        if (e > limits.max_exponent) throw parse_error("exponent above limit", expo_pos);
        exponent = static_cast<std::size_t>(e);
        c.skip_ws();
      }
      if (c.take('*')) {
        coefficient = parse_natural(c);
        if (coefficient == 0) throw parse_error("zero coefficient", term_pos);
      }
    } else if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      exponent = 0;
      coefficient = parse_natural(c);
      if (coefficient == 0) saw_bare_zero = true;
    } else {
      throw parse_error("unexpected character", c.pos);
    }
    if (!terms.empty()) {
      if (terms.back().first == exponent) throw parse_error("duplicate exponent", term_pos);
      if (terms.back().first < exponent)
        throw parse_error("terms must have strictly decreasing exponents", term_pos);
    }
    terms.emplace_back(exponent, coefficient);
    c.skip_ws();
    if (c.at_end()) break;
    if (!c.take('+')) throw parse_error("expected '+'", c.pos);
  }
  if (saw_bare_zero && terms.size() > 1)
    throw parse_error("zero coefficient", 0);

  std::vector<std::uint64_t> coeffs(terms.front().first + 1, 0);
  for (const auto& [e, k] : terms) coeffs[e] = k;
  return ordinal::from_coeffs(std::move(coeffs));
}

std::string format_ordinal(const ordinal& o) {
  if (o.is_zero()) return "0";
  std::string out;
  for (std::size_t j = o.degree() + 1; j-- > 0;) {
    std::uint64_t k = o.coeff(j);
    if (k == 0) continue;
    if (!out.empty()) out += " + ";
    if (j == 0) {
      out += std::to_string(k);
      continue;
    }
    out += "w";
    if (j >= 2) out += "^" + std::to_string(j);
    if (k >= 2) out += "*" + std::to_string(k);
  }
  return out;
}

std::strong_ordering operator<=>(const ordinal_element& a, const ordinal_element& b) {
  if (a.origin != b.origin) return b.origin <=> a.origin;
  if (auto c = a.lead <=> b.lead; c != std::strong_ordering::equal) return c;
  return std::lexicographical_compare_three_way(a.tail.begin(), a.tail.end(),
                                                b.tail.begin(), b.tail.end());
}

bool element_in(const ordinal& ambient, const ordinal_element& e) noexcept {
  if (ambient.is_zero()) return false;
  if (e.origin > ambient.degree()) return false;
  if (ambient.coeff(e.origin) == 0) return false;
  if (e.lead >= ambient.coeff(e.origin)) return false;
  return e.tail.size() == e.origin;
}

ordinal element_value(const ordinal& ambient, const ordinal_element& e) {
  if (!element_in(ambient, e)) throw std::invalid_argument("element not in ambient ordinal");
  std::vector<std::uint64_t> coeffs(ambient.degree() + 1, 0);
  for (std::size_t j = e.origin + 1; j <= ambient.degree(); ++j) coeffs[j] = ambient.coeff(j);
  coeffs[e.origin] = e.lead;
  for (std::size_t j = 0; j < e.origin; ++j) coeffs[j] = e.coefficient(j);
  return ordinal::from_coeffs(std::move(coeffs));
}

ordinal_element element_from_value(const ordinal& ambient, const ordinal& value) {
  if (value >= ambient) throw std::invalid_argument("value not below the ambient ordinal");
  // the summand the value falls in is named by the highest exponent where the
  // coefficients disagree; below it the value's coefficients are free
  std::size_t j = ambient.degree() + 1;
  while (j-- > 0)
    if (value.coeff(j) != ambient.coeff(j)) break;
  assert(value.coeff(j) < ambient.coeff(j));
  ordinal_element e;
  e.origin = j;
  e.lead = value.coeff(j);
  e.tail.resize(j);
  for (std::size_t t = 0; t < j; ++t) e.tail[t] = value.coeff(j - 1 - t);
  return e;
}

std::string format_element(const ordinal& ambient, const ordinal_element& e) {
  return format_ordinal(element_value(ambient, e));
}

std::string format_element_literal(const ordinal_element& e) {
  std::string out = "c=" + std::to_string(e.origin) + ";b=" + std::to_string(e.lead);
  if (!e.tail.empty()) {
    out += ";a=";
    for (std::size_t t = 0; t < e.tail.size(); ++t) {
      if (t) out += ",";
      out += std::to_string(e.tail[t]);
    }
  }
  return out;
}

namespace {

ordinal_element parse_element_literal(const ordinal& ambient, std::string_view text) {
  cursor c{text};
  expect(c, 'c', "expected 'c='");
  expect(c, '=', "expected 'c='");
  std::size_t origin_pos = c.pos;
  std::uint64_t origin = parse_natural(c);
  expect(c, ';', "expected ';'");
  expect(c, 'b', "expected 'b='");
  expect(c, '=', "expected 'b='");
  std::uint64_t lead = parse_natural(c);
  std::vector<std::uint64_t> tail;
  c.skip_ws();
  if (c.take(';')) {
    expect(c, 'a', "expected 'a='");
    expect(c, '=', "expected 'a='");
    c.skip_ws();
    if (!c.at_end()) {
      tail.push_back(parse_natural(c));
      c.skip_ws();
      while (c.take(',')) {
        tail.push_back(parse_natural(c));
        c.skip_ws();
      }
    }
  }
  if (!c.at_end()) throw parse_error("trailing characters after element", c.pos);

  if (origin > ambient.degree() || ambient.coeff(origin) == 0)
    throw parse_error("no summand at that origin", origin_pos);
  if (tail.size() != origin)
    throw parse_error("tail length must equal the origin exponent", origin_pos);
  ordinal_element e{static_cast<std::size_t>(origin), lead, std::move(tail)};
  if (e.lead >= ambient.coeff(e.origin))
    throw parse_error("lead out of range for that summand", origin_pos);
  return e;
}

ordinal_element parse_element_at_origin(const ordinal& ambient, std::string_view expr_text,
                                        std::string_view origin_text, std::size_t origin_offset) {
  cursor c{origin_text};
  c.skip_ws();
  for (char ch : {'o', 'r', 'i', 'g', 'i', 'n'})
    if (!c.take(ch)) throw parse_error("expected 'origin<index>' after '@'", origin_offset + c.pos);
  std::size_t idx_pos = origin_offset + c.pos;
  std::uint64_t origin = parse_natural(c);
  c.skip_ws();
  if (!c.at_end()) throw parse_error("trailing characters after origin", origin_offset + c.pos);

  if (origin > ambient.degree() || ambient.coeff(origin) == 0)
    throw parse_error("no summand at that origin", idx_pos);
  ordinal rel = parse_ordinal(expr_text);
  if (!rel.is_zero() && rel.degree() > origin)
    throw parse_error("relative value too large for that summand", 0);
  if (rel.coeff(origin) >= ambient.coeff(origin))
    throw parse_error("relative value too large for that summand", 0);
  ordinal_element e;
  e.origin = static_cast<std::size_t>(origin);
  e.lead = rel.coeff(origin);
  e.tail.resize(e.origin);
  for (std::size_t t = 0; t < e.origin; ++t) e.tail[t] = rel.coeff(e.origin - 1 - t);
  return e;
}

}  // namespace

ordinal_element parse_element(const ordinal& ambient, std::string_view text) {
  std::string_view body = trimmed(text);
  if (body.empty()) throw parse_error("empty element", 0);
  if (body.starts_with("c=") || body.starts_with("c ")) return parse_element_literal(ambient, body);
  std::size_t at = body.find('@');
  if (at != std::string_view::npos) {
    if (body.find('@', at + 1) != std::string_view::npos)
      throw parse_error("more than one '@'", body.find('@', at + 1));
    return parse_element_at_origin(ambient, body.substr(0, at), body.substr(at + 1), at + 1);
  }
  return element_from_value(ambient, parse_ordinal(body));
}

std::vector<ordinal_element> parse_element_list(const ordinal& ambient, std::string_view text) {
  if (trimmed(text).empty()) throw parse_error("empty edge", 0);
  std::vector<std::string_view> frags;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      frags.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  std::vector<ordinal_element> out;
  for (std::size_t i = 0; i < frags.size(); ++i) {
    std::string piece(frags[i]);
    if (trimmed(frags[i]).starts_with("c=")) {
      // the literal's tail list was cut by the splitter; pull back as many
      // pure-number fragments as its origin demands
      cursor c{trimmed(frags[i])};
      c.pos = 2;
      std::uint64_t origin = parse_natural(c);
      std::size_t have = 0;
      std::size_t a_at = piece.find("a=");
      if (a_at != std::string::npos && !trimmed(std::string_view(piece).substr(a_at + 2)).empty())
        have = 1;
      while (have < origin && i + 1 < frags.size() && is_pure_number(frags[i + 1])) {
        piece += ",";
        piece += frags[i + 1];
        ++i;
        ++have;
      }
    }
    out.push_back(parse_element(ambient, piece));
  }
  return out;
}

}  // namespace ramsey
