#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

// Malformed textual input (ordinal expressions, element literals, edges).
// position is a 0-based offset into the rejected text.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Ordinal below w^w in Cantor normal form.  coeff(j) is the coefficient of
// w^j.  The coefficient vector is kept canonical: empty means zero, otherwise
// the top entry is nonzero.
class ordinal {
 public:
  ordinal() = default;
  explicit ordinal(std::uint64_t finite) { coeffs_.assign(1, finite); trim(); }

  // coeffs_ascending[j] = coefficient of w^j; trailing zeros are dropped
  static ordinal from_coeffs(std::vector<std::uint64_t> coeffs_ascending);
  static ordinal single_term(std::size_t exponent, std::uint64_t coefficient);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // exponent of the leading term; 0 for finite ordinals including zero
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::uint64_t coeff(std::size_t exponent) const noexcept {
    return exponent < coeffs_.size() ? coeffs_[exponent] : 0;
  }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
  std::size_t term_count() const noexcept;

  ordinal head() const;  // leading term w^degree * coeff(degree); requires nonzero
  ordinal tail() const;  // the ordinal with its leading term removed; requires nonzero

  friend std::strong_ordering operator<=>(const ordinal& a, const ordinal& b);
  friend bool operator==(const ordinal&, const ordinal&) = default;

 private:
  void trim();
  std::vector<std::uint64_t> coeffs_;
};

struct parse_limits {
  std::size_t max_exponent = 62;
};

// Grammar: term ("+" term)*, term := "w" ["^" natural] ["*" natural] | natural.
// Terms must appear in strictly decreasing exponent order; "0" is only valid
// as the whole expression; explicit zero coefficients are rejected.
ordinal parse_ordinal(std::string_view text, const parse_limits& limits = {});
std::string format_ordinal(const ordinal& o);

// A point of an ambient ordinal, stored relative to the summand it falls in:
//   value = (sum of the summands above `origin`) + w^origin * lead + rest,
// where rest has the coefficients tail[0..] at exponents origin-1 down to 0.
// lead < ambient coefficient at `origin`, and tail.size() == origin.
struct ordinal_element {
  std::size_t origin = 0;
  std::uint64_t lead = 0;
  std::vector<std::uint64_t> tail;

  // tail coefficient at exponent j (j < origin)
  std::uint64_t coefficient(std::size_t exponent) const {
    return tail.at(origin - 1 - exponent);
  }

  friend bool operator==(const ordinal_element&, const ordinal_element&) = default;
};

// Points of earlier summands are smaller, so a larger origin sorts first.
std::strong_ordering operator<=>(const ordinal_element& a, const ordinal_element& b);

bool element_in(const ordinal& ambient, const ordinal_element& e) noexcept;
ordinal element_value(const ordinal& ambient, const ordinal_element& e);
ordinal_element element_from_value(const ordinal& ambient, const ordinal& value);

std::string format_element(const ordinal& ambient, const ordinal_element& e);
std::string format_element_literal(const ordinal_element& e);

// Accepts three element spellings: "c=2;b=0;a=6,2", an absolute ordinal
// expression, or "<expr> @origin<c>" with the expression relative to the
// start of summand c.
ordinal_element parse_element(const ordinal& ambient, std::string_view text);

// Comma-separated list of elements.  Commas inside a literal's tail are
// disambiguated by arity: "c=..." consumes exactly as many tail entries as
// its origin demands.
std::vector<ordinal_element> parse_element_list(const ordinal& ambient, std::string_view text);

}  // namespace ramsey
