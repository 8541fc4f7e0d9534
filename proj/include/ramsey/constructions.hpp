#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/bigcount.hpp"
#include "ramsey/ordinal.hpp"

namespace ramsey::constructions {

// strictly increasing naturals feeding the construction
using ground_sequence = std::vector<std::uint64_t>;

class insufficient_ground : public std::runtime_error {
 public:
  explicit insufficient_ground(std::uint64_t required)
      : std::runtime_error("ground sequence too short: " + std::to_string(required) +
                           " values needed"),
        required_(required) {}
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

// Splits g into `parts` pairwise disjoint infinite subsequences: part i
// takes the entries at indices 2^i * (2t + 1) for t = 0, 1, ...; entry 0 is
// never used.  Throws when a part comes out empty.
std::vector<ground_sequence> partition_ground(const ground_sequence& g, std::size_t parts);

// A finite initial fragment of the canonical self-similar copy of the
// ambient ordinal: `count` elements, in increasing order.
struct h_prefix {
  ordinal ambient;
  std::vector<ordinal_element> elements;
};

// Builds the prefix over the identity ground 0, 1, 2, ...
h_prefix build_prefix(const ordinal& ambient, std::size_t count);

// Builds the prefix with tail coefficients drawn from g; throws
// insufficient_ground with the exact length needed when g is too short.
h_prefix build_prefix(const ordinal& ambient, const ground_sequence& g, std::size_t count);

struct prefix_report {
  std::uint64_t total_edges = 0;
  std::uint64_t satisfied_edges = 0;  // edges matching some rule
  std::uint64_t distinct_rules = 0;
  big_count rule_bound;  // the degree, which distinct_rules may not exceed
  bool all_satisfied = false;
  bool within_bound = false;
};

// Classifies every n-element subset of the prefix.
prefix_report verify_prefix(const h_prefix& h, std::uint64_t n);

}  // namespace ramsey::constructions
