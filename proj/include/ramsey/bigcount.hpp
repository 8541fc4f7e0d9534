#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ramsey {

// Exact rule counts grow past 64 bits quickly (degree(5, w^5) is already 14
// decimal digits); all counting goes through an unbounded integer.
using big_count = boost::multiprecision::cpp_int;

}  // namespace ramsey
