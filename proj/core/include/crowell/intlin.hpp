#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace crowell {

using Int = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<Int>>;

// Exact solution of A x = b over the integers (any solution), or nullopt when
// none exists. A is given as rows; all rows must share b's length pattern:
// A has m rows of length cols, b has length m.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                              const std::vector<Int>& b);

}  // namespace crowell
