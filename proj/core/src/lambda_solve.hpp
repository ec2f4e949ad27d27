#pragma once

#include <optional>
#include <vector>

#include "crowell/laurent.hpp"

namespace crowell {

// Finds Laurent polynomials lambda_i, each supported on the symmetric
// exponent window [-window, window]^mu, with
//   sum_i lambda_i * gens[i] = target    (componentwise),
// by linearizing over the integer coefficients and solving exactly.
// Returns nullopt when no such combination exists within the window.
std::optional<std::vector<LaurentPoly>> bounded_combination(
    const std::vector<LaurentPoly>& target,
    const std::vector<std::vector<LaurentPoly>>& gens, int mu, int window);

}  // namespace crowell
