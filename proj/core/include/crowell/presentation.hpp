#pragma once

#include <string>
#include <vector>

#include "crowell/diagram.hpp"
#include "crowell/laurent.hpp"

namespace crowell {

// Expression of one original diagram arc in terms of the current generator
// list. Presentations built from diagrams carry one seed per arc; the
// rewriting operations keep these up to date, so orbit computations always
// refer to the same module elements no matter how the presentation has been
// transformed.
struct OrbitSeed {
  std::string id;
  int component = 1;
  std::vector<LaurentPoly> expr;
  bool operator==(const OrbitSeed&) const = default;
};

// Presentation of a module over the mu-variable Laurent ring, together with
// the structure map phi (one value per generator) and the arc seeds.
// Each row is a relation: sum_g row[g] * g = 0.
struct Presentation {
  int mu = 0;
  std::vector<std::string> generators;
  std::vector<std::vector<LaurentPoly>> rows;
  std::vector<LaurentPoly> phi;
  std::vector<OrbitSeed> seeds;

  int index_of(const std::string& gen) const;  // -1 when absent
  bool operator==(const Presentation&) const = default;
};

// Checks internal consistency: sizes line up, every phi value augments to
// zero, and every row is phi-compatible (sum_g row[g]*phi[g] = 0).
void validate(const Presentation& p);

// Component i when v is exactly t_i - 1, otherwise 0. Generators with such a
// phi value behave like diagram arcs of component i.
int graded_component(const LaurentPoly& v);

// Presentation read off a diagram: one generator per arc with
// phi(a) = t_{component(a)} - 1, one row per crossing. An ordinary crossing
// contributes (1 - t_{comp(left)})*over + t_{comp(over)}*right - left and a
// trivial crossing contributes right - left.
Presentation build_presentation(const Diagram& d);

struct SimplifyOptions {
  // Exponent window (symmetric, per variable) for the bounded searches used
  // to drop dependent rows and to synthesize new unit pivots.
  int window = 2;
  // Exponent range for candidate pivot units during synthesis.
  int synth_range = 1;
  // Upper bound on generator-changing moves, as a termination guard.
  int max_changes = 64;
};

// Tietze-style reduction: repeatedly eliminates generators at unit
// coefficients (first eligible row in input order, first unit entry in
// generator order), removes duplicate and zero rows, drops rows that are
// combinations of the others, extracts non-unit content through a change of
// generators, and shears columns to manufacture new unit pivots. The result
// presents the same module with the same phi and rewritten seeds.
Presentation simplify(const Presentation& p, const SimplifyOptions& opts = {});

// Presentation of the quotient by the submodule generated by component j's
// arc generators together with (t_j - 1) times everything: coefficients are
// pushed through t_j -> 1 (remaining variables renumbered) and one killing
// row is added per generator whose arc lies on component j. p must be the
// presentation built from d.
Presentation sublink_quotient(const Presentation& p, const Diagram& d, int j);

// All (g - k) x (g - k) minors of the relation matrix, ordered by row then
// column combination. Degenerate sizes follow the usual conventions:
// size <= 0 gives [1], size > row count gives [0].
std::vector<LaurentPoly> elementary_ideal_minors(const Presentation& p, int k);

// Image of the presentation under t_i -> t1 for every i.
Presentation reduce_one_variable(const Presentation& p);

// Relabel components by sigma (1-based: component i becomes sigma[i-1]),
// renaming variables in every coefficient and regrading the seeds. Building
// a presentation from a permuted diagram gives the same result as permuting
// the presentation built from the original diagram.
Presentation permute_components(const Presentation& p,
                                const std::vector<int>& sigma);

// Unit-normalized gcd of the k = 1 elementary ideal minors of a one-variable
// presentation.
LaurentPoly alexander_polynomial(const Presentation& p);

}  // namespace crowell
