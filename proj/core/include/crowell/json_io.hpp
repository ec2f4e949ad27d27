#pragma once

#include <string>
#include <vector>

#include "crowell/diagram.hpp"
#include "crowell/equivalence.hpp"
#include "crowell/presentation.hpp"
#include "crowell/quandle.hpp"

namespace crowell {

// JSON (de)serialization of the library objects. Parsers throw
// std::invalid_argument with a description of the problem. Polynomials are
// carried as strings in the notation accepted by parse_poly.

std::string diagram_to_json(const Diagram& d, bool pretty = false);
Diagram diagram_from_json(const std::string& text);

std::string presentation_to_json(const Presentation& p, bool pretty = false);
Presentation presentation_from_json(const std::string& text);

// Accepts either shape: an object with "generators" is parsed as a
// presentation, otherwise an object with "arcs" is parsed as a diagram and
// the presentation is built from it.
Presentation presentation_from_any_json(const std::string& text);
bool json_is_diagram(const std::string& text);

std::string module_spec_to_json(const FiniteModuleSpec& spec,
                                bool pretty = false);
FiniteModuleSpec module_spec_from_json(const std::string& text);
// A battery file is a JSON array of module specs.
std::vector<FiniteModuleSpec> battery_from_json(const std::string& text);

std::string certificate_to_json(const EquivalenceCertificate& cert,
                                bool pretty = false);
// Image combinations are strings like "a3' - (t1*t2^-1)*a7 + 2*a5".
EquivalenceCertificate certificate_from_json(const std::string& text, int mu);

std::string fingerprint_to_json(const Fingerprint& fp, bool pretty = false);

// Coloring vectors are carried as {"generator": [entries...]} objects; a
// bare integer is accepted for rank-1 entries.
std::string coloring_to_json(const ColoringSpace& space, const ZnVec& v);
ZnVec coloring_from_json(const std::string& text,
                         const std::vector<std::string>& generators, int rank,
                         std::int64_t modulus);

}  // namespace crowell
