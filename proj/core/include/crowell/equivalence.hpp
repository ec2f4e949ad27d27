#pragma once

#include <map>
#include <string>
#include <vector>

#include "crowell/laurent.hpp"
#include "crowell/presentation.hpp"
#include "crowell/quandle.hpp"

namespace crowell {

// A claimed module isomorphism between two presentations: each source
// generator is sent to a Laurent combination of target generators.
struct EquivalenceCertificate {
  std::map<std::string, std::map<std::string, LaurentPoly>> images;
  // Exponent window for the relation-membership search.
  int degree_bound = 4;
};

enum class Verdict { Verified, Refuted, Inconclusive };

struct EquivalenceReport {
  Verdict verdict = Verdict::Inconclusive;
  std::string detail;
};

// Checks a certificate in three stages. Stage one compares phi values
// exactly; stage two pulls module colorings back through the map for every
// battery spec and demands a bijection between the two coloring sets; stage
// three searches for each relation's image inside the target relation span
// with exponents bounded by degree_bound. Failures of the exact stages
// refute the certificate with a witness; a failed bounded search alone is
// inconclusive.
EquivalenceReport check_equivalence_certificate(
    const Presentation& a, const Presentation& b,
    const EquivalenceCertificate& cert,
    const std::vector<FiniteModuleSpec>& battery);

// Same, with the default battery for the presentations' variable count.
EquivalenceReport check_equivalence_certificate(
    const Presentation& a, const Presentation& b,
    const EquivalenceCertificate& cert);

}  // namespace crowell
