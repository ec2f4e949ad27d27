#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "crowell/laurent.hpp"
#include "crowell/modmat.hpp"
#include "crowell/presentation.hpp"

namespace crowell {

// Finite coloring target: the module (Z/n)^rank with an invertible, pairwise
// commuting action matrix for each variable.
struct FiniteModuleSpec {
  std::int64_t modulus = 2;
  int rank = 1;
  int mu = 1;
  std::vector<ZnMat> action;      // one matrix per variable
  std::vector<ZnMat> action_inv;  // precomputed inverses
  std::string id;

  // Validates invertibility and commutativity, fills inverses and id.
  static FiniteModuleSpec make(std::int64_t modulus, int rank,
                               std::vector<ZnMat> action);
};

std::string spec_id(std::int64_t modulus, int rank,
                    const std::vector<ZnMat>& action);

// Evaluate a Laurent polynomial at the action matrices.
ZnMat act(const FiniteModuleSpec& spec, const LaurentPoly& p);

// A module element remembering which link component it colors; the quandle
// operations need that grading to pick their twist factors.
struct GradedElement {
  int component = 1;
  ZnVec value;

  bool operator==(const GradedElement&) const = default;
  bool operator<(const GradedElement& o) const {
    if (component != o.component) return component < o.component;
    return value < o.value;
  }
};

// x |> y  =  t_[y] * x - (t_[x] - 1) * y, graded like x.
GradedElement op_right(const FiniteModuleSpec& spec, const GradedElement& x,
                       const GradedElement& y);
// Inverse of |> in the first argument: op_right(spec, op_right_inv(spec, x, y), y) == x.
GradedElement op_right_inv(const FiniteModuleSpec& spec, const GradedElement& x,
                           const GradedElement& y);

// Solution set of a presentation's relations in a finite module, as a
// subgroup of (Z/n)^(rank * #generators) in Howell form. Coloring vectors
// are flat: generator g occupies entries [g*rank, (g+1)*rank).
struct ColoringSpace {
  std::int64_t modulus = 2;
  int rank = 1;
  std::vector<std::string> generators;
  HowellForm kernel;

  std::uint64_t count() const;
  bool contains(const ZnVec& v) const;
  // Visits every coloring vector exactly once, in a deterministic order.
  void for_each(const std::function<void(const ZnVec&)>& fn) const;
};

ColoringSpace solve_colorings(const Presentation& p,
                              const FiniteModuleSpec& spec);

// Value of one tracked seed expression under a coloring vector.
ZnVec seed_value(const Presentation& p, const FiniteModuleSpec& spec,
                 const OrbitSeed& seed, const ZnVec& coloring);

// Seeds used for orbit computations: the tracked seed list when present,
// otherwise the generators whose phi value is exactly t_i - 1.
std::vector<OrbitSeed> orbit_seeds(const Presentation& p);

// Closure of component i's seed values under |> and its inverse against all
// seed values, sorted.
std::vector<ZnVec> orbit_image(const Presentation& p,
                               const FiniteModuleSpec& spec,
                               const ZnVec& coloring, int component);

enum class OrbitConstraint { Free, Constant, Zero };

// Number of colorings whose orbit images satisfy the per-component
// constraints (constraints has length mu; entry i-1 constrains component i).
std::uint64_t count_constrained(const Presentation& p,
                                const FiniteModuleSpec& spec,
                                const std::vector<OrbitConstraint>& constraints);

struct FingerprintEntry {
  std::string spec_id;
  std::uint64_t unconstrained = 0;
  std::vector<std::uint64_t> constant_counts;  // per component, 1..mu
  std::vector<std::uint64_t> zero_counts;      // per component, 1..mu

  bool operator==(const FingerprintEntry&) const = default;
};

using Fingerprint = std::vector<FingerprintEntry>;

// The standard battery: rank-1 specs over n in {2,3,4,5,7} with every tuple
// of units acting by scalars, then rank-2 specs over Z/3 built from a matrix
// of multiplicative order 6.
std::vector<FiniteModuleSpec> default_battery(int mu);

Fingerprint fingerprint(const Presentation& p,
                        const std::vector<FiniteModuleSpec>& battery,
                        int jobs = 1);
Fingerprint fingerprint(const Presentation& p, int jobs = 1);

// Shortest expression lengths: seeds have length 1 and an element obtained
// as x |> y (or its inverse) from elements of lengths a and b gets length
// a + b. Elements with length > maxlen are omitted.
std::map<GradedElement, int> element_lengths(
    const std::vector<GradedElement>& seeds, const FiniteModuleSpec& spec,
    int maxlen);

}  // namespace crowell
