#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "crowell/modmat.hpp"

namespace crowell {

using Int = boost::multiprecision::cpp_int;

// Exponent vector of one monomial t1^e1 * ... * tmu^emu. Entries may be
// negative; the length always equals the ambient variable count.
using Exponents = std::vector<int>;

// Monomials are ordered colexicographically: the last variable is the most
// significant. This is the canonical term order used for storage, printing
// and leading-term computations.
struct ColexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    for (size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

// Element of Z[t1^+-1, ..., tmu^+-1] with exact integer coefficients.
// Terms are kept deduplicated, zero-coefficient free and sorted, so equal
// polynomials compare equal structurally.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Int, ColexLess>;

  LaurentPoly() = default;
  explicit LaurentPoly(int mu) : mu_(mu) {}

  static LaurentPoly zero(int mu) { return LaurentPoly(mu); }
  static LaurentPoly constant(int mu, Int c);
  static LaurentPoly one(int mu) { return constant(mu, 1); }
  // 1-based variable index; power may be negative.
  static LaurentPoly variable(int mu, int index, int power = 1);
  static LaurentPoly monomial(int mu, Exponents e, Int c);

  int mu() const { return mu_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Int coeff(const Exponents& e) const;
  // Leading term under the colex order; polynomial must be nonzero.
  const std::pair<const Exponents, Int>& leading() const;

  void add_term(const Exponents& e, const Int& c);

  bool operator==(const LaurentPoly& o) const {
    return mu_ == o.mu_ && terms_ == o.terms_;
  }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

 private:
  int mu_ = 0;
  TermMap terms_;
};

LaurentPoly operator*(const Int& c, const LaurentPoly& p);

// Units of the Laurent ring are exactly the signed monomials.
bool is_unit(const LaurentPoly& p);
// Inverse of a unit; throws std::invalid_argument otherwise.
LaurentPoly unit_inverse(const LaurentPoly& p);
// Canonical associate: exponents shifted so each variable's minimum exponent
// is zero, then the sign fixed so the leading coefficient is positive.
// unit_normalize(p) = u * p for a unit u, and equal up-to-unit inputs give
// identical outputs. Zero maps to zero.
LaurentPoly unit_normalize(const LaurentPoly& p);
// True when a and b agree up to multiplication by a unit.
bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

// p^e; negative e requires p to be a unit.
LaurentPoly pow(const LaurentPoly& p, int e);

// Exact quotient num/den, or nullopt when den does not divide num.
std::optional<LaurentPoly> exact_div(const LaurentPoly& num,
                                     const LaurentPoly& den);

// Greatest common divisor, computed by primitive pseudo-remainder sequences
// variable by variable. The result is unit-normalized; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// Sum of coefficients: the image under t_i -> 1 for all i.
Int augmentation(const LaurentPoly& p);
// Image under t_j -> 1 (1-based j) with later variables renumbered down.
LaurentPoly collapse_variable(const LaurentPoly& p, int j);
// Image under t_i -> t1 for all i (one-variable reduction).
LaurentPoly to_one_variable(const LaurentPoly& p);
// Image under t_i -> t_sigma(i); sigma is 1-based and must be a permutation.
LaurentPoly permute_variables(const LaurentPoly& p,
                              const std::vector<int>& sigma);

// Rendering and parsing of the textual form, e.g. "1 - t1 - t2 + t1*t2" or
// "t1^-1 + 2*t2^3". Terms print in the canonical (colex ascending) order.
std::string to_string(const LaurentPoly& p);
LaurentPoly parse_poly(std::string_view text, int mu);

// Ring map out of the mu-variable Laurent ring. Targets: another Laurent
// ring, a residue ring Z/n, or a matrix ring over Z/n. Variable images must
// be invertible in the target; validate() checks this.
struct RingMapSpec {
  enum class Kind { laurent, residue, matrix };

  Kind kind = Kind::laurent;
  int source_mu = 0;
  // Kind::laurent
  int target_mu = 0;
  std::vector<LaurentPoly> laurent_images;
  // Kind::residue and Kind::matrix
  std::int64_t modulus = 0;
  std::vector<std::int64_t> residue_images;
  std::vector<ZnMat> matrix_images;

  static RingMapSpec to_laurent(int source_mu, int target_mu,
                                std::vector<LaurentPoly> images);
  static RingMapSpec to_residue(int source_mu, std::int64_t n,
                                std::vector<std::int64_t> units);
  static RingMapSpec to_matrix(int source_mu, std::int64_t n,
                               std::vector<ZnMat> actions);
  // t_j -> 1, remaining variables renumbered into mu-1 variables.
  static RingMapSpec collapse(int source_mu, int j);
  // Every variable -> 1 in the 0-variable ring (constants).
  static RingMapSpec augmentation_map(int source_mu);
  // Every variable -> t1.
  static RingMapSpec join_variables(int source_mu);
  static RingMapSpec permutation(int source_mu, const std::vector<int>& sigma);
};

void validate(const RingMapSpec& m);

struct ResidueValue {
  std::int64_t modulus = 0;
  std::int64_t value = 0;
  bool operator==(const ResidueValue&) const = default;
};

using SubstituteResult = std::variant<LaurentPoly, ResidueValue, ZnMat>;

SubstituteResult substitute(const LaurentPoly& p, const RingMapSpec& m);

// Matrix image of p under t_i -> actions[i-1]; inverses for negative
// exponents are supplied by the caller.
ZnMat evaluate_matrix(const LaurentPoly& p, const std::vector<ZnMat>& actions,
                      const std::vector<ZnMat>& action_invs, std::int64_t n,
                      int rank);

}  // namespace crowell
