#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crowell {

// Arithmetic helpers over Z/n with n >= 2. Values are kept in [0, n).

std::int64_t mod_reduce(std::int64_t a, std::int64_t n);

struct Xgcd {
  std::int64_t g;
  std::int64_t s;
  std::int64_t t;  // g = s*a + t*b
};
Xgcd xgcd(std::int64_t a, std::int64_t b);

// Inverse of a modulo n; throws std::invalid_argument when gcd(a, n) != 1.
std::int64_t mod_inv(std::int64_t a, std::int64_t n);

// A unit u mod n with u*a = gcd(a, n) (mod n). Used to normalize pivots.
std::int64_t unit_scale(std::int64_t a, std::int64_t n);

// Dense square matrix over Z/n, row-major.
struct ZnMat {
  std::int64_t n = 2;
  int k = 1;
  std::vector<std::int64_t> a;

  static ZnMat identity(std::int64_t n, int k);
  static ZnMat zeros(std::int64_t n, int k);
  static ZnMat from_rows(std::int64_t n,
                         const std::vector<std::vector<std::int64_t>>& rows);

  std::int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * k + c]; }
  std::int64_t at(int r, int c) const {
    return a[static_cast<size_t>(r) * k + c];
  }
  bool operator==(const ZnMat&) const = default;
};

using ZnVec = std::vector<std::int64_t>;

ZnMat mat_add(const ZnMat& x, const ZnMat& y);
ZnMat mat_sub(const ZnMat& x, const ZnMat& y);
ZnMat mat_mul(const ZnMat& x, const ZnMat& y);
ZnMat mat_scale(std::int64_t c, const ZnMat& x);
ZnVec mat_vec(const ZnMat& x, const ZnVec& v);
std::int64_t mat_det(const ZnMat& x);
// Inverse when det is a unit mod n, otherwise nullopt.
std::optional<ZnMat> mat_inverse(const ZnMat& x);
// Nonnegative power.
ZnMat mat_pow(const ZnMat& x, int e);
std::string mat_to_string(const ZnMat& x);

// Howell normal form of the row span of a matrix over Z/n. The form is a
// canonical generating set: two row sets span the same submodule of (Z/n)^cols
// exactly when their Howell forms are identical. Pivot entries divide n and
// entries above a pivot are reduced modulo the pivot.
struct HowellForm {
  std::int64_t n = 2;
  int cols = 0;
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<int> pivot_cols;
  std::vector<std::int64_t> pivot_vals;
};

HowellForm howell_form(std::vector<std::vector<std::int64_t>> rows, int cols,
                       std::int64_t n);

// Membership of v in the row span.
bool in_span(const HowellForm& h, ZnVec v);

// Number of elements of the row span; throws std::overflow_error if it does
// not fit in 64 bits.
std::uint64_t span_size(const HowellForm& h);

// For each Howell row, the number of distinct multiples it contributes
// (n / pivot value). Every span element is uniquely sum_i c_i * row_i with
// 0 <= c_i < order_i.
std::vector<std::int64_t> howell_orders(const HowellForm& h);

// Canonical basis (Howell form rows) of { x in (Z/n)^cols : A x = 0 } where
// the rows of a each have length cols.
HowellForm right_kernel_mod(const std::vector<std::vector<std::int64_t>>& a,
                            int cols, std::int64_t n);

}  // namespace crowell
