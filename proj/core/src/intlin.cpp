#include "crowell/intlin.hpp"

#include <stdexcept>
#include <utility>

namespace crowell {

namespace {

void col_axpy(IntMatrix& m, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (auto& row : m) row[dst] += f * row[src];
}

void col_swap(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (auto& row : m) std::swap(row[i], row[j]);
}

}  // namespace

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                              const std::vector<Int>& b) {
  size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("solve_integer: size mismatch");
  size_t cols = m == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) {
      throw std::invalid_argument("solve_integer: ragged matrix");
    }
  }

  IntMatrix w = a;
  // Unimodular column operations tracked in u reduce w to a column echelon
  // form: each pivot row keeps a single nonzero entry in its pivot column and
  // zeros to the right of it.
  IntMatrix u(cols, std::vector<Int>(cols, 0));
  for (size_t i = 0; i < cols; ++i) u[i][i] = 1;

  std::vector<std::pair<size_t, size_t>> pivots;
  size_t nc = 0;
  for (size_t i = 0; i < m && nc < cols; ++i) {
    size_t j0 = nc;
    while (j0 < cols && w[i][j0] == 0) ++j0;
    if (j0 == cols) continue;
    col_swap(w, nc, j0);
    col_swap(u, nc, j0);
    for (size_t j = nc + 1; j < cols; ++j) {
      if (w[i][j] == 0) continue;
      Int x = w[i][nc], y = w[i][j];
      Int g = gcd(x, y);
      Int s, t;
      // Extended gcd over cpp_int.
      {
        Int r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
          Int q = r0 / r1;
          Int r2 = r0 - q * r1;
          Int s2 = s0 - q * s1;
          Int t2 = t0 - q * t1;
          r0 = r1; r1 = r2;
          s0 = s1; s1 = s2;
          t0 = t1; t1 = t2;
        }
        if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
        g = r0; s = s0; t = t0;
      }
      Int xf = x / g, yf = y / g;
      // [nc j] <- [nc j] * [[s, -yf], [t, xf]]; the transform has determinant
      // s*xf + t*yf = 1, so column span is preserved.
      for (size_t r = 0; r < m; ++r) {
        Int cn = s * w[r][nc] + t * w[r][j];
        Int cj = xf * w[r][j] - yf * w[r][nc];
        w[r][nc] = cn;
        w[r][j] = cj;
      }
      for (size_t r = 0; r < cols; ++r) {
        Int cn = s * u[r][nc] + t * u[r][j];
        Int cj = xf * u[r][j] - yf * u[r][nc];
        u[r][nc] = cn;
        u[r][j] = cj;
      }
    }
    pivots.emplace_back(i, nc);
    ++nc;
  }

  std::vector<Int> y(cols, 0);
  size_t pi = 0;
  for (size_t i = 0; i < m; ++i) {
    Int res = b[i];
    for (size_t j = 0; j < cols; ++j) {
      if (y[j] != 0) res -= w[i][j] * y[j];
    }
    if (pi < pivots.size() && pivots[pi].first == i) {
      size_t c = pivots[pi].second;
      ++pi;
      if (res == 0) continue;
      if (res % w[i][c] != 0) return std::nullopt;
      y[c] = res / w[i][c];
    } else if (res != 0) {
      return std::nullopt;
    }
  }

  std::vector<Int> x(cols, 0);
  for (size_t r = 0; r < cols; ++r) {
    Int acc = 0;
    for (size_t c = 0; c < cols; ++c) {
      if (y[c] != 0) acc += u[r][c] * y[c];
    }
    x[r] = acc;
  }
  for (size_t i = 0; i < m; ++i) {
    Int acc = 0;
    for (size_t j = 0; j < cols; ++j) acc += a[i][j] * x[j];
    if (acc != b[i]) throw std::logic_error("solve_integer: verification failed");
  }
  return x;
}

}  // namespace crowell
