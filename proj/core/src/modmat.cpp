#include "crowell/modmat.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crowell {

std::int64_t mod_reduce(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

Xgcd xgcd(std::int64_t a, std::int64_t b) {
  std::int64_t s0 = 1, t0 = 0, s1 = 0, t1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t r = a - q * b;
    a = b;
    b = r;
    std::int64_t s2 = s0 - q * s1;
    std::int64_t t2 = t0 - q * t1;
    s0 = s1;
    t0 = t1;
    s1 = s2;
    t1 = t2;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  return {a, s0, t0};
}

std::int64_t mod_inv(std::int64_t a, std::int64_t n) {
  a = mod_reduce(a, n);
  Xgcd e = xgcd(a, n);
  if (e.g != 1) {
    throw std::invalid_argument("mod_inv: value is not a unit");
  }
  return mod_reduce(e.s, n);
}

std::int64_t unit_scale(std::int64_t a, std::int64_t n) {
  a = mod_reduce(a, n);
  if (a == 0) return 1;
  std::int64_t d = std::gcd(a, n);
  std::int64_t b = a / d;
  std::int64_t m = n / d;
  std::int64_t u = (m == 1) ? 1 : mod_inv(b % m, m);
  while (std::gcd(u, n) != 1) {
    u += m;
  }
  return mod_reduce(u, n);
}

ZnMat ZnMat::identity(std::int64_t n, int k) {
  ZnMat m;
  m.n = n;
  m.k = k;
  m.a.assign(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1 % n;
  return m;
}

ZnMat ZnMat::zeros(std::int64_t n, int k) {
  ZnMat m;
  m.n = n;
  m.k = k;
  m.a.assign(static_cast<size_t>(k) * k, 0);
  return m;
}

ZnMat ZnMat::from_rows(std::int64_t n,
                       const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) throw std::invalid_argument("ZnMat: empty row list");
  ZnMat m;
  m.n = n;
  m.k = static_cast<int>(rows.size());
  m.a.reserve(static_cast<size_t>(m.k) * m.k);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != m.k) {
      throw std::invalid_argument("ZnMat: matrix is not square");
    }
    for (std::int64_t v : r) m.a.push_back(mod_reduce(v, n));
  }
  return m;
}

static void check_shape(const ZnMat& x, const ZnMat& y) {
  if (x.n != y.n || x.k != y.k) {
    throw std::invalid_argument("ZnMat: shape or modulus mismatch");
  }
}

ZnMat mat_add(const ZnMat& x, const ZnMat& y) {
  check_shape(x, y);
  ZnMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = mod_reduce(r.a[i] + y.a[i], r.n);
  return r;
}

ZnMat mat_sub(const ZnMat& x, const ZnMat& y) {
  check_shape(x, y);
  ZnMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = mod_reduce(r.a[i] - y.a[i], r.n);
  return r;
}

ZnMat mat_mul(const ZnMat& x, const ZnMat& y) {
  check_shape(x, y);
  ZnMat r = ZnMat::zeros(x.n, x.k);
  for (int i = 0; i < x.k; ++i) {
    for (int l = 0; l < x.k; ++l) {
      std::int64_t xv = x.at(i, l);
      if (xv == 0) continue;
      for (int j = 0; j < x.k; ++j) {
        r.at(i, j) = mod_reduce(r.at(i, j) + xv * y.at(l, j), x.n);
      }
    }
  }
  return r;
}

ZnMat mat_scale(std::int64_t c, const ZnMat& x) {
  ZnMat r = x;
  c = mod_reduce(c, x.n);
  for (auto& v : r.a) v = mod_reduce(v * c, x.n);
  return r;
}

ZnVec mat_vec(const ZnMat& x, const ZnVec& v) {
  if (static_cast<int>(v.size()) != x.k) {
    throw std::invalid_argument("mat_vec: length mismatch");
  }
  ZnVec r(x.k, 0);
  for (int i = 0; i < x.k; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < x.k; ++j) acc += x.at(i, j) * v[j] % x.n;
    r[i] = mod_reduce(acc, x.n);
  }
  return r;
}

static std::int64_t det_rec(const ZnMat& x, std::vector<int>& cols, int row) {
  if (row == x.k) return 1 % x.n;
  std::int64_t acc = 0;
  for (size_t ci = 0; ci < cols.size(); ++ci) {
    int c = cols[ci];
    if (c < 0) continue;
    std::int64_t v = x.at(row, c);
    int used = 0;
    for (size_t cj = 0; cj < ci; ++cj) {
      if (cols[cj] >= 0) ++used;
    }
    if (v != 0) {
      cols[ci] = -1;
      std::int64_t sub = det_rec(x, cols, row + 1);
      cols[ci] = c;
      std::int64_t term = mod_reduce(v * sub, x.n);
      acc = mod_reduce(acc + (used % 2 == 0 ? term : x.n - term), x.n);
    }
  }
  return acc;
}

std::int64_t mat_det(const ZnMat& x) {
  std::vector<int> cols(x.k);
  for (int i = 0; i < x.k; ++i) cols[i] = i;
  return det_rec(x, cols, 0);
}

std::optional<ZnMat> mat_inverse(const ZnMat& x) {
  std::int64_t d = mat_det(x);
  if (std::gcd(mod_reduce(d, x.n), x.n) != 1) return std::nullopt;
  std::int64_t dinv = mod_inv(d, x.n);
  int k = x.k;
  ZnMat inv = ZnMat::zeros(x.n, k);
  if (k == 1) {
    inv.at(0, 0) = dinv;
    return inv;
  }
  // Adjugate: inv = det^-1 * transposed cofactor matrix. Ranks stay small, so
  // the k^2 minor determinants are cheap and there is no pivoting to reason
  // about over composite moduli.
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      ZnMat minor = ZnMat::zeros(x.n, k - 1);
      for (int i = 0, mi = 0; i < k; ++i) {
        if (i == r) continue;
        for (int j = 0, mj = 0; j < k; ++j) {
          if (j == c) continue;
          minor.at(mi, mj) = x.at(i, j);
          ++mj;
        }
        ++mi;
      }
      std::int64_t cof = mat_det(minor);
      if ((r + c) % 2 == 1) cof = mod_reduce(-cof, x.n);
      inv.at(c, r) = mod_reduce(cof * dinv, x.n);
    }
  }
  return inv;
}

ZnMat mat_pow(const ZnMat& x, int e) {
  if (e < 0) throw std::invalid_argument("mat_pow: negative exponent");
  ZnMat r = ZnMat::identity(x.n, x.k);
  ZnMat b = x;
  while (e > 0) {
    if (e & 1) r = mat_mul(r, b);
    e >>= 1;
    if (e > 0) b = mat_mul(b, b);
  }
  return r;
}

std::string mat_to_string(const ZnMat& x) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < x.k; ++i) {
    if (i) os << ",";
    os << "[";
    for (int j = 0; j < x.k; ++j) {
      if (j) os << ",";
      os << x.at(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

HowellForm howell_form(std::vector<std::vector<std::int64_t>> rows, int cols,
                       std::int64_t n) {
  if (n < 2) throw std::invalid_argument("howell_form: modulus must be >= 2");
  HowellForm h;
  h.n = n;
  h.cols = cols;

  std::vector<std::vector<std::int64_t>> work;
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != cols) {
      throw std::invalid_argument("howell_form: row length mismatch");
    }
    for (auto& v : r) v = mod_reduce(v, n);
    work.push_back(std::move(r));
  }

  for (int c = 0; c < cols; ++c) {
    // All rows still in `work` have zeros strictly left of column c.
    std::vector<std::vector<std::int64_t>> keep;
    std::vector<std::vector<std::int64_t>> hits;
    for (auto& r : work) {
      if (r[c] != 0) {
        hits.push_back(std::move(r));
      } else {
        keep.push_back(std::move(r));
      }
    }
    work = std::move(keep);
    if (hits.empty()) continue;

    std::vector<std::int64_t> pivot = std::move(hits.front());
    for (size_t i = 1; i < hits.size(); ++i) {
      std::vector<std::int64_t>& r = hits[i];
      std::int64_t a = pivot[c], b = r[c];
      Xgcd e = xgcd(a, b);
      std::int64_t af = a / e.g, bf = b / e.g;
      std::vector<std::int64_t> np(cols), nr(cols);
      for (int j = c; j < cols; ++j) {
        np[j] = mod_reduce(e.s * pivot[j] + e.t * r[j], n);
        nr[j] = mod_reduce(af * r[j] - bf * pivot[j], n);
      }
      pivot = std::move(np);
      bool zero = true;
      for (int j = c; j < cols; ++j) {
        if (nr[j] != 0) {
          zero = false;
          break;
        }
      }
      if (!zero) work.push_back(std::move(nr));
    }

    std::int64_t u = unit_scale(pivot[c], n);
    for (int j = c; j < cols; ++j) pivot[j] = mod_reduce(pivot[j] * u, n);
    std::int64_t d = pivot[c];
    if (d != 1) {
      std::int64_t f = n / d;
      std::vector<std::int64_t> ann(cols, 0);
      bool zero = true;
      for (int j = c + 1; j < cols; ++j) {
        ann[j] = mod_reduce(pivot[j] * f, n);
        if (ann[j] != 0) zero = false;
      }
      if (!zero) work.push_back(std::move(ann));
    }
    h.rows.push_back(std::move(pivot));
    h.pivot_cols.push_back(c);
    h.pivot_vals.push_back(d);
  }

  // Reduce entries above each pivot into [0, pivot value).
  for (size_t i = 0; i < h.rows.size(); ++i) {
    int c = h.pivot_cols[i];
    std::int64_t d = h.pivot_vals[i];
    for (size_t j = 0; j < i; ++j) {
      std::int64_t q = h.rows[j][c] / d;
      if (q == 0) continue;
      for (int t = c; t < h.cols; ++t) {
        h.rows[j][t] = mod_reduce(h.rows[j][t] - q * h.rows[i][t], n);
      }
    }
  }
  return h;
}

bool in_span(const HowellForm& h, ZnVec v) {
  if (static_cast<int>(v.size()) != h.cols) {
    throw std::invalid_argument("in_span: length mismatch");
  }
  for (auto& x : v) x = mod_reduce(x, h.n);
  for (size_t i = 0; i < h.rows.size(); ++i) {
    int c = h.pivot_cols[i];
    if (v[c] == 0) continue;
    std::int64_t d = h.pivot_vals[i];
    if (v[c] % d != 0) return false;
    std::int64_t q = v[c] / d;
    for (int t = c; t < h.cols; ++t) {
      v[t] = mod_reduce(v[t] - q * h.rows[i][t], h.n);
    }
  }
  for (std::int64_t x : v) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<std::int64_t> howell_orders(const HowellForm& h) {
  std::vector<std::int64_t> ord;
  ord.reserve(h.pivot_vals.size());
  for (std::int64_t d : h.pivot_vals) ord.push_back(h.n / d);
  return ord;
}

std::uint64_t span_size(const HowellForm& h) {
  std::uint64_t total = 1;
  for (std::int64_t o : howell_orders(h)) {
    std::uint64_t next = total * static_cast<std::uint64_t>(o);
    if (next / static_cast<std::uint64_t>(o) != total) {
      throw std::overflow_error("span_size: count exceeds 64 bits");
    }
    total = next;
  }
  return total;
}

HowellForm right_kernel_mod(const std::vector<std::vector<std::int64_t>>& a,
                            int cols, std::int64_t n) {
  int m = static_cast<int>(a.size());
  for (const auto& r : a) {
    if (static_cast<int>(r.size()) != cols) {
      throw std::invalid_argument("right_kernel_mod: row length mismatch");
    }
  }
  // Left kernel of the transpose, tracked through an augmented identity:
  // Howell rows of [A^T | I] whose A^T part vanished give spanning kernel
  // vectors of { x : A x = 0 }.
  std::vector<std::vector<std::int64_t>> aug;
  aug.reserve(cols);
  for (int i = 0; i < cols; ++i) {
    std::vector<std::int64_t> row(m + cols, 0);
    for (int j = 0; j < m; ++j) row[j] = mod_reduce(a[j][i], n);
    row[m + i] = 1 % n;
    aug.push_back(std::move(row));
  }
  HowellForm h = howell_form(std::move(aug), m + cols, n);
  std::vector<std::vector<std::int64_t>> ker;
  for (size_t i = 0; i < h.rows.size(); ++i) {
    if (h.pivot_cols[i] >= m) {
      ker.emplace_back(h.rows[i].begin() + m, h.rows[i].end());
    }
  }
  return howell_form(std::move(ker), cols, n);
}

}  // namespace crowell
