#include "crowell/modmat.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "support/oracles.hpp"

using namespace crowell;
using testsupport::Rng;
using testsupport::uniform;

TEST_CASE("extended gcd and modular inverses") {
  Rng rng(0x9E3779B9u);
  for (int i = 0; i < 1000; ++i) {
    std::int64_t a = uniform(rng, -50, 50), b = uniform(rng, -50, 50);
    Xgcd x = xgcd(a, b);
    CHECK(x.g == x.s * a + x.t * b);
    CHECK(x.g == std::gcd(a, b));
  }
  CHECK(mod_inv(3, 7) == 5);
  CHECK(mod_inv(5, 12) == 5);
  CHECK_THROWS_AS(mod_inv(4, 6), std::invalid_argument);
  for (int i = 0; i < 200; ++i) {
    std::int64_t n = uniform(rng, 2, 30);
    std::int64_t a = uniform(rng, 0, static_cast<int>(n) - 1);
    std::int64_t u = unit_scale(a, n);
    CHECK(std::gcd(u, n) == 1);
    CHECK(mod_reduce(u * a, n) == std::gcd(a == 0 ? n : a, n) % n);
  }
}

TEST_CASE("matrix inverse over composite moduli") {
  Rng rng(0x1234FEDCu);
  for (int i = 0; i < 300; ++i) {
    std::int64_t n = uniform(rng, 2, 12);
    int k = uniform(rng, 1, 3);
    ZnMat m = testsupport::random_invertible(rng, n, k);
    auto inv = mat_inverse(m);
    REQUIRE(inv.has_value());
    CHECK(mat_mul(m, *inv) == ZnMat::identity(n, k));
    CHECK(mat_mul(*inv, m) == ZnMat::identity(n, k));
  }
  CHECK(!mat_inverse(ZnMat::from_rows(6, {{2, 0}, {0, 1}})));
  CHECK(!mat_inverse(ZnMat::from_rows(4, {{2}})));
}

TEST_CASE("determinant is multiplicative") {
  Rng rng(0xBEEF0001u);
  for (int i = 0; i < 300; ++i) {
    std::int64_t n = uniform(rng, 2, 11);
    int k = uniform(rng, 1, 3);
    ZnMat a = ZnMat::zeros(n, k), b = ZnMat::zeros(n, k);
    for (auto& x : a.a) x = uniform(rng, 0, static_cast<int>(n) - 1);
    for (auto& x : b.a) x = uniform(rng, 0, static_cast<int>(n) - 1);
    CHECK(mat_det(mat_mul(a, b)) == mod_reduce(mat_det(a) * mat_det(b), n));
  }
}

namespace {

// Exhaustive span of a row set over Z/n, as a sorted set of vectors.
std::set<ZnVec> enumerate_span(const std::vector<ZnVec>& rows, int cols,
                               std::int64_t n) {
  std::set<ZnVec> span;
  std::vector<std::int64_t> c(rows.size(), 0);
  while (true) {
    ZnVec v(cols, 0);
    for (size_t i = 0; i < rows.size(); ++i) {
      for (int j = 0; j < cols; ++j) {
        v[j] = mod_reduce(v[j] + c[i] * rows[i][j], n);
      }
    }
    span.insert(v);
    size_t i = rows.size();
    bool done = true;
    while (i-- > 0) {
      if (++c[i] < n) {
        done = false;
        break;
      }
      c[i] = 0;
    }
    if (done || rows.empty()) break;
  }
  return span;
}

}  // namespace

TEST_CASE("howell form is a canonical span representative") {
  Rng rng(0x40E11u);
  for (int i = 0; i < 300; ++i) {
    std::int64_t n = uniform(rng, 2, 9);
    int cols = uniform(rng, 1, 3);
    int nrows = uniform(rng, 0, 3);
    std::vector<ZnVec> rows(nrows, ZnVec(cols));
    for (auto& r : rows) {
      for (auto& x : r) x = uniform(rng, 0, static_cast<int>(n) - 1);
    }
    HowellForm h = howell_form(rows, cols, n);
    std::set<ZnVec> span = enumerate_span(rows, cols, n);

    // size and membership agree with the exhaustive span
    CHECK(span_size(h) == span.size());
    for (const auto& v : span) CHECK(in_span(h, v));

    // every Howell row lies in the original span
    std::set<ZnVec> hspan = enumerate_span(h.rows, cols, n);
    CHECK(hspan == span);

    // canonical: rewriting the generating set leaves the form unchanged
    std::vector<ZnVec> shuffled = rows;
    if (shuffled.size() > 1) std::swap(shuffled[0], shuffled.back());
    if (!shuffled.empty()) {
      ZnVec mixed(cols, 0);
      for (const auto& r : shuffled) {
        for (int j = 0; j < cols; ++j) mixed[j] = mod_reduce(mixed[j] + r[j], n);
      }
      shuffled.push_back(mixed);
    }
    HowellForm h2 = howell_form(shuffled, cols, n);
    CHECK(h.rows == h2.rows);
    CHECK(h.pivot_cols == h2.pivot_cols);
  }
}

TEST_CASE("howell orders factor the span") {
  Rng rng(0x0D3E5u);
  for (int i = 0; i < 200; ++i) {
    std::int64_t n = uniform(rng, 2, 12);
    int cols = uniform(rng, 1, 4);
    std::vector<ZnVec> rows(uniform(rng, 0, 4), ZnVec(cols));
    for (auto& r : rows) {
      for (auto& x : r) x = uniform(rng, 0, static_cast<int>(n) - 1);
    }
    HowellForm h = howell_form(rows, cols, n);
    std::vector<std::int64_t> orders = howell_orders(h);
    std::uint64_t product = 1;
    for (auto o : orders) product *= static_cast<std::uint64_t>(o);
    CHECK(product == span_size(h));
  }
}

TEST_CASE("right kernel solves the system exactly") {
  Rng rng(0xFEED5EEDu);
  for (int i = 0; i < 300; ++i) {
    std::int64_t n = uniform(rng, 2, 6);
    int cols = uniform(rng, 1, 4);
    int nrows = uniform(rng, 0, 3);
    std::vector<ZnVec> a(nrows, ZnVec(cols));
    for (auto& r : a) {
      for (auto& x : r) x = uniform(rng, 0, static_cast<int>(n) - 1);
    }
    HowellForm ker = right_kernel_mod(a, cols, n);
    // every kernel basis row is a solution
    for (const auto& v : ker.rows) {
      for (const auto& r : a) {
        std::int64_t acc = 0;
        for (int j = 0; j < cols; ++j) acc += r[j] * v[j];
        CHECK(mod_reduce(acc, n) == 0);
      }
    }
    // brute-force solution count matches
    std::uint64_t expected = 0;
    ZnVec v(cols, 0);
    while (true) {
      bool ok = true;
      for (const auto& r : a) {
        std::int64_t acc = 0;
        for (int j = 0; j < cols; ++j) acc += r[j] * v[j];
        if (mod_reduce(acc, n) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        ++expected;
        CHECK(in_span(ker, v));
      }
      int j = cols;
      bool done = true;
      while (j-- > 0) {
        if (++v[j] < n) {
          done = false;
          break;
        }
        v[j] = 0;
      }
      if (done) break;
    }
    CHECK(span_size(ker) == expected);
  }
}
