#include "crowell/laurent.hpp"

#include <stdexcept>

#include "doctest.h"
#include "support/oracles.hpp"

using namespace crowell;
using testsupport::random_nonzero_poly;
using testsupport::random_poly;
using testsupport::Rng;

namespace {

LaurentPoly t(int mu, int i, int e = 1) { return LaurentPoly::variable(mu, i, e); }

}  // namespace

TEST_CASE("term order and rendering") {
  LaurentPoly p = (LaurentPoly::one(2) - t(2, 1)) * (LaurentPoly::one(2) - t(2, 2));
  CHECK(to_string(p) == "1 - t1 - t2 + t1*t2");
  CHECK(to_string(LaurentPoly::zero(3)) == "0");
  CHECK(to_string(t(1, 1, -1)) == "t1^-1");
  CHECK(to_string(LaurentPoly::constant(2, -7) * t(2, 2, 3)) == "-7*t2^3");
  // last variable most significant: t1*t2 sorts above t1^5
  LaurentPoly q = t(2, 1) * t(2, 2) + pow(t(2, 1), 5);
  CHECK(to_string(q) == "t1^5 + t1*t2");
  CHECK(q.leading().first == Exponents{1, 1});
}

TEST_CASE("unit normalization picks a canonical associate") {
  LaurentPoly p = LaurentPoly::one(1) - t(1, 1, -1);  // 1 - t1^-1
  CHECK(to_string(unit_normalize(p)) == "-1 + t1");
  CHECK(to_string(unit_normalize(-(t(2, 1) * t(2, 2)))) == "1");
  LaurentPoly r = (LaurentPoly::one(2) - t(2, 2)) * t(2, 2, -1);
  CHECK(to_string(unit_normalize(r)) == "-1 + t2");
  CHECK(unit_normalize(LaurentPoly::zero(2)).is_zero());
}

TEST_CASE("units and inverses") {
  CHECK(is_unit(-(t(2, 1) * t(2, 2, -3))));
  CHECK(!is_unit(LaurentPoly::one(2) + t(2, 1)));
  CHECK(!is_unit(LaurentPoly::constant(1, 2)));
  CHECK(!is_unit(LaurentPoly::zero(1)));
  LaurentPoly u = -(t(2, 1, 2) * t(2, 2, -1));
  CHECK(u * unit_inverse(u) == LaurentPoly::one(2));
  CHECK_THROWS_AS(unit_inverse(LaurentPoly::constant(1, 2)), std::invalid_argument);
}

TEST_CASE("ring operations behave like a commutative ring (random)") {
  Rng rng(0xAB12CD34u);
  for (int i = 0; i < 1000; ++i) {
    int mu = testsupport::uniform(rng, 1, 3);
    LaurentPoly a = random_poly(rng, mu), b = random_poly(rng, mu),
                c = random_poly(rng, mu);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly::zero(mu));
    CHECK(a * LaurentPoly::one(mu) == a);
  }
}

TEST_CASE("parse/print round trip (random)") {
  Rng rng(0x5EED0001u);
  for (int i = 0; i < 1000; ++i) {
    int mu = testsupport::uniform(rng, 1, 3);
    LaurentPoly p = random_poly(rng, mu);
    CHECK(parse_poly(to_string(p), mu) == p);
  }
}

TEST_CASE("parse accepts the documented notation") {
  CHECK(parse_poly("1 - t1 - t2 + t1*t2", 2) ==
        (LaurentPoly::one(2) - t(2, 1)) * (LaurentPoly::one(2) - t(2, 2)));
  CHECK(parse_poly("-t1^-1", 1) == -t(1, 1, -1));
  CHECK(parse_poly("2*t1^2*t2^-3", 2) ==
        LaurentPoly::constant(2, 2) * t(2, 1, 2) * t(2, 2, -3));
  CHECK(parse_poly("0", 2).is_zero());
  CHECK(parse_poly("  t1 +1", 1) == t(1, 1) + LaurentPoly::one(1));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_poly("t0", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("t3", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("t1^", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("1 +", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("t1^1000001", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("", 1), std::invalid_argument);
}

TEST_CASE("exact division inverts multiplication (random)") {
  Rng rng(0xD1AB10Du);
  for (int i = 0; i < 1000; ++i) {
    int mu = testsupport::uniform(rng, 1, 2);
    LaurentPoly p = random_poly(rng, mu);
    LaurentPoly q = random_nonzero_poly(rng, mu);
    auto quotient = exact_div(p * q, q);
    REQUIRE(quotient.has_value());
    CHECK(*quotient == p);
  }
}

TEST_CASE("exact division detects non-divisibility") {
  CHECK(!exact_div(t(1, 1) + LaurentPoly::one(1), LaurentPoly::constant(1, 2)));
  CHECK(!exact_div(LaurentPoly::one(2) - t(2, 1), LaurentPoly::one(2) - t(2, 2)));
  CHECK(exact_div(LaurentPoly::zero(1), t(1, 1)).value().is_zero());
}

TEST_CASE("gcd divides both inputs (random)") {
  Rng rng(0x6CD0006u);
  for (int i = 0; i < 1000; ++i) {
    int mu = testsupport::uniform(rng, 1, 2);
    LaurentPoly a = random_poly(rng, mu, 3), b = random_poly(rng, mu, 3);
    LaurentPoly g = gcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    CHECK(exact_div(a, g).has_value());
    CHECK(exact_div(b, g).has_value());
    CHECK(g == unit_normalize(g));
  }
}

TEST_CASE("gcd recovers shared factors up to a unit") {
  LaurentPoly f = LaurentPoly::one(2) - t(2, 2);
  LaurentPoly a = f * (LaurentPoly::one(2) - t(2, 1));
  LaurentPoly b = f * (LaurentPoly::one(2) + t(2, 1) * t(2, 2));
  CHECK(equal_up_to_unit(gcd(a, b), f));
  CHECK(gcd(a, LaurentPoly::zero(2)) == unit_normalize(a));
  CHECK(gcd(LaurentPoly::zero(2), b) == unit_normalize(b));
  Rng rng(0x377AA442u);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly r = random_nonzero_poly(rng, 2, 2, 1);
    LaurentPoly x = random_nonzero_poly(rng, 2, 2, 1);
    LaurentPoly y = random_nonzero_poly(rng, 2, 2, 1);
    CHECK(exact_div(gcd(x * r, y * r), r).has_value());
  }
}

TEST_CASE("variable maps are ring homomorphisms (random)") {
  Rng rng(0x8A9B0Cu);
  for (int i = 0; i < 1000; ++i) {
    int mu = testsupport::uniform(rng, 2, 3);
    LaurentPoly a = random_poly(rng, mu), b = random_poly(rng, mu);
    int j = testsupport::uniform(rng, 1, mu);
    CHECK(collapse_variable(a + b, j) ==
          collapse_variable(a, j) + collapse_variable(b, j));
    CHECK(collapse_variable(a * b, j) ==
          collapse_variable(a, j) * collapse_variable(b, j));
    CHECK(to_one_variable(a * b) == to_one_variable(a) * to_one_variable(b));
    CHECK(augmentation(a * b) == augmentation(a) * augmentation(b));
    CHECK(augmentation(a + b) == augmentation(a) + augmentation(b));
    std::vector<int> sigma(mu);
    for (int k = 0; k < mu; ++k) sigma[k] = k + 1;
    for (int k = mu - 1; k > 0; --k) {
      std::swap(sigma[k], sigma[testsupport::uniform(rng, 0, k)]);
    }
    CHECK(permute_variables(a * b, sigma) ==
          permute_variables(a, sigma) * permute_variables(b, sigma));
  }
}

TEST_CASE("collapse and permutation details") {
  LaurentPoly p = t(2, 1) * t(2, 2, -2) + LaurentPoly::constant(2, 3);
  CHECK(collapse_variable(p, 2) == t(1, 1) + LaurentPoly::constant(1, 3));
  CHECK(collapse_variable(p, 1) == t(1, 1, -2) + LaurentPoly::constant(1, 3));
  CHECK(permute_variables(p, {2, 1}) ==
        t(2, 2) * t(2, 1, -2) + LaurentPoly::constant(2, 3));
  CHECK(to_one_variable(p) == t(1, 1, -1) + LaurentPoly::constant(1, 3));
}

TEST_CASE("substitute respects ring structure for every target kind") {
  Rng rng(0x5AB5717u);
  for (int i = 0; i < 1000; ++i) {
    int mu = testsupport::uniform(rng, 1, 2);
    LaurentPoly a = random_poly(rng, mu, 3), b = random_poly(rng, mu, 3);
    int kind = i % 3;
    if (kind == 0) {
      // Laurent target: variables to signed monomials (units).
      std::vector<LaurentPoly> images;
      for (int v = 0; v < mu; ++v) {
        Exponents e(2);
        e[0] = testsupport::uniform(rng, -1, 1);
        e[1] = testsupport::uniform(rng, -1, 1);
        images.push_back(LaurentPoly::monomial(
            2, e, testsupport::uniform(rng, 0, 1) == 0 ? 1 : -1));
      }
      RingMapSpec m = RingMapSpec::to_laurent(mu, 2, images);
      LaurentPoly fa = std::get<LaurentPoly>(substitute(a, m));
      LaurentPoly fb = std::get<LaurentPoly>(substitute(b, m));
      CHECK(std::get<LaurentPoly>(substitute(a + b, m)) == fa + fb);
      CHECK(std::get<LaurentPoly>(substitute(a * b, m)) == fa * fb);
    } else if (kind == 1) {
      std::int64_t n = testsupport::uniform(rng, 2, 9);
      std::vector<std::int64_t> units;
      for (int v = 0; v < mu; ++v) units.push_back(testsupport::random_unit(rng, n));
      RingMapSpec m = RingMapSpec::to_residue(mu, n, units);
      auto fa = std::get<ResidueValue>(substitute(a, m));
      auto fb = std::get<ResidueValue>(substitute(b, m));
      auto fab = std::get<ResidueValue>(substitute(a * b, m));
      auto fapb = std::get<ResidueValue>(substitute(a + b, m));
      CHECK(fab.value == mod_reduce(fa.value * fb.value, n));
      CHECK(fapb.value == mod_reduce(fa.value + fb.value, n));
    } else {
      std::int64_t n = testsupport::uniform(rng, 2, 7);
      int k = 2;
      ZnMat base = testsupport::random_invertible(rng, n, k);
      std::vector<ZnMat> actions;
      for (int v = 0; v < mu; ++v) {
        actions.push_back(mat_pow(base, testsupport::uniform(rng, 1, 2)));
      }
      RingMapSpec m = RingMapSpec::to_matrix(mu, n, actions);
      ZnMat fa = std::get<ZnMat>(substitute(a, m));
      ZnMat fb = std::get<ZnMat>(substitute(b, m));
      CHECK(std::get<ZnMat>(substitute(a * b, m)) == mat_mul(fa, fb));
      CHECK(std::get<ZnMat>(substitute(a + b, m)) == mat_add(fa, fb));
    }
  }
}

TEST_CASE("ring map validation rejects bad images") {
  // non-unit Laurent image
  CHECK_THROWS_AS(RingMapSpec::to_laurent(
                      1, 1, {LaurentPoly::one(1) + t(1, 1)}),
                  std::invalid_argument);
  // non-coprime residue image
  CHECK_THROWS_AS(RingMapSpec::to_residue(1, 6, {3}), std::invalid_argument);
  // singular matrix image
  CHECK_THROWS_AS(RingMapSpec::to_matrix(1, 4, {ZnMat::from_rows(4, {{2}})}),
                  std::invalid_argument);
  // non-commuting matrix images
  ZnMat m1 = ZnMat::from_rows(5, {{1, 1}, {0, 1}});
  ZnMat m2 = ZnMat::from_rows(5, {{1, 0}, {1, 1}});
  CHECK_THROWS_AS(RingMapSpec::to_matrix(2, 5, {m1, m2}), std::invalid_argument);
  // wrong image count
  CHECK_THROWS_AS(RingMapSpec::to_residue(2, 5, {2}), std::invalid_argument);
}

TEST_CASE("pow handles negative exponents on units") {
  LaurentPoly u = -t(2, 2);
  CHECK(pow(u, -2) * pow(u, 2) == LaurentPoly::one(2));
  CHECK(pow(u, 0) == LaurentPoly::one(2));
  CHECK_THROWS_AS(pow(LaurentPoly::one(1) + t(1, 1), -1), std::invalid_argument);
}
