#include <benchmark/benchmark.h>

#include <functional>

#include "crowell/presentation.hpp"
#include "crowell/quandle.hpp"

using namespace crowell;

namespace {

LaurentPoly dense_poly(int mu, int spread) {
  LaurentPoly p(mu);
  Exponents e(mu, 0);
  // every exponent vector in [-spread, spread]^mu, coefficient drawn from
  // a fixed cheap sequence
  long counter = 1;
  std::function<void(int)> fill = [&](int at) {
    if (at == mu) {
      p.add_term(e, (counter % 7) - 3);
      ++counter;
      return;
    }
    for (int v = -spread; v <= spread; ++v) {
      e[at] = v;
      fill(at + 1);
    }
  };
  fill(0);
  return p;
}

void BM_poly_multiply(benchmark::State& state) {
  int mu = static_cast<int>(state.range(0));
  LaurentPoly a = dense_poly(mu, 3);
  LaurentPoly b = dense_poly(mu, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_poly_multiply)->Arg(1)->Arg(2);

void BM_poly_gcd(benchmark::State& state) {
  int mu = static_cast<int>(state.range(0));
  LaurentPoly common = dense_poly(mu, 1);
  LaurentPoly a = dense_poly(mu, 2) * common;
  LaurentPoly b = dense_poly(mu, 1) * common;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcd(a, b));
  }
}
BENCHMARK(BM_poly_gcd)->Arg(1)->Arg(2);

void BM_simplify_seven_crossings(benchmark::State& state) {
  Presentation p = build_presentation(fixtures().at("l7_2_8"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(simplify(p));
  }
}
BENCHMARK(BM_simplify_seven_crossings);

void BM_fingerprint_whitehead(benchmark::State& state) {
  Presentation p = build_presentation(fixtures().at("whitehead"));
  int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fingerprint(p, jobs));
  }
}
BENCHMARK(BM_fingerprint_whitehead)->Arg(1)->Arg(4);

void BM_solve_colorings(benchmark::State& state) {
  Presentation p = build_presentation(fixtures().at("l7_2_8"));
  FiniteModuleSpec spec = FiniteModuleSpec::make(
      7, 2,
      {ZnMat::from_rows(7, {{0, 1}, {5, 1}}),
       ZnMat::from_rows(7, {{0, 1}, {5, 1}})});
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_colorings(p, spec));
  }
}
BENCHMARK(BM_solve_colorings);

}  // namespace

BENCHMARK_MAIN();
