#include "crowell/presentation.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "crowell/quandle.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace crowell;
using testsupport::Rng;
using testsupport::uniform;

namespace {

// Row of a presentation as generator-name -> rendered coefficient, zero
// entries omitted. Convenient for order-insensitive row comparisons.
std::map<std::string, std::string> row_map(const Presentation& p, size_t r) {
  std::map<std::string, std::string> m;
  for (size_t i = 0; i < p.generators.size(); ++i) {
    if (!p.rows[r][i].is_zero()) m[p.generators[i]] = to_string(p.rows[r][i]);
  }
  return m;
}

FiniteModuleSpec scalar_spec(std::int64_t n, int mu,
                             const std::vector<std::int64_t>& units) {
  std::vector<ZnMat> action;
  for (std::int64_t u : units) action.push_back(ZnMat::from_rows(n, {{u}}));
  (void)mu;
  return FiniteModuleSpec::make(n, 1, std::move(action));
}

}  // namespace

TEST_CASE("crossing rows read off the built-in diagrams") {
  const Presentation w = build_presentation(fixtures().at("whitehead"));
  CHECK(w.mu == 2);
  CHECK(w.generators ==
        std::vector<std::string>{"a1", "a2", "a3", "a4", "a5"});
  REQUIRE(w.rows.size() == 5);
  // crossing c1: over a5, understrand a1 -> a3
  CHECK(row_map(w, 0) == std::map<std::string, std::string>{
                             {"a1", "-1"}, {"a3", "t1"}, {"a5", "1 - t2"}});
  // crossing c2: over a1, understrand a4 -> a2
  CHECK(row_map(w, 1) == std::map<std::string, std::string>{
                             {"a1", "1 - t1"}, {"a2", "t2"}, {"a4", "-1"}});
  // crossing c5: over a4, understrand a2 -> a5
  CHECK(row_map(w, 4) == std::map<std::string, std::string>{
                             {"a2", "-1"}, {"a4", "1 - t1"}, {"a5", "t1"}});

  const Presentation l = build_presentation(fixtures().at("l7_2_8"));
  CHECK(l.mu == 2);
  REQUIRE(l.rows.size() == 7);
  // crossing c1: over a7, understrand a1 -> a3
  CHECK(row_map(l, 0) == std::map<std::string, std::string>{
                             {"a1", "-1"}, {"a3", "t1"}, {"a7", "1 - t2"}});
  // crossing c4: over a7, understrand a4 -> a5
  CHECK(row_map(l, 3) == std::map<std::string, std::string>{
                             {"a4", "-1"}, {"a5", "t1"}, {"a7", "1 - t1"}});
  // crossing c7: over a5, understrand a7 -> a2
  CHECK(row_map(l, 6) == std::map<std::string, std::string>{
                             {"a2", "t1"}, {"a5", "1 - t1"}, {"a7", "-1"}});

  // structure map and seeds
  for (size_t i = 0; i < w.generators.size(); ++i) {
    int comp = fixtures().at("whitehead").component_of(w.generators[i]);
    CHECK(w.phi[i] == LaurentPoly::variable(2, comp) - LaurentPoly::one(2));
    CHECK(graded_component(w.phi[i]) == comp);
  }
  REQUIRE(w.seeds.size() == 5);
  for (size_t i = 0; i < w.seeds.size(); ++i) {
    CHECK(w.seeds[i].id == w.generators[i]);
    for (size_t k = 0; k < w.generators.size(); ++k) {
      CHECK(w.seeds[i].expr[k] ==
            (k == i ? LaurentPoly::one(2) : LaurentPoly::zero(2)));
    }
  }
}

TEST_CASE("rows read off any diagram are compatible with the structure map") {
  Rng rng(0xC0117Au);
  for (int i = 0; i < 1000; ++i) {
    Diagram d = testsupport::random_diagram(rng);
    Presentation p = build_presentation(d);
    REQUIRE_NOTHROW(validate(p));  // includes the phi-compatibility of rows
    CHECK(p.generators.size() == d.arcs.size());
    CHECK(p.rows.size() == d.crossings.size());
    for (const auto& row : p.rows) {
      LaurentPoly acc(p.mu);
      for (size_t g = 0; g < row.size(); ++g) acc += row[g] * p.phi[g];
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("simplification reduces the built-in links to minimal form") {
  SUBCASE("trefoil") {
    Presentation s = simplify(build_presentation(fixtures().at("trefoil")));
    REQUIRE(s.generators.size() == 2);
    REQUIRE(s.rows.size() == 1);
    CHECK(s.generators == std::vector<std::string>{"a2'", "a3"});
    CHECK(to_string(s.phi[0]) == "0");
    CHECK(to_string(s.phi[1]) == "-1 + t1");
    CHECK(to_string(s.rows[0][0]) == "1 - t1 + t1^2");
    CHECK(s.rows[0][1].is_zero());
  }
  SUBCASE("the two-component fixtures give literally equal reduced matrices") {
    Presentation w = simplify(build_presentation(fixtures().at("whitehead")));
    Presentation l = simplify(build_presentation(fixtures().at("l7_2_8")));

    REQUIRE(w.generators.size() == 2);
    REQUIRE(w.rows.size() == 1);
    CHECK(w.generators == std::vector<std::string>{"a3", "a5"});
    CHECK(to_string(w.phi[0]) == "-1 + t2");
    CHECK(to_string(w.phi[1]) == "-1 + t1");
    CHECK(to_string(w.rows[0][0]) ==
          "-1 + 2*t1 - t1^2 + t2 - 2*t1*t2 + t1^2*t2");
    CHECK(to_string(w.rows[0][1]) ==
          "1 - t1 - 2*t2 + 2*t1*t2 + t2^2 - t1*t2^2");

    REQUIRE(l.generators.size() == 2);
    REQUIRE(l.rows.size() == 1);
    CHECK(l.generators == std::vector<std::string>{"a3'", "a7'"});
    CHECK(l.phi == w.phi);
    CHECK(l.rows == w.rows);

    // seeds survive and still express every original arc
    CHECK(w.seeds.size() == 5);
    CHECK(l.seeds.size() == 7);
    for (const auto& s : w.seeds) CHECK(s.expr.size() == 2);
  }
}

TEST_CASE("simplification preserves the presented module on random examples") {
  Rng rng(0x51AB1Eu);
  int shrunk = 0;
  for (int i = 0; i < 150; ++i) {
    Diagram d = testsupport::random_diagram(rng, 2, 6);
    Presentation p = build_presentation(d);
    Presentation s = simplify(p);
    REQUIRE_NOTHROW(validate(s));
    CHECK(s.mu == p.mu);
    CHECK(s.generators.size() <= p.generators.size());
    CHECK(s.seeds.size() == p.seeds.size());
    if (s.generators.size() < p.generators.size()) ++shrunk;

    // coloring counts are module invariants, so they must not move
    std::vector<std::int64_t> units1(p.mu, 1), units2;
    for (int v = 0; v < p.mu; ++v) units2.push_back(v % 2 == 0 ? 2 : 1);
    for (const auto& spec :
         {scalar_spec(3, p.mu, units2), scalar_spec(5, p.mu, units1)}) {
      CHECK(solve_colorings(p, spec).count() ==
            solve_colorings(s, spec).count());
    }
  }
  CHECK(shrunk > 100);  // the reduction actually does something
}

TEST_CASE("quotient by a component matches the documented construction") {
  const Diagram& w = fixtures().at("whitehead");
  Presentation p = build_presentation(w);
  Presentation q = sublink_quotient(p, w, 2);
  REQUIRE_NOTHROW(validate(q));
  CHECK(q.mu == 1);
  CHECK(q.generators == p.generators);
  // one killing row per component-2 arc (a1 and a3) after the crossing rows
  REQUIRE(q.rows.size() == 7);
  CHECK(row_map(q, 5) == std::map<std::string, std::string>{{"a1", "1"}});
  CHECK(row_map(q, 6) == std::map<std::string, std::string>{{"a3", "1"}});
  // coefficients are the old ones with the deleted variable sent to 1
  for (size_t r = 0; r < 5; ++r) {
    for (size_t g = 0; g < p.generators.size(); ++g) {
      CHECK(q.rows[r][g] == collapse_variable(p.rows[r][g], 2));
    }
  }
  // seeds: only the surviving component's arcs
  REQUIRE(q.seeds.size() == 3);
  CHECK(q.seeds[0].id == "a2");
  CHECK(q.seeds[1].id == "a4");
  CHECK(q.seeds[2].id == "a5");
  for (const auto& s : q.seeds) CHECK(s.component == 1);

  // the quotient is only defined against the diagram the rows came from
  CHECK_THROWS_AS(sublink_quotient(simplify(p), w, 2), std::invalid_argument);
  CHECK_THROWS_AS(sublink_quotient(p, w, 3), std::invalid_argument);
  CHECK_THROWS_AS(sublink_quotient(p, w, 0), std::invalid_argument);
  Presentation u = build_presentation(fixtures().at("unknot"));
  CHECK_THROWS_AS(sublink_quotient(u, fixtures().at("unknot"), 1),
                  std::invalid_argument);
}

TEST_CASE("minor conventions at the degenerate sizes") {
  Presentation p = build_presentation(fixtures().at("trefoil"));
  // size zero: the empty minor is 1
  auto at_g = elementary_ideal_minors(p, 3);
  REQUIRE(at_g.size() == 1);
  CHECK(at_g[0] == LaurentPoly::one(1));
  // more columns demanded than rows exist: determinant of nothing is 0
  Presentation wide;
  wide.mu = 1;
  wide.generators = {"x", "y"};
  wide.phi = {LaurentPoly::zero(1), LaurentPoly::zero(1)};
  auto at_zero = elementary_ideal_minors(wide, 0);
  REQUIRE(at_zero.size() == 1);
  CHECK(at_zero[0].is_zero());
  CHECK_THROWS_AS(elementary_ideal_minors(p, 4), std::invalid_argument);
  CHECK_THROWS_AS(elementary_ideal_minors(p, -1), std::invalid_argument);
}

TEST_CASE("fraction-free determinants agree with cofactor expansion") {
  Rng rng(0xDE7E2Au);
  for (int i = 0; i < 200; ++i) {
    int mu = uniform(rng, 1, 2);
    int n = uniform(rng, 1, 4);
    Presentation p;
    p.mu = mu;
    for (int g = 0; g < n; ++g) {
      p.generators.push_back("g" + std::to_string(g + 1));
      p.phi.push_back(LaurentPoly::zero(mu));  // every row is compatible
    }
    for (int r = 0; r < n; ++r) {
      std::vector<LaurentPoly> row;
      for (int c = 0; c < n; ++c) {
        row.push_back(testsupport::random_poly(rng, mu, 3, 1, 3));
      }
      p.rows.push_back(std::move(row));
    }
    auto minors = elementary_ideal_minors(p, 0);
    REQUIRE(minors.size() == 1);
    CHECK(minors[0] == testsupport::laplace_det(p.rows, mu));
  }
}

TEST_CASE("one-variable invariants of the built-in links") {
  Presentation tre = build_presentation(fixtures().at("trefoil"));
  CHECK(to_string(alexander_polynomial(tre)) == "1 - t1 + t1^2");

  Presentation un = build_presentation(fixtures().at("unknot"));
  CHECK(to_string(alexander_polynomial(un)) == "1");

  // two-variable presentations are rejected; reduce first
  Presentation w = build_presentation(fixtures().at("whitehead"));
  CHECK_THROWS_AS(alexander_polynomial(w), std::invalid_argument);
  Presentation r = reduce_one_variable(w);
  CHECK(r.mu == 1);
  CHECK(r.generators == w.generators);
  for (size_t i = 0; i < w.phi.size(); ++i) {
    CHECK(r.phi[i] == to_one_variable(w.phi[i]));
  }
  CHECK_NOTHROW(alexander_polynomial(r));

  // the component-size-one sublinks of the built-ins
  const Diagram& wd = fixtures().at("whitehead");
  const Diagram& ld = fixtures().at("l7_2_8");
  CHECK(to_string(alexander_polynomial(
            build_presentation(delete_component(wd, 1)))) == "1");
  CHECK(to_string(alexander_polynomial(
            build_presentation(delete_component(wd, 2)))) == "1");
  CHECK(to_string(alexander_polynomial(
            build_presentation(delete_component(ld, 1)))) == "1");
  CHECK(to_string(alexander_polynomial(
            build_presentation(delete_component(ld, 2)))) == "1 - t1 + t1^2");
}

TEST_CASE("component relabeling of presentations") {
  Presentation w = build_presentation(fixtures().at("whitehead"));
  Presentation swapped = permute_components(w, {2, 1});
  CHECK(permute_components(swapped, {2, 1}) == w);
  CHECK(swapped.phi[0] == LaurentPoly::variable(2, 1) - LaurentPoly::one(2));
  CHECK(swapped.seeds[0].component == 1);  // a1 moved to component 1
  CHECK_THROWS_AS(permute_components(w, {1}), std::invalid_argument);
  CHECK_THROWS_AS(permute_components(w, {2, 2}), std::invalid_argument);
}

TEST_CASE("presentation validation rejects inconsistent data") {
  Presentation p = build_presentation(fixtures().at("whitehead"));

  Presentation bad_phi = p;
  bad_phi.phi[0] = LaurentPoly::one(2);  // augments to 1, not 0
  CHECK_THROWS_AS(validate(bad_phi), std::invalid_argument);

  Presentation bad_row = p;
  bad_row.rows[0][0] += LaurentPoly::one(2);  // breaks compatibility
  CHECK_THROWS_AS(validate(bad_row), std::invalid_argument);

  Presentation bad_width = p;
  bad_width.rows[0].pop_back();
  CHECK_THROWS_AS(validate(bad_width), std::invalid_argument);

  Presentation dup = p;
  dup.generators[1] = dup.generators[0];
  CHECK_THROWS_AS(validate(dup), std::invalid_argument);

  Presentation bad_seed = p;
  bad_seed.seeds[0].component = 9;
  CHECK_THROWS_AS(validate(bad_seed), std::invalid_argument);
}
