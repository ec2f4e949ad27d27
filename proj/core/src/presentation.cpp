#include "crowell/presentation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lambda_solve.hpp"

namespace crowell {

int Presentation::index_of(const std::string& gen) const {
  for (size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == gen) return static_cast<int>(i);
  }
  return -1;
}

void validate(const Presentation& p) {
  if (p.mu < 0) throw std::invalid_argument("presentation: negative mu");
  size_t g = p.generators.size();
  if (p.phi.size() != g) {
    throw std::invalid_argument("presentation: phi size mismatch");
  }
  std::set<std::string> names;
  for (const auto& name : p.generators) {
    if (name.empty()) throw std::invalid_argument("presentation: empty generator name");
    if (!names.insert(name).second) {
      throw std::invalid_argument("presentation: duplicate generator " + name);
    }
  }
  for (const auto& v : p.phi) {
    if (v.mu() != p.mu) {
      throw std::invalid_argument("presentation: phi variable count mismatch");
    }
    if (augmentation(v) != 0) {
      throw std::invalid_argument("presentation: phi value does not augment to zero");
    }
  }
  for (const auto& row : p.rows) {
    if (row.size() != g) {
      throw std::invalid_argument("presentation: row width mismatch");
    }
    LaurentPoly acc(p.mu);
    for (size_t i = 0; i < g; ++i) {
      if (row[i].mu() != p.mu) {
        throw std::invalid_argument("presentation: row variable count mismatch");
      }
      acc += row[i] * p.phi[i];
    }
    if (!acc.is_zero()) {
      throw std::invalid_argument("presentation: row is not phi-compatible");
    }
  }
  for (const auto& s : p.seeds) {
    if (s.expr.size() != g) {
      throw std::invalid_argument("presentation: seed width mismatch");
    }
    if (s.component < 1 || (p.mu > 0 && s.component > p.mu)) {
      throw std::invalid_argument("presentation: seed component out of range");
    }
  }
}

Presentation build_presentation(const Diagram& d) {
  crowell::validate(d);
  Presentation p;
  p.mu = d.mu;
  size_t g = d.arcs.size();
  p.generators.reserve(g);
  p.phi.reserve(g);
  for (const Arc& a : d.arcs) {
    p.generators.push_back(a.id);
    p.phi.push_back(LaurentPoly::variable(d.mu, a.component) -
                    LaurentPoly::one(d.mu));
  }
  for (const Crossing& c : d.crossings) {
    std::vector<LaurentPoly> row(g, LaurentPoly::zero(d.mu));
    int left = p.index_of(c.left);
    int right = p.index_of(c.right);
    if (c.trivial) {
      row[right] += LaurentPoly::one(d.mu);
      row[left] -= LaurentPoly::one(d.mu);
    } else {
      int over = p.index_of(c.over);
      int comp_left = d.component_of(c.left);
      int comp_over = d.component_of(c.over);
      row[over] += LaurentPoly::one(d.mu) -
                   LaurentPoly::variable(d.mu, comp_left);
      row[right] += LaurentPoly::variable(d.mu, comp_over);
      row[left] -= LaurentPoly::one(d.mu);
    }
    p.rows.push_back(std::move(row));
  }
  for (const Arc& a : d.arcs) {
    OrbitSeed s;
    s.id = a.id;
    s.component = a.component;
    s.expr.assign(g, LaurentPoly::zero(d.mu));
    s.expr[p.index_of(a.id)] = LaurentPoly::one(d.mu);
    p.seeds.push_back(std::move(s));
  }
  crowell::validate(p);
  return p;
}

int graded_component(const LaurentPoly& v) {
  if (v.term_count() != 2) return 0;
  for (int i = 1; i <= v.mu(); ++i) {
    LaurentPoly probe =
        LaurentPoly::variable(v.mu(), i) - LaurentPoly::one(v.mu());
    if (v == probe) return i;
  }
  return 0;
}

namespace {

std::vector<LaurentPoly> canonical_row(std::vector<LaurentPoly> row) {
  for (const auto& c : row) {
    if (c.is_zero()) continue;
    auto u = exact_div(unit_normalize(c), c);
    if (!u || !is_unit(*u)) {
      throw std::logic_error("canonical_row: normalization failed");
    }
    if (!(*u == LaurentPoly::one(c.mu()))) {
      for (auto& x : row) x = *u * x;
    }
    break;
  }
  return row;
}

std::string row_key(const std::vector<LaurentPoly>& row) {
  std::ostringstream os;
  for (const auto& c : row) os << to_string(c) << '|';
  return os.str();
}

bool row_is_zero(const std::vector<LaurentPoly>& row) {
  for (const auto& c : row) {
    if (!c.is_zero()) return false;
  }
  return true;
}

}  // namespace

Presentation simplify(const Presentation& input, const SimplifyOptions& opts) {
  crowell::validate(input);
  Presentation p = input;
  int changes_left = opts.max_changes;

  auto unique_name = [&](std::string base) {
    while (p.index_of(base) >= 0) base += "'";
    return base;
  };

  auto erase_generator = [&](size_t g) {
    p.generators.erase(p.generators.begin() + g);
    p.phi.erase(p.phi.begin() + g);
    for (auto& row : p.rows) row.erase(row.begin() + g);
    for (auto& s : p.seeds) s.expr.erase(s.expr.begin() + g);
  };

  // Eliminate generator g using row r, whose entry at g must be a unit.
  auto pivot_eliminate = [&](size_t r, size_t g) {
    LaurentPoly inv = unit_inverse(p.rows[r][g]);
    size_t width = p.generators.size();
    for (size_t r2 = 0; r2 < p.rows.size(); ++r2) {
      if (r2 == r) continue;
      LaurentPoly c = p.rows[r2][g];
      if (c.is_zero()) continue;
      LaurentPoly f = c * inv;
      for (size_t x = 0; x < width; ++x) {
        p.rows[r2][x] -= f * p.rows[r][x];
      }
    }
    for (auto& s : p.seeds) {
      LaurentPoly c = s.expr[g];
      if (c.is_zero()) continue;
      LaurentPoly f = c * inv;
      for (size_t x = 0; x < width; ++x) {
        s.expr[x] -= f * p.rows[r][x];
      }
    }
    p.rows.erase(p.rows.begin() + r);
    erase_generator(g);
  };

  // Replace the generator at position gsel by z = sum_x prim[x] * x, where
  // prim[gsel] is a unit. Rows, seeds and phi are rewritten in place.
  auto change_generator = [&](size_t gsel, const std::vector<LaurentPoly>& prim) {
    LaurentPoly pu_inv = unit_inverse(prim[gsel]);
    size_t width = p.generators.size();
    LaurentPoly new_phi(p.mu);
    for (size_t x = 0; x < width; ++x) new_phi += prim[x] * p.phi[x];
    auto rewrite = [&](std::vector<LaurentPoly>& vec) {
      LaurentPoly c = vec[gsel];
      if (c.is_zero()) return;
      LaurentPoly f = c * pu_inv;
      for (size_t x = 0; x < width; ++x) {
        if (x == gsel) continue;
        vec[x] -= f * prim[x];
      }
      vec[gsel] = f;
    };
    for (auto& row : p.rows) rewrite(row);
    for (auto& s : p.seeds) rewrite(s.expr);
    p.generators[gsel] = unique_name(p.generators[gsel] + "'");
    p.phi[gsel] = new_phi;
  };

  bool changed = true;
  while (changed) {
    changed = false;

    // Zero and duplicate rows (duplicates up to a unit factor).
    {
      std::set<std::string> seen;
      std::vector<std::vector<LaurentPoly>> kept;
      for (auto& row : p.rows) {
        if (row_is_zero(row)) {
          changed = true;
          continue;
        }
        std::string key = row_key(canonical_row(row));
        if (!seen.insert(key).second) {
          changed = true;
          continue;
        }
        kept.push_back(std::move(row));
      }
      p.rows = std::move(kept);
      if (changed) continue;
    }

    // Unit pivots: first eligible row in input order, first unit entry in
    // generator order.
    for (size_t r = 0; r < p.rows.size() && !changed; ++r) {
      for (size_t g = 0; g < p.generators.size(); ++g) {
        if (is_unit(p.rows[r][g])) {
          pivot_eliminate(r, g);
          changed = true;
          break;
        }
      }
    }
    if (changed) continue;

    // Rows that are bounded combinations of the others, dropped from the
    // back so earlier structure survives.
    if (p.rows.size() > 1) {
      for (size_t r = p.rows.size(); r-- > 0 && !changed;) {
        std::vector<std::vector<LaurentPoly>> others;
        others.reserve(p.rows.size() - 1);
        for (size_t i = 0; i < p.rows.size(); ++i) {
          if (i != r) others.push_back(p.rows[i]);
        }
        if (bounded_combination(p.rows[r], others, p.mu, opts.window)) {
          p.rows.erase(p.rows.begin() + r);
          changed = true;
        }
      }
    }
    if (changed) continue;

    if (changes_left <= 0) break;

    // Content extraction: when a row is content * primitive and the primitive
    // part has a unit coefficient, switch a generator to that primitive
    // combination. The row then involves a single generator, which later
    // feeds the pivot synthesis below.
    for (size_t r = 0; r < p.rows.size() && !changed; ++r) {
      int support = 0;
      for (const auto& c : p.rows[r]) {
        if (!c.is_zero()) ++support;
      }
      if (support < 2) continue;
      LaurentPoly cont(p.mu);
      for (const auto& c : p.rows[r]) {
        if (c.is_zero()) continue;
        cont = cont.is_zero() ? unit_normalize(c) : gcd(cont, c);
      }
      if (is_unit(cont)) continue;
      std::vector<LaurentPoly> prim(p.generators.size(), LaurentPoly(p.mu));
      for (size_t x = 0; x < p.generators.size(); ++x) {
        if (p.rows[r][x].is_zero()) continue;
        auto q = exact_div(p.rows[r][x], cont);
        if (!q) throw std::logic_error("simplify: content does not divide row");
        prim[x] = std::move(*q);
      }
      size_t gsel = p.generators.size();
      for (size_t x = 0; x < p.generators.size(); ++x) {
        if (is_unit(prim[x])) {
          gsel = x;
          break;
        }
      }
      if (gsel == p.generators.size()) continue;
      change_generator(gsel, prim);
      --changes_left;
      changed = true;
    }
    if (changed) continue;

    // Pivot synthesis: look for column shears (plus additions of rows
    // supported on a single generator) that turn an entry of some row into a
    // unit. Generators whose phi is not of the arc form t_i - 1 are
    // preferred for elimination.
    {
      std::vector<size_t> col_order;
      for (size_t g = 0; g < p.generators.size(); ++g) {
        if (graded_component(p.phi[g]) == 0) col_order.push_back(g);
      }
      for (size_t g = 0; g < p.generators.size(); ++g) {
        if (graded_component(p.phi[g]) != 0) col_order.push_back(g);
      }

      for (size_t r = 0; r < p.rows.size() && !changed; ++r) {
        for (size_t g : col_order) {
          if (p.rows[r][g].is_zero()) continue;
          std::vector<size_t> other_cols;
          for (size_t x = 0; x < p.generators.size(); ++x) {
            if (x != g && !p.rows[r][x].is_zero()) other_cols.push_back(x);
          }
          std::vector<size_t> principal_rows;
          for (size_t r2 = 0; r2 < p.rows.size(); ++r2) {
            if (r2 == r) continue;
            bool only_g = !p.rows[r2][g].is_zero();
            for (size_t x = 0; x < p.generators.size() && only_g; ++x) {
              if (x != g && !p.rows[r2][x].is_zero()) only_g = false;
            }
            if (only_g) principal_rows.push_back(r2);
          }
          if (other_cols.empty() && principal_rows.empty()) continue;

          std::vector<std::vector<LaurentPoly>> basis;
          for (size_t x : other_cols) basis.push_back({p.rows[r][x]});
          for (size_t r2 : principal_rows) basis.push_back({p.rows[r2][g]});

          std::vector<Exponents> targets;
          {
            Exponents cur(p.mu, 0);
            std::vector<Exponents> win;
            // Reuse the window enumeration: candidate pivot units have
            // exponents in [-synth_range, synth_range]^mu.
            std::function<void(int)> rec = [&](int pos) {
              if (pos == p.mu) {
                win.push_back(cur);
                return;
              }
              for (int e = -opts.synth_range; e <= opts.synth_range; ++e) {
                cur[pos] = e;
                rec(pos + 1);
              }
            };
            rec(0);
            std::sort(win.begin(), win.end(), ColexLess{});
            targets = std::move(win);
          }

          bool applied = false;
          for (const Exponents& e : targets) {
            for (int sign : {1, -1}) {
              LaurentPoly m = LaurentPoly::monomial(p.mu, e, sign);
              std::vector<LaurentPoly> target{m - p.rows[r][g]};
              auto sol = bounded_combination(target, basis, p.mu, opts.window);
              if (!sol) continue;
              // Shear the chosen columns into column g.
              for (size_t i = 0; i < other_cols.size(); ++i) {
                const LaurentPoly& lam = (*sol)[i];
                if (lam.is_zero()) continue;
                size_t x = other_cols[i];
                for (auto& row : p.rows) row[g] += lam * row[x];
                for (auto& s : p.seeds) s.expr[g] += lam * s.expr[x];
                p.phi[x] -= lam * p.phi[g];
                p.generators[x] = unique_name(p.generators[x] + "'");
              }
              // Add multiples of the single-generator rows.
              for (size_t i = 0; i < principal_rows.size(); ++i) {
                const LaurentPoly& q = (*sol)[other_cols.size() + i];
                if (q.is_zero()) continue;
                size_t r2 = principal_rows[i];
                for (size_t x = 0; x < p.generators.size(); ++x) {
                  p.rows[r][x] += q * p.rows[r2][x];
                }
              }
              applied = true;
              break;
            }
            if (applied) break;
          }
          if (applied) {
            --changes_left;
            changed = true;
            break;
          }
        }
      }
    }
  }

  for (auto& row : p.rows) row = canonical_row(std::move(row));
  crowell::validate(p);
  return p;
}

Presentation sublink_quotient(const Presentation& p, const Diagram& d, int j) {
  crowell::validate(p);
  if (j < 1 || j > p.mu) {
    throw std::invalid_argument("sublink_quotient: component out of range");
  }
  if (p.mu < 2) {
    throw std::invalid_argument("sublink_quotient: needs at least two components");
  }
  if (p.generators.size() != d.arcs.size()) {
    throw std::invalid_argument("sublink_quotient: presentation does not match diagram");
  }
  for (size_t i = 0; i < d.arcs.size(); ++i) {
    if (p.generators[i] != d.arcs[i].id) {
      throw std::invalid_argument("sublink_quotient: presentation does not match diagram");
    }
  }

  Presentation out;
  out.mu = p.mu - 1;
  out.generators = p.generators;
  for (const auto& v : p.phi) out.phi.push_back(collapse_variable(v, j));
  for (const auto& row : p.rows) {
    std::vector<LaurentPoly> nr;
    nr.reserve(row.size());
    for (const auto& c : row) nr.push_back(collapse_variable(c, j));
    out.rows.push_back(std::move(nr));
  }
  for (size_t i = 0; i < d.arcs.size(); ++i) {
    if (d.arcs[i].component != j) continue;
    std::vector<LaurentPoly> kill(out.generators.size(),
                                  LaurentPoly::zero(out.mu));
    kill[i] = LaurentPoly::one(out.mu);
    out.rows.push_back(std::move(kill));
  }
  for (size_t i = 0; i < d.arcs.size(); ++i) {
    const Arc& a = d.arcs[i];
    if (a.component == j) continue;
    OrbitSeed s;
    s.id = a.id;
    s.component = a.component > j ? a.component - 1 : a.component;
    s.expr.assign(out.generators.size(), LaurentPoly::zero(out.mu));
    s.expr[i] = LaurentPoly::one(out.mu);
    out.seeds.push_back(std::move(s));
  }
  crowell::validate(out);
  return out;
}

namespace {

LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m, int mu) {
  size_t n = m.size();
  if (n == 0) return LaurentPoly::one(mu);
  int sign = 1;
  LaurentPoly prev = LaurentPoly::one(mu);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return LaurentPoly::zero(mu);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = exact_div(num, prev);
        if (!q) throw std::logic_error("bareiss_det: inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = LaurentPoly::zero(mu);
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

std::vector<LaurentPoly> elementary_ideal_minors(const Presentation& p, int k) {
  crowell::validate(p);
  int g = static_cast<int>(p.generators.size());
  if (k < 0 || k > g) {
    throw std::invalid_argument("elementary_ideal_minors: k out of range");
  }
  int s = g - k;
  if (s <= 0) return {LaurentPoly::one(p.mu)};
  if (s > static_cast<int>(p.rows.size())) return {LaurentPoly::zero(p.mu)};

  std::vector<int> rowc(s), colc(s);
  std::vector<LaurentPoly> minors;
  auto next_combination = [](std::vector<int>& c, int n) {
    int s2 = static_cast<int>(c.size());
    int i = s2 - 1;
    while (i >= 0 && c[i] == n - s2 + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < s2; ++j) c[j] = c[j - 1] + 1;
    return true;
  };
  for (int i = 0; i < s; ++i) rowc[i] = i;
  do {
    for (int i = 0; i < s; ++i) colc[i] = i;
    do {
      std::vector<std::vector<LaurentPoly>> sub(s);
      for (int i = 0; i < s; ++i) {
        sub[i].reserve(s);
        for (int j = 0; j < s; ++j) sub[i].push_back(p.rows[rowc[i]][colc[j]]);
      }
      minors.push_back(bareiss_det(std::move(sub), p.mu));
    } while (next_combination(colc, g));
  } while (next_combination(rowc, static_cast<int>(p.rows.size())));
  return minors;
}

Presentation reduce_one_variable(const Presentation& p) {
  crowell::validate(p);
  if (p.mu < 1) {
    throw std::invalid_argument("reduce_one_variable: needs at least one variable");
  }
  Presentation out;
  out.mu = 1;
  out.generators = p.generators;
  for (const auto& v : p.phi) out.phi.push_back(to_one_variable(v));
  for (const auto& row : p.rows) {
    std::vector<LaurentPoly> nr;
    nr.reserve(row.size());
    for (const auto& c : row) nr.push_back(to_one_variable(c));
    out.rows.push_back(std::move(nr));
  }
  for (const auto& s : p.seeds) {
    OrbitSeed ns;
    ns.id = s.id;
    ns.component = 1;
    for (const auto& c : s.expr) ns.expr.push_back(to_one_variable(c));
    out.seeds.push_back(std::move(ns));
  }
  crowell::validate(out);
  return out;
}

Presentation permute_components(const Presentation& p,
                                const std::vector<int>& sigma) {
  crowell::validate(p);
  if (static_cast<int>(sigma.size()) != p.mu) {
    throw std::invalid_argument("permute_components: sigma size mismatch");
  }
  std::vector<bool> hit(p.mu, false);
  for (int v : sigma) {
    if (v < 1 || v > p.mu || hit[v - 1]) {
      throw std::invalid_argument("permute_components: sigma is not a permutation");
    }
    hit[v - 1] = true;
  }
  Presentation out;
  out.mu = p.mu;
  out.generators = p.generators;
  for (const auto& v : p.phi) out.phi.push_back(permute_variables(v, sigma));
  for (const auto& row : p.rows) {
    std::vector<LaurentPoly> nr;
    nr.reserve(row.size());
    for (const auto& c : row) nr.push_back(permute_variables(c, sigma));
    out.rows.push_back(std::move(nr));
  }
  for (const auto& s : p.seeds) {
    OrbitSeed ns;
    ns.id = s.id;
    ns.component = sigma[s.component - 1];
    for (const auto& c : s.expr) ns.expr.push_back(permute_variables(c, sigma));
    out.seeds.push_back(std::move(ns));
  }
  crowell::validate(out);
  return out;
}

LaurentPoly alexander_polynomial(const Presentation& p) {
  if (p.mu != 1) {
    throw std::invalid_argument("alexander_polynomial: presentation must have one variable");
  }
  std::vector<LaurentPoly> minors = elementary_ideal_minors(p, 1);
  LaurentPoly g(1);
  for (const auto& m : minors) g = gcd(g, m);
  return unit_normalize(g);
}

}  // namespace crowell
