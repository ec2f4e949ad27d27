#include "crowell/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace crowell {

namespace {

ZnVec vec_mod(ZnVec v, std::int64_t n) {
  for (auto& x : v) x = mod_reduce(x, n);
  return v;
}

ZnVec vec_add(const ZnVec& a, const ZnVec& b, std::int64_t n) {
  ZnVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_reduce(a[i] + b[i], n);
  return r;
}

ZnVec vec_sub(const ZnVec& a, const ZnVec& b, std::int64_t n) {
  ZnVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_reduce(a[i] - b[i], n);
  return r;
}

bool vec_is_zero(const ZnVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

std::string spec_id(std::int64_t modulus, int rank,
                    const std::vector<ZnMat>& action) {
  std::ostringstream os;
  os << "n" << modulus << ".k" << rank;
  for (const ZnMat& m : action) {
    os << ".";
    if (rank == 1) {
      os << "[" << mod_reduce(m.at(0, 0), modulus) << "]";
    } else {
      os << "[";
      for (int r = 0; r < rank; ++r) {
        if (r) os << ",";
        os << "[";
        for (int c = 0; c < rank; ++c) {
          if (c) os << ",";
          os << mod_reduce(m.at(r, c), modulus);
        }
        os << "]";
      }
      os << "]";
    }
  }
  return os.str();
}

FiniteModuleSpec FiniteModuleSpec::make(std::int64_t modulus, int rank,
                                        std::vector<ZnMat> action) {
  if (modulus < 2) throw std::invalid_argument("module spec: modulus must be >= 2");
  if (rank < 1) throw std::invalid_argument("module spec: rank must be >= 1");
  if (action.empty()) throw std::invalid_argument("module spec: no action matrices");
  FiniteModuleSpec spec;
  spec.modulus = modulus;
  spec.rank = rank;
  spec.mu = static_cast<int>(action.size());
  for (auto& m : action) {
    if (m.k != rank) throw std::invalid_argument("module spec: matrix rank mismatch");
    m.n = modulus;
    for (auto& x : m.a) x = mod_reduce(x, modulus);
  }
  for (const auto& m : action) {
    auto inv = mat_inverse(m);
    if (!inv) {
      throw std::invalid_argument("module spec: action matrix is not invertible");
    }
    spec.action_inv.push_back(std::move(*inv));
  }
  for (size_t i = 0; i < action.size(); ++i) {
    for (size_t j = i + 1; j < action.size(); ++j) {
      if (!(mat_mul(action[i], action[j]) == mat_mul(action[j], action[i]))) {
        throw std::invalid_argument("module spec: action matrices must commute");
      }
    }
  }
  spec.action = std::move(action);
  spec.id = spec_id(modulus, rank, spec.action);
  return spec;
}

ZnMat act(const FiniteModuleSpec& spec, const LaurentPoly& p) {
  if (p.mu() != spec.mu) {
    throw std::invalid_argument("act: variable count mismatch");
  }
  return evaluate_matrix(p, spec.action, spec.action_inv, spec.modulus,
                         spec.rank);
}

GradedElement op_right(const FiniteModuleSpec& spec, const GradedElement& x,
                       const GradedElement& y) {
  const ZnMat& ty = spec.action[y.component - 1];
  ZnMat tx_minus_1 = mat_sub(spec.action[x.component - 1],
                             ZnMat::identity(spec.modulus, spec.rank));
  GradedElement r;
  r.component = x.component;
  r.value = vec_sub(mat_vec(ty, x.value), mat_vec(tx_minus_1, y.value),
                    spec.modulus);
  return r;
}

GradedElement op_right_inv(const FiniteModuleSpec& spec, const GradedElement& x,
                           const GradedElement& y) {
  ZnMat tx_minus_1 = mat_sub(spec.action[x.component - 1],
                             ZnMat::identity(spec.modulus, spec.rank));
  GradedElement r;
  r.component = x.component;
  r.value = mat_vec(spec.action_inv[y.component - 1],
                    vec_add(x.value, mat_vec(tx_minus_1, y.value), spec.modulus));
  r.value = vec_mod(std::move(r.value), spec.modulus);
  return r;
}

std::uint64_t ColoringSpace::count() const { return span_size(kernel); }

bool ColoringSpace::contains(const ZnVec& v) const { return in_span(kernel, v); }

void ColoringSpace::for_each(
    const std::function<void(const ZnVec&)>& fn) const {
  size_t width = static_cast<size_t>(kernel.cols);
  std::vector<std::int64_t> orders = howell_orders(kernel);
  size_t m = kernel.rows.size();
  std::vector<std::int64_t> c(m, 0);
  ZnVec v(width, 0);
  while (true) {
    v.assign(width, 0);
    for (size_t i = 0; i < m; ++i) {
      if (c[i] == 0) continue;
      for (size_t j = 0; j < width; ++j) {
        v[j] = mod_reduce(v[j] + c[i] * kernel.rows[i][j], modulus);
      }
    }
    fn(v);
    size_t i = m;
    while (i-- > 0) {
      if (++c[i] < orders[i]) break;
      c[i] = 0;
      if (i == 0) return;
    }
    if (m == 0) return;
  }
}

ColoringSpace solve_colorings(const Presentation& p,
                              const FiniteModuleSpec& spec) {
  validate(p);
  if (p.mu != spec.mu) {
    throw std::invalid_argument("solve_colorings: variable count mismatch");
  }
  size_t g = p.generators.size();
  int width = static_cast<int>(g) * spec.rank;
  std::vector<std::vector<std::int64_t>> a;
  a.reserve(p.rows.size() * spec.rank);
  for (const auto& row : p.rows) {
    std::vector<ZnMat> blocks;
    blocks.reserve(g);
    for (const auto& c : row) blocks.push_back(act(spec, c));
    for (int i = 0; i < spec.rank; ++i) {
      std::vector<std::int64_t> flat(width, 0);
      for (size_t gi = 0; gi < g; ++gi) {
        for (int j = 0; j < spec.rank; ++j) {
          flat[gi * spec.rank + j] = blocks[gi].at(i, j);
        }
      }
      a.push_back(std::move(flat));
    }
  }
  ColoringSpace space;
  space.modulus = spec.modulus;
  space.rank = spec.rank;
  space.generators = p.generators;
  space.kernel = right_kernel_mod(a, width, spec.modulus);
  return space;
}

ZnVec seed_value(const Presentation& p, const FiniteModuleSpec& spec,
                 const OrbitSeed& seed, const ZnVec& coloring) {
  if (coloring.size() != p.generators.size() * static_cast<size_t>(spec.rank)) {
    throw std::invalid_argument("seed_value: coloring width mismatch");
  }
  ZnVec v(spec.rank, 0);
  for (size_t g = 0; g < p.generators.size(); ++g) {
    if (seed.expr[g].is_zero()) continue;
    ZnMat m = act(spec, seed.expr[g]);
    ZnVec part(coloring.begin() + g * spec.rank,
               coloring.begin() + (g + 1) * spec.rank);
    v = vec_add(v, mat_vec(m, part), spec.modulus);
  }
  return v;
}

std::vector<OrbitSeed> orbit_seeds(const Presentation& p) {
  if (!p.seeds.empty()) return p.seeds;
  std::vector<OrbitSeed> out;
  for (size_t g = 0; g < p.generators.size(); ++g) {
    int comp = graded_component(p.phi[g]);
    if (comp == 0) continue;
    OrbitSeed s;
    s.id = p.generators[g];
    s.component = comp;
    s.expr.assign(p.generators.size(), LaurentPoly::zero(p.mu));
    s.expr[g] = LaurentPoly::one(p.mu);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<ZnVec> orbit_image(const Presentation& p,
                               const FiniteModuleSpec& spec,
                               const ZnVec& coloring, int component) {
  if (component < 1 || component > p.mu) {
    throw std::invalid_argument("orbit_image: component out of range");
  }
  std::vector<OrbitSeed> seeds = orbit_seeds(p);
  std::vector<GradedElement> seed_elems;
  seed_elems.reserve(seeds.size());
  for (const auto& s : seeds) {
    seed_elems.push_back({s.component, seed_value(p, spec, s, coloring)});
  }
  std::set<ZnVec> image;
  std::vector<ZnVec> frontier;
  for (const auto& e : seed_elems) {
    if (e.component == component && image.insert(e.value).second) {
      frontier.push_back(e.value);
    }
  }
  while (!frontier.empty()) {
    std::vector<ZnVec> next;
    for (const ZnVec& xv : frontier) {
      GradedElement x{component, xv};
      for (const auto& s : seed_elems) {
        for (const GradedElement& z :
             {op_right(spec, x, s), op_right_inv(spec, x, s)}) {
          if (image.insert(z.value).second) next.push_back(z.value);
        }
      }
    }
    frontier = std::move(next);
  }
  return {image.begin(), image.end()};
}

namespace {

// Per-coloring orbit classification shared by the counting entry points.
struct OrbitFlags {
  bool constant = false;
  bool zero = false;
};

OrbitFlags classify_orbit(const Presentation& p, const FiniteModuleSpec& spec,
                          const ZnVec& coloring, int component) {
  std::vector<ZnVec> image = orbit_image(p, spec, coloring, component);
  OrbitFlags f;
  f.constant = image.size() <= 1;
  f.zero = image.empty() || (image.size() == 1 && vec_is_zero(image.front()));
  return f;
}

}  // namespace

std::uint64_t count_constrained(
    const Presentation& p, const FiniteModuleSpec& spec,
    const std::vector<OrbitConstraint>& constraints) {
  if (static_cast<int>(constraints.size()) != p.mu) {
    throw std::invalid_argument("count_constrained: need one constraint per component");
  }
  ColoringSpace space = solve_colorings(p, spec);
  std::uint64_t count = 0;
  space.for_each([&](const ZnVec& coloring) {
    for (int i = 1; i <= p.mu; ++i) {
      OrbitConstraint c = constraints[i - 1];
      if (c == OrbitConstraint::Free) continue;
      OrbitFlags f = classify_orbit(p, spec, coloring, i);
      if (c == OrbitConstraint::Constant && !f.constant) return;
      if (c == OrbitConstraint::Zero && !f.zero) return;
    }
    ++count;
  });
  return count;
}

std::vector<FiniteModuleSpec> default_battery(int mu) {
  if (mu < 1) throw std::invalid_argument("default_battery: mu must be >= 1");
  std::vector<FiniteModuleSpec> battery;
  for (std::int64_t n : {2, 3, 4, 5, 7}) {
    std::vector<std::int64_t> units;
    for (std::int64_t u = 1; u < n; ++u) {
      if (std::gcd(u, n) == 1) units.push_back(u);
    }
    std::vector<size_t> idx(mu, 0);
    while (true) {
      std::vector<ZnMat> action;
      action.reserve(mu);
      for (int i = 0; i < mu; ++i) {
        ZnMat m = ZnMat::identity(n, 1);
        m.at(0, 0) = units[idx[i]];
        action.push_back(std::move(m));
      }
      battery.push_back(FiniteModuleSpec::make(n, 1, std::move(action)));
      int i = mu;
      bool done = true;
      while (i-- > 0) {
        if (++idx[i] < units.size()) {
          done = false;
          break;
        }
        idx[i] = 0;
      }
      if (done) break;
    }
  }
  // Rank-2 entries over Z/3: the first variable acts by a matrix of
  // multiplicative order 6, the second (when present) by +-identity.
  ZnMat m6 = ZnMat::from_rows(3, {{0, 1}, {2, 1}});
  ZnMat id2 = ZnMat::identity(3, 2);
  ZnMat neg2 = mat_scale(2, id2);
  if (mu == 1) {
    battery.push_back(FiniteModuleSpec::make(3, 2, {m6}));
  } else {
    for (const ZnMat& second : {id2, neg2}) {
      std::vector<ZnMat> action{m6, second};
      for (int i = 2; i < mu; ++i) action.push_back(id2);
      battery.push_back(FiniteModuleSpec::make(3, 2, std::move(action)));
    }
  }
  return battery;
}

namespace {

FingerprintEntry fingerprint_entry(const Presentation& p,
                                   const FiniteModuleSpec& spec) {
  FingerprintEntry e;
  e.spec_id = spec.id;
  e.constant_counts.assign(p.mu, 0);
  e.zero_counts.assign(p.mu, 0);
  ColoringSpace space = solve_colorings(p, spec);
  space.for_each([&](const ZnVec& coloring) {
    ++e.unconstrained;
    for (int i = 1; i <= p.mu; ++i) {
      OrbitFlags f = classify_orbit(p, spec, coloring, i);
      if (f.constant) ++e.constant_counts[i - 1];
      if (f.zero) ++e.zero_counts[i - 1];
    }
  });
  return e;
}

}  // namespace

Fingerprint fingerprint(const Presentation& p,
                        const std::vector<FiniteModuleSpec>& battery,
                        int jobs) {
  validate(p);
  Fingerprint out(battery.size());
  if (jobs <= 1 || battery.size() <= 1) {
    for (size_t i = 0; i < battery.size(); ++i) {
      out[i] = fingerprint_entry(p, battery[i]);
    }
    return out;
  }
  size_t workers = std::min<size_t>(jobs, battery.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (size_t i = w; i < battery.size(); i += workers) {
        out[i] = fingerprint_entry(p, battery[i]);
      }
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

Fingerprint fingerprint(const Presentation& p, int jobs) {
  return fingerprint(p, default_battery(p.mu), jobs);
}

std::map<GradedElement, int> element_lengths(
    const std::vector<GradedElement>& seeds, const FiniteModuleSpec& spec,
    int maxlen) {
  std::map<GradedElement, int> table;
  if (maxlen < 1) return table;
  std::vector<std::vector<GradedElement>> by_len(maxlen + 1);
  for (const auto& s : seeds) {
    GradedElement e{s.component, vec_mod(s.value, spec.modulus)};
    if (table.emplace(e, 1).second) by_len[1].push_back(e);
  }
  for (int total = 2; total <= maxlen; ++total) {
    for (int a = 1; a < total; ++a) {
      int b = total - a;
      for (const auto& x : by_len[a]) {
        for (const auto& y : by_len[b]) {
          for (const GradedElement& z :
               {op_right(spec, x, y), op_right_inv(spec, x, y)}) {
            if (table.emplace(z, total).second) by_len[total].push_back(z);
          }
        }
      }
    }
  }
  return table;
}

}  // namespace crowell
