#include "lambda_solve.hpp"

#include <map>
#include <stdexcept>

#include "crowell/intlin.hpp"

namespace crowell {

namespace {

void enumerate_window(int mu, int window, Exponents& cur, int pos,
                      std::vector<Exponents>& out) {
  if (pos == mu) {
    out.push_back(cur);
    return;
  }
  for (int e = -window; e <= window; ++e) {
    cur[pos] = e;
    enumerate_window(mu, window, cur, pos + 1, out);
  }
}

}  // namespace

std::optional<std::vector<LaurentPoly>> bounded_combination(
    const std::vector<LaurentPoly>& target,
    const std::vector<std::vector<LaurentPoly>>& gens, int mu, int window) {
  size_t width = target.size();
  for (const auto& g : gens) {
    if (g.size() != width) {
      throw std::invalid_argument("bounded_combination: width mismatch");
    }
  }
  if (gens.empty()) {
    for (const auto& t : target) {
      if (!t.is_zero()) return std::nullopt;
    }
    return std::vector<LaurentPoly>{};
  }

  std::vector<Exponents> win;
  Exponents cur(mu, 0);
  enumerate_window(mu, window, cur, 0, win);
  size_t unknowns = gens.size() * win.size();
  if (unknowns > 50000) {
    throw std::runtime_error("bounded_combination: window too large");
  }

  // Row index: (coordinate, monomial) pairs covering every monomial that any
  // shifted generator or the target can produce in that coordinate.
  std::map<std::pair<size_t, Exponents>, size_t> eq_index;
  auto touch = [&](size_t coord, const Exponents& e) {
    eq_index.emplace(std::make_pair(coord, e), eq_index.size());
  };
  Exponents shifted(mu);
  for (size_t c = 0; c < width; ++c) {
    for (const auto& [e, v] : target[c].terms()) touch(c, e);
    for (const auto& g : gens) {
      for (const auto& [e, v] : g[c].terms()) {
        for (const auto& w : win) {
          for (int i = 0; i < mu; ++i) shifted[i] = e[i] + w[i];
          touch(c, shifted);
        }
      }
    }
  }

  IntMatrix a(eq_index.size(), std::vector<Int>(unknowns, 0));
  std::vector<Int> b(eq_index.size(), 0);
  for (const auto& [key, row] : eq_index) {
    b[row] = target[key.first].coeff(key.second);
  }
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t wi = 0; wi < win.size(); ++wi) {
      size_t col = i * win.size() + wi;
      for (size_t c = 0; c < width; ++c) {
        for (const auto& [e, v] : gens[i][c].terms()) {
          for (int x = 0; x < mu; ++x) shifted[x] = e[x] + win[wi][x];
          auto it = eq_index.find(std::make_pair(c, shifted));
          if (it == eq_index.end()) {
            throw std::logic_error("bounded_combination: missing equation row");
          }
          a[it->second][col] += v;
        }
      }
    }
  }

  auto sol = solve_integer(a, b);
  if (!sol) return std::nullopt;

  std::vector<LaurentPoly> lambdas;
  lambdas.reserve(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    LaurentPoly l(mu);
    for (size_t wi = 0; wi < win.size(); ++wi) {
      const Int& v = (*sol)[i * win.size() + wi];
      if (v != 0) l.add_term(win[wi], v);
    }
    lambdas.push_back(std::move(l));
  }
  return lambdas;
}

}  // namespace crowell
