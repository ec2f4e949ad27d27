#include "crowell/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crowell {

namespace {

void check_same_mu(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.mu() != b.mu()) {
    throw std::invalid_argument("LaurentPoly: variable count mismatch");
  }
}

}  // namespace

LaurentPoly LaurentPoly::constant(int mu, Int c) {
  LaurentPoly p(mu);
  if (c != 0) p.add_term(Exponents(mu, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int mu, int index, int power) {
  if (index < 1 || index > mu) {
    throw std::invalid_argument("LaurentPoly::variable: index out of range");
  }
  Exponents e(mu, 0);
  e[index - 1] = power;
  return monomial(mu, std::move(e), 1);
}

LaurentPoly LaurentPoly::monomial(int mu, Exponents e, Int c) {
  if (static_cast<int>(e.size()) != mu) {
    throw std::invalid_argument("LaurentPoly::monomial: exponent length");
  }
  LaurentPoly p(mu);
  if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

Int LaurentPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

const std::pair<const Exponents, Int>& LaurentPoly::leading() const {
  if (terms_.empty()) {
    throw std::invalid_argument("LaurentPoly::leading: zero polynomial");
  }
  return *terms_.rbegin();
}

void LaurentPoly::add_term(const Exponents& e, const Int& c) {
  if (static_cast<int>(e.size()) != mu_) {
    throw std::invalid_argument("LaurentPoly::add_term: exponent length");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(mu_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_mu(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_mu(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_mu(a, b);
  LaurentPoly r(a.mu());
  Exponents e(a.mu());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (int i = 0; i < a.mu(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly operator*(const Int& c, const LaurentPoly& p) {
  LaurentPoly r(p.mu());
  if (c == 0) return r;
  for (const auto& [e, pc] : p.terms()) r.add_term(e, c * pc);
  return r;
}

bool is_unit(const LaurentPoly& p) {
  if (p.term_count() != 1) return false;
  const Int& c = p.terms().begin()->second;
  return c == 1 || c == -1;
}

LaurentPoly unit_inverse(const LaurentPoly& p) {
  if (!is_unit(p)) {
    throw std::invalid_argument("unit_inverse: not a unit");
  }
  const auto& [e, c] = *p.terms().begin();
  Exponents inv(e.size());
  for (size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
  return LaurentPoly::monomial(p.mu(), std::move(inv), c);
}

LaurentPoly unit_normalize(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Exponents mins(p.mu(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < p.mu(); ++i) {
      if (first || e[i] < mins[i]) mins[i] = e[i];
    }
    first = false;
  }
  LaurentPoly r(p.mu());
  Exponents shifted(p.mu());
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < p.mu(); ++i) shifted[i] = e[i] - mins[i];
    r.add_term(shifted, c);
  }
  if (r.leading().second < 0) r = -r;
  return r;
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
  return unit_normalize(a) == unit_normalize(b);
}

LaurentPoly pow(const LaurentPoly& p, int e) {
  if (e < 0) return pow(unit_inverse(p), -e);
  LaurentPoly r = LaurentPoly::one(p.mu());
  LaurentPoly base = p;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

namespace {

// Shift every variable's minimum exponent to zero; returns the shift applied.
LaurentPoly shift_to_nonneg(const LaurentPoly& p, Exponents& mins) {
  mins.assign(p.mu(), 0);
  if (p.is_zero()) return p;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < p.mu(); ++i) {
      if (first || e[i] < mins[i]) mins[i] = e[i];
    }
    first = false;
  }
  LaurentPoly r(p.mu());
  Exponents shifted(p.mu());
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < p.mu(); ++i) shifted[i] = e[i] - mins[i];
    r.add_term(shifted, c);
  }
  return r;
}

std::optional<LaurentPoly> exact_div_nonneg(const LaurentPoly& num,
                                            const LaurentPoly& den) {
  LaurentPoly q(num.mu());
  LaurentPoly r = num;
  const auto& [de, dc] = den.leading();
  Exponents e(num.mu());
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading();
    for (int i = 0; i < num.mu(); ++i) {
      e[i] = re[i] - de[i];
      if (e[i] < 0) return std::nullopt;
    }
    if (rc % dc != 0) return std::nullopt;
    Int c = rc / dc;
    q.add_term(e, c);
    r -= LaurentPoly::monomial(num.mu(), e, c) * den;
  }
  return q;
}

}  // namespace

std::optional<LaurentPoly> exact_div(const LaurentPoly& num,
                                     const LaurentPoly& den) {
  check_same_mu(num, den);
  if (den.is_zero()) {
    throw std::invalid_argument("exact_div: division by zero");
  }
  if (num.is_zero()) return LaurentPoly::zero(num.mu());
  Exponents nmins, dmins;
  LaurentPoly n0 = shift_to_nonneg(num, nmins);
  LaurentPoly d0 = shift_to_nonneg(den, dmins);
  auto q0 = exact_div_nonneg(n0, d0);
  if (!q0) return std::nullopt;
  Exponents shift(num.mu());
  for (int i = 0; i < num.mu(); ++i) shift[i] = nmins[i] - dmins[i];
  LaurentPoly q(num.mu());
  Exponents e(num.mu());
  for (const auto& [qe, qc] : q0->terms()) {
    for (int i = 0; i < num.mu(); ++i) e[i] = qe[i] + shift[i];
    q.add_term(e, qc);
  }
  return q;
}

namespace {

// The gcd recursion works on polynomials with nonnegative exponents, treating
// variable k (0-based) as the main variable and recursing on coefficients.

int deg_in(const LaurentPoly& p, int k) {
  int d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[k]);
  return d;
}

LaurentPoly coeff_of_power(const LaurentPoly& p, int k, int d) {
  LaurentPoly r(p.mu());
  Exponents e;
  for (const auto& [pe, pc] : p.terms()) {
    if (pe[k] != d) continue;
    e = pe;
    e[k] = 0;
    r.add_term(e, pc);
  }
  return r;
}

LaurentPoly shift_var(const LaurentPoly& p, int k, int d) {
  if (d == 0) return p;
  LaurentPoly r(p.mu());
  Exponents e;
  for (const auto& [pe, pc] : p.terms()) {
    e = pe;
    e[k] += d;
    r.add_term(e, pc);
  }
  return r;
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b, int k);

LaurentPoly content_wrt(const LaurentPoly& p, int k) {
  LaurentPoly c(p.mu());
  int d = deg_in(p, k);
  for (int i = 0; i <= d; ++i) {
    LaurentPoly ci = coeff_of_power(p, k, i);
    if (ci.is_zero()) continue;
    c = c.is_zero() ? ci : gcd_rec(c, ci, k - 1);
  }
  return c;
}

LaurentPoly primitive_part(const LaurentPoly& p, int k) {
  if (p.is_zero()) return p;
  LaurentPoly c = content_wrt(p, k);
  auto q = exact_div(p, c);
  if (!q) throw std::logic_error("primitive_part: content does not divide");
  return *q;
}

LaurentPoly prem(LaurentPoly f, const LaurentPoly& g, int k) {
  int dg = deg_in(g, k);
  LaurentPoly lg = coeff_of_power(g, k, dg);
  while (!f.is_zero()) {
    int df = deg_in(f, k);
    if (df < dg) break;
    LaurentPoly lf = coeff_of_power(f, k, df);
    f = lg * f - shift_var(lf, k, df - dg) * g;
  }
  return f;
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b, int k) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (k < 0) {
    Int ga = 0, gb = 0;
    for (const auto& [e, c] : a.terms()) ga = c;
    for (const auto& [e, c] : b.terms()) gb = c;
    return LaurentPoly::constant(a.mu(), boost::multiprecision::gcd(abs(ga), abs(gb)));
  }
  int da = deg_in(a, k), db = deg_in(b, k);
  if (da == 0 && db == 0) return gcd_rec(a, b, k - 1);

  LaurentPoly ca = content_wrt(a, k);
  LaurentPoly cb = content_wrt(b, k);
  LaurentPoly pa = *exact_div(a, ca);
  LaurentPoly pb = *exact_div(b, cb);
  LaurentPoly cg = gcd_rec(ca, cb, k - 1);

  LaurentPoly f = da >= db ? pa : pb;
  LaurentPoly g = da >= db ? pb : pa;
  while (true) {
    LaurentPoly r = prem(f, g, k);
    if (r.is_zero()) break;
    f = std::move(g);
    g = primitive_part(r, k);
  }
  return cg * primitive_part(g, k);
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_mu(a, b);
  if (a.is_zero()) return unit_normalize(b);
  if (b.is_zero()) return unit_normalize(a);
  Exponents mins;
  LaurentPoly a0 = shift_to_nonneg(a, mins);
  LaurentPoly b0 = shift_to_nonneg(b, mins);
  return unit_normalize(gcd_rec(a0, b0, a.mu() - 1));
}

Int augmentation(const LaurentPoly& p) {
  Int s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

LaurentPoly collapse_variable(const LaurentPoly& p, int j) {
  if (j < 1 || j > p.mu()) {
    throw std::invalid_argument("collapse_variable: index out of range");
  }
  LaurentPoly r(p.mu() - 1);
  Exponents e(p.mu() - 1);
  for (const auto& [pe, pc] : p.terms()) {
    int out = 0;
    for (int i = 0; i < p.mu(); ++i) {
      if (i == j - 1) continue;
      e[out++] = pe[i];
    }
    r.add_term(e, pc);
  }
  return r;
}

LaurentPoly to_one_variable(const LaurentPoly& p) {
  if (p.mu() < 1) {
    throw std::invalid_argument("to_one_variable: needs at least one variable");
  }
  LaurentPoly r(1);
  Exponents e(1);
  for (const auto& [pe, pc] : p.terms()) {
    e[0] = std::accumulate(pe.begin(), pe.end(), 0);
    r.add_term(e, pc);
  }
  return r;
}

LaurentPoly permute_variables(const LaurentPoly& p,
                              const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != p.mu()) {
    throw std::invalid_argument("permute_variables: length mismatch");
  }
  std::vector<bool> seen(p.mu(), false);
  for (int s : sigma) {
    if (s < 1 || s > p.mu() || seen[s - 1]) {
      throw std::invalid_argument("permute_variables: not a permutation");
    }
    seen[s - 1] = true;
  }
  LaurentPoly r(p.mu());
  Exponents e(p.mu());
  for (const auto& [pe, pc] : p.terms()) {
    for (int i = 0; i < p.mu(); ++i) e[sigma[i] - 1] = pe[i];
    r.add_term(e, pc);
  }
  return r;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = false;
    for (int x : e) {
      if (x != 0) has_var = true;
    }
    bool wrote_coeff = false;
    if (!has_var || mag != 1) {
      os << mag.str();
      wrote_coeff = true;
    }
    bool first_var = true;
    for (int i = 0; i < p.mu(); ++i) {
      if (e[i] == 0) continue;
      if (wrote_coeff || !first_var) os << "*";
      os << "t" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
      first_var = false;
    }
  }
  return os.str();
}

namespace {

struct PolyLexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Int read_int() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    if (pos == start) {
      throw std::invalid_argument("parse_poly: expected an integer at offset " +
                                  std::to_string(start));
    }
    return Int(std::string(s.substr(start, pos - start)));
  }
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, int mu) {
  PolyLexer lx{text};
  LaurentPoly result(mu);

  bool neg = false;
  if (lx.accept('-')) {
    neg = true;
  } else {
    lx.accept('+');
  }
  if (lx.eof()) throw std::invalid_argument("parse_poly: empty input");

  while (true) {
    // One term: factors joined by '*'.
    Int coeff = neg ? -1 : 1;
    Exponents e(mu, 0);
    bool expect_factor = true;
    while (expect_factor) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= lx.read_int();
      } else if (c == 't') {
        ++lx.pos;
        Int idx = lx.read_int();
        if (idx < 1 || idx > mu) {
          throw std::invalid_argument("parse_poly: variable index out of range");
        }
        int exp = 1;
        if (lx.accept('^')) {
          bool eneg = lx.accept('-');
          Int ev = lx.read_int();
          if (ev > 1000000) throw std::invalid_argument("parse_poly: exponent too large");
          exp = static_cast<int>(ev);
          if (eneg) exp = -exp;
        }
        e[static_cast<int>(idx) - 1] += exp;
      } else {
        throw std::invalid_argument("parse_poly: unexpected character at offset " +
                                    std::to_string(lx.pos));
      }
      expect_factor = lx.accept('*');
    }
    result.add_term(e, coeff);

    if (lx.eof()) break;
    if (lx.accept('+')) {
      neg = false;
    } else if (lx.accept('-')) {
      neg = true;
    } else {
      throw std::invalid_argument("parse_poly: expected '+' or '-' at offset " +
                                  std::to_string(lx.pos));
    }
    if (lx.eof()) throw std::invalid_argument("parse_poly: dangling sign");
  }
  return result;
}

RingMapSpec RingMapSpec::to_laurent(int source_mu, int target_mu,
                                    std::vector<LaurentPoly> images) {
  RingMapSpec m;
  m.kind = Kind::laurent;
  m.source_mu = source_mu;
  m.target_mu = target_mu;
  m.laurent_images = std::move(images);
  validate(m);
  return m;
}

RingMapSpec RingMapSpec::to_residue(int source_mu, std::int64_t n,
                                    std::vector<std::int64_t> units) {
  RingMapSpec m;
  m.kind = Kind::residue;
  m.source_mu = source_mu;
  m.modulus = n;
  m.residue_images = std::move(units);
  validate(m);
  return m;
}

RingMapSpec RingMapSpec::to_matrix(int source_mu, std::int64_t n,
                                   std::vector<ZnMat> actions) {
  RingMapSpec m;
  m.kind = Kind::matrix;
  m.source_mu = source_mu;
  m.modulus = n;
  m.matrix_images = std::move(actions);
  validate(m);
  return m;
}

RingMapSpec RingMapSpec::collapse(int source_mu, int j) {
  if (j < 1 || j > source_mu) {
    throw std::invalid_argument("RingMapSpec::collapse: index out of range");
  }
  std::vector<LaurentPoly> images;
  images.reserve(source_mu);
  int out = 1;
  for (int i = 1; i <= source_mu; ++i) {
    if (i == j) {
      images.push_back(LaurentPoly::one(source_mu - 1));
    } else {
      images.push_back(LaurentPoly::variable(source_mu - 1, out++));
    }
  }
  return to_laurent(source_mu, source_mu - 1, std::move(images));
}

RingMapSpec RingMapSpec::augmentation_map(int source_mu) {
  std::vector<LaurentPoly> images(source_mu, LaurentPoly::one(0));
  return to_laurent(source_mu, 0, std::move(images));
}

RingMapSpec RingMapSpec::join_variables(int source_mu) {
  std::vector<LaurentPoly> images(source_mu, LaurentPoly::variable(1, 1));
  return to_laurent(source_mu, 1, std::move(images));
}

RingMapSpec RingMapSpec::permutation(int source_mu,
                                     const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != source_mu) {
    throw std::invalid_argument("RingMapSpec::permutation: length mismatch");
  }
  std::vector<LaurentPoly> images;
  images.reserve(source_mu);
  for (int i = 0; i < source_mu; ++i) {
    images.push_back(LaurentPoly::variable(source_mu, sigma[i]));
  }
  return to_laurent(source_mu, source_mu, std::move(images));
}

void validate(const RingMapSpec& m) {
  switch (m.kind) {
    case RingMapSpec::Kind::laurent:
      if (static_cast<int>(m.laurent_images.size()) != m.source_mu) {
        throw std::invalid_argument("RingMapSpec: wrong image count");
      }
      for (const auto& img : m.laurent_images) {
        if (img.mu() != m.target_mu) {
          throw std::invalid_argument("RingMapSpec: image variable count");
        }
        if (!is_unit(img)) {
          throw std::invalid_argument("RingMapSpec: image is not invertible");
        }
      }
      break;
    case RingMapSpec::Kind::residue:
      if (m.modulus < 2) throw std::invalid_argument("RingMapSpec: modulus");
      if (static_cast<int>(m.residue_images.size()) != m.source_mu) {
        throw std::invalid_argument("RingMapSpec: wrong image count");
      }
      for (std::int64_t u : m.residue_images) {
        if (std::gcd(mod_reduce(u, m.modulus), m.modulus) != 1) {
          throw std::invalid_argument("RingMapSpec: image is not invertible");
        }
      }
      break;
    case RingMapSpec::Kind::matrix:
      if (m.modulus < 2) throw std::invalid_argument("RingMapSpec: modulus");
      if (static_cast<int>(m.matrix_images.size()) != m.source_mu) {
        throw std::invalid_argument("RingMapSpec: wrong image count");
      }
      for (const auto& a : m.matrix_images) {
        if (a.n != m.modulus) {
          throw std::invalid_argument("RingMapSpec: matrix modulus mismatch");
        }
        if (!mat_inverse(a)) {
          throw std::invalid_argument("RingMapSpec: image is not invertible");
        }
      }
      for (size_t i = 0; i < m.matrix_images.size(); ++i) {
        for (size_t j = i + 1; j < m.matrix_images.size(); ++j) {
          if (mat_mul(m.matrix_images[i], m.matrix_images[j]) !=
              mat_mul(m.matrix_images[j], m.matrix_images[i])) {
            throw std::invalid_argument("RingMapSpec: images do not commute");
          }
        }
      }
      break;
  }
}

namespace {

std::int64_t int_mod(const Int& c, std::int64_t n) {
  Int r = c % n;
  auto v = static_cast<std::int64_t>(r);
  return mod_reduce(v, n);
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t n) {
  b = mod_reduce(b, n);
  std::int64_t r = 1 % n;
  while (e > 0) {
    if (e & 1) r = r * b % n;
    b = b * b % n;
    e >>= 1;
  }
  return r;
}

}  // namespace

ZnMat evaluate_matrix(const LaurentPoly& p, const std::vector<ZnMat>& actions,
                      const std::vector<ZnMat>& action_invs, std::int64_t n,
                      int rank) {
  ZnMat acc = ZnMat::zeros(n, rank);
  for (const auto& [e, c] : p.terms()) {
    ZnMat term = ZnMat::identity(n, rank);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const ZnMat& base = e[i] > 0 ? actions[i] : action_invs[i];
      term = mat_mul(term, mat_pow(base, std::abs(e[i])));
    }
    acc = mat_add(acc, mat_scale(int_mod(c, n), term));
  }
  return acc;
}

SubstituteResult substitute(const LaurentPoly& p, const RingMapSpec& m) {
  if (p.mu() != m.source_mu) {
    throw std::invalid_argument("substitute: variable count mismatch");
  }
  switch (m.kind) {
    case RingMapSpec::Kind::laurent: {
      LaurentPoly r(m.target_mu);
      for (const auto& [e, c] : p.terms()) {
        LaurentPoly term = LaurentPoly::constant(m.target_mu, c);
        for (int i = 0; i < m.source_mu; ++i) {
          if (e[i] != 0) term *= pow(m.laurent_images[i], e[i]);
        }
        r += term;
      }
      return r;
    }
    case RingMapSpec::Kind::residue: {
      std::int64_t acc = 0;
      for (const auto& [e, c] : p.terms()) {
        std::int64_t term = int_mod(c, m.modulus);
        for (int i = 0; i < m.source_mu; ++i) {
          if (e[i] == 0) continue;
          std::int64_t u = e[i] > 0 ? mod_reduce(m.residue_images[i], m.modulus)
                                    : mod_inv(m.residue_images[i], m.modulus);
          term = term * pow_mod(u, std::abs(e[i]), m.modulus) % m.modulus;
        }
        acc = mod_reduce(acc + term, m.modulus);
      }
      return ResidueValue{m.modulus, acc};
    }
    case RingMapSpec::Kind::matrix: {
      std::vector<ZnMat> invs;
      invs.reserve(m.matrix_images.size());
      for (const auto& a : m.matrix_images) {
        auto inv = mat_inverse(a);
        if (!inv) throw std::invalid_argument("substitute: non-invertible image");
        invs.push_back(std::move(*inv));
      }
      int rank = m.matrix_images.empty() ? 1 : m.matrix_images.front().k;
      return evaluate_matrix(p, m.matrix_images, invs, m.modulus, rank);
    }
  }
  throw std::logic_error("substitute: unknown target kind");
}

}  // namespace crowell
