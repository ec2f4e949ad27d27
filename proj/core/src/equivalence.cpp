#include "crowell/equivalence.hpp"

#include <sstream>
#include <stdexcept>

#include "lambda_solve.hpp"

namespace crowell {

namespace {

bool poly_vec_is_zero(const std::vector<LaurentPoly>& v) {
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

}  // namespace

EquivalenceReport check_equivalence_certificate(
    const Presentation& a, const Presentation& b,
    const EquivalenceCertificate& cert,
    const std::vector<FiniteModuleSpec>& battery) {
  validate(a);
  validate(b);
  if (a.mu != b.mu) {
    return {Verdict::Refuted, "presentations use different variable counts"};
  }
  int mu = a.mu;
  size_t ga = a.generators.size();
  size_t gb = b.generators.size();

  for (const auto& [name, image] : cert.images) {
    if (a.index_of(name) < 0) {
      throw std::invalid_argument("certificate: unknown source generator " + name);
    }
    (void)image;
  }
  std::vector<std::vector<LaurentPoly>> f(
      ga, std::vector<LaurentPoly>(gb, LaurentPoly(mu)));
  for (size_t i = 0; i < ga; ++i) {
    auto it = cert.images.find(a.generators[i]);
    if (it == cert.images.end()) {
      throw std::invalid_argument("certificate: no image for generator " +
                                  a.generators[i]);
    }
    for (const auto& [name, coeff] : it->second) {
      int j = b.index_of(name);
      if (j < 0) {
        throw std::invalid_argument("certificate: unknown target generator " +
                                    name);
      }
      if (coeff.mu() != mu) {
        throw std::invalid_argument(
            "certificate: image coefficient variable count mismatch");
      }
      f[i][j] = coeff;
    }
  }

  // Stage one: the map must intertwine the phi values exactly.
  for (size_t i = 0; i < ga; ++i) {
    LaurentPoly rhs(mu);
    for (size_t j = 0; j < gb; ++j) rhs += f[i][j] * b.phi[j];
    if (!(rhs == a.phi[i])) {
      std::ostringstream os;
      os << "phi mismatch at generator " << a.generators[i] << ": expected "
         << to_string(a.phi[i]) << ", image carries " << to_string(rhs);
      return {Verdict::Refuted, os.str()};
    }
  }

  // Images of the source relations in target coordinates.
  std::vector<std::vector<LaurentPoly>> row_images;
  row_images.reserve(a.rows.size());
  for (const auto& row : a.rows) {
    std::vector<LaurentPoly> v(gb, LaurentPoly(mu));
    for (size_t i = 0; i < ga; ++i) {
      if (row[i].is_zero()) continue;
      for (size_t j = 0; j < gb; ++j) v[j] += row[i] * f[i][j];
    }
    row_images.push_back(std::move(v));
  }

  // Stage two: over every battery module the pullback along the map must be
  // a bijection between the two coloring sets.
  for (const FiniteModuleSpec& spec : battery) {
    if (spec.mu != mu) {
      throw std::invalid_argument("certificate battery: variable count mismatch");
    }
    ColoringSpace sb = solve_colorings(b, spec);
    ColoringSpace sa = solve_colorings(a, spec);
    int rank = spec.rank;

    // The relation images must vanish on every coloring of b; checking the
    // kernel basis suffices. This makes the pullback land in sa.
    std::vector<std::vector<ZnMat>> image_blocks;
    image_blocks.reserve(row_images.size());
    for (const auto& v : row_images) {
      std::vector<ZnMat> blocks;
      blocks.reserve(gb);
      for (const auto& c : v) blocks.push_back(act(spec, c));
      image_blocks.push_back(std::move(blocks));
    }
    for (size_t ri = 0; ri < row_images.size(); ++ri) {
      for (const auto& basis : sb.kernel.rows) {
        ZnVec w(rank, 0);
        for (size_t j = 0; j < gb; ++j) {
          ZnVec part(basis.begin() + j * rank, basis.begin() + (j + 1) * rank);
          ZnVec add = mat_vec(image_blocks[ri][j], part);
          for (int x = 0; x < rank; ++x) {
            w[x] = mod_reduce(w[x] + add[x], spec.modulus);
          }
        }
        bool zero = true;
        for (int x = 0; x < rank; ++x) zero = zero && w[x] == 0;
        if (!zero) {
          std::ostringstream os;
          os << "relation " << (ri + 1)
             << " maps outside the target relations at " << spec.id;
          return {Verdict::Refuted, os.str()};
        }
      }
    }

    std::vector<std::vector<ZnMat>> f_blocks(ga);
    for (size_t i = 0; i < ga; ++i) {
      for (size_t j = 0; j < gb; ++j) f_blocks[i].push_back(act(spec, f[i][j]));
    }
    std::vector<ZnVec> pulled;
    pulled.reserve(sb.kernel.rows.size());
    for (const auto& basis : sb.kernel.rows) {
      ZnVec u(ga * rank, 0);
      for (size_t i = 0; i < ga; ++i) {
        for (size_t j = 0; j < gb; ++j) {
          ZnVec part(basis.begin() + j * rank, basis.begin() + (j + 1) * rank);
          ZnVec add = mat_vec(f_blocks[i][j], part);
          for (int x = 0; x < rank; ++x) {
            u[i * rank + x] = mod_reduce(u[i * rank + x] + add[x], spec.modulus);
          }
        }
      }
      pulled.push_back(std::move(u));
    }
    HowellForm image_form = howell_form(
        std::move(pulled), static_cast<int>(ga) * rank, spec.modulus);
    std::uint64_t c_im = span_size(image_form);
    std::uint64_t c_b = sb.count();
    std::uint64_t c_a = sa.count();
    if (c_im != c_b || c_im != c_a) {
      std::ostringstream os;
      os << "coloring pullback is not a bijection at " << spec.id << ": |target|="
         << c_b << " |source|=" << c_a << " |image|=" << c_im;
      return {Verdict::Refuted, os.str()};
    }
  }

  // Stage three: each relation image must lie in the span of the target
  // relations, searched with bounded exponents.
  for (size_t ri = 0; ri < row_images.size(); ++ri) {
    if (b.rows.empty()) {
      if (!poly_vec_is_zero(row_images[ri])) {
        std::ostringstream os;
        os << "relation " << (ri + 1)
           << " has a nonzero image but the target has no relations";
        return {Verdict::Refuted, os.str()};
      }
      continue;
    }
    if (!bounded_combination(row_images[ri], b.rows, mu, cert.degree_bound)) {
      std::ostringstream os;
      os << "no bounded expression of relation " << (ri + 1)
         << "'s image in the target relations (window " << cert.degree_bound
         << ")";
      return {Verdict::Inconclusive, os.str()};
    }
  }

  std::ostringstream os;
  os << "phi values match, " << battery.size()
     << " coloring pullbacks are bijections, and every relation image lies in "
        "the target relation span";
  return {Verdict::Verified, os.str()};
}

EquivalenceReport check_equivalence_certificate(
    const Presentation& a, const Presentation& b,
    const EquivalenceCertificate& cert) {
  return check_equivalence_certificate(a, b, cert, default_battery(a.mu));
}

}  // namespace crowell
