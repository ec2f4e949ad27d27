#include "crowell/json_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace crowell {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

const Json& need(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) {
    throw std::invalid_argument(std::string(what) + ": expected a JSON object");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument(std::string(what) + ": missing field \"" + key +
                                "\"");
  }
  return *it;
}

int need_int(const Json& j, const char* key, const char* what) {
  const Json& v = need(j, key, what);
  if (!v.is_number_integer()) {
    throw std::invalid_argument(std::string(what) + ": field \"" + key +
                                "\" must be an integer");
  }
  return v.get<int>();
}

std::string need_string(const Json& j, const char* key, const char* what) {
  const Json& v = need(j, key, what);
  if (!v.is_string()) {
    throw std::invalid_argument(std::string(what) + ": field \"" + key +
                                "\" must be a string");
  }
  return v.get<std::string>();
}

std::string dump(const Json& j, bool pretty) {
  return pretty ? j.dump(2) + "\n" : j.dump();
}

LaurentPoly poly_field(const Json& v, int mu, const char* what) {
  if (!v.is_string()) {
    throw std::invalid_argument(std::string(what) +
                                ": polynomial entries must be strings");
  }
  return parse_poly(v.get<std::string>(), mu);
}

}  // namespace

std::string diagram_to_json(const Diagram& d, bool pretty) {
  Json j;
  j["mu"] = d.mu;
  j["arcs"] = Json::array();
  for (const Arc& a : d.arcs) {
    j["arcs"].push_back(Json{{"id", a.id}, {"component", a.component}});
  }
  j["crossings"] = Json::array();
  for (const Crossing& c : d.crossings) {
    Json jc;
    jc["id"] = c.id;
    if (c.trivial) {
      jc["trivial"] = true;
    } else {
      jc["over"] = c.over;
    }
    jc["left"] = c.left;
    jc["right"] = c.right;
    if (c.under_in) {
      jc["under_in"] =
          *c.under_in == Crossing::UnderIn::left ? "left" : "right";
    }
    j["crossings"].push_back(std::move(jc));
  }
  return dump(j, pretty);
}

Diagram diagram_from_json(const std::string& text) {
  Json j = parse_json(text);
  Diagram d;
  d.mu = need_int(j, "mu", "diagram");
  const Json& arcs = need(j, "arcs", "diagram");
  if (!arcs.is_array()) {
    throw std::invalid_argument("diagram: \"arcs\" must be an array");
  }
  for (const Json& ja : arcs) {
    Arc a;
    a.id = need_string(ja, "id", "diagram arc");
    a.component = need_int(ja, "component", "diagram arc");
    d.arcs.push_back(std::move(a));
  }
  if (j.contains("crossings")) {
    const Json& crossings = j.at("crossings");
    if (!crossings.is_array()) {
      throw std::invalid_argument("diagram: \"crossings\" must be an array");
    }
    for (const Json& jc : crossings) {
      Crossing c;
      c.id = need_string(jc, "id", "diagram crossing");
      c.trivial = jc.contains("trivial") && jc.at("trivial").is_boolean() &&
                  jc.at("trivial").get<bool>();
      if (!c.trivial) c.over = need_string(jc, "over", "diagram crossing");
      c.left = need_string(jc, "left", "diagram crossing");
      c.right = need_string(jc, "right", "diagram crossing");
      if (jc.contains("under_in")) {
        std::string side = jc.at("under_in").get<std::string>();
        if (side == "left") {
          c.under_in = Crossing::UnderIn::left;
        } else if (side == "right") {
          c.under_in = Crossing::UnderIn::right;
        } else {
          throw std::invalid_argument(
              "diagram crossing: \"under_in\" must be \"left\" or \"right\"");
        }
      }
      d.crossings.push_back(std::move(c));
    }
  }
  validate(d);
  return d;
}

std::string presentation_to_json(const Presentation& p, bool pretty) {
  Json j;
  j["mu"] = p.mu;
  j["generators"] = p.generators;
  j["phi"] = Json::array();
  for (const auto& v : p.phi) j["phi"].push_back(to_string(v));
  j["rows"] = Json::array();
  for (const auto& row : p.rows) {
    Json jr = Json::array();
    for (const auto& c : row) jr.push_back(to_string(c));
    j["rows"].push_back(std::move(jr));
  }
  j["arcs"] = Json::array();
  for (const auto& s : p.seeds) {
    Json js;
    js["id"] = s.id;
    js["component"] = s.component;
    js["expr"] = Json::array();
    for (const auto& c : s.expr) js["expr"].push_back(to_string(c));
    j["arcs"].push_back(std::move(js));
  }
  return dump(j, pretty);
}

Presentation presentation_from_json(const std::string& text) {
  Json j = parse_json(text);
  Presentation p;
  p.mu = need_int(j, "mu", "presentation");
  const Json& gens = need(j, "generators", "presentation");
  if (!gens.is_array()) {
    throw std::invalid_argument("presentation: \"generators\" must be an array");
  }
  for (const Json& g : gens) {
    if (!g.is_string()) {
      throw std::invalid_argument("presentation: generator names must be strings");
    }
    p.generators.push_back(g.get<std::string>());
  }
  const Json& phi = need(j, "phi", "presentation");
  if (!phi.is_array() || phi.size() != p.generators.size()) {
    throw std::invalid_argument(
        "presentation: \"phi\" must list one value per generator");
  }
  for (const Json& v : phi) p.phi.push_back(poly_field(v, p.mu, "presentation"));
  const Json& rows = need(j, "rows", "presentation");
  if (!rows.is_array()) {
    throw std::invalid_argument("presentation: \"rows\" must be an array");
  }
  for (const Json& jr : rows) {
    if (!jr.is_array() || jr.size() != p.generators.size()) {
      throw std::invalid_argument(
          "presentation: each row must list one entry per generator");
    }
    std::vector<LaurentPoly> row;
    for (const Json& c : jr) row.push_back(poly_field(c, p.mu, "presentation"));
    p.rows.push_back(std::move(row));
  }
  if (j.contains("arcs")) {
    const Json& seeds = j.at("arcs");
    if (!seeds.is_array()) {
      throw std::invalid_argument("presentation: \"arcs\" must be an array");
    }
    for (const Json& js : seeds) {
      OrbitSeed s;
      s.id = need_string(js, "id", "presentation arc");
      s.component = need_int(js, "component", "presentation arc");
      const Json& expr = need(js, "expr", "presentation arc");
      if (!expr.is_array() || expr.size() != p.generators.size()) {
        throw std::invalid_argument(
            "presentation arc: \"expr\" must list one entry per generator");
      }
      for (const Json& c : expr) {
        s.expr.push_back(poly_field(c, p.mu, "presentation arc"));
      }
      p.seeds.push_back(std::move(s));
    }
  }
  validate(p);
  return p;
}

bool json_is_diagram(const std::string& text) {
  Json j = parse_json(text);
  if (!j.is_object()) {
    throw std::invalid_argument("expected a JSON object");
  }
  if (j.contains("generators")) return false;
  if (j.contains("arcs")) return true;
  throw std::invalid_argument(
      "JSON object is neither a diagram (\"arcs\") nor a presentation "
      "(\"generators\")");
}

Presentation presentation_from_any_json(const std::string& text) {
  if (json_is_diagram(text)) {
    return build_presentation(diagram_from_json(text));
  }
  return presentation_from_json(text);
}

std::string module_spec_to_json(const FiniteModuleSpec& spec, bool pretty) {
  Json j;
  j["modulus"] = spec.modulus;
  j["rank"] = spec.rank;
  j["action"] = Json::array();
  for (const ZnMat& m : spec.action) {
    Json jm = Json::array();
    for (int r = 0; r < spec.rank; ++r) {
      Json jr = Json::array();
      for (int c = 0; c < spec.rank; ++c) jr.push_back(m.at(r, c));
      jm.push_back(std::move(jr));
    }
    j["action"].push_back(std::move(jm));
  }
  return dump(j, pretty);
}

namespace {

FiniteModuleSpec module_spec_from_value(const Json& j) {
  std::int64_t modulus = need_int(j, "modulus", "module spec");
  int rank = need_int(j, "rank", "module spec");
  const Json& action = need(j, "action", "module spec");
  if (!action.is_array() || action.empty()) {
    throw std::invalid_argument(
        "module spec: \"action\" must be a non-empty array of matrices");
  }
  std::vector<ZnMat> mats;
  for (const Json& jm : action) {
    if (!jm.is_array() || static_cast<int>(jm.size()) != rank) {
      throw std::invalid_argument("module spec: each action matrix must have "
                                  "one row per rank");
    }
    std::vector<std::vector<std::int64_t>> rows;
    for (const Json& jr : jm) {
      if (!jr.is_array() || static_cast<int>(jr.size()) != rank) {
        throw std::invalid_argument(
            "module spec: action matrix rows must have rank entries");
      }
      std::vector<std::int64_t> row;
      for (const Json& c : jr) {
        if (!c.is_number_integer()) {
          throw std::invalid_argument(
              "module spec: matrix entries must be integers");
        }
        row.push_back(c.get<std::int64_t>());
      }
      rows.push_back(std::move(row));
    }
    ZnMat m = ZnMat::from_rows(modulus < 2 ? 2 : modulus, rows);
    mats.push_back(std::move(m));
  }
  return FiniteModuleSpec::make(modulus, rank, std::move(mats));
}

}  // namespace

FiniteModuleSpec module_spec_from_json(const std::string& text) {
  return module_spec_from_value(parse_json(text));
}

std::vector<FiniteModuleSpec> battery_from_json(const std::string& text) {
  Json j = parse_json(text);
  if (!j.is_array()) {
    throw std::invalid_argument("battery: expected a JSON array of module specs");
  }
  std::vector<FiniteModuleSpec> out;
  for (const Json& jm : j) out.push_back(module_spec_from_value(jm));
  if (out.empty()) {
    throw std::invalid_argument("battery: at least one module spec is required");
  }
  return out;
}

namespace {

std::string combination_to_string(const std::map<std::string, LaurentPoly>& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [gen, coeff] : terms) {
    if (coeff.is_zero()) continue;
    bool neg = false;
    std::string piece;
    LaurentPoly c = coeff;
    const int mu = c.mu();
    if (c == LaurentPoly::one(mu)) {
      piece = gen;
    } else if (c == -LaurentPoly::one(mu)) {
      neg = true;
      piece = gen;
    } else if (c.term_count() == 1 &&
               c.leading().first == Exponents(mu, 0)) {
      Int n = c.leading().second;
      if (n < 0) {
        neg = true;
        n = -n;
      }
      piece = n.str() + "*" + gen;
    } else {
      piece = "(" + to_string(c) + ")*" + gen;
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    os << piece;
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::map<std::string, LaurentPoly> parse_combination(const std::string& text,
                                                     int mu) {
  std::map<std::string, LaurentPoly> out;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("combination: " + why + " at offset " +
                                std::to_string(pos) + " in \"" + text + "\"");
  };
  skip_ws();
  if (pos >= text.size()) fail("empty expression");
  if (text[pos] == '0') {
    size_t save = pos;
    ++pos;
    skip_ws();
    if (pos == text.size()) return out;
    pos = save;
  }
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) fail("empty expression");
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    skip_ws();
    LaurentPoly coeff = LaurentPoly::one(mu);
    if (pos < text.size() && text[pos] == '(') {
      int depth = 1;
      size_t start = ++pos;
      while (pos < text.size() && depth > 0) {
        if (text[pos] == '(') ++depth;
        if (text[pos] == ')') --depth;
        ++pos;
      }
      if (depth != 0) fail("unbalanced parentheses");
      coeff = parse_poly(text.substr(start, pos - 1 - start), mu);
      skip_ws();
      if (pos >= text.size() || text[pos] != '*') fail("expected '*' after coefficient");
      ++pos;
      skip_ws();
    } else if (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
      size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      coeff = parse_poly(text.substr(start, pos - start), mu);
      skip_ws();
      if (pos >= text.size() || text[pos] != '*') fail("expected '*' after coefficient");
      ++pos;
      skip_ws();
    }
    if (pos >= text.size() ||
        (!std::isalpha(static_cast<unsigned char>(text[pos])) &&
         text[pos] != '_')) {
      fail("expected a generator name");
    }
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_' || text[pos] == '\'')) {
      ++pos;
    }
    std::string gen = text.substr(start, pos - start);
    LaurentPoly add = sign < 0 ? -coeff : coeff;
    auto [it, inserted] = out.try_emplace(gen, add);
    if (!inserted) it->second += add;
    first = false;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace

std::string certificate_to_json(const EquivalenceCertificate& cert,
                                bool pretty) {
  Json j;
  j["images"] = Json::object();
  for (const auto& [gen, image] : cert.images) {
    j["images"][gen] = combination_to_string(image);
  }
  j["degree_bound"] = cert.degree_bound;
  return dump(j, pretty);
}

EquivalenceCertificate certificate_from_json(const std::string& text, int mu) {
  Json j = parse_json(text);
  EquivalenceCertificate cert;
  const Json& images = need(j, "images", "certificate");
  if (!images.is_object()) {
    throw std::invalid_argument("certificate: \"images\" must be an object");
  }
  for (const auto& [gen, value] : images.items()) {
    if (!value.is_string()) {
      throw std::invalid_argument("certificate: image of " + gen +
                                  " must be a combination string");
    }
    cert.images[gen] = parse_combination(value.get<std::string>(), mu);
  }
  if (j.contains("degree_bound")) {
    if (!j.at("degree_bound").is_number_integer()) {
      throw std::invalid_argument("certificate: \"degree_bound\" must be an integer");
    }
    cert.degree_bound = j.at("degree_bound").get<int>();
    if (cert.degree_bound < 0) {
      throw std::invalid_argument("certificate: \"degree_bound\" must be >= 0");
    }
  }
  return cert;
}

std::string fingerprint_to_json(const Fingerprint& fp, bool pretty) {
  Json j = Json::array();
  for (const FingerprintEntry& e : fp) {
    Json je;
    je["spec"] = e.spec_id;
    je["colorings"] = e.unconstrained;
    je["constant"] = e.constant_counts;
    je["zero"] = e.zero_counts;
    j.push_back(std::move(je));
  }
  return dump(j, pretty);
}

std::string coloring_to_json(const ColoringSpace& space, const ZnVec& v) {
  Json j;
  for (size_t g = 0; g < space.generators.size(); ++g) {
    if (space.rank == 1) {
      j[space.generators[g]] = v[g];
    } else {
      Json arr = Json::array();
      for (int i = 0; i < space.rank; ++i) arr.push_back(v[g * space.rank + i]);
      j[space.generators[g]] = std::move(arr);
    }
  }
  return j.dump();
}

ZnVec coloring_from_json(const std::string& text,
                         const std::vector<std::string>& generators, int rank,
                         std::int64_t modulus) {
  Json j = parse_json(text);
  if (!j.is_object()) {
    throw std::invalid_argument("coloring: expected an object keyed by generator");
  }
  ZnVec v(generators.size() * static_cast<size_t>(rank), 0);
  for (size_t g = 0; g < generators.size(); ++g) {
    auto it = j.find(generators[g]);
    if (it == j.end()) {
      throw std::invalid_argument("coloring: missing generator " + generators[g]);
    }
    if (it->is_number_integer()) {
      if (rank != 1) {
        throw std::invalid_argument("coloring: generator " + generators[g] +
                                    " needs " + std::to_string(rank) +
                                    " entries");
      }
      v[g] = mod_reduce(it->get<std::int64_t>(), modulus);
    } else if (it->is_array() && static_cast<int>(it->size()) == rank) {
      for (int i = 0; i < rank; ++i) {
        if (!(*it)[i].is_number_integer()) {
          throw std::invalid_argument("coloring: entries must be integers");
        }
        v[g * rank + i] = mod_reduce((*it)[i].get<std::int64_t>(), modulus);
      }
    } else {
      throw std::invalid_argument("coloring: generator " + generators[g] +
                                  " needs " + std::to_string(rank) +
                                  " integer entries");
    }
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const auto& g : generators) known = known || g == key;
    if (!known) {
      throw std::invalid_argument("coloring: unknown generator " + key);
    }
  }
  return v;
}

}  // namespace crowell
