#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crowell/diagram.hpp"
#include "crowell/equivalence.hpp"
#include "crowell/json_io.hpp"
#include "crowell/laurent.hpp"
#include "crowell/presentation.hpp"
#include "crowell/quandle.hpp"

namespace {

using crowell::ColoringSpace;
using crowell::Diagram;
using crowell::FiniteModuleSpec;
using crowell::OrbitConstraint;
using crowell::Presentation;
using Json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

void emit(const std::string& text) {
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << '\n';
}

void emit_json(const Json& j, bool pretty) {
  emit(pretty ? j.dump(2) : j.dump());
}

std::vector<FiniteModuleSpec> battery_for(int mu) {
  const char* env = std::getenv("CROWELL_BATTERY");
  if (env != nullptr && *env != '\0') {
    std::vector<FiniteModuleSpec> battery =
        crowell::battery_from_json(read_input(env));
    for (const auto& spec : battery) {
      if (spec.mu != mu) {
        throw std::invalid_argument(
            "battery file: spec " + spec.id + " has " +
            std::to_string(spec.mu) + " variables, input needs " +
            std::to_string(mu));
      }
    }
    return battery;
  }
  return crowell::default_battery(mu);
}

std::vector<int> parse_sigma(const std::string& text) {
  std::vector<int> sigma;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = std::stoi(item, &used);
    while (used < item.size() &&
           std::isspace(static_cast<unsigned char>(item[used]))) {
      ++used;
    }
    if (used != item.size()) {
      throw std::invalid_argument("--sigma: bad entry \"" + item + "\"");
    }
    sigma.push_back(v);
  }
  if (sigma.empty()) throw std::invalid_argument("--sigma: empty permutation");
  return sigma;
}

// "2=zero,1=constant" -> per-component constraints.
std::vector<OrbitConstraint> parse_constraints(const std::string& text,
                                               int mu) {
  std::vector<OrbitConstraint> out(mu, OrbitConstraint::Free);
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("--constraint: expected i=kind, got \"" +
                                  item + "\"");
    }
    int comp = std::stoi(item.substr(0, eq));
    if (comp < 1 || comp > mu) {
      throw std::invalid_argument("--constraint: component " +
                                  std::to_string(comp) + " out of range");
    }
    std::string kind = item.substr(eq + 1);
    if (kind == "zero") {
      out[comp - 1] = OrbitConstraint::Zero;
    } else if (kind == "constant") {
      out[comp - 1] = OrbitConstraint::Constant;
    } else if (kind == "free") {
      out[comp - 1] = OrbitConstraint::Free;
    } else {
      throw std::invalid_argument(
          "--constraint: kind must be zero, constant or free, got \"" + kind +
          "\"");
    }
  }
  return out;
}

Json coloring_json(const ColoringSpace& space, const crowell::ZnVec& v) {
  Json j = Json::object();
  for (size_t g = 0; g < space.generators.size(); ++g) {
    if (space.rank == 1) {
      j[space.generators[g]] = v[g];
    } else {
      Json arr = Json::array();
      for (int i = 0; i < space.rank; ++i) arr.push_back(v[g * space.rank + i]);
      j[space.generators[g]] = std::move(arr);
    }
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Alexander-module presentations, sublink projections and finite-module "
      "coloring invariants of link diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::function<int()> action;

  // present
  {
    auto* cmd = app.add_subcommand(
        "present", "build the arc/crossing presentation of a diagram");
    auto input = std::make_shared<std::string>();
    cmd->add_option("input", *input, "diagram or presentation JSON ('-' = stdin)")
        ->required();
    cmd->callback([&, input] {
      action = [&, input] {
        Presentation p = crowell::presentation_from_any_json(read_input(*input));
        emit(crowell::presentation_to_json(p, pretty));
        return 0;
      };
    });
  }

  // simplify
  {
    auto* cmd = app.add_subcommand(
        "simplify", "reduce a presentation with Tietze-style moves");
    auto input = std::make_shared<std::string>();
    auto opts = std::make_shared<crowell::SimplifyOptions>();
    cmd->add_option("input", *input, "diagram or presentation JSON ('-' = stdin)")
        ->required();
    cmd->add_option("--window", opts->window,
                    "exponent window for bounded searches");
    cmd->add_option("--synth-range", opts->synth_range,
                    "exponent range of synthesized pivot units");
    cmd->add_option("--max-changes", opts->max_changes,
                    "bound on generator-changing moves");
    cmd->callback([&, input, opts] {
      action = [&, input, opts] {
        Presentation p = crowell::presentation_from_any_json(read_input(*input));
        emit(crowell::presentation_to_json(crowell::simplify(p, *opts), pretty));
        return 0;
      };
    });
  }

  // sublink
  {
    auto* cmd = app.add_subcommand(
        "sublink", "remove one component, by diagram deletion or quotient");
    auto input = std::make_shared<std::string>();
    auto drop = std::make_shared<int>(0);
    auto mode = std::make_shared<std::string>("diagram");
    cmd->add_option("input", *input, "diagram JSON ('-' = stdin)")->required();
    cmd->add_option("--drop", *drop, "component to remove (1-based)")
        ->required();
    cmd->add_option("--mode", *mode,
                    "diagram: emit the deleted diagram; quotient: emit the "
                    "quotient presentation")
        ->check(CLI::IsMember({"diagram", "quotient"}));
    cmd->callback([&, input, drop, mode] {
      action = [&, input, drop, mode] {
        Diagram d = crowell::diagram_from_json(read_input(*input));
        if (*mode == "diagram") {
          emit(crowell::diagram_to_json(crowell::delete_component(d, *drop),
                                        pretty));
        } else {
          Presentation p = crowell::build_presentation(d);
          emit(crowell::presentation_to_json(
              crowell::sublink_quotient(p, d, *drop), pretty));
        }
        return 0;
      };
    });
  }

  // ideals
  {
    auto* cmd = app.add_subcommand(
        "ideals", "elementary ideal minors of the relation matrix");
    auto input = std::make_shared<std::string>();
    auto k = std::make_shared<int>(0);
    cmd->add_option("input", *input, "diagram or presentation JSON ('-' = stdin)")
        ->required();
    cmd->add_option("-k", *k, "ideal index (minor size = generators - k)")
        ->required();
    cmd->callback([&, input, k] {
      action = [&, input, k] {
        Presentation p = crowell::presentation_from_any_json(read_input(*input));
        Json j;
        j["k"] = *k;
        j["minors"] = Json::array();
        for (const auto& m : crowell::elementary_ideal_minors(p, *k)) {
          j["minors"].push_back(crowell::to_string(m));
        }
        emit_json(j, pretty);
        return 0;
      };
    });
  }

  // alexpoly
  {
    auto* cmd = app.add_subcommand(
        "alexpoly",
        "Alexander polynomial of a one-variable presentation or diagram");
    auto input = std::make_shared<std::string>();
    cmd->add_option("input", *input, "diagram or presentation JSON ('-' = stdin)")
        ->required();
    cmd->callback([&, input] {
      action = [&, input] {
        Presentation p = crowell::presentation_from_any_json(read_input(*input));
        emit(crowell::to_string(crowell::alexander_polynomial(p)));
        return 0;
      };
    });
  }

  // reduce1
  {
    auto* cmd = app.add_subcommand(
        "reduce1", "send every variable to t1 (one-variable reduction)");
    auto input = std::make_shared<std::string>();
    cmd->add_option("input", *input, "diagram or presentation JSON ('-' = stdin)")
        ->required();
    cmd->callback([&, input] {
      action = [&, input] {
        Presentation p = crowell::presentation_from_any_json(read_input(*input));
        emit(crowell::presentation_to_json(crowell::reduce_one_variable(p),
                                           pretty));
        return 0;
      };
    });
  }

  // color
  {
    auto* cmd = app.add_subcommand(
        "color", "solve for colorings in a finite module and count or list them");
    auto input = std::make_shared<std::string>();
    auto spec_path = std::make_shared<std::string>();
    auto constraint = std::make_shared<std::string>();
    auto report = std::make_shared<std::string>();
    auto list = std::make_shared<bool>(false);
    cmd->add_option("input", *input, "diagram or presentation JSON ('-' = stdin)")
        ->required();
    cmd->add_option("--spec", *spec_path, "module spec JSON file")->required();
    cmd->add_option("--constraint", *constraint,
                    "orbit constraints, e.g. \"2=zero,1=constant\"");
    cmd->add_option("--report", *report,
                    "difference report, e.g. \"nonconstant:1\"");
    cmd->add_flag("--list", *list, "list the coloring vectors");
    cmd->callback([&, input, spec_path, constraint, report, list] {
      action = [&, input, spec_path, constraint, report, list] {
        Presentation p = crowell::presentation_from_any_json(read_input(*input));
        FiniteModuleSpec spec =
            crowell::module_spec_from_json(read_input(*spec_path));
        ColoringSpace space = crowell::solve_colorings(p, spec);
        Json j;
        j["spec"] = spec.id;
        std::vector<OrbitConstraint> base = parse_constraints(*constraint, p.mu);
        if (!report->empty()) {
          const std::string prefix = "nonconstant:";
          if (report->rfind(prefix, 0) != 0) {
            throw std::invalid_argument(
                "--report: expected \"nonconstant:<component>\"");
          }
          int comp = std::stoi(report->substr(prefix.size()));
          if (comp < 1 || comp > p.mu) {
            throw std::invalid_argument("--report: component out of range");
          }
          if (base[comp - 1] != OrbitConstraint::Free) {
            throw std::invalid_argument(
                "--report: reported component must not also be constrained");
          }
          std::vector<OrbitConstraint> with = base;
          with[comp - 1] = OrbitConstraint::Constant;
          std::uint64_t free_count = crowell::count_constrained(p, spec, base);
          std::uint64_t const_count = crowell::count_constrained(p, spec, with);
          j["report"] = *report;
          if (!constraint->empty()) j["constraint"] = *constraint;
          j["count"] = free_count - const_count;
        } else if (!constraint->empty()) {
          j["constraint"] = *constraint;
          j["count"] = crowell::count_constrained(p, spec, base);
        } else {
          j["modulus"] = spec.modulus;
          j["rank"] = spec.rank;
          j["count"] = space.count();
          if (*list) {
            Json arr = Json::array();
            space.for_each([&](const crowell::ZnVec& v) {
              arr.push_back(coloring_json(space, v));
            });
            j["colorings"] = std::move(arr);
          }
        }
        emit_json(j, pretty);
        return 0;
      };
    });
  }

  // fingerprint
  {
    auto* cmd = app.add_subcommand(
        "fingerprint",
        "coloring counts and orbit statistics over the module battery");
    auto input = std::make_shared<std::string>();
    auto jobs = std::make_shared<int>(1);
    cmd->add_option("input", *input, "diagram or presentation JSON ('-' = stdin)")
        ->required();
    cmd->add_option("--jobs", *jobs, "battery entries evaluated concurrently");
    cmd->callback([&, input, jobs] {
      action = [&, input, jobs] {
        Presentation p = crowell::presentation_from_any_json(read_input(*input));
        crowell::Fingerprint fp =
            crowell::fingerprint(p, battery_for(p.mu), *jobs);
        emit(crowell::fingerprint_to_json(fp, pretty));
        return 0;
      };
    });
  }

  // check-equiv
  {
    auto* cmd = app.add_subcommand(
        "check-equiv", "check a module-map certificate between presentations");
    auto path_a = std::make_shared<std::string>();
    auto path_b = std::make_shared<std::string>();
    auto path_cert = std::make_shared<std::string>();
    cmd->add_option("A", *path_a, "source diagram or presentation JSON")
        ->required();
    cmd->add_option("B", *path_b, "target diagram or presentation JSON")
        ->required();
    cmd->add_option("cert", *path_cert, "certificate JSON")->required();
    cmd->callback([&, path_a, path_b, path_cert] {
      action = [&, path_a, path_b, path_cert] {
        Presentation a = crowell::presentation_from_any_json(read_input(*path_a));
        Presentation b = crowell::presentation_from_any_json(read_input(*path_b));
        crowell::EquivalenceCertificate cert =
            crowell::certificate_from_json(read_input(*path_cert), a.mu);
        crowell::EquivalenceReport rep = crowell::check_equivalence_certificate(
            a, b, cert, battery_for(a.mu));
        Json j;
        switch (rep.verdict) {
          case crowell::Verdict::Verified:
            j["verdict"] = "VERIFIED";
            break;
          case crowell::Verdict::Refuted:
            j["verdict"] = "REFUTED";
            break;
          case crowell::Verdict::Inconclusive:
            j["verdict"] = "INCONCLUSIVE";
            break;
        }
        j["detail"] = rep.detail;
        emit_json(j, pretty);
        return rep.verdict == crowell::Verdict::Inconclusive ? 1 : 0;
      };
    });
  }

  // permute
  {
    auto* cmd = app.add_subcommand(
        "permute", "relabel link components by a permutation");
    auto input = std::make_shared<std::string>();
    auto sigma_text = std::make_shared<std::string>();
    cmd->add_option("input", *input, "diagram or presentation JSON ('-' = stdin)")
        ->required();
    cmd->add_option("--sigma", *sigma_text,
                    "comma-separated images of components 1..mu, e.g. \"2,1\"")
        ->required();
    cmd->callback([&, input, sigma_text] {
      action = [&, input, sigma_text] {
        std::string text = read_input(*input);
        std::vector<int> sigma = parse_sigma(*sigma_text);
        if (crowell::json_is_diagram(text)) {
          Diagram d = crowell::diagram_from_json(text);
          emit(crowell::diagram_to_json(crowell::permute_components(d, sigma),
                                        pretty));
        } else {
          Presentation p = crowell::presentation_from_json(text);
          emit(crowell::presentation_to_json(
              crowell::permute_components(p, sigma), pretty));
        }
        return 0;
      };
    });
  }

  // lengths
  {
    auto* cmd = app.add_subcommand(
        "lengths",
        "shortest-expression lengths of quandle elements under a coloring");
    auto input = std::make_shared<std::string>();
    auto spec_path = std::make_shared<std::string>();
    auto coloring_path = std::make_shared<std::string>();
    auto maxlen = std::make_shared<int>(4);
    cmd->add_option("input", *input, "diagram or presentation JSON ('-' = stdin)")
        ->required();
    cmd->add_option("--spec", *spec_path, "module spec JSON file")->required();
    cmd->add_option("--coloring", *coloring_path,
                    "coloring JSON file ({generator: value})")
        ->required();
    cmd->add_option("--maxlen", *maxlen, "largest length to tabulate");
    cmd->callback([&, input, spec_path, coloring_path, maxlen] {
      action = [&, input, spec_path, coloring_path, maxlen] {
        Presentation p = crowell::presentation_from_any_json(read_input(*input));
        FiniteModuleSpec spec =
            crowell::module_spec_from_json(read_input(*spec_path));
        crowell::ZnVec coloring = crowell::coloring_from_json(
            read_input(*coloring_path), p.generators, spec.rank, spec.modulus);
        ColoringSpace space = crowell::solve_colorings(p, spec);
        if (!space.contains(coloring)) {
          throw std::invalid_argument(
              "coloring does not satisfy the presentation's relations");
        }
        std::vector<crowell::GradedElement> seeds;
        for (const auto& s : crowell::orbit_seeds(p)) {
          seeds.push_back(
              {s.component, crowell::seed_value(p, spec, s, coloring)});
        }
        auto table = crowell::element_lengths(seeds, spec, *maxlen);
        Json arr = Json::array();
        for (const auto& [elem, len] : table) {
          Json je;
          je["component"] = elem.component;
          je["value"] = elem.value;
          je["length"] = len;
          arr.push_back(std::move(je));
        }
        emit_json(arr, pretty);
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
