#include "crowell/diagram.hpp"

#include <set>
#include <stdexcept>

namespace crowell {

const Arc* Diagram::find_arc(const std::string& id) const {
  for (const Arc& a : arcs) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

int Diagram::component_of(const std::string& arc_id) const {
  const Arc* a = find_arc(arc_id);
  if (!a) throw std::invalid_argument("unknown arc reference: " + arc_id);
  return a->component;
}

void validate(const Diagram& d) {
  if (d.mu < 0) throw std::invalid_argument("diagram: negative component count");
  std::set<std::string> ids;
  std::set<int> seen_components;
  for (const Arc& a : d.arcs) {
    if (a.id.empty()) throw std::invalid_argument("diagram: empty arc id");
    if (!ids.insert(a.id).second) {
      throw std::invalid_argument("diagram: duplicate arc id " + a.id);
    }
    if (a.component < 1 || a.component > d.mu) {
      throw std::invalid_argument("diagram: arc " + a.id +
                                  " has component out of range");
    }
    seen_components.insert(a.component);
  }
  for (int c = 1; c <= d.mu; ++c) {
    if (!seen_components.count(c)) {
      throw std::invalid_argument("diagram: component " + std::to_string(c) +
                                  " owns no arc");
    }
  }
  std::set<std::string> crossing_ids;
  for (const Crossing& c : d.crossings) {
    if (c.id.empty()) throw std::invalid_argument("diagram: empty crossing id");
    if (!crossing_ids.insert(c.id).second) {
      throw std::invalid_argument("diagram: duplicate crossing id " + c.id);
    }
    if (!ids.count(c.left)) {
      throw std::invalid_argument("diagram: crossing " + c.id +
                                  " references unknown arc " + c.left);
    }
    if (!ids.count(c.right)) {
      throw std::invalid_argument("diagram: crossing " + c.id +
                                  " references unknown arc " + c.right);
    }
    if (c.left == c.right) {
      throw std::invalid_argument("diagram: crossing " + c.id +
                                  " has identical under-arcs");
    }
    if (d.component_of(c.left) != d.component_of(c.right)) {
      throw std::invalid_argument("diagram: crossing " + c.id +
                                  " joins arcs of different components");
    }
    if (c.trivial) {
      if (!c.over.empty()) {
        throw std::invalid_argument("diagram: trivial crossing " + c.id +
                                    " must not name an over-arc");
      }
    } else {
      if (!ids.count(c.over)) {
        throw std::invalid_argument("diagram: crossing " + c.id +
                                    " references unknown arc " + c.over);
      }
    }
  }
}

Diagram delete_component(const Diagram& d, int j) {
  if (j < 1 || j > d.mu) {
    throw std::invalid_argument("delete_component: component out of range");
  }
  if (d.mu <= 1) {
    throw std::invalid_argument("delete_component: cannot delete the last component");
  }
  Diagram out;
  out.mu = d.mu - 1;
  for (const Arc& a : d.arcs) {
    if (a.component == j) continue;
    Arc na = a;
    if (na.component > j) --na.component;
    out.arcs.push_back(std::move(na));
  }
  for (const Crossing& c : d.crossings) {
    if (d.component_of(c.left) == j) continue;  // the understrand is gone
    Crossing nc = c;
    if (!c.trivial && d.component_of(c.over) == j) {
      nc.trivial = true;
      nc.over.clear();
    }
    out.crossings.push_back(std::move(nc));
  }
  return out;
}

Diagram permute_components(const Diagram& d, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != d.mu) {
    throw std::invalid_argument("permute_components: length mismatch");
  }
  std::vector<bool> seen(d.mu, false);
  for (int s : sigma) {
    if (s < 1 || s > d.mu || seen[s - 1]) {
      throw std::invalid_argument("permute_components: not a permutation");
    }
    seen[s - 1] = true;
  }
  Diagram out = d;
  for (Arc& a : out.arcs) a.component = sigma[a.component - 1];
  return out;
}

namespace {

Crossing ordinary(std::string id, std::string over, std::string left,
                  std::string right, Crossing::UnderIn in) {
  Crossing c;
  c.id = std::move(id);
  c.over = std::move(over);
  c.left = std::move(left);
  c.right = std::move(right);
  c.under_in = in;
  return c;
}

std::map<std::string, Diagram> make_fixtures() {
  std::map<std::string, Diagram> f;
  constexpr auto L = Crossing::UnderIn::left;
  constexpr auto R = Crossing::UnderIn::right;

  {
    Diagram d;
    d.mu = 1;
    d.arcs = {{"a1", 1}};
    f["unknot"] = d;
  }
  {
    Diagram d;
    d.mu = 1;
    d.arcs = {{"a1", 1}, {"a2", 1}, {"a3", 1}};
    d.crossings = {
        ordinary("c1", "a3", "a1", "a2", L),
        ordinary("c2", "a1", "a2", "a3", L),
        ordinary("c3", "a2", "a3", "a1", L),
    };
    f["trefoil"] = d;
  }
  {
    // Whitehead link; arcs a2, a4, a5 form the first component and a1, a3
    // the second.
    Diagram d;
    d.mu = 2;
    d.arcs = {{"a1", 2}, {"a2", 1}, {"a3", 2}, {"a4", 1}, {"a5", 1}};
    d.crossings = {
        ordinary("c1", "a5", "a1", "a3", L),
        ordinary("c2", "a1", "a4", "a2", R),
        ordinary("c3", "a2", "a1", "a3", R),
        ordinary("c4", "a3", "a4", "a5", L),
        ordinary("c5", "a4", "a2", "a5", R),
    };
    f["whitehead"] = d;
  }
  {
    // Two-component link with seven crossings whose first component, taken
    // alone, is a trefoil; the second component is unknotted.
    Diagram d;
    d.mu = 2;
    d.arcs = {{"a1", 2}, {"a2", 1}, {"a3", 2}, {"a4", 1},
              {"a5", 1}, {"a6", 1}, {"a7", 1}};
    d.crossings = {
        ordinary("c1", "a7", "a1", "a3", L),
        ordinary("c2", "a1", "a4", "a2", R),
        ordinary("c3", "a2", "a1", "a3", R),
        ordinary("c4", "a7", "a4", "a5", L),
        ordinary("c5", "a4", "a5", "a6", L),
        ordinary("c6", "a1", "a6", "a7", L),
        ordinary("c7", "a5", "a7", "a2", L),
    };
    f["l7_2_8"] = d;
  }
  for (auto& [name, d] : f) validate(d);
  return f;
}

}  // namespace

const std::map<std::string, Diagram>& fixtures() {
  static const std::map<std::string, Diagram> f = make_fixtures();
  return f;
}

}  // namespace crowell
