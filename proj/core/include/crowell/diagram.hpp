#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crowell {

// One arc of an oriented link diagram, labeled with the component (1-based)
// it belongs to.
struct Arc {
  std::string id;
  int component = 1;
  bool operator==(const Arc&) const = default;
};

// One crossing: the overpassing arc and the two arcs of the underpassing
// strand, in the left/right convention taken from the orientation of the
// overpass. `under_in`, when present, records which of the two under-arcs is
// the incoming one. A trivial crossing (produced by deleting the component
// that used to pass over) keeps only the two under-arcs, which there join.
struct Crossing {
  enum class UnderIn { left, right };

  std::string id;
  bool trivial = false;
  std::string over;  // empty when trivial
  std::string left;
  std::string right;
  std::optional<UnderIn> under_in;
  bool operator==(const Crossing&) const = default;
};

struct Diagram {
  int mu = 0;
  std::vector<Arc> arcs;
  std::vector<Crossing> crossings;

  const Arc* find_arc(const std::string& id) const;
  int component_of(const std::string& arc_id) const;
  bool operator==(const Diagram&) const = default;
};

// Structural checks: arc ids unique and nonempty, crossing references
// resolve, left/right arcs of a crossing are distinct and share a component,
// component labels cover 1..mu with every component owning at least one arc.
// Throws std::invalid_argument with a description on failure.
void validate(const Diagram& d);

// Diagram of the sublink obtained by removing component j entirely:
// its arcs disappear, crossings where it passes under disappear, crossings
// where it passes over become trivial, and components above j shift down.
Diagram delete_component(const Diagram& d, int j);

// Relabel components by sigma (1-based: component i becomes sigma[i-1]).
Diagram permute_components(const Diagram& d, const std::vector<int>& sigma);

// Built-in diagrams keyed by name: "unknot", "trefoil", "whitehead",
// "l7_2_8" (the 7-crossing two-component link with a trefoil component).
const std::map<std::string, Diagram>& fixtures();

}  // namespace crowell
