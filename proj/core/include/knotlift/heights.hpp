#pragma once

// Degree of a component and heights of its long arcs.

#include <map>
#include <string>
#include <vector>

#include "knotlift/diagram.hpp"
#include "knotlift/gauss_code.hpp"

namespace knotlift {

// Sum of double-line signs along component `component` of traverse(d).
int degree(const PlanarDiagram& d, int component = 0);
std::vector<int> degrees(const PlanarDiagram& d);

// Heights of the long arcs of one component. A long arc is named by the
// double line it starts at.
struct HeightMap {
  std::string base;
  long modulus = 0;  // |degree|; 0 means integer heights
  std::map<std::string, long> heights;
  bool operator==(const HeightMap&) const = default;
};

// Throws std::invalid_argument when `base` is not a double line of d.
HeightMap heights(const PlanarDiagram& d, const std::string& base);

// Shifts every height so that the arc after `base2` sits at 0.
HeightMap rebase_heights(const HeightMap& h, const std::string& base2);

// Height of the long arc holding each event of one code component, counted
// from the first double line (or 0 everywhere without double lines).
// Heights are integers; reduce them as needed.
std::vector<long> event_heights(const std::vector<Event>& component);

}  // namespace knotlift
