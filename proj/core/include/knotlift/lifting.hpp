#pragma once

// Lifts of a knot diagram with double lines: the single-sheet lifts lift0
// and liftk, the cabled coverings cover0 and coverk, the code-level
// restriction of the infinite lift, and the closed-form numbering of a
// covering.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotlift/diagram.hpp"
#include "knotlift/gauss_code.hpp"
#include "knotlift/numbering.hpp"

namespace knotlift {

enum class CoverPiece { grid, twist, wrap };

struct Provenance {
  std::string source;  // node of the base diagram
  CoverPiece piece = CoverPiece::grid;
  // Grid nodes: sheets of the copies of base strands 0 and 1.
  // Twist crossings: sheets of the wrapping copy and the crossed copy.
  // Wrap double lines: sheet of the wrapping copy, twice.
  std::array<int, 2> sheets{0, 0};
};

struct CoveringDiagram {
  PlanarDiagram diagram;
  int sheets = 1;
  std::map<std::string, Provenance> provenance;
  // Closed-form Alexander label of the arc leaving each classical crossing
  // along its strands 0 and 1, reduced mod `sheets`.
  std::unordered_map<std::string, std::array<long, 2>> arc_labels;
};

// Per-pass integer heights of a single-component diagram, based at its
// first double line.
struct PassHeights {
  std::unordered_map<std::string, std::array<long, 2>> node;  // node id -> strand heights
  long spread = 0;  // max - min over all passes
};
PassHeights pass_heights(const PlanarDiagram& d);

// Each throws std::invalid_argument when its precondition on the degree or
// the component count fails.
PlanarDiagram lift0(const PlanarDiagram& d);
PlanarDiagram liftk(const PlanarDiagram& d);
CoveringDiagram cover0(const PlanarDiagram& d, int m);
CoveringDiagram coverk(const PlanarDiagram& d);
MarkedGaussCode restricted_lift(const PlanarDiagram& d, int m);

struct CoveringNumbering {
  ConstraintSystem system;
  std::optional<Numbering> numbering;
  bool fallback = false;                   // closed form rejected, solver used
  std::vector<std::string> discrepancies;  // relations the closed form broke
};

CoveringNumbering covering_numbering(const CoveringDiagram& c, long m);

}  // namespace knotlift
