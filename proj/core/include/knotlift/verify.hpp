#pragma once

// End-to-end checks shared by the command-line tool and the acceptance
// suite: the cut system -> double lines -> covering -> numbering pipeline,
// and the seeded random suite over degree-0 diagrams.

#include <cstdint>
#include <string>
#include <vector>

#include "knotlift/diagram.hpp"
#include "knotlift/lifting.hpp"
#include "knotlift/random.hpp"

namespace knotlift {

// Diagram with double lines for the pipeline: cut points are replaced,
// diagrams without marks first get the standard cut system, diagrams that
// already carry double lines are returned unchanged.
PlanarDiagram prepare_double_lines(const PlanarDiagram& d);

struct TheoremCheck {
  long m = 0;
  PlanarDiagram with_double_lines;
  CoveringDiagram cover;
  CoveringNumbering numbering;
  bool ok() const { return numbering.numbering.has_value(); }
};

// Throws std::invalid_argument when the prepared diagram has nonzero degree
// or several components.
TheoremCheck verify_theorem(const PlanarDiagram& d, long m);

// Independent per-trial seed derived from a suite seed.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

struct SuiteOptions {
  std::uint64_t seed = 7;
  int trials = 1000;
  std::vector<long> moduli{2, 3, 4, 5};
  RandomDiagramOptions diagrams{};
};

struct SuiteEvent {
  int trial = 0;
  long m = 0;
  std::string detail;
};

struct SuiteReport {
  int trials = 0;
  long checks = 0;
  std::vector<SuiteEvent> failures;   // covering not numberable
  std::vector<SuiteEvent> fallbacks;  // closed form rejected, solver succeeded
  double closed_form_rate() const { return checks ? 1.0 - static_cast<double>(fallbacks.size()) / static_cast<double>(checks) : 1.0; }
  bool ok(double min_closed_form_rate = 0.99) const { return failures.empty() && closed_form_rate() >= min_closed_form_rate; }
};

SuiteReport random_suite(const SuiteOptions& opts);

}  // namespace knotlift
