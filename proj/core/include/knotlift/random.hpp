#pragma once

// Seeded generators for codes and diagrams. Bounded draws are done here
// rather than with <random> distributions so that sequences do not depend
// on the standard library implementation.

#include <cstdint>
#include <optional>
#include <random>

#include "knotlift/diagram.hpp"
#include "knotlift/gauss_code.hpp"

namespace knotlift {

// Uniform in [0, n); n must be positive.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n);

struct RandomDiagramOptions {
  int max_crossings = 8;
  int max_double_lines = 6;
  // Total double-line sign sum. Unset: any; 0: degree 0; otherwise the
  // degree is drawn among nonzero values reachable with the bound.
  std::optional<int> degree = 0;
  bool nonzero_degree = false;  // only read when `degree` is unset
  bool at_least_one_crossing = false;
};

// Single-component marked Gauss code with random pass order, roles, signs
// and double lines.
MarkedGaussCode random_code(std::mt19937_64& rng, const RandomDiagramOptions& opts);

// realize_code(random_code(...)) seeded with `seed`.
PlanarDiagram generate_random_diagram(std::uint64_t seed, const RandomDiagramOptions& opts = {});

}  // namespace knotlift
