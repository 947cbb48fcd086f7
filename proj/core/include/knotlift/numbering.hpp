#pragma once

// Alexander numbering as a system of difference constraints over arc
// segments, solved over Z (modulus 0) or Z_m.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotlift/diagram.hpp"
#include "knotlift/gauss_code.hpp"

namespace knotlift {

// label(b) - label(a) = delta
struct Relation {
  int a = 0;
  int b = 0;
  long delta = 0;
  std::string source;  // crossing or cut id
};

struct ConstraintSystem {
  std::vector<std::string> variables;
  std::vector<Relation> relations;
  Segmentation segmentation;  // the segmentation variables were taken from

  int index_of(const std::string& var) const;
};

struct Numbering {
  long modulus = 0;
  std::vector<long> values;  // aligned with ConstraintSystem::variables
};

// Segments break at classical passes, and also at cut marks when
// `include_cuts` is set. Each crossing contributes three relations and each
// cut mark one.
ConstraintSystem build_constraints(const MarkedGaussCode& code, bool include_cuts);

std::optional<Numbering> solve(const ConstraintSystem& cs, long m);

// Non-negative g with: solve(cs, m) succeeds iff m divides g.
long defect(const ConstraintSystem& cs);

// One message per violated relation.
std::vector<std::string> check_numbering(const ConstraintSystem& cs, const Numbering& n);

// Throws std::invalid_argument when `d` has cut points.
bool is_mod_m_ac(const PlanarDiagram& d, long m);

std::unordered_map<std::string, long> as_map(const ConstraintSystem& cs, const Numbering& n);

}  // namespace knotlift
