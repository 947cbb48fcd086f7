#pragma once

// Odd writhe, linking numbers and a combined report used as a cheap
// equivalence oracle.

#include <map>
#include <vector>

#include "knotlift/diagram.hpp"
#include "knotlift/gauss_code.hpp"

namespace knotlift {

// Sign sum over crossings whose two passes enclose an odd number of
// crossing passes. Throws std::invalid_argument unless the code has exactly
// one component.
long odd_writhe(const MarkedGaussCode& code);

// Entry (i, j), i != j: sign sum over crossings where component i passes
// over component j. The diagonal is zero.
using Matrix = std::vector<std::vector<long>>;
Matrix linking_matrix(const MarkedGaussCode& code);

inline const std::vector<long> kReportModuli{0, 2, 3, 4, 5};

struct InvariantReport {
  int components = 0;
  std::vector<long> odd_writhes;  // of each component's self-crossings
  Matrix linking;
  std::map<long, bool> ac;        // modulus -> numberable (cut marks ignored)
  std::vector<int> degrees;
  bool operator==(const InvariantReport&) const = default;
};

InvariantReport invariant_report(const PlanarDiagram& d);

// True when some relabeling of b's components matches a's component count,
// odd writhes, degrees and linking matrix. AC flags are compared only when
// `compare_ac` is set.
bool equivalent_reports(const InvariantReport& a, const InvariantReport& b, bool compare_ac = false);

}  // namespace knotlift
