#pragma once

// Oriented cut points: standard cut systems, validity, local cut-point
// moves and the replacement of cut points by double lines.

#include <vector>

#include "knotlift/diagram.hpp"
#include "knotlift/site.hpp"

namespace knotlift {

// Strand (0 or 1) that plays the role `a` when the ccw order at a
// 4-valent node reads (a_in, b_in, a_out, b_out).
int leading_strand(const Node& n);

// Adds a coherent cut point after each virtual crossing on its `b` strand
// and an incoherent one on its `a` strand.
PlanarDiagram standard_cut_system(const PlanarDiagram& d);

bool is_cut_system(const PlanarDiagram& d);

struct CutCounts {
  long coherent = 0;
  long incoherent = 0;
  bool operator==(const CutCounts&) const = default;
};
CutCounts count_cut_points(const PlanarDiagram& d);

enum class CutMoveKind { cancel_pair, pass_virtual, four_around_crossing };

std::string_view to_string(CutMoveKind k);
CutMoveKind parse_cut_move_kind(std::string_view s);

// Sites, both directions:
//   cancel_pair           fwd: [edge or free loop], variant 0 inserts
//                         (coherent, incoherent), 1 the reverse order;
//                         bwd: [first cut, second cut].
//   pass_virtual          fwd: [cut, virtual] moves the cut past the
//                         crossing downstream; bwd: [virtual, cut] upstream.
//   four_around_crossing  fwd: [crossing], variant 0 puts coherent cuts on
//                         both incoming edges and incoherent cuts on both
//                         outgoing ones, variant 1 the opposite;
//                         bwd: [crossing] removes such a quadruple.
std::vector<MoveSite> enumerate_cut_sites(const PlanarDiagram& d, CutMoveKind kind);

// Throws std::invalid_argument when the site does not match.
PlanarDiagram apply_cut_move(const PlanarDiagram& d, CutMoveKind kind, const MoveSite& site);

// Coherent cut points become +1 double lines, incoherent ones -1. Throws
// std::invalid_argument unless is_cut_system(d).
PlanarDiagram to_double_lines(const PlanarDiagram& d);

}  // namespace knotlift
