#pragma once

// Local rewriting of diagrams with double lines: classical and virtual
// Reidemeister moves, the mixed move, sliding a double line through a
// crossing, cancelling a pair of double lines, and the crossing change.

#include <cstdint>
#include <string_view>
#include <vector>

#include "knotlift/diagram.hpp"
#include "knotlift/site.hpp"

namespace knotlift {

enum class MoveKind { R1, R2, R3, V1, V2, V3, MIXED, DL_SLIDE, DL_CANCEL };

inline constexpr MoveKind kAllMoveKinds[] = {MoveKind::R1, MoveKind::R2,    MoveKind::R3,       MoveKind::V1,       MoveKind::V2,
                                             MoveKind::V3, MoveKind::MIXED, MoveKind::DL_SLIDE, MoveKind::DL_CANCEL};

std::string_view to_string(MoveKind k);
MoveKind parse_move_kind(std::string_view s);

// Sites per kind:
//   R1, V1     fwd [edge or free loop], variant bit0 picks which strand runs
//              into the kink first, bit1 (R1 only) puts that strand over;
//              bwd [node], variant = strand that runs into the kink.
//   R2, V2     fwd [e, f] for two edges bounding a common face, bit0/bit1
//              say whether the e/f darts on that face run forward, bit2
//              (R2 only) puts e over; bwd [g, h], the two sides of a bigon.
//   R3, V3,
//   MIXED      [g, h, k], the sides of a triangular face, bit i set when the
//              i-th side is traversed forward; the move is its own inverse.
//   DL_SLIDE   fwd [crossing, double line] moves a double line sitting right
//              after the crossing to right before it; bwd [double line,
//              crossing] is the reverse. Both switch the crossing.
//   DL_CANCEL  fwd [edge or free loop], variant 0 inserts (+,-), 1 (-,+);
//              bwd [first, second] removes an adjacent opposite pair.
// Only sites whose rewrite yields a valid diagram are listed.
std::vector<MoveSite> enumerate_sites(const PlanarDiagram& d, MoveKind kind);

// Throws std::invalid_argument when the site does not match.
PlanarDiagram apply_move(const PlanarDiagram& d, MoveKind kind, const MoveSite& site);

// Switches the crossing and adds a +1 double line before it and a -1
// double line after it on its former over strand.
PlanarDiagram crossing_change(const PlanarDiagram& d, const std::string& crossing);

struct AppliedMove {
  MoveKind kind;
  MoveSite site;
};

struct RandomWalk {
  PlanarDiagram result;
  std::vector<AppliedMove> steps;
};

// Applies `steps` uniformly drawn moves (kind first, then site) among
// `kinds`; reproducible from `seed`.
RandomWalk random_walk(const PlanarDiagram& d, int steps, std::uint64_t seed,
                       const std::vector<MoveKind>& kinds = {std::begin(kAllMoveKinds), std::end(kAllMoveKinds)});

}  // namespace knotlift
