#pragma once

// Marked Gauss codes: the per-component cyclic sequence of crossing passes,
// double-line marks and cut marks read off a PlanarDiagram.

#include <string>
#include <string_view>
#include <vector>

#include "knotlift/diagram.hpp"

namespace knotlift {

enum class EventKind { crossing, double_line, cut };
enum class Role { over, under };

struct Event {
  EventKind kind = EventKind::crossing;
  std::string id;
  Role role = Role::over;  // crossings only
  int sign = 1;            // crossings and double lines
  CutDirection direction = CutDirection::coherent;  // cut marks only

  static Event crossing(std::string id, Role role, int sign) { return {EventKind::crossing, std::move(id), role, sign, CutDirection::coherent}; }
  static Event double_line(std::string id, int sign) { return {EventKind::double_line, std::move(id), Role::over, sign, CutDirection::coherent}; }
  static Event cut(std::string id, CutDirection dir) { return {EventKind::cut, std::move(id), Role::over, 1, dir}; }
  bool operator==(const Event&) const = default;
};

struct MarkedGaussCode {
  std::vector<std::vector<Event>> components;
  bool operator==(const MarkedGaussCode&) const = default;
};

// Empty iff every crossing id occurs once over and once under with equal
// signs, double-line/cut ids occur once, and no id is used for both.
std::vector<std::string> check_code(const MarkedGaussCode& code);

MarkedGaussCode traverse(const PlanarDiagram& d);

// Text form: components separated by '|', events separated by spaces.
//   O<id>+  U<id>-   crossing passes with sign
//   T<id>+  T<id>-   double lines
//   C<id>>  C<id><   coherent / incoherent cut marks
// An empty component is written as '()'.
std::string format_code(const MarkedGaussCode& code);
MarkedGaussCode parse_code(std::string_view text);

enum class SegmentPolicy {
  arcs,              // break at classical passes and cut marks
  long_arcs,         // break at double-line marks
  short_arcs,        // break at classical passes and double-line marks
  classical_arcs,    // break at classical passes only
};

struct Segment {
  std::string id;
  int component = 0;
  int start_event = -1;  // boundary event preceding the segment, -1 if closed
  int end_event = -1;    // boundary event following the segment, -1 if closed
  std::vector<int> interior;  // non-boundary events inside, in order
  bool closed() const { return start_event < 0; }
};

struct Segmentation {
  SegmentPolicy policy = SegmentPolicy::arcs;
  std::vector<Segment> segments;
  // Per component and event: index of the segment that begins right after
  // the event (boundary events) or contains it (interior events).
  std::vector<std::vector<int>> after;
  // Per component and event: index of the segment ending at the event, or
  // containing it.
  std::vector<std::vector<int>> before;
};

bool is_boundary(const Event& e, SegmentPolicy policy);
Segmentation segment(const MarkedGaussCode& code, SegmentPolicy policy);

// Relabeling-, component-order- and rotation-invariant form. Two codes are
// isomorphic iff their canonical forms compare equal.
struct CanonicalCode {
  std::vector<long> tokens;
  bool operator==(const CanonicalCode&) const = default;
  auto operator<=>(const CanonicalCode&) const = default;
  std::string to_string() const;
};

CanonicalCode canonical_code(const MarkedGaussCode& code);

// Builds a plane diagram whose traversal is `code`, adding virtual
// crossings where the chords of the code force them.
PlanarDiagram realize_code(const MarkedGaussCode& code);

}  // namespace knotlift
