#pragma once

// Oriented plane diagrams with classical crossings, virtual crossings,
// double lines and oriented cut points, stored as a rotation system.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotlift {

enum class NodeKind { classical, virtual_crossing, double_line, cut_point };

enum class CutDirection { coherent, incoherent };

// Port slots are laid out as [in0, out0, in1, out1]: a strand enters at
// 2*s and leaves at 2*s+1. Strand 0 is the under strand of a classical
// crossing and strand `a` of a virtual crossing; 2-valent nodes only use
// strand 0.
inline constexpr int kUnderIn = 0;
inline constexpr int kUnderOut = 1;
inline constexpr int kOverIn = 2;
inline constexpr int kOverOut = 3;

constexpr int in_port(int strand) { return 2 * strand; }
constexpr int out_port(int strand) { return 2 * strand + 1; }
constexpr int strand_of(int port) { return port / 2; }
constexpr bool is_out_port(int port) { return (port & 1) != 0; }

struct Node {
  NodeKind kind = NodeKind::classical;
  std::string id;
  int sign = 1;  // classical crossings and double lines
  CutDirection direction = CutDirection::coherent;  // cut points
  std::array<std::string, 4> ports;  // edge ids; unused slots empty
  // Explicit counterclockwise port order. When absent the order implied by
  // the node kind and sign is used.
  std::optional<std::array<int, 4>> rotation;

  int valence() const { return kind == NodeKind::classical || kind == NodeKind::virtual_crossing ? 4 : 2; }
  int strand_count() const { return valence() / 2; }
  bool operator==(const Node&) const = default;
};

// The ccw rotation implied by kind and sign (positions of valence() ports).
std::array<int, 4> implied_rotation(const Node& n);
std::array<int, 4> effective_rotation(const Node& n);

// Exchanges the over and under strands of a classical crossing in place,
// keeping its ccw port order; the sign flips.
void switch_crossing(Node& n);

struct PlanarDiagram {
  std::vector<Node> nodes;
  std::vector<std::string> free_loops;  // components without nodes

  bool operator==(const PlanarDiagram&) const = default;

  const Node* find_node(std::string_view id) const;
  std::size_t count(NodeKind k) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class IssueKind { dangling_port, duplicate_id, rotation_mismatch, nonplanar, malformed };

struct ValidationIssue {
  IssueKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  bool has(IssueKind k) const;
  std::string to_string() const;
};

class DiagramError : public std::runtime_error {
 public:
  explicit DiagramError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

std::string_view to_string(IssueKind k);

// Parses without validating; throws ParseError on grammar violations.
PlanarDiagram parse_diagram_unchecked(std::string_view text);
// Parses and validates; throws ParseError or DiagramError.
PlanarDiagram parse_diagram(std::string_view text);
PlanarDiagram load_diagram(const std::string& path);

std::string serialize_diagram(const PlanarDiagram& d);

ValidationReport validate(const PlanarDiagram& d);

// Throws DiagramError when `d` is not valid.
void require_valid(const PlanarDiagram& d);

}  // namespace knotlift
