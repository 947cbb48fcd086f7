#pragma once

// Connectivity views over a PlanarDiagram: edge endpoints, strand walks,
// face tracing, and an editor used by the rewriting and construction code.

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "knotlift/diagram.hpp"

namespace knotlift {

struct PortRef {
  int node = -1;
  int port = -1;
  bool valid() const { return node >= 0; }
  bool operator==(const PortRef&) const = default;
};

struct EdgeEnds {
  PortRef src;  // an out-port
  PortRef dst;  // an in-port
};

// One half-edge. Forward darts follow the edge orientation. The face of a
// dart is the face on its right-hand side.
struct Dart {
  std::string edge;
  bool forward = true;
  bool operator==(const Dart&) const = default;
};

// A node pass along a component: the edge entering the node, then the node
// and the strand used to cross it.
struct Pass {
  std::string in_edge;
  int node = -1;
  int strand = 0;
};

struct Walk {
  std::vector<Pass> passes;
};

// Read-only index over a diagram whose ports are all connected. The
// diagram must outlive the view.
class Topology {
 public:
  // Throws DiagramError if a port is empty or an edge is not used exactly
  // once as source and once as target.
  explicit Topology(const PlanarDiagram& d);

  const PlanarDiagram& diagram() const { return *d_; }
  int node_index(std::string_view id) const;
  const Node& node(int i) const { return d_->nodes[static_cast<std::size_t>(i)]; }
  const EdgeEnds& ends(const std::string& edge) const;
  bool has_edge(const std::string& edge) const { return edges_.count(edge) != 0; }
  const std::vector<std::string>& edge_order() const { return edge_order_; }
  const std::string& edge_at(PortRef p) const;

  PortRef ccw_next(PortRef p) const;
  // Port where a dart arrives.
  PortRef head(const Dart& d) const;
  Dart next_in_face(const Dart& d) const;

  // Node-based components in deterministic order (free loops excluded).
  std::vector<Walk> walks() const;
  // Component index of every edge in walks() order.
  std::unordered_map<std::string, int> edge_components() const;

  std::vector<std::vector<Dart>> faces() const;
  // Face index for every dart, keyed by (edge, forward).
  std::unordered_map<std::string, std::pair<int, int>> dart_faces(const std::vector<std::vector<Dart>>& faces) const;
  // Connected components of the underlying 4/2-valent graph.
  int graph_components() const;

 private:
  const PlanarDiagram* d_;
  std::unordered_map<std::string, int> node_ids_;
  std::unordered_map<std::string, EdgeEnds> edges_;
  std::vector<std::string> edge_order_;
};

// Mutable diagram with a maintained edge index. Nodes removed during an edit
// are compacted away by finish().
class DiagramEditor {
 public:
  explicit DiagramEditor(PlanarDiagram d);

  int find(std::string_view id) const;
  Node& node(int i) { return nodes_[static_cast<std::size_t>(i)]; }
  const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  bool alive(int i) const { return alive_[static_cast<std::size_t>(i)]; }
  int node_count() const { return static_cast<int>(nodes_.size()); }

  bool has_edge(const std::string& e) const { return edges_.count(e) != 0; }
  EdgeEnds ends(const std::string& e) const;
  const std::string& edge_at(PortRef p) const { return node(p.node).ports[static_cast<std::size_t>(p.port)]; }

  std::string fresh_edge();
  std::string fresh_node_id(std::string_view prefix);
  bool has_loop(const std::string& id) const;

  // Registers every non-empty port of `n`.
  int add_node(Node n);
  void set_port(PortRef p, const std::string& edge);

  // Puts a 2-valent node on edge `e`: e now ends at the node and a fresh
  // edge leaves it. Returns the node index.
  int insert_on_edge(std::string e, Node n);
  // Turns free loop `loop` into a single node with a self edge.
  int insert_on_loop(const std::string& loop, Node n);
  // Removes a 2-valent node, joining its two edges.
  void bypass(int node);
  // Joins the in- and out-edge of one strand of a node and detaches them.
  void splice_strand(int node, int strand);
  void remove_node(int node);
  // Removes a node by splicing each of its strands.
  void dissolve(int node);
  // Exchanges over and under at a classical crossing (see switch_crossing).
  void switch_crossing(int node);
  void add_loop(std::string id);
  void remove_loop(const std::string& id);

  PlanarDiagram finish() const;

 private:
  void register_id(const std::string& id);

  std::vector<Node> nodes_;
  std::vector<bool> alive_;
  std::vector<std::string> loops_;
  std::unordered_map<std::string, int> ids_;
  std::unordered_map<std::string, EdgeEnds> edges_;
  std::unordered_set<std::string> used_names_;
  long counter_ = 0;
};

}  // namespace knotlift
