#include "knotlift/topology.hpp"

#include <algorithm>
#include <numeric>

namespace knotlift {

namespace {

DiagramError structural_error(const std::string& msg) {
  ValidationReport r;
  r.issues.push_back({IssueKind::dangling_port, msg});
  return DiagramError(std::move(r));
}

}  // namespace

Topology::Topology(const PlanarDiagram& d) : d_(&d) {
  for (std::size_t i = 0; i < d.nodes.size(); ++i) node_ids_.emplace(d.nodes[i].id, static_cast<int>(i));
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const Node& n = d.nodes[i];
    for (int p = 0; p < n.valence(); ++p) {
      const auto& e = n.ports[static_cast<std::size_t>(p)];
      if (e.empty()) throw structural_error("node '" + n.id + "' has an unconnected port");
      auto [it, fresh] = edges_.try_emplace(e);
      PortRef& slot = is_out_port(p) ? it->second.src : it->second.dst;
      if (slot.valid()) throw structural_error("edge '" + e + "' attached twice at the same end");
      slot = {static_cast<int>(i), p};
    }
  }
  for (const auto& [e, ends] : edges_)
    if (!ends.src.valid() || !ends.dst.valid()) throw structural_error("edge '" + e + "' has a free end");
  for (const auto& n : d.nodes)
    for (int s = 0; s < n.strand_count(); ++s) edge_order_.push_back(n.ports[static_cast<std::size_t>(out_port(s))]);
}

int Topology::node_index(std::string_view id) const {
  auto it = node_ids_.find(std::string(id));
  return it == node_ids_.end() ? -1 : it->second;
}

const EdgeEnds& Topology::ends(const std::string& edge) const {
  auto it = edges_.find(edge);
  if (it == edges_.end()) throw std::out_of_range("unknown edge '" + edge + "'");
  return it->second;
}

const std::string& Topology::edge_at(PortRef p) const {
  return node(p.node).ports[static_cast<std::size_t>(p.port)];
}

PortRef Topology::ccw_next(PortRef p) const {
  const Node& n = node(p.node);
  auto rot = effective_rotation(n);
  int v = n.valence();
  for (int i = 0; i < v; ++i)
    if (rot[static_cast<std::size_t>(i)] == p.port) return {p.node, rot[static_cast<std::size_t>((i + 1) % v)]};
  throw std::logic_error("port missing from rotation");
}

PortRef Topology::head(const Dart& d) const {
  const auto& e = ends(d.edge);
  return d.forward ? e.dst : e.src;
}

Dart Topology::next_in_face(const Dart& d) const {
  PortRef q = ccw_next(head(d));
  return {edge_at(q), is_out_port(q.port)};
}

std::vector<Walk> Topology::walks() const {
  std::vector<Walk> out;
  std::unordered_set<std::string> seen;
  for (const auto& start : edge_order_) {
    if (seen.count(start)) continue;
    Walk w;
    std::string e = start;
    do {
      seen.insert(e);
      PortRef dst = ends(e).dst;
      int strand = strand_of(dst.port);
      w.passes.push_back({e, dst.node, strand});
      e = edge_at({dst.node, out_port(strand)});
    } while (e != start);
    out.push_back(std::move(w));
  }
  return out;
}

std::unordered_map<std::string, int> Topology::edge_components() const {
  std::unordered_map<std::string, int> out;
  auto ws = walks();
  for (std::size_t c = 0; c < ws.size(); ++c)
    for (const auto& p : ws[c].passes) out[p.in_edge] = static_cast<int>(c);
  return out;
}

std::vector<std::vector<Dart>> Topology::faces() const {
  std::vector<std::vector<Dart>> out;
  std::unordered_set<std::string> seen_fwd, seen_bwd;
  auto seen = [&](const Dart& d) -> bool { return (d.forward ? seen_fwd : seen_bwd).count(d.edge) != 0; };
  auto mark = [&](const Dart& d) { (d.forward ? seen_fwd : seen_bwd).insert(d.edge); };
  for (const auto& e : edge_order_) {
    for (bool fwd : {true, false}) {
      Dart start{e, fwd};
      if (seen(start)) continue;
      std::vector<Dart> face;
      Dart d = start;
      do {
        mark(d);
        face.push_back(d);
        d = next_in_face(d);
      } while (!(d == start));
      out.push_back(std::move(face));
    }
  }
  return out;
}

std::unordered_map<std::string, std::pair<int, int>> Topology::dart_faces(const std::vector<std::vector<Dart>>& faces) const {
  std::unordered_map<std::string, std::pair<int, int>> out;
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (const auto& d : faces[f]) {
      auto& slot = out[d.edge];
      (d.forward ? slot.first : slot.second) = static_cast<int>(f);
    }
  return out;
}

int Topology::graph_components() const {
  std::vector<int> parent(d_->nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int count = static_cast<int>(parent.size());
  for (const auto& [e, ends] : edges_) {
    int a = find(ends.src.node), b = find(ends.dst.node);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --count;
    }
  }
  return count;
}

// --- DiagramEditor ---------------------------------------------------------

DiagramEditor::DiagramEditor(PlanarDiagram d) : nodes_(std::move(d.nodes)), loops_(std::move(d.free_loops)) {
  alive_.assign(nodes_.size(), true);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    ids_[nodes_[i].id] = static_cast<int>(i);
    used_names_.insert(nodes_[i].id);
    for (int p = 0; p < nodes_[i].valence(); ++p) {
      const auto& e = nodes_[i].ports[static_cast<std::size_t>(p)];
      if (e.empty()) continue;
      used_names_.insert(e);
      auto& slot = edges_[e];
      (is_out_port(p) ? slot.src : slot.dst) = {static_cast<int>(i), p};
    }
  }
  for (const auto& l : loops_) used_names_.insert(l);
}

int DiagramEditor::find(std::string_view id) const {
  auto it = ids_.find(std::string(id));
  if (it == ids_.end() || !alive_[static_cast<std::size_t>(it->second)]) return -1;
  return it->second;
}

EdgeEnds DiagramEditor::ends(const std::string& e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw std::out_of_range("unknown edge '" + e + "'");
  return it->second;
}

std::string DiagramEditor::fresh_edge() { return fresh_node_id("e"); }

std::string DiagramEditor::fresh_node_id(std::string_view prefix) {
  std::string name;
  do {
    name = std::string(prefix) + std::to_string(++counter_);
  } while (used_names_.count(name));
  used_names_.insert(name);
  return name;
}

bool DiagramEditor::has_loop(const std::string& id) const {
  return std::find(loops_.begin(), loops_.end(), id) != loops_.end();
}

void DiagramEditor::register_id(const std::string& id) { used_names_.insert(id); }

int DiagramEditor::add_node(Node n) {
  int idx = static_cast<int>(nodes_.size());
  register_id(n.id);
  ids_[n.id] = idx;
  for (int p = 0; p < n.valence(); ++p) {
    const auto& e = n.ports[static_cast<std::size_t>(p)];
    if (e.empty()) continue;
    register_id(e);
    auto& slot = edges_[e];
    (is_out_port(p) ? slot.src : slot.dst) = {idx, p};
  }
  nodes_.push_back(std::move(n));
  alive_.push_back(true);
  return idx;
}

void DiagramEditor::set_port(PortRef p, const std::string& edge) {
  auto& cur = node(p.node).ports[static_cast<std::size_t>(p.port)];
  if (!cur.empty()) {
    auto it = edges_.find(cur);
    if (it != edges_.end()) {
      PortRef& slot = is_out_port(p.port) ? it->second.src : it->second.dst;
      if (slot == p) slot = {};
      if (!it->second.src.valid() && !it->second.dst.valid()) edges_.erase(it);
    }
  }
  cur = edge;
  if (!edge.empty()) {
    register_id(edge);
    auto& slot = edges_[edge];
    (is_out_port(p.port) ? slot.src : slot.dst) = p;
  }
}

int DiagramEditor::insert_on_edge(std::string e, Node n) {
  EdgeEnds ee = ends(e);
  std::string fresh = fresh_edge();
  n.ports[0].clear();
  n.ports[1].clear();
  int idx = add_node(std::move(n));
  // e keeps its source and now ends at the new node.
  set_port(ee.dst, fresh);
  set_port({idx, 0}, e);
  set_port({idx, 1}, fresh);
  return idx;
}

int DiagramEditor::insert_on_loop(const std::string& loop, Node n) {
  remove_loop(loop);
  std::string fresh = fresh_edge();
  n.ports[0] = fresh;
  n.ports[1] = fresh;
  return add_node(std::move(n));
}

void DiagramEditor::splice_strand(int idx, int strand) {
  Node& n = node(idx);
  std::string ein = n.ports[static_cast<std::size_t>(in_port(strand))];
  std::string eout = n.ports[static_cast<std::size_t>(out_port(strand))];
  if (ein == eout) {
    // The strand closes up through this node alone.
    set_port({idx, in_port(strand)}, "");
    set_port({idx, out_port(strand)}, "");
    add_loop(fresh_node_id("loop"));
    return;
  }
  PortRef dst = ends(eout).dst;
  set_port({idx, in_port(strand)}, "");
  set_port({idx, out_port(strand)}, "");
  set_port(dst, ein);
}

void DiagramEditor::bypass(int idx) { splice_strand(idx, 0); remove_node(idx); }

void DiagramEditor::dissolve(int idx) {
  for (int s = 0; s < node(idx).strand_count(); ++s) splice_strand(idx, s);
  remove_node(idx);
}

void DiagramEditor::switch_crossing(int idx) {
  Node& n = node(idx);
  auto ports = n.ports;
  for (int p = 0; p < 4; ++p) set_port({idx, p}, "");
  knotlift::switch_crossing(n);
  for (int p = 0; p < 4; ++p) set_port({idx, p}, ports[static_cast<std::size_t>(p ^ 2)]);
}

void DiagramEditor::remove_node(int idx) {
  Node& n = node(idx);
  for (int p = 0; p < n.valence(); ++p)
    if (!n.ports[static_cast<std::size_t>(p)].empty()) set_port({idx, p}, "");
  alive_[static_cast<std::size_t>(idx)] = false;
  ids_.erase(n.id);
}

void DiagramEditor::add_loop(std::string id) {
  register_id(id);
  loops_.push_back(std::move(id));
}

void DiagramEditor::remove_loop(const std::string& id) {
  auto it = std::find(loops_.begin(), loops_.end(), id);
  if (it == loops_.end()) throw std::out_of_range("unknown free loop '" + id + "'");
  loops_.erase(it);
}

PlanarDiagram DiagramEditor::finish() const {
  PlanarDiagram d;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (alive_[i]) d.nodes.push_back(nodes_[i]);
  d.free_loops = loops_;
  return d;
}

}  // namespace knotlift
