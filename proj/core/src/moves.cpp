#include "knotlift/moves.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "knotlift/random.hpp"
#include "knotlift/topology.hpp"

namespace knotlift {

std::string_view to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1: return "R1";
    case MoveKind::R2: return "R2";
    case MoveKind::R3: return "R3";
    case MoveKind::V1: return "V1";
    case MoveKind::V2: return "V2";
    case MoveKind::V3: return "V3";
    case MoveKind::MIXED: return "MIXED";
    case MoveKind::DL_SLIDE: return "DL_SLIDE";
    case MoveKind::DL_CANCEL: return "DL_CANCEL";
  }
  return "?";
}

MoveKind parse_move_kind(std::string_view s) {
  for (auto k : kAllMoveKinds)
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown move kind '" + std::string(s) + "'");
}

namespace {

[[noreturn]] void mismatch(MoveKind k, const MoveSite& s) {
  throw std::invalid_argument(std::string(to_string(k)) + " does not match site " + s.to_string());
}

// One port of a local picture: which of two strands, and whether the
// strand leaves the node there.
struct Slot {
  int label;
  bool out;
};

struct LocalNode {
  Node node;
  std::array<int, 2> strand;  // node strand carrying each label
};

// A 4-valent node with the given ccw port order. For classical nodes
// `over_label` names the strand on top.
LocalNode local_node(NodeKind kind, std::string id, const std::array<Slot, 4>& ccw, int over_label) {
  for (int i = 0; i < 4; ++i) {
    auto at = [&](int k) { return ccw[static_cast<std::size_t>((i + k) % 4)]; };
    if (at(0).out || at(1).out || !at(2).out || !at(3).out) continue;
    if (at(0).label != at(2).label || at(1).label != at(3).label || at(0).label == at(1).label) continue;
    const int a = at(0).label;
    LocalNode ln;
    ln.node.kind = kind;
    ln.node.id = std::move(id);
    bool a_over = kind == NodeKind::classical && over_label == a;
    ln.strand[static_cast<std::size_t>(a)] = a_over ? 1 : 0;
    ln.strand[static_cast<std::size_t>(1 - a)] = a_over ? 0 : 1;
    ln.node.sign = a_over ? -1 : 1;
    return ln;
  }
  throw std::logic_error("ccw order does not describe a crossing");
}

// Threads strand `strand` of node `idx` into edge `e`: e now ends at the
// node and a fresh edge continues to e's old target. Returns the fresh edge.
std::string thread(DiagramEditor& ed, const std::string& e, int idx, int strand) {
  const EdgeEnds ee = ed.ends(e);
  std::string fresh = ed.fresh_edge();
  ed.set_port(ee.dst, fresh);
  ed.set_port({idx, in_port(strand)}, e);
  ed.set_port({idx, out_port(strand)}, fresh);
  return fresh;
}

bool is_kind(const Node& n, MoveKind k) {
  switch (k) {
    case MoveKind::R1:
    case MoveKind::R2: return n.kind == NodeKind::classical;
    case MoveKind::V1:
    case MoveKind::V2: return n.kind == NodeKind::virtual_crossing;
    default: return false;
  }
}

NodeKind node_kind_for(MoveKind k) {
  return k == MoveKind::R1 || k == MoveKind::R2 ? NodeKind::classical : NodeKind::virtual_crossing;
}

std::string node_prefix(MoveKind k) { return node_kind_for(k) == NodeKind::classical ? "x" : "v"; }

bool adjacent_ports(const Node& n, int p, int q) {
  auto rot = effective_rotation(n);
  for (int i = 0; i < 4; ++i) {
    int x = rot[static_cast<std::size_t>(i)], y = rot[static_cast<std::size_t>((i + 1) % 4)];
    if ((x == p && y == q) || (x == q && y == p)) return true;
  }
  return false;
}

// --- kinks ------------------------------------------------------------------

void kink_forward(const PlanarDiagram& d, DiagramEditor& ed, MoveKind k, const MoveSite& s) {
  if (s.anchors.size() != 1 || s.variant < 0 || s.variant > (k == MoveKind::R1 ? 3 : 1)) mismatch(k, s);
  const bool first_is_a = (s.variant & 1) == 0;
  const bool a_over = (s.variant & 2) != 0;
  // Case-1 order (a_in, b_in, a_out, b_out): the kink joins a_out to b_in or
  // b_out to a_in, both adjacent pairs.
  auto ln = local_node(node_kind_for(k), ed.fresh_node_id(node_prefix(k)), {{{0, false}, {1, false}, {0, true}, {1, true}}},
                       a_over ? 0 : 1);
  const int first = ln.strand[first_is_a ? 0 : 1];
  const int second = ln.strand[first_is_a ? 1 : 0];
  const std::string& where = s.anchors[0];
  if (ed.has_loop(where)) {
    ed.remove_loop(where);
    std::string f = ed.fresh_edge(), g = ed.fresh_edge();
    int idx = ed.add_node(ln.node);
    ed.set_port({idx, in_port(first)}, g);
    ed.set_port({idx, out_port(first)}, f);
    ed.set_port({idx, in_port(second)}, f);
    ed.set_port({idx, out_port(second)}, g);
  } else {
    Topology t(d);
    if (!t.has_edge(where)) mismatch(k, s);
    int idx = ed.add_node(ln.node);
    std::string f = thread(ed, where, idx, first);
    thread(ed, f, idx, second);
  }
}

void kink_backward(const Topology& t, DiagramEditor& ed, MoveKind k, const MoveSite& s) {
  if (s.anchors.size() != 1 || (s.variant != 0 && s.variant != 1)) mismatch(k, s);
  const int idx = t.node_index(s.anchors[0]);
  if (idx < 0 || !is_kind(t.node(idx), k)) mismatch(k, s);
  const Node& n = t.node(idx);
  const int s1 = s.variant;
  const PortRef to = t.ends(n.ports[static_cast<std::size_t>(out_port(s1))]).dst;
  if (to.node != idx || to.port != in_port(1 - s1) || !adjacent_ports(n, out_port(s1), in_port(1 - s1))) mismatch(k, s);
  ed.dissolve(idx);
}

// --- bigons -----------------------------------------------------------------

int face_of(const std::unordered_map<std::string, std::pair<int, int>>& df, const Dart& d) {
  auto it = df.find(d.edge);
  if (it == df.end()) return -1;
  return d.forward ? it->second.first : it->second.second;
}

void bigon_forward(const Topology& t, DiagramEditor& ed, MoveKind k, const MoveSite& s) {
  if (s.anchors.size() != 2 || s.variant < 0 || s.variant > (k == MoveKind::R2 ? 7 : 3)) mismatch(k, s);
  const std::string& e = s.anchors[0];
  const std::string& f = s.anchors[1];
  if (e == f || !t.has_edge(e) || !t.has_edge(f)) mismatch(k, s);
  const Dart de{e, (s.variant & 1) != 0}, df{f, (s.variant & 2) != 0};
  auto faces = t.faces();
  auto dfm = t.dart_faces(faces);
  if (face_of(dfm, de) != face_of(dfm, df)) mismatch(k, s);
  // Finger of e pushed across f inside the common face; along the e dart
  // it meets P then Q, along the f dart Q then P. Orders below are ccw in
  // dart directions: label 0 = e, 1 = f.
  auto fix = [&](std::array<Slot, 4> ccw) {
    for (auto& sl : ccw)
      if ((sl.label == 0 && !de.forward) || (sl.label == 1 && !df.forward)) sl.out = !sl.out;
    return ccw;
  };
  const int over = (s.variant & 4) ? 0 : 1;
  auto p = local_node(node_kind_for(k), ed.fresh_node_id(node_prefix(k)), fix({{{0, false}, {1, true}, {0, true}, {1, false}}}), over);
  auto q = local_node(node_kind_for(k), ed.fresh_node_id(node_prefix(k)), fix({{{1, true}, {0, false}, {1, false}, {0, true}}}), over);
  const int pi = ed.add_node(p.node), qi = ed.add_node(q.node);
  auto along = [&](const std::string& edge, int label, bool p_first) {
    const int n1 = p_first ? pi : qi, n2 = p_first ? qi : pi;
    const auto& ln1 = p_first ? p : q;
    const auto& ln2 = p_first ? q : p;
    std::string rest = thread(ed, edge, n1, ln1.strand[static_cast<std::size_t>(label)]);
    thread(ed, rest, n2, ln2.strand[static_cast<std::size_t>(label)]);
  };
  along(e, 0, de.forward);
  along(f, 1, !df.forward);
}

struct Bigon {
  int u = -1, w = -1;
};

std::optional<Bigon> find_bigon(const Topology& t, const std::string& g, const std::string& h) {
  if (g == h || !t.has_edge(g) || !t.has_edge(h)) return std::nullopt;
  bool ok = false;
  for (bool fwd : {true, false}) {
    Dart d{g, fwd};
    Dart n = t.next_in_face(d);
    if (n.edge == h && t.next_in_face(n) == d) ok = true;
  }
  if (!ok) return std::nullopt;
  const auto& eg = t.ends(g);
  const auto& eh = t.ends(h);
  Bigon b{eg.src.node, eg.dst.node};
  if (b.u == b.w) return std::nullopt;
  const bool same = eh.src.node == b.u && eh.dst.node == b.w;
  const bool rev = eh.src.node == b.w && eh.dst.node == b.u;
  if (!same && !rev) return std::nullopt;
  // The sides must use different strands at both corners.
  const PortRef hu = same ? eh.src : eh.dst;
  const PortRef hw = same ? eh.dst : eh.src;
  if (strand_of(hu.port) == strand_of(eg.src.port) || strand_of(hw.port) == strand_of(eg.dst.port)) return std::nullopt;
  return b;
}

void bigon_backward(const Topology& t, DiagramEditor& ed, MoveKind k, const MoveSite& s) {
  if (s.anchors.size() != 2) mismatch(k, s);
  auto b = find_bigon(t, s.anchors[0], s.anchors[1]);
  if (!b || !is_kind(t.node(b->u), k) || !is_kind(t.node(b->w), k)) mismatch(k, s);
  if (k == MoveKind::R2) {
    const auto& eg = t.ends(s.anchors[0]);
    if ((strand_of(eg.src.port) == 1) != (strand_of(eg.dst.port) == 1)) mismatch(k, s);
  }
  ed.dissolve(b->u);
  ed.dissolve(b->w);
}

// --- triangles --------------------------------------------------------------

struct Side {
  std::string edge;
  PortRef src, dst;
};

std::optional<MoveKind> triangle_kind(const Topology& t, const std::vector<Side>& sides) {
  std::set<int> nodes;
  std::set<std::string> edges;
  for (const auto& s : sides) {
    nodes.insert(s.src.node);
    nodes.insert(s.dst.node);
    edges.insert(s.edge);
  }
  if (nodes.size() != 3 || edges.size() != 3) return std::nullopt;
  int classical = 0;
  for (int n : nodes) {
    const Node& node = t.node(n);
    if (node.valence() != 4) return std::nullopt;
    classical += node.kind == NodeKind::classical;
  }
  if (classical == 0) return MoveKind::V3;
  if (classical == 1) {
    // The side joining the two virtual crossings is the strand that moves.
    return MoveKind::MIXED;
  }
  if (classical != 3) return std::nullopt;
  std::multiset<int> over_counts;
  for (const auto& s : sides) over_counts.insert((strand_of(s.src.port) == 1) + (strand_of(s.dst.port) == 1));
  if (over_counts != std::multiset<int>{0, 1, 2}) return std::nullopt;
  return MoveKind::R3;
}

std::optional<std::vector<Side>> triangle(const Topology& t, const MoveSite& s) {
  if (s.anchors.size() != 3) return std::nullopt;
  for (const auto& e : s.anchors)
    if (!t.has_edge(e)) return std::nullopt;
  std::vector<Dart> darts;
  for (int i = 0; i < 3; ++i) darts.push_back({s.anchors[static_cast<std::size_t>(i)], (s.variant >> i & 1) != 0});
  for (int i = 0; i < 3; ++i)
    if (!(t.next_in_face(darts[static_cast<std::size_t>(i)]) == darts[static_cast<std::size_t>((i + 1) % 3)])) return std::nullopt;
  std::vector<Side> sides;
  for (const auto& d : darts) sides.push_back({d.edge, t.ends(d.edge).src, t.ends(d.edge).dst});
  return sides;
}

// Each side strand passes its two corners in the opposite order afterwards;
// rotations at the three corners are kept.
void triangle_move(const Topology& t, DiagramEditor& ed, MoveKind k, const MoveSite& s) {
  auto sides = triangle(t, s);
  if (!sides || triangle_kind(t, *sides) != k) mismatch(k, s);
  struct Plan {
    PortRef u_in, u_out, w_in, w_out;
    std::string in, mid, out;
  };
  std::vector<Plan> plans;
  for (const auto& sd : *sides) {
    const int su = strand_of(sd.src.port), sw = strand_of(sd.dst.port);
    Plan p{{sd.src.node, in_port(su)}, sd.src, sd.dst, {sd.dst.node, out_port(sw)}, "", sd.edge, ""};
    p.in = t.edge_at(p.u_in);
    p.out = t.edge_at(p.w_out);
    plans.push_back(p);
  }
  for (const auto& p : plans)
    for (const PortRef& r : {p.u_in, p.u_out, p.w_in, p.w_out}) ed.set_port(r, "");
  for (const auto& p : plans) {
    ed.set_port(p.w_in, p.in);
    ed.set_port(p.w_out, p.mid);
    ed.set_port(p.u_in, p.mid);
    ed.set_port(p.u_out, p.out);
  }
}

// --- double lines -----------------------------------------------------------

// A double line right after a crossing on strand `a` may move in front of it.
bool slide_forward_ok(int a, const Node& t) { return (t.sign > 0 && a == 1) || (t.sign < 0 && a == 0); }

void slide(const Topology& t, DiagramEditor& ed, const MoveSite& s) {
  const MoveKind k = MoveKind::DL_SLIDE;
  if (s.anchors.size() != 2) mismatch(k, s);
  const int xi = t.node_index(s.anchors[s.forward ? 0 : 1]);
  const int ti = t.node_index(s.anchors[s.forward ? 1 : 0]);
  if (xi < 0 || ti < 0) mismatch(k, s);
  const Node& x = t.node(xi);
  const Node& dl = t.node(ti);
  if (x.kind != NodeKind::classical || dl.kind != NodeKind::double_line) mismatch(k, s);
  int a;
  if (s.forward) {
    const PortRef from = t.ends(dl.ports[0]).src;
    if (from.node != xi) mismatch(k, s);
    a = strand_of(from.port);
    if (!slide_forward_ok(a, dl)) mismatch(k, s);
  } else {
    const PortRef to = t.ends(dl.ports[1]).dst;
    if (to.node != xi) mismatch(k, s);
    a = strand_of(to.port);
    // The configuration must be the result of a forward slide.
    if (!slide_forward_ok(1 - a, dl)) mismatch(k, s);
  }
  Node moved = dl;
  ed.bypass(ti);
  ed.switch_crossing(xi);
  const int a2 = 1 - a;  // strand index of the same strand after switching
  const std::string target = ed.node(xi).ports[static_cast<std::size_t>(s.forward ? in_port(a2) : out_port(a2))];
  ed.insert_on_edge(target, moved);
}

void cancel(const Topology& t, DiagramEditor& ed, const MoveSite& s) {
  const MoveKind k = MoveKind::DL_CANCEL;
  if (s.forward) {
    if (s.anchors.size() != 1 || (s.variant != 0 && s.variant != 1)) mismatch(k, s);
    const int first = s.variant == 0 ? 1 : -1;
    auto make = [&](int sign) { return Node{NodeKind::double_line, ed.fresh_node_id("t"), sign, CutDirection::coherent, {}, std::nullopt}; };
    const std::string& where = s.anchors[0];
    int idx;
    if (ed.has_loop(where)) idx = ed.insert_on_loop(where, make(first));
    else if (t.has_edge(where)) idx = ed.insert_on_edge(where, make(first));
    else mismatch(k, s);
    const std::string next = ed.node(idx).ports[1];
    ed.insert_on_edge(next, make(-first));
    return;
  }
  if (s.anchors.size() != 2) mismatch(k, s);
  const int a = t.node_index(s.anchors[0]), b = t.node_index(s.anchors[1]);
  if (a < 0 || b < 0 || a == b) mismatch(k, s);
  const Node& na = t.node(a);
  const Node& nb = t.node(b);
  if (na.kind != NodeKind::double_line || nb.kind != NodeKind::double_line || na.sign == nb.sign) mismatch(k, s);
  if (t.ends(na.ports[1]).dst.node != b) mismatch(k, s);
  ed.bypass(a);
  ed.bypass(b);
}

std::vector<MoveSite> candidate_sites(const PlanarDiagram& d, MoveKind k) {
  Topology t(d);
  std::vector<MoveSite> out;
  auto edge_sites = [&](int variants) {
    for (const auto& e : t.edge_order())
      for (int v = 0; v < variants; ++v) out.push_back({true, {e}, v});
    for (const auto& l : d.free_loops)
      for (int v = 0; v < variants; ++v) out.push_back({true, {l}, v});
  };
  switch (k) {
    case MoveKind::R1:
    case MoveKind::V1:
      edge_sites(k == MoveKind::R1 ? 4 : 2);
      for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        if (!is_kind(d.nodes[i], k)) continue;
        for (int s = 0; s < 2; ++s) {
          const PortRef to = t.ends(d.nodes[i].ports[static_cast<std::size_t>(out_port(s))]).dst;
          if (to.node == static_cast<int>(i) && to.port == in_port(1 - s)) out.push_back({false, {d.nodes[i].id}, s});
        }
      }
      break;
    case MoveKind::R2:
    case MoveKind::V2: {
      auto faces = t.faces();
      const int over_variants = k == MoveKind::R2 ? 2 : 1;
      std::set<std::pair<std::string, std::string>> bigons;
      for (const auto& f : faces) {
        for (std::size_t i = 0; i < f.size(); ++i)
          for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (f[i].edge == f[j].edge) continue;
            for (int o = 0; o < over_variants; ++o)
              out.push_back({true, {f[i].edge, f[j].edge}, (f[i].forward ? 1 : 0) | (f[j].forward ? 2 : 0) | (o ? 4 : 0)});
          }
        if (f.size() == 2 && f[0].edge != f[1].edge) {
          auto key = std::minmax(f[0].edge, f[1].edge);
          if (bigons.insert({key.first, key.second}).second) out.push_back({false, {key.first, key.second}, 0});
        }
      }
      break;
    }
    case MoveKind::R3:
    case MoveKind::V3:
    case MoveKind::MIXED:
      for (const auto& f : t.faces()) {
        if (f.size() != 3) continue;
        MoveSite s{true, {f[0].edge, f[1].edge, f[2].edge}, (f[0].forward ? 1 : 0) | (f[1].forward ? 2 : 0) | (f[2].forward ? 4 : 0)};
        auto sides = triangle(t, s);
        if (sides && triangle_kind(t, *sides) == k) out.push_back(s);
      }
      break;
    case MoveKind::DL_SLIDE:
      for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const Node& n = d.nodes[i];
        if (n.kind != NodeKind::double_line) continue;
        const PortRef from = t.ends(n.ports[0]).src;
        const PortRef to = t.ends(n.ports[1]).dst;
        if (t.node(from.node).kind == NodeKind::classical) out.push_back({true, {t.node(from.node).id, n.id}, 0});
        if (t.node(to.node).kind == NodeKind::classical) out.push_back({false, {n.id, t.node(to.node).id}, 0});
      }
      break;
    case MoveKind::DL_CANCEL:
      edge_sites(2);
      for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const Node& n = d.nodes[i];
        if (n.kind != NodeKind::double_line) continue;
        const int j = t.ends(n.ports[1]).dst.node;
        if (j != static_cast<int>(i) && t.node(j).kind == NodeKind::double_line && t.node(j).sign != n.sign)
          out.push_back({false, {n.id, t.node(j).id}, 0});
      }
      break;
  }
  return out;
}

}  // namespace

PlanarDiagram apply_move(const PlanarDiagram& d, MoveKind k, const MoveSite& s) {
  Topology t(d);
  DiagramEditor ed(d);
  switch (k) {
    case MoveKind::R1:
    case MoveKind::V1:
      if (s.forward) kink_forward(d, ed, k, s);
      else kink_backward(t, ed, k, s);
      break;
    case MoveKind::R2:
    case MoveKind::V2:
      if (s.forward) bigon_forward(t, ed, k, s);
      else bigon_backward(t, ed, k, s);
      break;
    case MoveKind::R3:
    case MoveKind::V3:
    case MoveKind::MIXED:
      triangle_move(t, ed, k, s);
      break;
    case MoveKind::DL_SLIDE:
      slide(t, ed, s);
      break;
    case MoveKind::DL_CANCEL:
      cancel(t, ed, s);
      break;
  }
  PlanarDiagram out = ed.finish();
  require_valid(out);
  return out;
}

std::vector<MoveSite> enumerate_sites(const PlanarDiagram& d, MoveKind k) {
  std::vector<MoveSite> out;
  for (auto& s : candidate_sites(d, k)) {
    try {
      apply_move(d, k, s);
    } catch (const std::invalid_argument&) {
      continue;
    } catch (const DiagramError&) {
      continue;
    }
    out.push_back(std::move(s));
  }
  return out;
}

PlanarDiagram crossing_change(const PlanarDiagram& d, const std::string& crossing) {
  const Node* x = d.find_node(crossing);
  if (!x || x->kind != NodeKind::classical) throw std::invalid_argument("'" + crossing + "' is not a classical crossing");
  DiagramEditor ed(d);
  const int xi = ed.find(crossing);
  auto make = [&](int sign) { return Node{NodeKind::double_line, ed.fresh_node_id("t"), sign, CutDirection::coherent, {}, std::nullopt}; };
  const std::string over_in = ed.node(xi).ports[kOverIn], over_out = ed.node(xi).ports[kOverOut];
  ed.insert_on_edge(over_in, make(1));
  ed.insert_on_edge(over_out, make(-1));
  ed.switch_crossing(xi);
  PlanarDiagram out = ed.finish();
  require_valid(out);
  return out;
}

RandomWalk random_walk(const PlanarDiagram& d, int steps, std::uint64_t seed, const std::vector<MoveKind>& kinds) {
  std::mt19937_64 rng(seed);
  RandomWalk walk{d, {}};
  for (int i = 0; i < steps; ++i) {
    std::vector<MoveKind> pool = kinds;
    while (!pool.empty()) {
      const std::size_t pick = draw(rng, pool.size());
      const MoveKind k = pool[pick];
      auto sites = enumerate_sites(walk.result, k);
      if (sites.empty()) {
        pool.erase(pool.begin() + static_cast<long>(pick));
        continue;
      }
      const MoveSite& s = sites[draw(rng, sites.size())];
      walk.result = apply_move(walk.result, k, s);
      walk.steps.push_back({k, s});
      break;
    }
    if (pool.empty()) break;
  }
  return walk;
}

}  // namespace knotlift
