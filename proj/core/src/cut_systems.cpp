#include "knotlift/cut_systems.hpp"

#include <stdexcept>

#include "knotlift/gauss_code.hpp"
#include "knotlift/numbering.hpp"
#include "knotlift/topology.hpp"

namespace knotlift {

int leading_strand(const Node& n) {
  auto rot = effective_rotation(n);
  for (int i = 0; i < 4; ++i) {
    auto at = [&](int k) { return rot[static_cast<std::size_t>((i + k) % 4)]; };
    int s = strand_of(at(0));
    if (!is_out_port(at(0)) && at(1) == in_port(1 - s) && at(2) == out_port(s) && at(3) == out_port(1 - s)) return s;
  }
  throw std::logic_error("node '" + n.id + "' has no strand pattern");
}

PlanarDiagram standard_cut_system(const PlanarDiagram& d) {
  if (d.count(NodeKind::cut_point) || d.count(NodeKind::double_line))
    throw std::invalid_argument("standard cut system needs a diagram without cut points or double lines");
  require_valid(d);
  DiagramEditor ed(d);
  for (const auto& n : d.nodes) {
    if (n.kind != NodeKind::virtual_crossing) continue;
    int a = leading_strand(n);
    std::string b_out = n.ports[static_cast<std::size_t>(out_port(1 - a))];
    std::string a_out = n.ports[static_cast<std::size_t>(out_port(a))];
    ed.insert_on_edge(b_out, Node{NodeKind::cut_point, ed.fresh_node_id("c"), 1, CutDirection::coherent, {}, std::nullopt});
    ed.insert_on_edge(a_out, Node{NodeKind::cut_point, ed.fresh_node_id("c"), 1, CutDirection::incoherent, {}, std::nullopt});
  }
  return ed.finish();
}

bool is_cut_system(const PlanarDiagram& d) { return solve(build_constraints(traverse(d), true), 0).has_value(); }

CutCounts count_cut_points(const PlanarDiagram& d) {
  CutCounts c;
  for (const auto& n : d.nodes)
    if (n.kind == NodeKind::cut_point) (n.direction == CutDirection::coherent ? c.coherent : c.incoherent)++;
  return c;
}

std::string_view to_string(CutMoveKind k) {
  switch (k) {
    case CutMoveKind::cancel_pair: return "cancel_pair";
    case CutMoveKind::pass_virtual: return "pass_virtual";
    case CutMoveKind::four_around_crossing: return "four_around_crossing";
  }
  return "?";
}

CutMoveKind parse_cut_move_kind(std::string_view s) {
  for (auto k : {CutMoveKind::cancel_pair, CutMoveKind::pass_virtual, CutMoveKind::four_around_crossing})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown cut move '" + std::string(s) + "'");
}

namespace {

CutDirection opposite(CutDirection d) {
  return d == CutDirection::coherent ? CutDirection::incoherent : CutDirection::coherent;
}

const Node* cut_node(const Topology& t, int idx) {
  const Node& n = t.node(idx);
  return n.kind == NodeKind::cut_point ? &n : nullptr;
}

// Node after / before a 2-valent node or a strand of a 4-valent one.
int downstream(const Topology& t, int idx, int strand) {
  return t.ends(t.node(idx).ports[static_cast<std::size_t>(out_port(strand))]).dst.node;
}
int upstream(const Topology& t, int idx, int strand) {
  return t.ends(t.node(idx).ports[static_cast<std::size_t>(in_port(strand))]).src.node;
}

// Neighbouring cut points around a crossing that all point towards it
// (variant 0) or away from it (variant 1); -1 when there is no quadruple.
int quadruple_variant(const Topology& t, int x) {
  std::vector<int> seen;
  int variant = -1;
  for (int s = 0; s < 2; ++s) {
    int before = upstream(t, x, s), after = downstream(t, x, s);
    const Node* cb = cut_node(t, before);
    const Node* ca = cut_node(t, after);
    if (!cb || !ca) return -1;
    // The quadruple must be four distinct nodes adjacent to x on this strand.
    if (downstream(t, before, 0) != x || upstream(t, after, 0) != x) return -1;
    if (cb->direction == ca->direction) return -1;
    int v = cb->direction == CutDirection::coherent ? 0 : 1;
    if (variant >= 0 && v != variant) return -1;
    variant = v;
    seen.push_back(before);
    seen.push_back(after);
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (std::size_t j = i + 1; j < seen.size(); ++j)
      if (seen[i] == seen[j]) return -1;
  return variant;
}

[[noreturn]] void mismatch(CutMoveKind k, const MoveSite& s) {
  throw std::invalid_argument(std::string(to_string(k)) + " does not match site " + s.to_string());
}

}  // namespace

std::vector<MoveSite> enumerate_cut_sites(const PlanarDiagram& d, CutMoveKind kind) {
  Topology t(d);
  std::vector<MoveSite> out;
  switch (kind) {
    case CutMoveKind::cancel_pair:
      for (const auto& e : t.edge_order())
        for (int v : {0, 1}) out.push_back({true, {e}, v});
      for (const auto& l : d.free_loops)
        for (int v : {0, 1}) out.push_back({true, {l}, v});
      for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const Node* c1 = cut_node(t, static_cast<int>(i));
        if (!c1) continue;
        int j = downstream(t, static_cast<int>(i), 0);
        const Node* c2 = cut_node(t, j);
        if (c2 && j != static_cast<int>(i) && c2->direction != c1->direction) out.push_back({false, {c1->id, c2->id}, 0});
      }
      break;
    case CutMoveKind::pass_virtual:
      for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const Node& n = d.nodes[i];
        if (n.kind != NodeKind::cut_point) continue;
        int next = downstream(t, static_cast<int>(i), 0);
        if (t.node(next).kind == NodeKind::virtual_crossing) out.push_back({true, {n.id, t.node(next).id}, 0});
        int prev = upstream(t, static_cast<int>(i), 0);
        if (t.node(prev).kind == NodeKind::virtual_crossing) out.push_back({false, {t.node(prev).id, n.id}, 0});
      }
      break;
    case CutMoveKind::four_around_crossing:
      for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        if (d.nodes[i].kind != NodeKind::classical) continue;
        out.push_back({true, {d.nodes[i].id}, 0});
        out.push_back({true, {d.nodes[i].id}, 1});
        if (int v = quadruple_variant(t, static_cast<int>(i)); v >= 0) out.push_back({false, {d.nodes[i].id}, v});
      }
      break;
  }
  return out;
}

PlanarDiagram apply_cut_move(const PlanarDiagram& d, CutMoveKind kind, const MoveSite& site) {
  Topology t(d);
  DiagramEditor ed(d);
  auto node_of = [&](std::size_t i) {
    if (i >= site.anchors.size()) mismatch(kind, site);
    int idx = t.node_index(site.anchors[i]);
    if (idx < 0) mismatch(kind, site);
    return idx;
  };
  auto make_cut = [&](CutDirection dir) {
    return Node{NodeKind::cut_point, ed.fresh_node_id("c"), 1, dir, {}, std::nullopt};
  };

  switch (kind) {
    case CutMoveKind::cancel_pair: {
      if (site.forward) {
        if (site.anchors.size() != 1) mismatch(kind, site);
        CutDirection first = site.variant == 0 ? CutDirection::coherent : CutDirection::incoherent;
        const std::string& where = site.anchors[0];
        int idx;
        if (ed.has_loop(where)) idx = ed.insert_on_loop(where, make_cut(first));
        else if (t.has_edge(where)) idx = ed.insert_on_edge(where, make_cut(first));
        else mismatch(kind, site);
        ed.insert_on_edge(ed.node(idx).ports[1], make_cut(opposite(first)));
      } else {
        int c1 = node_of(0), c2 = node_of(1);
        const Node* n1 = cut_node(t, c1);
        const Node* n2 = cut_node(t, c2);
        if (!n1 || !n2 || c1 == c2 || downstream(t, c1, 0) != c2 || n1->direction == n2->direction) mismatch(kind, site);
        ed.bypass(c1);
        ed.bypass(c2);
      }
      break;
    }
    case CutMoveKind::pass_virtual: {
      int c = node_of(site.forward ? 0 : 1), v = node_of(site.forward ? 1 : 0);
      const Node* cn = cut_node(t, c);
      if (!cn || t.node(v).kind != NodeKind::virtual_crossing) mismatch(kind, site);
      Node moved = *cn;
      if (site.forward) {
        PortRef at = t.ends(cn->ports[1]).dst;
        if (at.node != v) mismatch(kind, site);
        ed.bypass(c);
        ed.insert_on_edge(ed.node(v).ports[static_cast<std::size_t>(out_port(strand_of(at.port)))], moved);
      } else {
        PortRef at = t.ends(cn->ports[0]).src;
        if (at.node != v) mismatch(kind, site);
        ed.bypass(c);
        ed.insert_on_edge(ed.node(v).ports[static_cast<std::size_t>(in_port(strand_of(at.port)))], moved);
      }
      break;
    }
    case CutMoveKind::four_around_crossing: {
      int x = node_of(0);
      if (t.node(x).kind != NodeKind::classical || site.anchors.size() != 1) mismatch(kind, site);
      if (site.forward) {
        if (site.variant != 0 && site.variant != 1) mismatch(kind, site);
        CutDirection in_dir = site.variant == 0 ? CutDirection::coherent : CutDirection::incoherent;
        for (int s = 0; s < 2; ++s) ed.insert_on_edge(ed.node(x).ports[static_cast<std::size_t>(in_port(s))], make_cut(in_dir));
        for (int s = 0; s < 2; ++s)
          ed.insert_on_edge(ed.node(x).ports[static_cast<std::size_t>(out_port(s))], make_cut(opposite(in_dir)));
      } else {
        if (quadruple_variant(t, x) != site.variant) mismatch(kind, site);
        for (int s = 0; s < 2; ++s) {
          int before = upstream(t, x, s), after = downstream(t, x, s);
          ed.bypass(ed.find(t.node(before).id));
          ed.bypass(ed.find(t.node(after).id));
        }
      }
      break;
    }
  }
  PlanarDiagram out = ed.finish();
  require_valid(out);
  return out;
}

PlanarDiagram to_double_lines(const PlanarDiagram& d) {
  if (!is_cut_system(d)) throw std::invalid_argument("cut points do not form a cut system");
  PlanarDiagram out = d;
  for (auto& n : out.nodes) {
    if (n.kind != NodeKind::cut_point) continue;
    n.kind = NodeKind::double_line;
    n.sign = n.direction == CutDirection::coherent ? 1 : -1;
    n.direction = CutDirection::coherent;
  }
  return out;
}

}  // namespace knotlift
