#include "knotlift/lifting.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "knotlift/cut_systems.hpp"
#include "knotlift/topology.hpp"

namespace knotlift {

namespace {

long mod(long x, long m) { return ((x % m) + m) % m; }

long floor_div(long x, long n) { return x >= 0 ? x / n : -((-x + n - 1) / n); }

void require_single_component(const PlanarDiagram& d, const char* what) {
  Topology t(d);
  if (t.walks().size() + d.free_loops.size() != 1)
    throw std::invalid_argument(std::string(what) + " needs a single-component diagram");
}

int total_degree(const PlanarDiagram& d) {
  int deg = 0;
  for (const auto& n : d.nodes)
    if (n.kind == NodeKind::double_line) deg += n.sign;
  return deg;
}

std::string pair_id(const std::string& source, long s0, long s1) {
  return source + "@" + std::to_string(s0) + "." + std::to_string(s1);
}

}  // namespace

PassHeights pass_heights(const PlanarDiagram& d) {
  require_single_component(d, "heights");
  Topology t(d);
  PassHeights out;
  auto ws = t.walks();
  if (ws.empty()) return out;
  const auto& passes = ws[0].passes;
  std::size_t start = 0;
  for (std::size_t i = 0; i < passes.size(); ++i)
    if (t.node(passes[i].node).kind == NodeKind::double_line) {
      start = i;
      break;
    }
  long level = 0, lo = 0, hi = 0;
  for (std::size_t k = 0; k < passes.size(); ++k) {
    const Pass& p = passes[(start + k) % passes.size()];
    const Node& n = t.node(p.node);
    if (k > 0 && n.kind == NodeKind::double_line) level += n.sign;
    out.node[n.id][static_cast<std::size_t>(p.strand)] = level;
    lo = std::min(lo, level);
    hi = std::max(hi, level);
  }
  out.spread = hi - lo;
  return out;
}

PlanarDiagram lift0(const PlanarDiagram& d) {
  require_single_component(d, "lift0");
  if (total_degree(d) != 0) throw std::invalid_argument("lift0 needs degree 0");
  auto ph = pass_heights(d);
  PlanarDiagram copy = d;
  for (auto& n : copy.nodes) {
    if (n.kind != NodeKind::classical) continue;
    const auto& h = ph.node.at(n.id);
    if (h[0] > h[1]) switch_crossing(n);
  }
  DiagramEditor ed(copy);
  for (int i = 0; i < ed.node_count(); ++i)
    if (ed.node(i).kind == NodeKind::double_line) ed.bypass(i);
  PlanarDiagram out = ed.finish();
  require_valid(out);
  return out;
}

PlanarDiagram liftk(const PlanarDiagram& d) {
  require_single_component(d, "liftk");
  const long k = total_degree(d);
  if (k == 0) throw std::invalid_argument("liftk needs nonzero degree");
  const long n = std::labs(k);
  auto ph = pass_heights(d);
  PlanarDiagram copy = d;
  for (auto& node : copy.nodes) {
    if (node.kind != NodeKind::classical) continue;
    const auto& h = ph.node.at(node.id);
    if (mod(h[0], n) > mod(h[1], n)) switch_crossing(node);
  }
  DiagramEditor ed(copy);
  for (int i = 0; i < ed.node_count(); ++i) {
    const Node& node = ed.node(i);
    if (node.kind != NodeKind::double_line) continue;
    long after = ph.node.at(node.id)[0];
    long before = after - node.sign;
    if (floor_div(after, n) == floor_div(before, n)) ed.bypass(i);
  }
  PlanarDiagram out = ed.finish();
  require_valid(out);
  return out;
}

namespace {

// Cabling of a single-component diagram into `m` parallel copies. Copy
// positions count from the left of the strand direction. A copy at
// position p over an arc of integer height h lies on sheet (p - h) mod m;
// its level is h + sheet (integer mode) or p (modular mode).
class CoverBuilder {
 public:
  CoverBuilder(const PlanarDiagram& d, int m, bool modular) : d_(d), topo_(d), m_(m), modular_(modular) {}

  CoveringDiagram run() {
    heights_ = pass_heights(d_);
    entries_.assign(d_.nodes.size(), {});
    exits_.assign(d_.nodes.size(), {});
    for (std::size_t i = 0; i < d_.nodes.size(); ++i) {
      for (int s = 0; s < 2; ++s) {
        entries_[i][static_cast<std::size_t>(s)].assign(static_cast<std::size_t>(m_), {});
        exits_[i][static_cast<std::size_t>(s)].assign(static_cast<std::size_t>(m_), {});
      }
      const Node& n = d_.nodes[i];
      if (n.valence() == 4) build_grid(static_cast<int>(i));
      else build_twist(static_cast<int>(i));
    }
    wire();
    for (const auto& l : d_.free_loops) {
      (void)l;
      for (int s = 0; s < m_; ++s) out_.diagram.free_loops.push_back(fresh_loop());
    }
    out_.sheets = m_;
    require_valid(out_.diagram);
    return std::move(out_);
  }

 private:
  struct Term {
    PortRef port;
    int through = -1;  // pass-through position when `port` is unset
  };

  long level(long p, long h) const { return modular_ ? p : h + mod(p - h, m_); }
  long sheet(long p, long h) const { return mod(p - h, m_); }
  long height(int node, int strand) const { return heights_.node.at(d_.nodes[static_cast<std::size_t>(node)].id)[static_cast<std::size_t>(strand)]; }

  Term& entry(int node, int strand, long p) {
    return entries_[static_cast<std::size_t>(node)][static_cast<std::size_t>(strand)][static_cast<std::size_t>(p)];
  }
  Term& exit(int node, int strand, long p) {
    return exits_[static_cast<std::size_t>(node)][static_cast<std::size_t>(strand)][static_cast<std::size_t>(p)];
  }

  int add(Node n, Provenance prov) {
    int idx = static_cast<int>(out_.diagram.nodes.size());
    out_.provenance[n.id] = std::move(prov);
    out_.diagram.nodes.push_back(std::move(n));
    return idx;
  }

  void connect(PortRef out, PortRef in) {
    std::string e = "e" + std::to_string(++edge_counter_);
    out_.diagram.nodes[static_cast<std::size_t>(out.node)].ports[static_cast<std::size_t>(out.port)] = e;
    out_.diagram.nodes[static_cast<std::size_t>(in.node)].ports[static_cast<std::size_t>(in.port)] = e;
  }

  std::string fresh_loop() {
    std::string name;
    do name = "loop" + std::to_string(++loop_counter_);
    while (out_.provenance.count(name) || d_.find_node(name));
    return name;
  }

  // A crossing in case-1 position (a_in, b_in, a_out, b_out counterclockwise).
  // Returns the node index and the output strand carrying `a`.
  std::pair<int, int> crossing(std::string id, Provenance prov, bool classical, bool a_over) {
    Node n;
    n.id = std::move(id);
    int sa = 0;
    if (classical) {
      n.kind = NodeKind::classical;
      sa = a_over ? 1 : 0;
      n.sign = a_over ? -1 : 1;
    } else {
      n.kind = NodeKind::virtual_crossing;
    }
    return {add(std::move(n), std::move(prov)), sa};
  }

  void label(const std::string& id, int strand, long value) {
    out_.arc_labels[id][static_cast<std::size_t>(strand)] = mod(value, m_);
  }

  void build_grid(int i) {
    const Node& base = d_.nodes[static_cast<std::size_t>(i)];
    const bool classical = base.kind == NodeKind::classical;
    const int a = leading_strand(base), b = 1 - a;
    const long ha = height(i, a), hb = height(i, b);
    std::vector<std::vector<std::pair<int, int>>> grid(static_cast<std::size_t>(m_), std::vector<std::pair<int, int>>(static_cast<std::size_t>(m_)));
    for (long p = 0; p < m_; ++p)
      for (long q = 0; q < m_; ++q) {
        long la = level(p, ha), lb = level(q, hb);
        bool a_over = la != lb ? la > lb : a == 1;
        long sa = sheet(p, ha), sb = sheet(q, hb);
        std::array<int, 2> sheets{static_cast<int>(a == 0 ? sa : sb), static_cast<int>(a == 0 ? sb : sa)};
        std::string id = pair_id(base.id, sheets[0], sheets[1]);
        auto cell = crossing(id, Provenance{base.id, CoverPiece::grid, sheets}, classical, a_over);
        grid[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = cell;
        if (classical) {
          label(id, cell.second, -p - q - 1);
          label(id, 1 - cell.second, -p - q);
        }
      }
    auto at = [&](long p, long q) { return grid[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]; };
    for (long p = 0; p < m_; ++p)
      for (long q = 0; q < m_; ++q) {
        auto [idx, sa] = at(p, q);
        if (q + 1 < m_) {
          auto [next, nsa] = at(p, q + 1);
          connect({idx, out_port(sa)}, {next, in_port(nsa)});
        }
        if (p > 0) {
          auto [next, nsa] = at(p - 1, q);
          connect({idx, out_port(1 - sa)}, {next, in_port(1 - nsa)});
        }
      }
    for (long p = 0; p < m_; ++p) {
      entry(i, a, p).port = {at(p, 0).first, in_port(at(p, 0).second)};
      exit(i, a, p).port = {at(p, m_ - 1).first, out_port(at(p, m_ - 1).second)};
      entry(i, b, p).port = {at(m_ - 1, p).first, in_port(1 - at(m_ - 1, p).second)};
      exit(i, b, p).port = {at(0, p).first, out_port(1 - at(0, p).second)};
    }
  }

  void build_twist(int i) {
    const Node& base = d_.nodes[static_cast<std::size_t>(i)];
    if (base.kind != NodeKind::double_line) throw std::invalid_argument("coverings do not accept cut points");
    const int eps = base.sign;
    const long h = height(i, 0) - eps;  // height before the double line
    const long w0 = eps > 0 ? m_ - 1 : 0;
    const long w1 = eps > 0 ? 0 : m_ - 1;
    std::optional<PortRef> w_out;  // dangling out-port of the wrapping copy
    for (long step = 0; step + 1 < m_; ++step) {
      // +1: w crosses m-2 .. 0 as b; -1: w crosses 1 .. m-1 as a.
      const long j = eps > 0 ? m_ - 2 - step : step + 1;
      const long lw = level(w0, h), lj = level(j, h);
      const bool w_is_a = eps < 0;
      const bool a_over = w_is_a ? lw > lj : lj > lw;
      std::string id = base.id + "@" + std::to_string(j);
      std::array<int, 2> sheets{static_cast<int>(sheet(w0, h)), static_cast<int>(sheet(j, h))};
      auto [idx, sa] = crossing(id, Provenance{base.id, CoverPiece::twist, sheets}, true, a_over);
      const int sw = w_is_a ? sa : 1 - sa;
      const int sj = 1 - sw;
      entry(i, 0, j).port = {idx, in_port(sj)};
      exit(i, 0, j + eps).port = {idx, out_port(sj)};
      if (w_out) connect(*w_out, {idx, in_port(sw)});
      else entry(i, 0, w0).port = {idx, in_port(sw)};
      w_out = PortRef{idx, out_port(sw)};
      label(id, sj, -(j + eps));
      label(id, sw, -j);
    }
    if (modular_) {
      Node t;
      t.kind = NodeKind::double_line;
      t.id = base.id + "@w";
      t.sign = eps;
      int s = static_cast<int>(sheet(w0, h));
      int idx = add(std::move(t), Provenance{base.id, CoverPiece::wrap, {s, s}});
      if (w_out) connect(*w_out, {idx, 0});
      else entry(i, 0, w0).port = {idx, 0};
      w_out = PortRef{idx, 1};
    }
    if (w_out) {
      exit(i, 0, w1).port = *w_out;
    } else {
      entry(i, 0, w0).through = static_cast<int>(w1);
      exit(i, 0, w1).through = static_cast<int>(w0);
    }
  }

  void wire() {
    std::set<std::pair<std::string, long>> visited;
    auto follow = [&](std::string e, long p) -> std::pair<std::string, long> {
      // Moves to the next copy wire when the entry passes straight through.
      const PortRef dst = topo_.ends(e).dst;
      const int s = strand_of(dst.port);
      const Term& t = entry(dst.node, s, p);
      return {topo_.node(dst.node).ports[static_cast<std::size_t>(out_port(s))], t.through};
    };
    for (const auto& e : topo_.edge_order()) {
      const PortRef src = topo_.ends(e).src;
      for (long p = 0; p < m_; ++p) {
        const Term& start = exit(src.node, strand_of(src.port), p);
        if (!start.port.valid()) continue;
        std::string cur = e;
        long pos = p;
        while (true) {
          visited.insert({cur, pos});
          const PortRef dst = topo_.ends(cur).dst;
          const Term& t = entry(dst.node, strand_of(dst.port), pos);
          if (t.port.valid()) {
            connect(start.port, t.port);
            break;
          }
          std::tie(cur, pos) = follow(cur, pos);
        }
      }
    }
    for (const auto& e : topo_.edge_order())
      for (long p = 0; p < m_; ++p) {
        if (visited.count({e, p})) continue;
        std::string cur = e;
        long pos = p;
        while (!visited.count({cur, pos})) {
          visited.insert({cur, pos});
          std::tie(cur, pos) = follow(cur, pos);
        }
        out_.diagram.free_loops.push_back(fresh_loop());
      }
  }

  const PlanarDiagram& d_;
  Topology topo_;
  int m_;
  bool modular_;
  PassHeights heights_;
  std::vector<std::array<std::vector<Term>, 2>> entries_, exits_;
  CoveringDiagram out_;
  long edge_counter_ = 0;
  long loop_counter_ = 0;
};

}  // namespace

CoveringDiagram cover0(const PlanarDiagram& d, int m) {
  if (m < 1) throw std::invalid_argument("sheet count must be at least 1");
  require_single_component(d, "cover0");
  if (total_degree(d) != 0) throw std::invalid_argument("cover0 needs degree 0");
  if (d.count(NodeKind::cut_point)) throw std::invalid_argument("coverings do not accept cut points");
  return CoverBuilder(d, m, false).run();
}

CoveringDiagram coverk(const PlanarDiagram& d) {
  require_single_component(d, "coverk");
  const int k = total_degree(d);
  if (k == 0) throw std::invalid_argument("coverk needs nonzero degree");
  if (d.count(NodeKind::cut_point)) throw std::invalid_argument("coverings do not accept cut points");
  return CoverBuilder(d, std::abs(k), true).run();
}

MarkedGaussCode restricted_lift(const PlanarDiagram& d, int m) {
  if (m < 1) throw std::invalid_argument("sheet count must be at least 1");
  require_single_component(d, "restricted_lift");
  if (total_degree(d) != 0) throw std::invalid_argument("restricted_lift needs degree 0");
  Topology t(d);
  auto ph = pass_heights(d);
  auto ws = t.walks();
  MarkedGaussCode code;
  for (long s = 0; s < m; ++s) {
    std::vector<Event> comp;
    if (!ws.empty())
      for (const auto& pass : ws[0].passes) {
        const Node& n = t.node(pass.node);
        if (n.kind != NodeKind::classical) continue;
        const int a = leading_strand(n), b = 1 - a;
        const auto& h = ph.node.at(n.id);
        const long ha = h[static_cast<std::size_t>(a)], hb = h[static_cast<std::size_t>(b)];
        const bool on_a = pass.strand == a;
        for (long k = 0; k < m; ++k) {
          // a copies meet the b copies in increasing position, b copies meet
          // the a copies in decreasing position.
          const long other_pos = on_a ? k : m - 1 - k;
          const long t_sheet = mod(other_pos - (on_a ? hb : ha), m);
          const long sa = on_a ? s : t_sheet, sb = on_a ? t_sheet : s;
          const long la = sa + ha, lb = sb + hb;
          const bool a_over = la != lb ? la > lb : a == 1;
          const long s0 = a == 0 ? sa : sb, s1 = a == 0 ? sb : sa;
          const bool over = on_a == a_over;
          comp.push_back(Event::crossing(pair_id(n.id, s0, s1), over ? Role::over : Role::under, a_over ? -1 : 1));
        }
      }
    code.components.push_back(std::move(comp));
  }
  return code;
}

CoveringNumbering covering_numbering(const CoveringDiagram& c, long m) {
  if (m < 1) throw std::invalid_argument("modulus must be at least 1");
  CoveringNumbering out;
  auto code = traverse(c.diagram);
  out.system = build_constraints(code, false);
  const auto& seg = out.system.segmentation;
  Numbering proposal{m, std::vector<long>(out.system.variables.size(), 0)};
  for (std::size_t i = 0; i < seg.segments.size(); ++i) {
    const Segment& s = seg.segments[i];
    if (s.closed()) continue;
    const Event& e = code.components[static_cast<std::size_t>(s.component)][static_cast<std::size_t>(s.start_event)];
    auto it = c.arc_labels.find(e.id);
    if (it == c.arc_labels.end()) throw std::invalid_argument("no provenance label for crossing '" + e.id + "'");
    proposal.values[i] = mod(it->second[e.role == Role::over ? 1 : 0], m);
  }
  out.discrepancies = check_numbering(out.system, proposal);
  if (out.discrepancies.empty()) {
    out.numbering = std::move(proposal);
  } else {
    out.fallback = true;
    out.numbering = solve(out.system, m);
  }
  return out;
}

}  // namespace knotlift
