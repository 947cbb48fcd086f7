#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "knotlift/gauss_code.hpp"
#include "knotlift/topology.hpp"

namespace knotlift {

namespace {

// Nodes sit on a horizontal line with all ports pointing up. The open ends
// above the line form a row; adjacent ends of the same edge are capped and
// otherwise the closest pair is brought together by swaps, each swap
// becoming a virtual crossing.
class Planarizer {
 public:
  explicit Planarizer(const MarkedGaussCode& code) : code_(code) {
    for (const auto& comp : code.components)
      for (const auto& e : comp) used_.insert(e.id);
  }

  PlanarDiagram run() {
    build_nodes();
    for (std::size_t i = 0; i < nodes_.size(); ++i) place(static_cast<int>(i));
    reduce();
    PlanarDiagram d;
    d.nodes = std::move(nodes_);
    for (std::size_t c = 0; c < code_.components.size(); ++c)
      if (code_.components[c].empty()) d.free_loops.push_back(fresh("loop"));
    return d;
  }

 private:
  struct End {
    int edge;     // logical edge index
    bool tail;    // dangling port is an out-port (flow goes up)
    PortRef port; // dangling port
  };

  std::string fresh(const std::string& prefix) {
    std::string name;
    do name = prefix + std::to_string(++counter_);
    while (!used_.insert(name).second);
    return name;
  }

  void build_nodes() {
    std::map<std::string, int> crossing_node;
    for (const auto& comp : code_.components) {
      std::vector<PortRef> passes;
      for (const auto& e : comp) {
        int idx;
        int strand = 0;
        if (e.kind == EventKind::crossing) {
          auto [it, fresh_node] = crossing_node.try_emplace(e.id, static_cast<int>(nodes_.size()));
          if (fresh_node) nodes_.push_back(Node{NodeKind::classical, e.id, e.sign, CutDirection::coherent, {}, std::nullopt});
          idx = it->second;
          strand = e.role == Role::over ? 1 : 0;
        } else {
          idx = static_cast<int>(nodes_.size());
          NodeKind k = e.kind == EventKind::double_line ? NodeKind::double_line : NodeKind::cut_point;
          nodes_.push_back(Node{k, e.id, e.sign, e.direction, {}, std::nullopt});
        }
        passes.push_back({idx, strand});
      }
      for (std::size_t i = 0; i < passes.size(); ++i) {
        const PortRef& a = passes[i];
        const PortRef& b = passes[(i + 1) % passes.size()];
        edges_.push_back({{a.node, out_port(a.port)}, {b.node, in_port(b.port)}});
      }
    }
    port_edge_.assign(nodes_.size(), {-1, -1, -1, -1});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      port_edge_[static_cast<std::size_t>(edges_[e].src.node)][static_cast<std::size_t>(edges_[e].src.port)] = static_cast<int>(e);
      port_edge_[static_cast<std::size_t>(edges_[e].dst.node)][static_cast<std::size_t>(edges_[e].dst.port)] = static_cast<int>(e);
    }
  }

  int position_of(int edge) const {
    for (std::size_t i = 0; i < row_.size(); ++i)
      if (row_[i].edge == edge) return static_cast<int>(i);
    return -1;
  }

  // Appends the node's ports left to right (reverse ccw), picking the
  // cyclic offset that keeps already-open partners closest.
  void place(int idx) {
    const Node& n = nodes_[static_cast<std::size_t>(idx)];
    const int v = n.valence();
    auto rot = implied_rotation(n);
    std::vector<int> best;
    long best_cost = std::numeric_limits<long>::max();
    for (int o = 0; o < v; ++o) {
      std::vector<int> ltr;
      for (int k = 0; k < v; ++k) ltr.push_back(rot[static_cast<std::size_t>(((o - k) % v + v) % v)]);
      long cost = 0;
      for (int k = 0; k < v; ++k) {
        int e = port_edge_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(ltr[static_cast<std::size_t>(k)])];
        int p = position_of(e);
        if (p >= 0) cost += static_cast<long>(row_.size()) + k - p - 1;
        for (int j = k + 1; j < v; ++j)
          if (port_edge_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(ltr[static_cast<std::size_t>(j)])] == e) cost += j - k - 1;
      }
      if (cost < best_cost) {
        best_cost = cost;
        best = ltr;
      }
    }
    for (int p : best)
      row_.push_back({port_edge_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(p)], is_out_port(p), {idx, p}});
  }

  void connect(PortRef out, PortRef in) {
    std::string e = fresh("e");
    nodes_[static_cast<std::size_t>(out.node)].ports[static_cast<std::size_t>(out.port)] = e;
    nodes_[static_cast<std::size_t>(in.node)].ports[static_cast<std::size_t>(in.port)] = e;
  }

  // Attaches end `x` to strand `s` of virtual node `vi` from below; the end
  // then dangles from the strand's upper port.
  void thread(End& x, int vi, int s) {
    if (x.tail) {
      connect(x.port, {vi, in_port(s)});
      x.port = {vi, out_port(s)};
    } else {
      connect({vi, out_port(s)}, x.port);
      x.port = {vi, in_port(s)};
    }
  }

  static bool cyclic_equal(const std::array<int, 4>& a, const std::array<int, 4>& b) {
    for (int s = 0; s < 4; ++s) {
      bool same = true;
      for (int i = 0; i < 4 && same; ++i) same = a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>((i + s) % 4)];
      if (same) return true;
    }
    return false;
  }

  void swap_ends(std::size_t i) {
    End& l = row_[i];
    End& r = row_[i + 1];
    // ccw around the crossing: lower right, upper right, upper left, lower left.
    auto rotation_for = [&](int sl) {
      int sr = 1 - sl;
      int l_lower = l.tail ? in_port(sl) : out_port(sl);
      int l_upper = l.tail ? out_port(sl) : in_port(sl);
      int r_lower = r.tail ? in_port(sr) : out_port(sr);
      int r_upper = r.tail ? out_port(sr) : in_port(sr);
      return std::array<int, 4>{r_lower, l_upper, r_upper, l_lower};
    };
    Node v{NodeKind::virtual_crossing, fresh("v"), 1, CutDirection::coherent, {}, std::nullopt};
    int sl = cyclic_equal(rotation_for(0), implied_rotation(v)) ? 0 : 1;
    int vi = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(v));
    thread(l, vi, sl);
    thread(r, vi, 1 - sl);
    std::swap(row_[i], row_[i + 1]);
  }

  void reduce() {
    while (!row_.empty()) {
      bool capped = false;
      for (std::size_t i = 0; i + 1 < row_.size(); ++i) {
        if (row_[i].edge != row_[i + 1].edge) continue;
        const End& t = row_[i].tail ? row_[i] : row_[i + 1];
        const End& h = row_[i].tail ? row_[i + 1] : row_[i];
        connect(t.port, h.port);
        row_.erase(row_.begin() + static_cast<long>(i), row_.begin() + static_cast<long>(i) + 2);
        capped = true;
        break;
      }
      if (capped) continue;
      std::size_t best_i = 0, best_gap = std::numeric_limits<std::size_t>::max();
      for (std::size_t i = 0; i < row_.size(); ++i)
        for (std::size_t j = i + 1; j < row_.size(); ++j)
          if (row_[i].edge == row_[j].edge && j - i < best_gap) {
            best_gap = j - i;
            best_i = i;
          }
      if (best_gap == std::numeric_limits<std::size_t>::max()) throw std::logic_error("unpaired edge end");
      swap_ends(best_i);
    }
  }

  const MarkedGaussCode& code_;
  std::vector<Node> nodes_;
  std::vector<EdgeEnds> edges_;
  std::vector<std::array<int, 4>> port_edge_;
  std::vector<End> row_;
  std::unordered_set<std::string> used_;
  long counter_ = 0;
};

}  // namespace

PlanarDiagram realize_code(const MarkedGaussCode& code) {
  if (auto issues = check_code(code); !issues.empty()) throw std::invalid_argument("malformed code: " + issues.front());
  PlanarDiagram d = Planarizer(code).run();
  require_valid(d);
  return d;
}

}  // namespace knotlift
