#include "knotlift/numbering.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace knotlift {

int ConstraintSystem::index_of(const std::string& var) const {
  auto it = std::find(variables.begin(), variables.end(), var);
  return it == variables.end() ? -1 : static_cast<int>(it - variables.begin());
}

ConstraintSystem build_constraints(const MarkedGaussCode& code, bool include_cuts) {
  ConstraintSystem cs;
  cs.segmentation = segment(code, include_cuts ? SegmentPolicy::arcs : SegmentPolicy::classical_arcs);
  const auto& seg = cs.segmentation;
  for (const auto& s : seg.segments) cs.variables.push_back(s.id);

  struct Sites { int over_c = -1, over_i = -1, under_c = -1, under_i = -1, sign = 1; };
  std::map<std::string, Sites> crossings;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    const auto& comp = code.components[c];
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Event& e = comp[i];
      if (e.kind == EventKind::crossing) {
        auto& s = crossings[e.id];
        s.sign = e.sign;
        (e.role == Role::over ? s.over_c : s.under_c) = static_cast<int>(c);
        (e.role == Role::over ? s.over_i : s.under_i) = static_cast<int>(i);
      } else if (e.kind == EventKind::cut && include_cuts) {
        int before = seg.before[c][i], after = seg.after[c][i];
        cs.relations.push_back({before, after, e.direction == CutDirection::coherent ? 1 : -1, e.id});
      }
    }
  }
  for (const auto& [id, s] : crossings) {
    if (s.over_c < 0 || s.under_c < 0) throw std::invalid_argument("crossing '" + id + "' lacks a pass");
    auto at = [&](const std::vector<std::vector<int>>& v, int c, int i) {
      return v[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
    };
    int o_in = at(seg.before, s.over_c, s.over_i), o_out = at(seg.after, s.over_c, s.over_i);
    int u_in = at(seg.before, s.under_c, s.under_i), u_out = at(seg.after, s.under_c, s.under_i);
    // Labels are the index of the region to the right of an arc. Along the
    // over strand the label moves by the sign, along the under strand by its
    // negative, and the right-hand region shared by both strands glues one
    // incoming arc to one outgoing arc.
    cs.relations.push_back({o_in, o_out, s.sign, id});
    cs.relations.push_back({u_in, u_out, -s.sign, id});
    if (s.sign > 0) cs.relations.push_back({o_out, u_in, 0, id});
    else cs.relations.push_back({u_out, o_in, 0, id});
  }
  return cs;
}

namespace {

long norm(long x, long m) { return m > 0 ? ((x % m) + m) % m : x; }

struct Adjacent {
  int to;
  long delta;  // label(to) - label(from)
  int relation;
};

std::vector<std::vector<Adjacent>> adjacency(const ConstraintSystem& cs) {
  std::vector<std::vector<Adjacent>> adj(cs.variables.size());
  for (std::size_t r = 0; r < cs.relations.size(); ++r) {
    const auto& rel = cs.relations[r];
    adj[static_cast<std::size_t>(rel.a)].push_back({rel.b, rel.delta, static_cast<int>(r)});
    adj[static_cast<std::size_t>(rel.b)].push_back({rel.a, -rel.delta, static_cast<int>(r)});
  }
  return adj;
}

// Integer potentials along a BFS spanning forest rooted at the lowest
// index of each connected piece.
std::vector<long> potentials(const ConstraintSystem& cs, long m) {
  auto adj = adjacency(cs);
  std::vector<long> pot(cs.variables.size(), 0);
  std::vector<bool> seen(cs.variables.size(), false);
  for (std::size_t root = 0; root < cs.variables.size(); ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const auto& a : adj[static_cast<std::size_t>(v)]) {
        if (seen[static_cast<std::size_t>(a.to)]) continue;
        seen[static_cast<std::size_t>(a.to)] = true;
        pot[static_cast<std::size_t>(a.to)] = norm(pot[static_cast<std::size_t>(v)] + a.delta, m);
        queue.push_back(a.to);
      }
    }
  }
  return pot;
}

}  // namespace

std::optional<Numbering> solve(const ConstraintSystem& cs, long m) {
  if (m < 0) throw std::invalid_argument("modulus must be non-negative");
  Numbering n{m, potentials(cs, m)};
  for (const auto& r : cs.relations)
    if (norm(n.values[static_cast<std::size_t>(r.b)] - n.values[static_cast<std::size_t>(r.a)] - r.delta, m) != 0)
      return std::nullopt;
  return n;
}

long defect(const ConstraintSystem& cs) {
  auto pot = potentials(cs, 0);
  long g = 0;
  for (const auto& r : cs.relations)
    g = std::gcd(g, pot[static_cast<std::size_t>(r.b)] - pot[static_cast<std::size_t>(r.a)] - r.delta);
  return g;
}

std::vector<std::string> check_numbering(const ConstraintSystem& cs, const Numbering& n) {
  if (n.values.size() != cs.variables.size()) return {"numbering covers " + std::to_string(n.values.size()) + " of " +
                                                      std::to_string(cs.variables.size()) + " variables"};
  std::vector<std::string> out;
  for (const auto& r : cs.relations) {
    long la = n.values[static_cast<std::size_t>(r.a)], lb = n.values[static_cast<std::size_t>(r.b)];
    if (norm(lb - la - r.delta, n.modulus) != 0)
      out.push_back(r.source + ": " + cs.variables[static_cast<std::size_t>(r.b)] + "=" + std::to_string(lb) + " minus " +
                    cs.variables[static_cast<std::size_t>(r.a)] + "=" + std::to_string(la) + " should be " +
                    std::to_string(r.delta) + (n.modulus ? " mod " + std::to_string(n.modulus) : std::string()));
  }
  return out;
}

bool is_mod_m_ac(const PlanarDiagram& d, long m) {
  if (d.count(NodeKind::cut_point) != 0) throw std::invalid_argument("diagram has cut points");
  return solve(build_constraints(traverse(d), false), m).has_value();
}

std::unordered_map<std::string, long> as_map(const ConstraintSystem& cs, const Numbering& n) {
  std::unordered_map<std::string, long> out;
  for (std::size_t i = 0; i < cs.variables.size() && i < n.values.size(); ++i) out[cs.variables[i]] = n.values[i];
  return out;
}

}  // namespace knotlift
