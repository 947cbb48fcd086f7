#include "knotlift/gauss_code.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "knotlift/topology.hpp"

namespace knotlift {

std::vector<std::string> check_code(const MarkedGaussCode& code) {
  std::vector<std::string> issues;
  struct Seen { int over = 0, under = 0; std::optional<int> sign; bool sign_clash = false; };
  std::map<std::string, Seen> crossings;
  std::map<std::string, int> marks;
  for (const auto& comp : code.components)
    for (const auto& e : comp) {
      if (e.kind == EventKind::crossing) {
        auto& s = crossings[e.id];
        (e.role == Role::over ? s.over : s.under)++;
        if (s.sign && *s.sign != e.sign) s.sign_clash = true;
        s.sign = e.sign;
      } else {
        marks[e.id]++;
      }
    }
  for (const auto& [id, s] : crossings) {
    if (s.over != 1 || s.under != 1) issues.push_back("crossing '" + id + "' needs exactly one over and one under pass");
    if (s.sign_clash) issues.push_back("crossing '" + id + "' passes disagree on sign");
  }
  for (const auto& [id, n] : marks) {
    if (n != 1) issues.push_back("mark '" + id + "' occurs " + std::to_string(n) + " times");
    if (crossings.count(id)) issues.push_back("id '" + id + "' names both a crossing and a mark");
  }
  return issues;
}

MarkedGaussCode traverse(const PlanarDiagram& d) {
  Topology topo(d);
  MarkedGaussCode code;
  for (const auto& w : topo.walks()) {
    std::vector<Event> comp;
    for (const auto& p : w.passes) {
      const Node& n = topo.node(p.node);
      switch (n.kind) {
        case NodeKind::classical:
          comp.push_back(Event::crossing(n.id, p.strand == 1 ? Role::over : Role::under, n.sign));
          break;
        case NodeKind::double_line:
          comp.push_back(Event::double_line(n.id, n.sign));
          break;
        case NodeKind::cut_point:
          comp.push_back(Event::cut(n.id, n.direction));
          break;
        case NodeKind::virtual_crossing:
          break;
      }
    }
    code.components.push_back(std::move(comp));
  }
  for (std::size_t i = 0; i < d.free_loops.size(); ++i) code.components.emplace_back();
  return code;
}

std::string format_code(const MarkedGaussCode& code) {
  std::string out;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    if (c) out += " | ";
    const auto& comp = code.components[c];
    if (comp.empty()) out += "()";
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const auto& e = comp[i];
      if (i) out += ' ';
      switch (e.kind) {
        case EventKind::crossing:
          out += (e.role == Role::over ? "O" : "U") + e.id + (e.sign > 0 ? "+" : "-");
          break;
        case EventKind::double_line:
          out += "T" + e.id + (e.sign > 0 ? "+" : "-");
          break;
        case EventKind::cut:
          out += "C" + e.id + (e.direction == CutDirection::coherent ? ">" : "<");
          break;
      }
    }
  }
  return out;
}

MarkedGaussCode parse_code(std::string_view text) {
  MarkedGaussCode code;
  code.components.emplace_back();
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) { throw ParseError(1, i + 1, msg); };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '|') { code.components.emplace_back(); ++i; continue; }
    if (c == '(') {
      if (i + 1 >= text.size() || text[i + 1] != ')') fail("expected '()'");
      i += 2;
      continue;
    }
    if (c != 'O' && c != 'U' && c != 'T' && c != 'C') fail(std::string("unexpected character '") + c + "'");
    std::size_t start = ++i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '.' || text[i] == ':' || text[i] == '@'))
      ++i;
    if (i == start) fail("missing id");
    if (i >= text.size()) fail("missing sign or direction");
    std::string id(text.substr(start, i - start));
    char m = text[i++];
    if (c == 'C') {
      if (m != '>' && m != '<') fail("cut mark needs '>' or '<'");
      code.components.back().push_back(Event::cut(id, m == '>' ? CutDirection::coherent : CutDirection::incoherent));
      continue;
    }
    if (m != '+' && m != '-') fail("expected '+' or '-'");
    int sign = m == '+' ? 1 : -1;
    if (c == 'T') code.components.back().push_back(Event::double_line(id, sign));
    else code.components.back().push_back(Event::crossing(id, c == 'O' ? Role::over : Role::under, sign));
  }
  return code;
}

bool is_boundary(const Event& e, SegmentPolicy policy) {
  switch (e.kind) {
    case EventKind::crossing: return policy != SegmentPolicy::long_arcs;
    case EventKind::double_line: return policy == SegmentPolicy::long_arcs || policy == SegmentPolicy::short_arcs;
    case EventKind::cut: return policy == SegmentPolicy::arcs;
  }
  return false;
}

Segmentation segment(const MarkedGaussCode& code, SegmentPolicy policy) {
  Segmentation s;
  s.policy = policy;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    const auto& comp = code.components[c];
    const int len = static_cast<int>(comp.size());
    std::vector<int> bounds;
    for (int i = 0; i < len; ++i)
      if (is_boundary(comp[static_cast<std::size_t>(i)], policy)) bounds.push_back(i);
    std::vector<int> after(static_cast<std::size_t>(len), -1), before(static_cast<std::size_t>(len), -1);
    const std::string prefix = "c" + std::to_string(c);
    if (bounds.empty()) {
      Segment seg{prefix, static_cast<int>(c), -1, -1, {}};
      int idx = static_cast<int>(s.segments.size());
      for (int i = 0; i < len; ++i) {
        seg.interior.push_back(i);
        after[static_cast<std::size_t>(i)] = before[static_cast<std::size_t>(i)] = idx;
      }
      s.segments.push_back(std::move(seg));
    } else {
      const int nb = static_cast<int>(bounds.size());
      for (int k = 0; k < nb; ++k) {
        int b = bounds[static_cast<std::size_t>(k)];
        int next = bounds[static_cast<std::size_t>((k + 1) % nb)];
        int idx = static_cast<int>(s.segments.size());
        Segment seg{prefix + "." + std::to_string(k), static_cast<int>(c), b, next, {}};
        after[static_cast<std::size_t>(b)] = idx;
        before[static_cast<std::size_t>(next)] = idx;
        for (int i = (b + 1) % len; i != next; i = (i + 1) % len) {
          seg.interior.push_back(i);
          after[static_cast<std::size_t>(i)] = before[static_cast<std::size_t>(i)] = idx;
        }
        s.segments.push_back(std::move(seg));
      }
    }
    s.after.push_back(std::move(after));
    s.before.push_back(std::move(before));
  }
  return s;
}

std::string CanonicalCode::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) out += (i ? "," : "") + std::to_string(tokens[i]);
  return out;
}

namespace {

// Lexicographically least encoding over component order, per-component
// rotation, and first-occurrence relabeling.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const MarkedGaussCode& code) : code_(code) {}

  CanonicalCode run() {
    std::vector<long> cur{static_cast<long>(code_.components.size())};
    std::vector<bool> used(code_.components.size(), false);
    Labels labels;
    have_best_ = false;
    recurse(cur, used, labels, true);
    return CanonicalCode{best_};
  }

 private:
  using Labels = std::unordered_map<std::string, long>;

  static long type_of(const Event& e) {
    switch (e.kind) {
      case EventKind::crossing: return e.role == Role::over ? 1 : 2;
      case EventKind::double_line: return 3;
      case EventKind::cut: return 4;
    }
    return 0;
  }
  static std::string key_of(const Event& e) {
    return (e.kind == EventKind::crossing ? "x" : e.kind == EventKind::double_line ? "t" : "c") + e.id;
  }
  static long attr_of(const Event& e) {
    if (e.kind == EventKind::cut) return e.direction == CutDirection::coherent ? 1 : -1;
    return e.sign;
  }

  // Appends token `t`; returns false when the branch cannot beat best_.
  bool push(std::vector<long>& cur, long t, bool& tight) {
    if (have_best_ && tight) {
      long b = best_[cur.size()];
      if (t > b) return false;
      if (t < b) tight = false;
    }
    cur.push_back(t);
    return true;
  }

  void recurse(std::vector<long>& cur, std::vector<bool>& used, const Labels& labels, bool tight) {
    bool all = true;
    for (std::size_t c = 0; c < used.size(); ++c) {
      if (used[c]) continue;
      all = false;
      const auto& comp = code_.components[c];
      const std::size_t len = comp.size();
      const std::size_t starts = std::max<std::size_t>(len, 1);
      for (std::size_t s = 0; s < starts; ++s) {
        std::size_t mark = cur.size();
        bool t = tight;
        Labels local = labels;
        long next_label = static_cast<long>(local.size());
        bool ok = push(cur, static_cast<long>(len), t);
        for (std::size_t k = 0; ok && k < len; ++k) {
          const Event& e = comp[(s + k) % len];
          auto [it, fresh] = local.try_emplace(key_of(e), next_label);
          if (fresh) ++next_label;
          ok = push(cur, type_of(e), t) && push(cur, it->second, t) && push(cur, attr_of(e), t);
        }
        if (ok) {
          used[c] = true;
          recurse(cur, used, local, t);
          used[c] = false;
        }
        cur.resize(mark);
      }
    }
    if (all) {
      if (!have_best_ || cur < best_) {
        best_ = cur;
        have_best_ = true;
      }
    }
  }

  const MarkedGaussCode& code_;
  std::vector<long> best_;
  bool have_best_ = false;
};

}  // namespace

CanonicalCode canonical_code(const MarkedGaussCode& code) { return CanonicalSearch(code).run(); }

}  // namespace knotlift
