#include "knotlift/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "knotlift/topology.hpp"

namespace knotlift {

std::array<int, 4> implied_rotation(const Node& n) {
  switch (n.kind) {
    case NodeKind::classical:
      // (under_in, over_in, under_out, over_out) for +1,
      // (under_in, over_out, under_out, over_in) for -1.
      return n.sign > 0 ? std::array<int, 4>{kUnderIn, kOverIn, kUnderOut, kOverOut}
                        : std::array<int, 4>{kUnderIn, kOverOut, kUnderOut, kOverIn};
    case NodeKind::virtual_crossing:
      return {0, 2, 1, 3};  // (a_in, b_in, a_out, b_out)
    default:
      return {0, 1, -1, -1};
  }
}

std::array<int, 4> effective_rotation(const Node& n) {
  if (n.rotation && n.valence() == 4) return *n.rotation;
  return implied_rotation(n);
}

void switch_crossing(Node& n) {
  std::swap(n.ports[0], n.ports[2]);
  std::swap(n.ports[1], n.ports[3]);
  n.sign = -n.sign;
  if (n.rotation)
    for (auto& p : *n.rotation) p ^= 2;
}

const Node* PlanarDiagram::find_node(std::string_view id) const {
  for (const auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

std::size_t PlanarDiagram::count(NodeKind k) const {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [k](const Node& n) { return n.kind == k; }));
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

bool ValidationReport::has(IssueKind k) const {
  return std::any_of(issues.begin(), issues.end(), [k](const ValidationIssue& i) { return i.kind == k; });
}

std::string_view to_string(IssueKind k) {
  switch (k) {
    case IssueKind::dangling_port: return "dangling-port";
    case IssueKind::duplicate_id: return "duplicate-id";
    case IssueKind::rotation_mismatch: return "rotation-mismatch";
    case IssueKind::nonplanar: return "nonplanar";
    case IssueKind::malformed: return "malformed";
  }
  return "unknown";
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& i : issues) {
    if (!out.empty()) out += '\n';
    out += std::string(knotlift::to_string(i.kind)) + ": " + i.message;
  }
  return out;
}

DiagramError::DiagramError(ValidationReport report)
    : std::runtime_error("invalid diagram: " + report.to_string()), report_(std::move(report)) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == ':' || c == '@' ||
           c == '-' || c == '/' || c == '[' || c == ']';
  });
}

int parse_sign(const Token& t, std::string_view value, std::size_t line) {
  if (value == "+" || value == "+1") return 1;
  if (value == "-" || value == "-1") return -1;
  throw ParseError(line, t.column, "sign must be + or -, got '" + std::string(value) + "'");
}

const std::map<std::string, int>& port_names(NodeKind k) {
  static const std::map<std::string, int> x{{"uin", kUnderIn}, {"uout", kUnderOut}, {"oin", kOverIn}, {"oout", kOverOut}};
  static const std::map<std::string, int> v{{"ain", 0}, {"aout", 1}, {"bin", 2}, {"bout", 3}};
  static const std::map<std::string, int> two{{"in", 0}, {"out", 1}};
  if (k == NodeKind::classical) return x;
  if (k == NodeKind::virtual_crossing) return v;
  return two;
}

std::string port_name(NodeKind k, int port) {
  for (const auto& [name, p] : port_names(k))
    if (p == port) return name;
  return "?";
}

}  // namespace

PlanarDiagram parse_diagram_unchecked(std::string_view text) {
  PlanarDiagram d;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const Token& head = tokens[0];
    NodeKind kind;
    if (head.text == "X") kind = NodeKind::classical;
    else if (head.text == "V") kind = NodeKind::virtual_crossing;
    else if (head.text == "T") kind = NodeKind::double_line;
    else if (head.text == "C") kind = NodeKind::cut_point;
    else if (head.text == "L") {
      if (tokens.size() != 2) throw ParseError(line_no, head.column, "L record takes exactly one id");
      if (!valid_identifier(tokens[1].text)) throw ParseError(line_no, tokens[1].column, "bad identifier");
      d.free_loops.push_back(tokens[1].text);
      continue;
    } else {
      throw ParseError(line_no, head.column, "unknown record type '" + head.text + "'");
    }
    if (tokens.size() < 2) throw ParseError(line_no, head.column + 1, "missing node id");
    if (!valid_identifier(tokens[1].text) || tokens[1].text.find('=') != std::string::npos)
      throw ParseError(line_no, tokens[1].column, "bad identifier '" + tokens[1].text + "'");

    Node n;
    n.kind = kind;
    n.id = tokens[1].text;
    const auto& names = port_names(kind);
    std::set<std::string> seen;
    bool have_sign = false, have_dir = false;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      auto eq = t.text.find('=');
      if (eq == std::string::npos || eq == 0) throw ParseError(line_no, t.column, "expected key=value, got '" + t.text + "'");
      std::string key = t.text.substr(0, eq);
      std::string value = t.text.substr(eq + 1);
      if (!seen.insert(key).second) throw ParseError(line_no, t.column, "duplicate key '" + key + "'");
      if (value.empty()) throw ParseError(line_no, t.column + eq + 1, "empty value for '" + key + "'");
      if (key == "sign" && (kind == NodeKind::classical || kind == NodeKind::double_line)) {
        n.sign = parse_sign(t, value, line_no);
        have_sign = true;
      } else if (key == "dir" && kind == NodeKind::cut_point) {
        if (value == "coh") n.direction = CutDirection::coherent;
        else if (value == "inc") n.direction = CutDirection::incoherent;
        else throw ParseError(line_no, t.column + eq + 1, "dir must be coh or inc");
        have_dir = true;
      } else if (key == "ccw" && (kind == NodeKind::classical || kind == NodeKind::virtual_crossing)) {
        std::array<int, 4> rot{};
        std::size_t k = 0, start = 0;
        while (start <= value.size()) {
          auto comma = value.find(',', start);
          std::string name = value.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
          auto it = names.find(name);
          if (it == names.end() || k >= 4) throw ParseError(line_no, t.column + eq + 1, "bad ccw port list '" + value + "'");
          rot[k++] = it->second;
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
        if (k != 4) throw ParseError(line_no, t.column + eq + 1, "ccw must list four ports");
        n.rotation = rot;
      } else if (auto it = names.find(key); it != names.end()) {
        if (!valid_identifier(value)) throw ParseError(line_no, t.column + eq + 1, "bad edge id '" + value + "'");
        n.ports[static_cast<std::size_t>(it->second)] = value;
      } else {
        throw ParseError(line_no, t.column, "unknown key '" + key + "' for " + head.text + " record");
      }
    }
    if ((kind == NodeKind::classical || kind == NodeKind::double_line) && !have_sign)
      throw ParseError(line_no, head.column, "missing sign");
    if (kind == NodeKind::cut_point && !have_dir) throw ParseError(line_no, head.column, "missing dir");
    for (const auto& [name, p] : names)
      if (n.ports[static_cast<std::size_t>(p)].empty()) throw ParseError(line_no, head.column, "missing port '" + name + "'");
    d.nodes.push_back(std::move(n));
  }
  return d;
}

PlanarDiagram parse_diagram(std::string_view text) {
  PlanarDiagram d = parse_diagram_unchecked(text);
  require_valid(d);
  return d;
}

PlanarDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

std::string serialize_diagram(const PlanarDiagram& d) {
  std::string out;
  auto put_ports = [&](const Node& n, std::initializer_list<int> order) {
    for (int p : order) out += " " + port_name(n.kind, p) + "=" + n.ports[static_cast<std::size_t>(p)];
  };
  for (const auto& n : d.nodes) {
    switch (n.kind) {
      case NodeKind::classical:
        out += "X " + n.id + " sign=" + (n.sign > 0 ? "+" : "-");
        put_ports(n, {kUnderIn, kOverIn, kUnderOut, kOverOut});
        break;
      case NodeKind::virtual_crossing:
        out += "V " + n.id;
        put_ports(n, {0, 1, 2, 3});
        break;
      case NodeKind::double_line:
        out += "T " + n.id + " sign=" + (n.sign > 0 ? "+" : "-");
        put_ports(n, {0, 1});
        break;
      case NodeKind::cut_point:
        out += "C " + n.id + " dir=" + (n.direction == CutDirection::coherent ? "coh" : "inc");
        put_ports(n, {0, 1});
        break;
    }
    if (n.rotation && n.valence() == 4) {
      out += " ccw=";
      for (std::size_t i = 0; i < 4; ++i) out += (i ? "," : "") + port_name(n.kind, (*n.rotation)[i]);
    }
    out += '\n';
  }
  for (const auto& l : d.free_loops) out += "L " + l + '\n';
  return out;
}

namespace {

bool cyclically_equal(const std::array<int, 4>& a, const std::array<int, 4>& b) {
  for (int s = 0; s < 4; ++s) {
    bool same = true;
    for (int i = 0; i < 4 && same; ++i) same = a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>((i + s) % 4)];
    if (same) return true;
  }
  return false;
}

}  // namespace

ValidationReport validate(const PlanarDiagram& d) {
  ValidationReport r;
  auto add = [&](IssueKind k, std::string msg) { r.issues.push_back({k, std::move(msg)}); };

  std::set<std::string> ids;
  for (const auto& n : d.nodes)
    if (!ids.insert(n.id).second) add(IssueKind::duplicate_id, "node id '" + n.id + "' used more than once");
  for (const auto& l : d.free_loops)
    if (!ids.insert(l).second) add(IssueKind::duplicate_id, "id '" + l + "' used more than once");

  std::map<std::string, std::pair<int, int>> usage;  // edge -> (as source, as target)
  for (const auto& n : d.nodes) {
    if ((n.kind == NodeKind::classical || n.kind == NodeKind::double_line) && n.sign != 1 && n.sign != -1)
      add(IssueKind::malformed, "node '" + n.id + "' has sign " + std::to_string(n.sign));
    for (int p = 0; p < n.valence(); ++p) {
      const auto& e = n.ports[static_cast<std::size_t>(p)];
      if (e.empty()) {
        add(IssueKind::dangling_port, "node '" + n.id + "' port " + port_name(n.kind, p) + " is not connected");
        continue;
      }
      auto& u = usage[e];
      (is_out_port(p) ? u.first : u.second)++;
    }
    for (int p = n.valence(); p < 4; ++p)
      if (!n.ports[static_cast<std::size_t>(p)].empty())
        add(IssueKind::malformed, "node '" + n.id + "' uses a port it does not have");
  }
  for (const auto& [e, u] : usage) {
    if (u.first != 1 || u.second != 1)
      add(IssueKind::dangling_port, "edge '" + e + "' is used " + std::to_string(u.first) + " time(s) as source and " +
                                        std::to_string(u.second) + " time(s) as target");
  }

  for (const auto& n : d.nodes) {
    if (!n.rotation || n.valence() != 4) continue;
    auto rot = *n.rotation;
    auto sorted = rot;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{0, 1, 2, 3}) {
      add(IssueKind::malformed, "node '" + n.id + "' rotation is not a permutation of its ports");
      continue;
    }
    if (n.kind == NodeKind::classical) {
      if (!cyclically_equal(rot, implied_rotation(n)))
        add(IssueKind::rotation_mismatch, "crossing '" + n.id + "' rotation does not match sign " + (n.sign > 0 ? "+1" : "-1"));
    } else {
      auto pos = [&](int port) { return static_cast<int>(std::find(rot.begin(), rot.end(), port) - rot.begin()); };
      if ((pos(0) + 2) % 4 != pos(1) || (pos(2) + 2) % 4 != pos(3))
        add(IssueKind::rotation_mismatch, "virtual crossing '" + n.id + "' strands do not pass straight through");
    }
  }

  if (r.has(IssueKind::dangling_port) || r.has(IssueKind::duplicate_id) || r.has(IssueKind::malformed)) return r;

  Topology topo(d);
  long v = static_cast<long>(d.nodes.size());
  long e = static_cast<long>(usage.size());
  long f = static_cast<long>(topo.faces().size());
  long c = topo.graph_components();
  if (v - e + f != 2 * c)
    add(IssueKind::nonplanar, "V - E + F = " + std::to_string(v - e + f) + " but " + std::to_string(c) +
                                  " connected piece(s) on the sphere need " + std::to_string(2 * c));
  return r;
}

void require_valid(const PlanarDiagram& d) {
  auto r = validate(d);
  if (!r.ok()) throw DiagramError(std::move(r));
}

}  // namespace knotlift
