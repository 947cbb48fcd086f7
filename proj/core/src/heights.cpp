#include "knotlift/heights.hpp"

#include <cstdlib>
#include <stdexcept>

namespace knotlift {

namespace {

long reduce(long x, long n) { return n > 0 ? ((x % n) + n) % n : x; }

int component_degree(const std::vector<Event>& comp) {
  int deg = 0;
  for (const auto& e : comp)
    if (e.kind == EventKind::double_line) deg += e.sign;
  return deg;
}

}  // namespace

int degree(const PlanarDiagram& d, int component) {
  auto code = traverse(d);
  if (component < 0 || component >= static_cast<int>(code.components.size()))
    throw std::out_of_range("no component " + std::to_string(component));
  return component_degree(code.components[static_cast<std::size_t>(component)]);
}

std::vector<int> degrees(const PlanarDiagram& d) {
  std::vector<int> out;
  for (const auto& comp : traverse(d).components) out.push_back(component_degree(comp));
  return out;
}

HeightMap heights(const PlanarDiagram& d, const std::string& base) {
  auto code = traverse(d);
  for (const auto& comp : code.components) {
    std::size_t start = comp.size();
    for (std::size_t i = 0; i < comp.size(); ++i)
      if (comp[i].kind == EventKind::double_line && comp[i].id == base) start = i;
    if (start == comp.size()) continue;
    HeightMap h;
    h.base = base;
    h.modulus = std::labs(component_degree(comp));
    long level = 0;
    h.heights[base] = 0;
    for (std::size_t k = 1; k < comp.size(); ++k) {
      const Event& e = comp[(start + k) % comp.size()];
      if (e.kind != EventKind::double_line) continue;
      level += e.sign;
      h.heights[e.id] = reduce(level, h.modulus);
    }
    return h;
  }
  throw std::invalid_argument("'" + base + "' is not a double line of the diagram");
}

HeightMap rebase_heights(const HeightMap& h, const std::string& base2) {
  auto it = h.heights.find(base2);
  if (it == h.heights.end()) throw std::invalid_argument("'" + base2 + "' is not a long arc of this height map");
  HeightMap out = h;
  out.base = base2;
  long shift = it->second;
  for (auto& [id, v] : out.heights) v = reduce(v - shift, h.modulus);
  return out;
}

std::vector<long> event_heights(const std::vector<Event>& comp) {
  std::vector<long> out(comp.size(), 0);
  std::size_t start = comp.size();
  for (std::size_t i = 0; i < comp.size() && start == comp.size(); ++i)
    if (comp[i].kind == EventKind::double_line) start = i;
  if (start == comp.size()) return out;
  long level = 0;
  for (std::size_t k = 0; k < comp.size(); ++k) {
    std::size_t i = (start + k) % comp.size();
    if (k > 0 && comp[i].kind == EventKind::double_line) level += comp[i].sign;
    out[i] = level;
  }
  return out;
}

}  // namespace knotlift
