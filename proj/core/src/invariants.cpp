#include "knotlift/invariants.hpp"

#include <stdexcept>
#include <unordered_map>

#include "knotlift/numbering.hpp"

namespace knotlift {

namespace {

long odd_writhe_of(const std::vector<Event>& comp) {
  std::unordered_map<std::string, std::vector<std::size_t>> at;
  std::vector<std::size_t> crossing_index(comp.size(), 0);
  std::size_t count = 0;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (comp[i].kind != EventKind::crossing) continue;
    crossing_index[i] = count++;
    at[comp[i].id].push_back(i);
  }
  long total = 0;
  for (const auto& [id, pos] : at) {
    if (pos.size() != 2) continue;  // crossing with another component
    std::size_t between = crossing_index[pos[1]] - crossing_index[pos[0]] - 1;
    if (between % 2 == 1) total += comp[pos[0]].sign;
  }
  return total;
}

}  // namespace

long odd_writhe(const MarkedGaussCode& code) {
  if (code.components.size() != 1) throw std::invalid_argument("odd writhe is defined for knots");
  return odd_writhe_of(code.components[0]);
}

Matrix linking_matrix(const MarkedGaussCode& code) {
  const std::size_t n = code.components.size();
  Matrix m(n, std::vector<long>(n, 0));
  struct Ends { int over = -1, under = -1, sign = 0; };
  std::unordered_map<std::string, Ends> ends;
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& e : code.components[c]) {
      if (e.kind != EventKind::crossing) continue;
      auto& x = ends[e.id];
      (e.role == Role::over ? x.over : x.under) = static_cast<int>(c);
      x.sign = e.sign;
    }
  for (const auto& [id, x] : ends)
    if (x.over >= 0 && x.under >= 0 && x.over != x.under)
      m[static_cast<std::size_t>(x.over)][static_cast<std::size_t>(x.under)] += x.sign;
  return m;
}

InvariantReport invariant_report(const PlanarDiagram& d) {
  InvariantReport r;
  auto code = traverse(d);
  r.components = static_cast<int>(code.components.size());
  for (const auto& comp : code.components) {
    r.odd_writhes.push_back(odd_writhe_of(comp));
    int deg = 0;
    for (const auto& e : comp)
      if (e.kind == EventKind::double_line) deg += e.sign;
    r.degrees.push_back(deg);
  }
  r.linking = linking_matrix(code);
  auto cs = build_constraints(code, false);
  const long g = defect(cs);
  for (long m : kReportModuli) r.ac[m] = m == 0 ? g == 0 : g % m == 0;
  return r;
}

namespace {

bool extend(const InvariantReport& a, const InvariantReport& b, std::vector<int>& perm, std::vector<bool>& used) {
  const std::size_t i = perm.size();
  if (i == static_cast<std::size_t>(a.components)) return true;
  for (std::size_t j = 0; j < used.size(); ++j) {
    if (used[j]) continue;
    if (a.odd_writhes[i] != b.odd_writhes[j] || a.degrees[i] != b.degrees[j]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < i && ok; ++k) {
      const auto pk = static_cast<std::size_t>(perm[k]);
      ok = a.linking[i][k] == b.linking[j][pk] && a.linking[k][i] == b.linking[pk][j];
    }
    if (!ok) continue;
    used[j] = true;
    perm.push_back(static_cast<int>(j));
    if (extend(a, b, perm, used)) return true;
    perm.pop_back();
    used[j] = false;
  }
  return false;
}

}  // namespace

bool equivalent_reports(const InvariantReport& a, const InvariantReport& b, bool compare_ac) {
  if (a.components != b.components) return false;
  if (compare_ac && a.ac != b.ac) return false;
  std::vector<int> perm;
  std::vector<bool> used(static_cast<std::size_t>(b.components), false);
  return extend(a, b, perm, used);
}

}  // namespace knotlift
