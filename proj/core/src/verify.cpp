#include "knotlift/verify.hpp"

#include <stdexcept>

#include "knotlift/cut_systems.hpp"
#include "knotlift/heights.hpp"

namespace knotlift {

PlanarDiagram prepare_double_lines(const PlanarDiagram& d) {
  if (d.count(NodeKind::cut_point)) return to_double_lines(d);
  if (d.count(NodeKind::double_line)) return d;
  return to_double_lines(standard_cut_system(d));
}

TheoremCheck verify_theorem(const PlanarDiagram& d, long m) {
  if (m < 1) throw std::invalid_argument("modulus must be at least 1");
  TheoremCheck r;
  r.m = m;
  r.with_double_lines = prepare_double_lines(d);
  r.cover = cover0(r.with_double_lines, static_cast<int>(m));
  r.numbering = covering_numbering(r.cover, m);
  return r;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SuiteReport random_suite(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.trials = opts.trials;
  for (int t = 0; t < opts.trials; ++t) {
    const PlanarDiagram d = generate_random_diagram(trial_seed(opts.seed, static_cast<std::uint64_t>(t)), opts.diagrams);
    for (long m : opts.moduli) {
      ++rep.checks;
      const CoveringDiagram c = cover0(d, static_cast<int>(m));
      if (!is_mod_m_ac(c.diagram, m)) {
        rep.failures.push_back({t, m, "covering admits no numbering"});
        continue;
      }
      const CoveringNumbering n = covering_numbering(c, m);
      if (!n.numbering) rep.failures.push_back({t, m, "numbering solver failed"});
      else if (n.fallback)
        rep.fallbacks.push_back({t, m, n.discrepancies.empty() ? std::string("closed form rejected") : n.discrepancies.front()});
    }
  }
  return rep;
}

}  // namespace knotlift
