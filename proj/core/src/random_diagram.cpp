#include <algorithm>
#include <limits>
#include <stdexcept>

#include "knotlift/random.hpp"

namespace knotlift {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("draw needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

namespace {

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

int draw_in(std::mt19937_64& rng, int lo, int hi) { return lo + static_cast<int>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1))); }

}  // namespace

MarkedGaussCode random_code(std::mt19937_64& rng, const RandomDiagramOptions& opts) {
  if (opts.max_crossings < 0 || opts.max_double_lines < 0) throw std::invalid_argument("bounds must be non-negative");
  const int crossings = draw_in(rng, opts.at_least_one_crossing ? std::min(1, opts.max_crossings) : 0, opts.max_crossings);
  std::vector<Event> events;
  for (int c = 0; c < crossings; ++c) {
    const int sign = draw(rng, 2) ? 1 : -1;
    const std::string id = "x" + std::to_string(c + 1);
    events.push_back(Event::crossing(id, Role::over, sign));
    events.push_back(Event::crossing(id, Role::under, sign));
  }
  shuffle(events, rng);

  std::vector<int> signs;
  if (opts.degree && *opts.degree == 0) {
    for (int p = draw_in(rng, 0, opts.max_double_lines / 2); p > 0; --p) {
      signs.push_back(1);
      signs.push_back(-1);
    }
  } else if (opts.degree) {
    const int k = *opts.degree;
    const int need = std::abs(k);
    if (need > opts.max_double_lines) throw std::invalid_argument("degree not reachable with the double-line bound");
    for (int i = 0; i < need; ++i) signs.push_back(k > 0 ? 1 : -1);
    for (int p = draw_in(rng, 0, (opts.max_double_lines - need) / 2); p > 0; --p) {
      signs.push_back(1);
      signs.push_back(-1);
    }
  } else {
    const int lo = opts.nonzero_degree ? 1 : 0;
    if (opts.nonzero_degree && opts.max_double_lines < 1) throw std::invalid_argument("nonzero degree needs a double line");
    const int count = draw_in(rng, lo, opts.max_double_lines);
    int sum = 0;
    for (int i = 0; i < count; ++i) {
      signs.push_back(draw(rng, 2) ? 1 : -1);
      sum += signs.back();
    }
    if (opts.nonzero_degree && sum == 0) signs[0] = -signs[0];
  }
  shuffle(signs, rng);
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const std::size_t at = draw(rng, events.size() + 1);
    events.insert(events.begin() + static_cast<long>(at), Event::double_line("t" + std::to_string(i + 1), signs[i]));
  }
  MarkedGaussCode code;
  code.components.push_back(std::move(events));
  return code;
}

PlanarDiagram generate_random_diagram(std::uint64_t seed, const RandomDiagramOptions& opts) {
  std::mt19937_64 rng(seed);
  return realize_code(random_code(rng, opts));
}

}  // namespace knotlift
