#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace knotlift {

// Binding of a local rewrite pattern into a diagram: the direction, the
// node/edge ids the pattern is anchored at, and a variant selector.
// Text form: "fwd;id,id;variant" or "bwd;id;variant".
struct MoveSite {
  bool forward = true;
  std::vector<std::string> anchors;
  int variant = 0;

  bool operator==(const MoveSite&) const = default;
  std::string to_string() const;
  static MoveSite parse(std::string_view text);
};

}  // namespace knotlift
