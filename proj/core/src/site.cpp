#include "knotlift/site.hpp"

#include <stdexcept>

namespace knotlift {

std::string MoveSite::to_string() const {
  std::string out = forward ? "fwd;" : "bwd;";
  for (std::size_t i = 0; i < anchors.size(); ++i) out += (i ? "," : "") + anchors[i];
  return out + ";" + std::to_string(variant);
}

MoveSite MoveSite::parse(std::string_view text) {
  auto first = text.find(';');
  auto second = first == std::string_view::npos ? first : text.find(';', first + 1);
  if (second == std::string_view::npos) throw std::invalid_argument("site must look like fwd;id,id;variant");
  MoveSite s;
  auto dir = text.substr(0, first);
  if (dir == "fwd") s.forward = true;
  else if (dir == "bwd") s.forward = false;
  else throw std::invalid_argument("site direction must be fwd or bwd");
  auto list = text.substr(first + 1, second - first - 1);
  std::size_t start = 0;
  while (start <= list.size() && !list.empty()) {
    auto comma = list.find(',', start);
    s.anchors.emplace_back(list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    s.variant = std::stoi(std::string(text.substr(second + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad site variant");
  }
  return s;
}

}  // namespace knotlift
