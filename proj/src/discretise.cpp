#include "boxpack/discretise.hpp"

#include <algorithm>
#include <numeric>

namespace boxpack {

namespace {

// Reachability arrays are one byte per unit of container length.
constexpr Length kMaxDpLength = Length(1) << 28;

}  // namespace

GridMode parse_grid_mode(const std::string& text) {
  if (text == "unit") return GridMode::Unit;
  if (text == "gcd") return GridMode::Gcd;
  if (text == "dp") return GridMode::Dp;
  throw Error("unknown discretisation mode '" + text + "'");
}

std::vector<Length> axis_lengths(const Instance& instance, int axis) {
  std::vector<Length> out;
  for (const BoxType& t : instance.types)
    for (const auto& [o, dims] : allowed_orientations(t)) out.push_back(dims[static_cast<std::size_t>(axis)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t gcd_axis(Length container_len, const std::vector<Length>& lengths) {
  std::int64_t g = container_len;
  for (Length l : lengths) g = std::gcd(g, l);
  return g;
}

std::vector<Length> dp_positions(Length container_len, const std::vector<Length>& lengths) {
  if (lengths.empty()) throw Error("dp_positions needs at least one length");
  if (container_len > kMaxDpLength) throw Error("axis too long for dp discretisation");
  Length min_len = *std::min_element(lengths.begin(), lengths.end());

  // Reachable sums of lengths up to the container length, then filtered to
  // positions where at least one box still fits.
  std::vector<char> reach(static_cast<std::size_t>(container_len) + 1, 0);
  reach[0] = 1;
  for (Length p = 0; p <= container_len; ++p) {
    if (!reach[static_cast<std::size_t>(p)]) continue;
    for (Length s : lengths) {
      Length q = p + s;
      if (q <= container_len) reach[static_cast<std::size_t>(q)] = 1;
    }
  }
  std::vector<Length> out;
  for (Length p = 0; p + min_len <= container_len; ++p)
    if (reach[static_cast<std::size_t>(p)]) out.push_back(p);
  return out;
}

Grid build_grid(const Instance& instance, GridMode mode) {
  Grid grid;
  for (int axis = 0; axis < 3; ++axis) {
    Length d = instance.container[static_cast<std::size_t>(axis)];
    std::vector<Length> lengths = axis_lengths(instance, axis);
    Length min_len = *std::min_element(lengths.begin(), lengths.end());
    std::int64_t g = gcd_axis(d, lengths);
    grid.unit[static_cast<std::size_t>(axis)] = g;
    auto& pos = grid.positions[static_cast<std::size_t>(axis)];
    switch (mode) {
      case GridMode::Unit:
        for (Length p = 0; p + min_len <= d; ++p) pos.push_back(p);
        break;
      case GridMode::Gcd:
        for (Length p = 0; p + min_len <= d; p += g) pos.push_back(p);
        break;
      case GridMode::Dp:
        pos = dp_positions(d, lengths);
        break;
    }
  }
  return grid;
}

}  // namespace boxpack
