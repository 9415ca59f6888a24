#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "boxpack/core.hpp"

namespace boxpack {

/// Per-axis valid position lists indexing the space-indexed model. Positions
/// are kept in original length units; `unit` records the per-axis GCD scale.
struct Grid {
  std::array<std::vector<Length>, 3> positions;
  std::array<std::int64_t, 3> unit = {1, 1, 1};

  std::size_t size(int axis) const { return positions[static_cast<std::size_t>(axis)].size(); }
  std::size_t cell_count() const { return size(0) * size(1) * size(2); }
  bool empty() const { return cell_count() == 0; }
};

enum class GridMode { Unit, Gcd, Dp };

GridMode parse_grid_mode(const std::string& text);  // "unit" | "gcd" | "dp"

/// Distinct oriented side lengths that can lie along `axis` under the allowed
/// orientations of the instance's types, sorted ascending.
std::vector<Length> axis_lengths(const Instance& instance, int axis);

/// gcd of the container length and every alignable box length on one axis.
std::int64_t gcd_axis(Length container_len, const std::vector<Length>& lengths);

/// All positions reachable as sums of box lengths at which at least one box
/// still fits, sorted ascending. Matches the worked 1-D example
/// dp_positions(10, {3,4,6}) = [0, 3, 4, 6, 7].
std::vector<Length> dp_positions(Length container_len, const std::vector<Length>& lengths);

Grid build_grid(const Instance& instance, GridMode mode);

}  // namespace boxpack
