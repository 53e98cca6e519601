#pragma once

#include <cstdint>

#include "tmset/core.hpp"
#include "tmset/fields.hpp"

namespace tmset {

// Filled-Julia approximation on a z-plane grid: a cell is true when the
// orbit of its center stays within the escape radius for every step of the
// root. The grid must cover the closed square [-R_e, R_e]^2.
struct julia_mask {
  grid_spec grid;
  std::vector<std::uint8_t> data;  // row-major, 0 or 1

  bool at(std::uint32_t row, std::uint32_t col) const {
    return data[static_cast<std::size_t>(row) * grid.cols + col] != 0;
  }
  std::uint64_t true_count() const;
};

julia_mask compute_julia_mask(const param_pair& pair, const template_root& root,
                              const grid_spec& z_grid, unsigned threads = 1);

enum class connectivity : std::uint8_t { four, eight };

// Number of connected components of true cells (union-find). Four-way
// connectivity by default; eight-way merges diagonal touches and is exposed
// for sensitivity checks only.
std::uint64_t component_count(const julia_mask& mask,
                              connectivity conn = connectivity::four);

// Per c1 cell: the component count of the filled-Julia approximation of
// (c0, c1) under the root, stored as a real. The z grid must cover
// [-R_e, R_e]^2 for the largest escape radius over the c1 grid.
scalar_field connectedness_field(complex c0, const grid_spec& c1_grid,
                                 const template_root& root, const grid_spec& z_grid,
                                 unsigned threads = 1,
                                 connectivity conn = connectivity::four);

}  // namespace tmset
