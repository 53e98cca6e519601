#pragma once

#include <cstdint>
#include <vector>

#include "tmset/core.hpp"
#include "tmset/msets.hpp"

namespace tmset {

// Rectangular complex-plane window sampled at cell centers. Row 0 is the top
// row (largest imaginary part); rows increase downward, columns rightward.
struct grid_spec {
  double re_min = -2.0;
  double re_max = 2.0;
  double im_min = -2.0;
  double im_max = 2.0;
  std::uint32_t cols = 1;
  std::uint32_t rows = 1;

  void validate() const;  // throws std::invalid_argument
  std::uint64_t cell_count() const noexcept {
    return static_cast<std::uint64_t>(cols) * rows;
  }
  complex cell_center(std::uint32_t row, std::uint32_t col) const noexcept {
    const double dre = (re_max - re_min) / cols;
    const double dim = (im_max - im_min) / rows;
    return {re_min + (col + 0.5) * dre, im_max - (row + 0.5) * dim};
  }
  // Closed square [-radius, radius]^2 inside the window?
  bool covers(double radius) const noexcept {
    return re_min <= -radius && re_max >= radius && im_min <= -radius && im_max >= radius;
  }
  // Largest |cell center| over the grid; attained at a corner cell.
  double max_center_modulus() const noexcept;

  friend bool operator==(const grid_spec&, const grid_spec&) = default;
};

struct scalar_field {
  grid_spec grid;
  std::vector<double> data;  // row-major, rows * cols

  double at(std::uint32_t row, std::uint32_t col) const {
    return data[static_cast<std::size_t>(row) * grid.cols + col];
  }
};

struct bool_field {
  grid_spec grid;
  std::vector<std::uint8_t> data;  // row-major, 0 or 1

  bool at(std::uint32_t row, std::uint32_t col) const {
    return data[static_cast<std::size_t>(row) * grid.cols + col] != 0;
  }
  std::uint64_t true_count() const;
};

// b-surface of the root hybrid set: data = phi^N(1) for the pair
// (c0, cell center), per cell.
scalar_field hybrid_field(complex c0, const grid_spec& grid, unsigned depth,
                          critical_mode mode, unsigned threads = 1,
                          const enumeration_limits& limits = {});

// Cells whose value is exactly 1 (the N-well-behaved region).
bool_field central_plateau(const scalar_field& field);

// Contour set: for each c0 cell, the maximum of phi^N(1) over every c1 cell.
scalar_field contour_field(const grid_spec& c0_grid, const grid_spec& c1_grid,
                           unsigned depth, critical_mode mode, unsigned threads = 1,
                           const enumeration_limits& limits = {});

enum class fixed_leg : std::uint8_t { c0, c1 };

// 2D multi-Mandelbrot slice: well-behavedness over the free parameter's grid
// with the other leg pinned. Computes the regular test; the multicritical
// and regular well-behaved sets coincide.
bool_field multi_slice(fixed_leg fixed, complex fixed_value, const grid_spec& grid,
                       unsigned depth, unsigned threads = 1,
                       const enumeration_limits& limits = {});

struct mm_voxel {
  double re_c0;
  double re_c1;
  double im_c1;
};

// 3D slice: Re(c0) sampled at `samples` cell-center positions along
// [re_c0_min, re_c0_max] with Im(c0) = c0_im; one 2D slice over c1 per
// sample. Voxels are emitted sample-major, then row-major.
std::vector<mm_voxel> multi_slice_line(double re_c0_min, double re_c0_max,
                                       std::uint32_t samples, double c0_im,
                                       const grid_spec& c1_grid, unsigned depth,
                                       unsigned threads = 1,
                                       const enumeration_limits& limits = {});

// Truncated classical Mandelbrot set: cell true iff the critical orbit of
// f_c stays within max(2,|c|) for `iters` steps.
bool_field classical_mandelbrot_mask(const grid_spec& grid, unsigned iters,
                                     unsigned threads = 1);

}  // namespace tmset
