#include "tmset/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tmset/parallel.hpp"

namespace tmset {
namespace {

void check_sweep_budget(std::uint64_t cells, unsigned depth, critical_mode mode,
                        const enumeration_limits& limits) {
  const std::uint64_t estimate = checked_mul(cells, enumeration_step_bound(depth, mode));
  if (estimate > limits.max_steps)
    throw budget_error("estimated " + std::to_string(estimate) +
                           " orbit steps exceed the budget of " +
                           std::to_string(limits.max_steps),
                       estimate);
}

}  // namespace

void grid_spec::validate() const {
  if (!(re_min < re_max) || !(im_min < im_max))
    throw std::invalid_argument("grid bounds must satisfy re_min < re_max and im_min < im_max");
  if (cols == 0 || rows == 0)
    throw std::invalid_argument("grid must have at least one column and one row");
  if (!std::isfinite(re_min) || !std::isfinite(re_max) || !std::isfinite(im_min) ||
      !std::isfinite(im_max))
    throw std::invalid_argument("grid bounds must be finite");
}

double grid_spec::max_center_modulus() const noexcept {
  double worst = 0.0;
  for (std::uint32_t r : {std::uint32_t{0}, rows - 1}) {
    for (std::uint32_t c : {std::uint32_t{0}, cols - 1}) {
      worst = std::max(worst, std::abs(cell_center(r, c)));
    }
  }
  return worst;
}

std::uint64_t bool_field::true_count() const {
  std::uint64_t n = 0;
  for (std::uint8_t v : data) n += v;
  return n;
}

scalar_field hybrid_field(complex c0, const grid_spec& grid, unsigned depth,
                          critical_mode mode, unsigned threads,
                          const enumeration_limits& limits) {
  grid.validate();
  check_sweep_budget(grid.cell_count(), depth, mode, limits);
  scalar_field field{grid, std::vector<double>(grid.cell_count())};
  parallel_for(grid.cell_count(), threads, [&](std::uint64_t i) {
    const std::uint32_t row = static_cast<std::uint32_t>(i / grid.cols);
    const std::uint32_t col = static_cast<std::uint32_t>(i % grid.cols);
    const param_pair pair{c0, grid.cell_center(row, col)};
    field.data[i] = full_root_value(pair, depth, mode, 1, limits);
  });
  return field;
}

bool_field central_plateau(const scalar_field& field) {
  bool_field out{field.grid, std::vector<std::uint8_t>(field.data.size())};
  for (std::size_t i = 0; i < field.data.size(); ++i) {
    out.data[i] = field.data[i] == 1.0 ? 1 : 0;
  }
  return out;
}

scalar_field contour_field(const grid_spec& c0_grid, const grid_spec& c1_grid,
                           unsigned depth, critical_mode mode, unsigned threads,
                           const enumeration_limits& limits) {
  c0_grid.validate();
  c1_grid.validate();
  check_sweep_budget(checked_mul(c0_grid.cell_count(), c1_grid.cell_count()), depth, mode,
                     limits);
  scalar_field field{c0_grid, std::vector<double>(c0_grid.cell_count())};
  parallel_for(c0_grid.cell_count(), threads, [&](std::uint64_t i) {
    const std::uint32_t row = static_cast<std::uint32_t>(i / c0_grid.cols);
    const std::uint32_t col = static_cast<std::uint32_t>(i % c0_grid.cols);
    const complex c0 = c0_grid.cell_center(row, col);
    double best = 0.0;
    for (std::uint32_t r1 = 0; r1 < c1_grid.rows; ++r1) {
      for (std::uint32_t q1 = 0; q1 < c1_grid.cols; ++q1) {
        const param_pair pair{c0, c1_grid.cell_center(r1, q1)};
        best = std::max(best, full_root_value(pair, depth, mode, 1, limits));
        if (best == 1.0) break;  // 1 is the maximum possible value
      }
      if (best == 1.0) break;
    }
    field.data[i] = best;
  });
  return field;
}

bool_field multi_slice(fixed_leg fixed, complex fixed_value, const grid_spec& grid,
                       unsigned depth, unsigned threads, const enumeration_limits& limits) {
  grid.validate();
  check_sweep_budget(grid.cell_count(), depth, critical_mode::regular, limits);
  bool_field field{grid, std::vector<std::uint8_t>(grid.cell_count())};
  parallel_for(grid.cell_count(), threads, [&](std::uint64_t i) {
    const std::uint32_t row = static_cast<std::uint32_t>(i / grid.cols);
    const std::uint32_t col = static_cast<std::uint32_t>(i % grid.cols);
    const complex free_value = grid.cell_center(row, col);
    const param_pair pair = fixed == fixed_leg::c0 ? param_pair{fixed_value, free_value}
                                                   : param_pair{free_value, fixed_value};
    field.data[i] = is_well_behaved(pair, depth, critical_mode::regular, 1, limits) ? 1 : 0;
  });
  return field;
}

std::vector<mm_voxel> multi_slice_line(double re_c0_min, double re_c0_max,
                                       std::uint32_t samples, double c0_im,
                                       const grid_spec& c1_grid, unsigned depth,
                                       unsigned threads, const enumeration_limits& limits) {
  if (!(re_c0_min < re_c0_max)) throw std::invalid_argument("re range must be increasing");
  if (samples == 0) throw std::invalid_argument("need at least one c0 sample");
  check_sweep_budget(checked_mul(samples, c1_grid.cell_count()), depth,
                     critical_mode::regular, limits);
  std::vector<mm_voxel> voxels;
  for (std::uint32_t k = 0; k < samples; ++k) {
    const double re_c0 = re_c0_min + (k + 0.5) * (re_c0_max - re_c0_min) / samples;
    const bool_field slice =
        multi_slice(fixed_leg::c0, complex{re_c0, c0_im}, c1_grid, depth, threads, limits);
    for (std::uint32_t r = 0; r < c1_grid.rows; ++r) {
      for (std::uint32_t c = 0; c < c1_grid.cols; ++c) {
        if (!slice.at(r, c)) continue;
        const complex c1 = c1_grid.cell_center(r, c);
        voxels.push_back(mm_voxel{re_c0, c1.real(), c1.imag()});
      }
    }
  }
  return voxels;
}

bool_field classical_mandelbrot_mask(const grid_spec& grid, unsigned iters, unsigned threads) {
  grid.validate();
  const template_root root = template_root::zeros(iters);
  bool_field field{grid, std::vector<std::uint8_t>(grid.cell_count())};
  parallel_for(grid.cell_count(), threads, [&](std::uint64_t i) {
    const std::uint32_t row = static_cast<std::uint32_t>(i / grid.cols);
    const std::uint32_t col = static_cast<std::uint32_t>(i % grid.cols);
    const complex c = grid.cell_center(row, col);
    field.data[i] = survives(param_pair{c, c}, root) ? 1 : 0;
  });
  return field;
}

}  // namespace tmset
