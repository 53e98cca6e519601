#include "tmset/julia.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tmset/parallel.hpp"

namespace tmset {
namespace {

void check_coverage(const grid_spec& z_grid, double escape_radius) {
  if (!z_grid.covers(escape_radius))
    throw std::invalid_argument("z grid must cover [-R_e, R_e]^2 with R_e = " +
                                std::to_string(escape_radius));
}

struct union_find {
  std::vector<std::uint32_t> parent;

  explicit union_find(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    std::uint32_t root = x;
    while (parent[root] != root) root = parent[root];
    while (parent[x] != root) {
      const std::uint32_t next = parent[x];
      parent[x] = root;
      x = next;
    }
    return root;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

}  // namespace

std::uint64_t julia_mask::true_count() const {
  std::uint64_t n = 0;
  for (std::uint8_t v : data) n += v;
  return n;
}

julia_mask compute_julia_mask(const param_pair& pair, const template_root& root,
                              const grid_spec& z_grid, unsigned threads) {
  z_grid.validate();
  check_coverage(z_grid, pair.escape_radius());
  julia_mask mask{z_grid, std::vector<std::uint8_t>(z_grid.cell_count())};
  parallel_for(z_grid.rows, threads, [&](std::uint64_t r) {
    const std::uint32_t row = static_cast<std::uint32_t>(r);
    std::uint8_t* out = mask.data.data() + static_cast<std::size_t>(row) * z_grid.cols;
    for (std::uint32_t col = 0; col < z_grid.cols; ++col) {
      out[col] = iterate_root(pair, root, z_grid.cell_center(row, col)).survived() ? 1 : 0;
    }
  });
  return mask;
}

std::uint64_t component_count(const julia_mask& mask, connectivity conn) {
  const std::uint32_t rows = mask.grid.rows;
  const std::uint32_t cols = mask.grid.cols;
  if (mask.data.size() > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("mask too large for 32-bit labeling");
  union_find sets(mask.data.size());
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      const std::uint32_t i = r * cols + c;
      if (!mask.data[i]) continue;
      if (c > 0 && mask.data[i - 1]) sets.unite(i, i - 1);
      if (r > 0 && mask.data[i - cols]) sets.unite(i, i - cols);
      if (conn == connectivity::eight && r > 0) {
        if (c > 0 && mask.data[i - cols - 1]) sets.unite(i, i - cols - 1);
        if (c + 1 < cols && mask.data[i - cols + 1]) sets.unite(i, i - cols + 1);
      }
    }
  }
  std::uint64_t components = 0;
  for (std::uint32_t i = 0; i < mask.data.size(); ++i) {
    if (mask.data[i] && sets.find(i) == i) ++components;
  }
  return components;
}

scalar_field connectedness_field(complex c0, const grid_spec& c1_grid,
                                 const template_root& root, const grid_spec& z_grid,
                                 unsigned threads, connectivity conn) {
  c1_grid.validate();
  z_grid.validate();
  const double worst_radius =
      param_pair{c0, complex{c1_grid.max_center_modulus(), 0.0}}.escape_radius();
  check_coverage(z_grid, worst_radius);
  scalar_field field{c1_grid, std::vector<double>(c1_grid.cell_count())};
  parallel_for(c1_grid.cell_count(), threads, [&](std::uint64_t i) {
    const std::uint32_t row = static_cast<std::uint32_t>(i / c1_grid.cols);
    const std::uint32_t col = static_cast<std::uint32_t>(i % c1_grid.cols);
    const param_pair pair{c0, c1_grid.cell_center(row, col)};
    const julia_mask mask = compute_julia_mask(pair, root, z_grid, 1);
    field.data[i] = static_cast<double>(component_count(mask, conn));
  });
  return field;
}

}  // namespace tmset
