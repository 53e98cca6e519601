#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "tmset/fields.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace tmset;

namespace {

// 1x1 grid whose single cell center lands exactly on (re, im) whenever the
// half-offsets are representable.
grid_spec point_grid(double re, double im) {
  return grid_spec{re - 0.5, re + 0.5, im - 0.5, im + 0.5, 1, 1};
}

}  // namespace

TEST_CASE("grid sampling uses cell centers, row 0 on top") {
  const grid_spec grid{-2.0, 2.0, -1.0, 1.0, 4, 2};
  CHECK(grid.cell_center(0, 0) == complex{-1.5, 0.5});
  CHECK(grid.cell_center(1, 3) == complex{1.5, -0.5});
  CHECK(grid.cell_count() == 8);
  CHECK(point_grid(-2.0, 0.0).cell_center(0, 0) == complex{-2.0, 0.0});
  CHECK(grid.max_center_modulus() == std::abs(complex{-1.5, 0.5}));
  CHECK_THROWS_AS((grid_spec{1, -1, 0, 1, 4, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((grid_spec{-1, 1, -1, 1, 0, 4}.validate()), std::invalid_argument);
}

TEST_CASE("hybrid field values") {
  SUBCASE("well-behaved cells reach exactly 1") {
    const auto field = hybrid_field({0, 0}, point_grid(0.0, 0.0), 12, critical_mode::regular);
    CHECK(field.data == std::vector<double>{1.0});
    const auto f2 = hybrid_field({0, 0}, point_grid(0.2, 0.0), 16, critical_mode::regular);
    CHECK(f2.data == std::vector<double>{1.0});
  }
  SUBCASE("partial cells match the oracle") {
    const auto field = hybrid_field({0, 0}, point_grid(3.0, 0.0), 8, critical_mode::regular);
    const double expected =
        static_cast<double>(oracle::fixed_map_members(0.0, 3.0, 8, false).size()) / 256.0;
    CHECK(field.data == std::vector<double>{expected});
    CHECK(expected == 2.0 / 256.0);
  }
}

TEST_CASE("central plateau keeps only exact ones") {
  scalar_field field;
  field.grid = grid_spec{0, 1, 0, 1, 3, 1};
  field.data = {1.0, 1.0 - std::ldexp(1.0, -8), 0.0};
  const auto mask = central_plateau(field);
  CHECK(mask.data == std::vector<std::uint8_t>{1, 0, 0});
  CHECK(mask.true_count() == 1);
}

TEST_CASE("contour field") {
  SUBCASE("c0 = 0 reaches 1 whenever the c1 grid contains the origin") {
    const grid_spec c1_grid{-1.0, 1.0, -1.0, 1.0, 3, 3};  // center cell at 0
    const auto field = contour_field(point_grid(0.0, 0.0), c1_grid, 8, critical_mode::regular);
    CHECK(field.data == std::vector<double>{1.0});
  }
  SUBCASE("far-out pairs with far-out c1 grids stay at 0") {
    const grid_spec c1_grid{2.5, 3.5, 2.5, 3.5, 4, 4};  // all moduli > 2
    const auto field = contour_field(point_grid(3.0, 3.0), c1_grid, 6, critical_mode::regular);
    CHECK(field.data == std::vector<double>{0.0});
    const auto multi = contour_field(point_grid(3.0, 3.0), c1_grid, 6,
                                     critical_mode::multicritical);
    CHECK(multi.data == std::vector<double>{0.0});
  }
  SUBCASE("the max over a 32x32 grid matches the oracle") {
    const grid_spec c1_grid{-2.0, 2.0, -2.0, 2.0, 32, 32};
    const auto field =
        contour_field(point_grid(-0.75, 0.0), c1_grid, 8, critical_mode::regular, 4);
    double expected = 0.0;
    for (std::uint32_t r = 0; r < 32; ++r) {
      for (std::uint32_t c = 0; c < 32; ++c) {
        const complex c1 = c1_grid.cell_center(r, c);
        const double v =
            static_cast<double>(oracle::fixed_map_members(-0.75, c1, 8, false).size()) / 256.0;
        expected = std::max(expected, v);
      }
    }
    CHECK(field.data == std::vector<double>{expected});
    CHECK(expected == 1.0);
  }
}

TEST_CASE("multi-Mandelbrot slices") {
  SUBCASE("fixed c0 = 0 contains c1 = 0.1") {
    const auto mask = multi_slice(fixed_leg::c0, {0, 0}, point_grid(0.1, 0.0), 10);
    CHECK(mask.data == std::vector<std::uint8_t>{1});
  }
  SUBCASE("fixed leg c1 mirrors the pair order") {
    const auto mask = multi_slice(fixed_leg::c1, {3, 0}, point_grid(0.0, 0.0), 4);
    // pair is (cell, 3): root "1000" escapes, so not well behaved
    CHECK(mask.data == std::vector<std::uint8_t>{0});
  }
  SUBCASE("far-out fixed c0 gives an empty slice") {
    const grid_spec c1_grid{2.5, 3.5, 2.5, 3.5, 3, 3};
    for (const unsigned depth : {2u, 6u}) {
      const auto mask = multi_slice(fixed_leg::c0, {3, 3}, c1_grid, depth);
      CHECK(mask.true_count() == 0);
    }
  }
  SUBCASE("the 3D line equals stacked 2D slices") {
    const grid_spec c1_grid{-2.0, 2.0, -2.0, 2.0, 8, 8};
    const std::uint32_t samples = 4;
    const auto voxels = multi_slice_line(-2.0, 1.0, samples, 0.0, c1_grid, 8);
    std::vector<mm_voxel> expected;
    for (std::uint32_t k = 0; k < samples; ++k) {
      const double re = -2.0 + (k + 0.5) * 3.0 / samples;
      const auto slice = multi_slice(fixed_leg::c0, {re, 0.0}, c1_grid, 8);
      for (std::uint32_t r = 0; r < 8; ++r) {
        for (std::uint32_t c = 0; c < 8; ++c) {
          if (!slice.at(r, c)) continue;
          const complex c1 = c1_grid.cell_center(r, c);
          expected.push_back({re, c1.real(), c1.imag()});
        }
      }
    }
    REQUIRE(voxels.size() == expected.size());
    CHECK(!voxels.empty());
    for (std::size_t i = 0; i < voxels.size(); ++i) {
      CHECK(voxels[i].re_c0 == expected[i].re_c0);
      CHECK(voxels[i].re_c1 == expected[i].re_c1);
      CHECK(voxels[i].im_c1 == expected[i].im_c1);
    }
  }
}

TEST_CASE("classical mask") {
  CHECK(classical_mandelbrot_mask(point_grid(0.0, 0.0), 20).data[0] == 1);
  CHECK(classical_mandelbrot_mask(point_grid(-1.0, 0.0), 20).data[0] == 1);
  CHECK(classical_mandelbrot_mask(point_grid(-2.0, 0.0), 20).data[0] == 1);
  CHECK(classical_mandelbrot_mask(point_grid(1.0, 0.0), 20).data[0] == 0);
  CHECK(classical_mandelbrot_mask(point_grid(0.3, 0.8), 20).data[0] == 0);
}

TEST_CASE("multicritical hybrid values never exceed regular ones") {
  const grid_spec grid{-2.0, 2.0, -2.0, 2.0, 12, 12};
  const complex c0{0.3, 0.5};
  const auto regular = hybrid_field(c0, grid, 7, critical_mode::regular, 4);
  const auto multi = hybrid_field(c0, grid, 7, critical_mode::multicritical, 4);
  for (std::size_t i = 0; i < regular.data.size(); ++i) {
    CHECK(multi.data[i] <= regular.data[i]);
  }
}

TEST_CASE("regular and multicritical central plateaux coincide") {
  const grid_spec grid{-2.0, 2.0, -2.0, 2.0, 16, 16};
  for (const complex c0 : {complex{0, 0}, complex{-0.75, 0}}) {
    const auto regular = central_plateau(hybrid_field(c0, grid, 6, critical_mode::regular, 4));
    const auto multi =
        central_plateau(hybrid_field(c0, grid, 6, critical_mode::multicritical, 4));
    CHECK(regular.data == multi.data);
  }
}

TEST_CASE("field values are non-increasing in depth") {
  const grid_spec grid{-2.0, 2.0, -2.0, 2.0, 10, 10};
  const auto shallow = hybrid_field({0, 0}, grid, 6, critical_mode::regular, 4);
  const auto deep = hybrid_field({0, 0}, grid, 9, critical_mode::regular, 4);
  for (std::size_t i = 0; i < shallow.data.size(); ++i) {
    CHECK(deep.data[i] <= shallow.data[i]);
  }
}

TEST_CASE("hybrid central plateau sits inside the classical mask") {
  const grid_spec grid{-2.0, 2.0, -2.0, 2.0, 32, 32};
  const unsigned depth = 10;
  const auto plateau = central_plateau(hybrid_field({0, 0}, grid, depth,
                                                    critical_mode::regular, 4));
  const auto classical = classical_mandelbrot_mask(grid, depth, 4);
  for (std::size_t i = 0; i < plateau.data.size(); ++i) {
    if (plateau.data[i]) CHECK(classical.data[i] == 1);
  }
}

TEST_CASE("field evaluation is deterministic across worker counts") {
  const grid_spec grid{-2.0, 2.0, -2.0, 2.0, 24, 24};
  const auto serial = hybrid_field({-0.117, -0.76}, grid, 8, critical_mode::regular, 1);
  const auto threaded = hybrid_field({-0.117, -0.76}, grid, 8, critical_mode::regular, 8);
  CHECK(serial.data == threaded.data);
  const auto contour_serial =
      contour_field(grid_spec{-1, 1, -1, 1, 6, 6}, grid_spec{-2, 2, -2, 2, 8, 8}, 6,
                    critical_mode::regular, 1);
  const auto contour_threaded =
      contour_field(grid_spec{-1, 1, -1, 1, 6, 6}, grid_spec{-2, 2, -2, 2, 8, 8}, 6,
                    critical_mode::regular, 8);
  CHECK(contour_serial.data == contour_threaded.data);
}

TEST_CASE("sweep budgets refuse oversized work") {
  enumeration_limits tight;
  tight.max_steps = 1000;
  const grid_spec grid{-2.0, 2.0, -2.0, 2.0, 64, 64};
  CHECK_THROWS_AS(hybrid_field({0, 0}, grid, 10, critical_mode::regular, 1, tight),
                  budget_error);
  CHECK_THROWS_AS(contour_field(grid, grid, 10, critical_mode::regular, 1, tight),
                  budget_error);
}
