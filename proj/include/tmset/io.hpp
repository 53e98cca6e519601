#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tmset/fields.hpp"
#include "tmset/julia.hpp"
#include "tmset/msets.hpp"
#include "tmset/templates.hpp"

namespace tmset {

// Locale-independent shortest-faithful rendering with up to 17 significant
// digits, so emitted values are byte-stable and round-trip exactly.
std::string format_double(double value);

// Writes to <path>.tmp in the target directory, then renames over path.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

std::string interval_set_csv(const dyadic_interval_set& set);          // depth,index
std::string step_function_csv(const step_function& f);                 // t,phi
std::string plateau_csv(const plateau_histogram& h);                   // length,count
std::string loglog_csv(const std::vector<std::pair<double, double>>& points);
std::string field_csv(const scalar_field& field);                      // re,im,value
std::string field_csv(const bool_field& field);
std::string field_csv(const julia_mask& mask);
std::string voxel_csv(const std::vector<mm_voxel>& voxels);            // re_c0,re_c1,im_c1

// P5 PGM, maxval 255; scalar values map through round(v*255) clamped,
// booleans to {0, 255}.
std::string field_pgm(const scalar_field& field);
std::string field_pgm(const bool_field& field);
std::string field_pgm(const julia_mask& mask);

// 8-bit grayscale PNG carrying exactly the PGM byte-per-pixel mapping. The
// IDAT stream uses stored (uncompressed) deflate blocks so the bytes do not
// depend on any compressor version.
std::string field_png(const scalar_field& field);
std::string field_png(const bool_field& field);
std::string field_png(const julia_mask& mask);

}  // namespace tmset
