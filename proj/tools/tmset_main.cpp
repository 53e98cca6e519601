// Command-line front end: subcommand dispatch, validation, budget
// enforcement, atomic file emission and the one-line JSON summary.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tmset/core.hpp"
#include "tmset/fields.hpp"
#include "tmset/io.hpp"
#include "tmset/julia.hpp"
#include "tmset/msets.hpp"
#include "tmset/templates.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::uint64_t k_default_budget = 10'000'000'000ull;

double parse_double_token(std::string_view token, const std::string& what) {
  double value{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last)
    throw std::invalid_argument("cannot parse '" + std::string(token) + "' in " + what);
  return value;
}

std::uint64_t parse_uint_token(std::string_view token, const std::string& what) {
  std::uint64_t value{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last)
    throw std::invalid_argument("cannot parse '" + std::string(token) + "' in " + what);
  return value;
}

std::vector<std::string_view> split_fields(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
}

// Complex literals are "re,im"; no 'i' syntax, locale-proof.
tmset::complex parse_complex(const std::string& text) {
  const auto fields = split_fields(text);
  if (fields.size() != 2)
    throw std::invalid_argument("complex value must be 're,im', got '" + text + "'");
  const double re = parse_double_token(fields[0], "complex value");
  const double im = parse_double_token(fields[1], "complex value");
  if (!std::isfinite(re) || !std::isfinite(im))
    throw std::invalid_argument("complex components must be finite, got '" + text + "'");
  return {re, im};
}

// Grid literals are "re_min,re_max,im_min,im_max,cols,rows".
tmset::grid_spec parse_grid(const std::string& text) {
  const auto fields = split_fields(text);
  if (fields.size() != 6)
    throw std::invalid_argument("grid must be 're_min,re_max,im_min,im_max,cols,rows'");
  tmset::grid_spec grid;
  grid.re_min = parse_double_token(fields[0], "grid");
  grid.re_max = parse_double_token(fields[1], "grid");
  grid.im_min = parse_double_token(fields[2], "grid");
  grid.im_max = parse_double_token(fields[3], "grid");
  const std::uint64_t cols = parse_uint_token(fields[4], "grid");
  const std::uint64_t rows = parse_uint_token(fields[5], "grid");
  if (cols == 0 || rows == 0 || cols > 0xffffffffull || rows > 0xffffffffull)
    throw std::invalid_argument("grid cols/rows out of range");
  grid.cols = static_cast<std::uint32_t>(cols);
  grid.rows = static_cast<std::uint32_t>(rows);
  grid.validate();
  return grid;
}

tmset::critical_mode parse_mode(const std::string& text) {
  if (text == "regular") return tmset::critical_mode::regular;
  if (text == "multicritical") return tmset::critical_mode::multicritical;
  throw std::invalid_argument("--mode must be 'regular' or 'multicritical'");
}

enum class out_format { csv, json_doc, pgm, png, txt };

out_format resolve_format(const std::string& requested, const fs::path& out,
                          std::initializer_list<out_format> allowed) {
  out_format fmt;
  std::string name = requested;
  if (name == "auto") {
    std::string ext = out.extension().string();
    for (char& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (ext == ".csv")
      name = "csv";
    else if (ext == ".json")
      name = "json";
    else if (ext == ".pgm")
      name = "pgm";
    else if (ext == ".png")
      name = "png";
    else if (ext == ".txt")
      name = "txt";
    else
      throw std::invalid_argument("cannot infer format from extension '" + ext +
                                  "'; pass --format");
  }
  if (name == "csv")
    fmt = out_format::csv;
  else if (name == "json")
    fmt = out_format::json_doc;
  else if (name == "pgm")
    fmt = out_format::pgm;
  else if (name == "png")
    fmt = out_format::png;
  else if (name == "txt")
    fmt = out_format::txt;
  else
    throw std::invalid_argument("unknown format '" + name + "'");
  for (out_format f : allowed) {
    if (f == fmt) return fmt;
  }
  throw std::invalid_argument("format '" + name + "' is not supported by this subcommand");
}

json grid_json(const tmset::grid_spec& g) {
  return json{{"re_min", g.re_min}, {"re_max", g.re_max}, {"im_min", g.im_min},
              {"im_max", g.im_max}, {"cols", g.cols},     {"rows", g.rows}};
}

template <typename Field>
json field_json(const Field& field) {
  return json{{"grid", grid_json(field.grid)}, {"data", field.data}};
}

void enforce_budget(std::uint64_t estimate, std::uint64_t budget) {
  if (estimate > budget)
    throw tmset::budget_error("estimated " + std::to_string(estimate) +
                                  " orbit steps exceed --budget " + std::to_string(budget),
                              estimate);
}

// Options shared by every computing subcommand.
struct common_opts {
  std::string out;
  std::string format = "auto";
  unsigned threads = 0;  // 0 = auto
  std::uint64_t budget = k_default_budget;

  tmset::enumeration_limits limits() const {
    return tmset::enumeration_limits{tmset::k_max_enum_depth, budget};
  }
};

void add_common(CLI::App* cmd, common_opts& opts) {
  cmd->add_option("--out", opts.out, "output file path")->required();
  cmd->add_option("--format", opts.format, "csv|json|pgm|png|txt (default: by extension)");
  cmd->add_option("--threads", opts.threads, "worker threads, 0 = auto")
      ->envname("TEMPLATE_MSET_THREADS");
  cmd->add_option("--budget", opts.budget,
                  "max estimated orbit-step evaluations (default 1e10)");
}

struct summary_printer {
  std::string subcommand;
  json params = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(double headline, const std::vector<std::string>& outputs) const {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    const json summary{{"subcommand", subcommand},
                       {"params", params},
                       {"elapsed_ms", elapsed},
                       {"output_files", outputs},
                       {"headline_value", headline}};
    std::cout << summary.dump() << "\n";
  }
};

void write_output(const std::string& path, const std::string& bytes) {
  tmset::write_file_atomic(fs::path(path), bytes);
}

// ---- subcommand implementations ------------------------------------------

struct set_opts {
  std::string c0, c1;
  unsigned depth = 0;
  std::string mode = "regular";
  common_opts common;
};

void run_fixed_map(const set_opts& o) {
  summary_printer sum{"fixed-map"};
  const tmset::param_pair pair{parse_complex(o.c0), parse_complex(o.c1)};
  const tmset::critical_mode mode = parse_mode(o.mode);
  enforce_budget(tmset::enumeration_step_bound(o.depth, mode), o.common.budget);
  const auto set = tmset::fixed_map_set(pair, o.depth, mode, o.common.threads,
                                        o.common.limits());
  const out_format fmt =
      resolve_format(o.common.format, o.common.out, {out_format::csv, out_format::json_doc});
  if (fmt == out_format::csv) {
    write_output(o.common.out, tmset::interval_set_csv(set));
  } else {
    write_output(o.common.out,
                 json{{"depth", set.depth()}, {"members", set.members()}}.dump());
  }
  sum.params = {{"c0", o.c0}, {"c1", o.c1}, {"depth", o.depth}, {"mode", o.mode}};
  sum.emit(set.measure(), {o.common.out});
}

void run_accum(const set_opts& o) {
  summary_printer sum{"accum"};
  const tmset::param_pair pair{parse_complex(o.c0), parse_complex(o.c1)};
  const tmset::critical_mode mode = parse_mode(o.mode);
  enforce_budget(tmset::enumeration_step_bound(o.depth, mode), o.common.budget);
  const auto set = tmset::fixed_map_set(pair, o.depth, mode, o.common.threads,
                                        o.common.limits());
  const auto phi = tmset::accumulation_map(set);
  const out_format fmt =
      resolve_format(o.common.format, o.common.out, {out_format::csv, out_format::json_doc});
  if (fmt == out_format::csv) {
    write_output(o.common.out, tmset::step_function_csv(phi));
  } else {
    write_output(o.common.out, json{{"depth", phi.depth}, {"values", phi.values}}.dump());
  }
  sum.params = {{"c0", o.c0}, {"c1", o.c1}, {"depth", o.depth}, {"mode", o.mode}};
  sum.emit(phi.full_value(), {o.common.out});
}

void run_plateaus(const set_opts& o) {
  summary_printer sum{"plateaus"};
  const tmset::param_pair pair{parse_complex(o.c0), parse_complex(o.c1)};
  const tmset::critical_mode mode = parse_mode(o.mode);
  enforce_budget(tmset::enumeration_step_bound(o.depth, mode), o.common.budget);
  const auto set = tmset::fixed_map_set(pair, o.depth, mode, o.common.threads,
                                        o.common.limits());
  const auto hist = tmset::count_plateaus(tmset::accumulation_map(set));
  const out_format fmt =
      resolve_format(o.common.format, o.common.out, {out_format::csv, out_format::json_doc});
  if (fmt == out_format::csv) {
    write_output(o.common.out, tmset::plateau_csv(hist));
  } else {
    json counts = json::array();
    for (const auto& [len, cnt] : hist.counts) counts.push_back(json::array({len, cnt}));
    write_output(o.common.out, json{{"depth", hist.depth}, {"counts", counts}}.dump());
  }
  sum.params = {{"c0", o.c0}, {"c1", o.c1}, {"depth", o.depth}, {"mode", o.mode}};
  sum.emit(static_cast<double>(hist.total_plateaus()), {o.common.out});
}

struct loglog_opts {
  set_opts set;
  bool include_zero_counts = false;
};

void run_loglog(const loglog_opts& o) {
  summary_printer sum{"loglog"};
  const tmset::param_pair pair{parse_complex(o.set.c0), parse_complex(o.set.c1)};
  const tmset::critical_mode mode = parse_mode(o.set.mode);
  enforce_budget(tmset::enumeration_step_bound(o.set.depth, mode), o.set.common.budget);
  const auto set = tmset::fixed_map_set(pair, o.set.depth, mode, o.set.common.threads,
                                        o.set.common.limits());
  const auto hist = tmset::count_plateaus(tmset::accumulation_map(set));
  const auto points = tmset::loglog_points(hist, o.include_zero_counts);
  const out_format fmt = resolve_format(o.set.common.format, o.set.common.out,
                                        {out_format::csv, out_format::json_doc});
  if (fmt == out_format::csv) {
    write_output(o.set.common.out, tmset::loglog_csv(points));
  } else {
    json arr = json::array();
    for (const auto& [x, y] : points) arr.push_back(json::array({x, y}));
    write_output(o.set.common.out, arr.dump());
  }
  sum.params = {{"c0", o.set.c0},
                {"c1", o.set.c1},
                {"depth", o.set.depth},
                {"mode", o.set.mode},
                {"include_zero_counts", o.include_zero_counts}};
  sum.emit(static_cast<double>(points.size()), {o.set.common.out});
}

struct hybrid_opts {
  std::string c0;
  std::string grid;
  unsigned depth = 20;
  std::string mode = "regular";
  common_opts common;
};

template <typename Field>
void write_field(const Field& field, const common_opts& common) {
  const out_format fmt =
      resolve_format(common.format, common.out,
                     {out_format::csv, out_format::json_doc, out_format::pgm, out_format::png});
  switch (fmt) {
    case out_format::csv: write_output(common.out, tmset::field_csv(field)); break;
    case out_format::json_doc: write_output(common.out, field_json(field).dump()); break;
    case out_format::pgm: write_output(common.out, tmset::field_pgm(field)); break;
    case out_format::png: write_output(common.out, tmset::field_png(field)); break;
    default: throw std::invalid_argument("unsupported field format");
  }
}

void run_hybrid(const hybrid_opts& o) {
  summary_printer sum{"hybrid"};
  const tmset::complex c0 = parse_complex(o.c0);
  const tmset::grid_spec grid = parse_grid(o.grid);
  const tmset::critical_mode mode = parse_mode(o.mode);
  enforce_budget(
      tmset::checked_mul(grid.cell_count(), tmset::enumeration_step_bound(o.depth, mode)),
      o.common.budget);
  const auto field =
      tmset::hybrid_field(c0, grid, o.depth, mode, o.common.threads, o.common.limits());
  write_field(field, o.common);
  double peak = 0.0;
  for (double v : field.data) peak = std::max(peak, v);
  sum.params = {{"c0", o.c0}, {"grid", o.grid}, {"depth", o.depth}, {"mode", o.mode}};
  sum.emit(peak, {o.common.out});
}

struct contour_opts {
  std::string c0_grid;
  std::string c1_grid;
  unsigned depth = 8;
  std::string mode = "regular";
  common_opts common;
};

void run_contour(const contour_opts& o) {
  summary_printer sum{"contour"};
  const tmset::grid_spec c0_grid = parse_grid(o.c0_grid);
  const tmset::grid_spec c1_grid = parse_grid(o.c1_grid);
  const tmset::critical_mode mode = parse_mode(o.mode);
  enforce_budget(
      tmset::checked_mul(tmset::checked_mul(c0_grid.cell_count(), c1_grid.cell_count()),
                         tmset::enumeration_step_bound(o.depth, mode)),
      o.common.budget);
  const auto field = tmset::contour_field(c0_grid, c1_grid, o.depth, mode, o.common.threads,
                                          o.common.limits());
  write_field(field, o.common);
  double peak = 0.0;
  for (double v : field.data) peak = std::max(peak, v);
  sum.params = {{"grid_c0", o.c0_grid},
                {"grid_c1", o.c1_grid},
                {"depth", o.depth},
                {"mode", o.mode}};
  sum.emit(peak, {o.common.out});
}

struct multi_opts {
  std::string fix;         // "c0" or "c1" for the 2D form
  std::string value;       // pinned complex value
  std::string c0_re_range; // "lo,hi" for the 3D form
  unsigned c0_samples = 16;
  double c0_im = 0.0;
  std::string grid;
  unsigned depth = 8;
  common_opts common;
};

void run_multi(const multi_opts& o) {
  summary_printer sum{"multi"};
  const tmset::grid_spec grid = parse_grid(o.grid);
  const bool line_mode = !o.c0_re_range.empty();
  if (line_mode == !o.fix.empty())
    throw std::invalid_argument("pass either --fix/--value (2D) or --c0-re-range (3D)");
  if (line_mode) {
    const auto fields = split_fields(o.c0_re_range);
    if (fields.size() != 2) throw std::invalid_argument("--c0-re-range must be 'lo,hi'");
    const double lo = parse_double_token(fields[0], "--c0-re-range");
    const double hi = parse_double_token(fields[1], "--c0-re-range");
    if (!std::isfinite(o.c0_im)) throw std::invalid_argument("--c0-im must be finite");
    enforce_budget(
        tmset::checked_mul(
            tmset::checked_mul(o.c0_samples, grid.cell_count()),
            tmset::enumeration_step_bound(o.depth, tmset::critical_mode::regular)),
        o.common.budget);
    const auto voxels = tmset::multi_slice_line(lo, hi, o.c0_samples, o.c0_im, grid, o.depth,
                                                o.common.threads, o.common.limits());
    const out_format fmt = resolve_format(o.common.format, o.common.out,
                                          {out_format::csv, out_format::json_doc});
    if (fmt == out_format::csv) {
      write_output(o.common.out, tmset::voxel_csv(voxels));
    } else {
      json arr = json::array();
      for (const auto& v : voxels) arr.push_back(json::array({v.re_c0, v.re_c1, v.im_c1}));
      write_output(o.common.out, arr.dump());
    }
    sum.params = {{"c0_re_range", o.c0_re_range},
                  {"c0_samples", o.c0_samples},
                  {"c0_im", o.c0_im},
                  {"grid", o.grid},
                  {"depth", o.depth}};
    sum.emit(static_cast<double>(voxels.size()), {o.common.out});
    return;
  }
  tmset::fixed_leg leg;
  if (o.fix == "c0")
    leg = tmset::fixed_leg::c0;
  else if (o.fix == "c1")
    leg = tmset::fixed_leg::c1;
  else
    throw std::invalid_argument("--fix must be 'c0' or 'c1'");
  enforce_budget(
      tmset::checked_mul(grid.cell_count(),
                         tmset::enumeration_step_bound(o.depth, tmset::critical_mode::regular)),
      o.common.budget);
  const auto field = tmset::multi_slice(leg, parse_complex(o.value), grid, o.depth,
                                        o.common.threads, o.common.limits());
  write_field(field, o.common);
  sum.params = {{"fix", o.fix}, {"value", o.value}, {"grid", o.grid}, {"depth", o.depth}};
  sum.emit(static_cast<double>(field.true_count()), {o.common.out});
}

struct classical_opts {
  std::string grid;
  unsigned iters = 20;
  common_opts common;
};

void run_classical(const classical_opts& o) {
  summary_printer sum{"classical"};
  const tmset::grid_spec grid = parse_grid(o.grid);
  enforce_budget(tmset::checked_mul(grid.cell_count(), o.iters), o.common.budget);
  const auto field = tmset::classical_mandelbrot_mask(grid, o.iters, o.common.threads);
  write_field(field, o.common);
  sum.params = {{"grid", o.grid}, {"iters", o.iters}};
  sum.emit(static_cast<double>(field.true_count()), {o.common.out});
}

struct julia_mask_opts {
  std::string c0, c1;
  std::string root;
  std::string z_grid;  // optional; default derived from R_e
  common_opts common;
};

tmset::grid_spec default_z_grid(double escape_radius) {
  tmset::grid_spec grid;
  grid.re_min = grid.im_min = -escape_radius - 0.1;
  grid.re_max = grid.im_max = escape_radius + 0.1;
  grid.cols = grid.rows = 501;
  return grid;
}

void run_julia_mask(const julia_mask_opts& o) {
  summary_printer sum{"julia-mask"};
  const tmset::param_pair pair{parse_complex(o.c0), parse_complex(o.c1)};
  const tmset::template_root root = tmset::template_root::parse(o.root);
  const tmset::grid_spec z_grid =
      o.z_grid.empty() ? default_z_grid(pair.escape_radius()) : parse_grid(o.z_grid);
  enforce_budget(tmset::checked_mul(z_grid.cell_count(), root.size()), o.common.budget);
  const auto mask = tmset::compute_julia_mask(pair, root, z_grid, o.common.threads);
  const out_format fmt =
      resolve_format(o.common.format, o.common.out,
                     {out_format::csv, out_format::json_doc, out_format::pgm, out_format::png});
  switch (fmt) {
    case out_format::csv: write_output(o.common.out, tmset::field_csv(mask)); break;
    case out_format::json_doc: write_output(o.common.out, field_json(mask).dump()); break;
    case out_format::pgm: write_output(o.common.out, tmset::field_pgm(mask)); break;
    case out_format::png: write_output(o.common.out, tmset::field_png(mask)); break;
    default: break;
  }
  sum.params = {{"c0", o.c0},
                {"c1", o.c1},
                {"root", o.root},
                {"z_grid", o.z_grid.empty() ? "default" : o.z_grid}};
  sum.emit(static_cast<double>(mask.true_count()), {o.common.out});
}

struct julia_connect_opts {
  std::string c0;
  std::string c1_grid;
  std::string root;
  std::string z_grid;  // optional
  unsigned connectivity_n = 4;
  common_opts common;
};

void run_julia_connect(const julia_connect_opts& o) {
  summary_printer sum{"julia-connect"};
  const tmset::complex c0 = parse_complex(o.c0);
  const tmset::grid_spec c1_grid = parse_grid(o.c1_grid);
  const tmset::template_root root = tmset::template_root::parse(o.root);
  if (o.connectivity_n != 4 && o.connectivity_n != 8)
    throw std::invalid_argument("--connectivity must be 4 or 8");
  const tmset::connectivity conn = o.connectivity_n == 4 ? tmset::connectivity::four
                                                         : tmset::connectivity::eight;
  const double worst_radius =
      tmset::param_pair{c0, tmset::complex{c1_grid.max_center_modulus(), 0.0}}.escape_radius();
  const tmset::grid_spec z_grid =
      o.z_grid.empty() ? default_z_grid(worst_radius) : parse_grid(o.z_grid);
  enforce_budget(
      tmset::checked_mul(tmset::checked_mul(c1_grid.cell_count(), z_grid.cell_count()),
                         root.size()),
      o.common.budget);
  const auto field =
      tmset::connectedness_field(c0, c1_grid, root, z_grid, o.common.threads, conn);
  const out_format fmt =
      resolve_format(o.common.format, o.common.out, {out_format::csv, out_format::json_doc});
  if (fmt == out_format::csv) {
    write_output(o.common.out, tmset::field_csv(field));
  } else {
    write_output(o.common.out, field_json(field).dump());
  }
  std::uint64_t locus_cells = 0;
  for (double v : field.data) locus_cells += v == 1.0 ? 1 : 0;
  sum.params = {{"c0", o.c0},
                {"c1_grid", o.c1_grid},
                {"root", o.root},
                {"z_grid", o.z_grid.empty() ? "default" : o.z_grid},
                {"connectivity", o.connectivity_n}};
  sum.emit(static_cast<double>(locus_cells), {o.common.out});
}

struct random_root_opts {
  double p = 0.5;
  std::uint64_t len = 50;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "auto";
  unsigned threads = 0;                     // accepted, unused
  std::uint64_t budget = k_default_budget;  // accepted, unused
};

void run_random_root(const random_root_opts& o) {
  summary_printer sum{"random-root"};
  const tmset::template_root root =
      tmset::random_root(tmset::random_template_spec{o.p, o.len, o.seed});
  std::vector<std::string> outputs;
  if (!o.out.empty()) {
    const out_format fmt =
        resolve_format(o.format, o.out, {out_format::txt, out_format::json_doc});
    if (fmt == out_format::txt) {
      write_output(o.out, root.str() + "\n");
    } else {
      write_output(o.out, json{{"bits", root.str()},
                               {"length", root.size()},
                               {"psi", tmset::psi_value(root)}}
                              .dump());
    }
    outputs.push_back(o.out);
  }
  sum.params = {{"p", o.p}, {"len", o.len}, {"seed", o.seed}, {"bits", root.str()}};
  sum.emit(tmset::psi_value(root), outputs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"template-iteration Mandelbrot engine"};
  app.require_subcommand(1);

  set_opts fixed_map_o, accum_o, plateaus_o;
  loglog_opts loglog_o;
  hybrid_opts hybrid_o;
  contour_opts contour_o;
  multi_opts multi_o;
  classical_opts classical_o;
  julia_mask_opts julia_mask_o;
  julia_connect_opts julia_connect_o;
  random_root_opts random_root_o;

  const auto depth_range = CLI::Range(0u, tmset::k_max_enum_depth);
  const auto add_set_opts = [&](CLI::App* cmd, set_opts& o) {
    cmd->add_option("--c0", o.c0, "c0 as 're,im'")->required();
    cmd->add_option("--c1", o.c1, "c1 as 're,im'")->required();
    cmd->add_option("--depth", o.depth, "root length N (<= 30)")
        ->required()
        ->check(depth_range);
    cmd->add_option("--mode", o.mode, "regular|multicritical");
    add_common(cmd, o.common);
  };

  add_set_opts(app.add_subcommand("fixed-map", "enumerate the N-rooted fixed-map set"),
               fixed_map_o);
  add_set_opts(app.add_subcommand("accum", "accumulation map phi^N"), accum_o);
  add_set_opts(app.add_subcommand("plateaus", "plateau-length histogram"), plateaus_o);
  {
    CLI::App* cmd = app.add_subcommand("loglog", "log-log plateau distribution points");
    add_set_opts(cmd, loglog_o.set);
    cmd->add_flag("--include-zero-counts", loglog_o.include_zero_counts,
                  "emit every length in [1, 2^N], zero counts as log(1)=0");
  }
  {
    CLI::App* cmd = app.add_subcommand("hybrid", "hybrid set b-values over a c1 grid");
    cmd->add_option("--c0", hybrid_o.c0, "c0 as 're,im'")->required();
    cmd->add_option("--grid", hybrid_o.grid, "c1 grid")->required();
    cmd->add_option("--depth", hybrid_o.depth, "root length N (default 20)")->check(depth_range);
    cmd->add_option("--mode", hybrid_o.mode, "regular|multicritical");
    add_common(cmd, hybrid_o.common);
  }
  {
    CLI::App* cmd = app.add_subcommand("contour", "contour set over a c0 grid");
    cmd->add_option("--grid-c0", contour_o.c0_grid, "c0 grid")->required();
    cmd->add_option("--grid-c1", contour_o.c1_grid, "c1 grid swept for the max")->required();
    cmd->add_option("--depth", contour_o.depth, "root length N (default 8)")->check(depth_range);
    cmd->add_option("--mode", contour_o.mode, "regular|multicritical");
    add_common(cmd, contour_o.common);
  }
  {
    CLI::App* cmd = app.add_subcommand("multi", "multi-Mandelbrot slices");
    cmd->add_option("--fix", multi_o.fix, "2D: which leg is pinned, c0|c1");
    cmd->add_option("--value", multi_o.value, "2D: pinned complex value 're,im'");
    cmd->add_option("--c0-re-range", multi_o.c0_re_range, "3D: Re(c0) range 'lo,hi'");
    cmd->add_option("--c0-samples", multi_o.c0_samples, "3D: Re(c0) sample count (default 16)");
    cmd->add_option("--c0-im", multi_o.c0_im, "3D: fixed Im(c0) (default 0)");
    cmd->add_option("--grid", multi_o.grid, "free-parameter grid")->required();
    cmd->add_option("--depth", multi_o.depth, "root length N (default 8)")->check(depth_range);
    add_common(cmd, multi_o.common);
  }
  {
    CLI::App* cmd = app.add_subcommand("classical", "truncated classical Mandelbrot mask");
    cmd->add_option("--grid", classical_o.grid, "c grid")->required();
    cmd->add_option("--iters", classical_o.iters, "iteration count (default 20)");
    add_common(cmd, classical_o.common);
  }
  {
    CLI::App* cmd = app.add_subcommand("julia-mask", "filled-Julia approximation mask");
    cmd->add_option("--c0", julia_mask_o.c0, "c0 as 're,im'")->required();
    cmd->add_option("--c1", julia_mask_o.c1, "c1 as 're,im'")->required();
    cmd->add_option("--root", julia_mask_o.root, "template root, 0/1 literal")->required();
    cmd->add_option("--z-grid", julia_mask_o.z_grid,
                    "z grid (default 501x501 over [-R_e-0.1, R_e+0.1]^2)");
    add_common(cmd, julia_mask_o.common);
  }
  {
    CLI::App* cmd =
        app.add_subcommand("julia-connect", "Julia component counts over a c1 grid");
    cmd->add_option("--c0", julia_connect_o.c0, "c0 as 're,im'")->required();
    cmd->add_option("--c1-grid", julia_connect_o.c1_grid, "c1 grid")->required();
    cmd->add_option("--root", julia_connect_o.root, "template root, 0/1 literal")->required();
    cmd->add_option("--z-grid", julia_connect_o.z_grid,
                    "z grid (default 501x501 sized for the worst-case R_e)");
    cmd->add_option("--connectivity", julia_connect_o.connectivity_n, "4 or 8 (default 4)");
    add_common(cmd, julia_connect_o.common);
  }
  {
    CLI::App* cmd = app.add_subcommand("random-root", "seeded random template root");
    cmd->add_option("--p", random_root_o.p, "probability of a 1 entry")->required();
    cmd->add_option("--len", random_root_o.len, "root length")->required();
    cmd->add_option("--seed", random_root_o.seed, "64-bit seed")->required();
    cmd->add_option("--out", random_root_o.out, "optional output file (.txt or .json)");
    cmd->add_option("--format", random_root_o.format, "txt|json (default: by extension)");
    cmd->add_option("--threads", random_root_o.threads, "accepted, unused")
        ->envname("TEMPLATE_MSET_THREADS");
    cmd->add_option("--budget", random_root_o.budget, "accepted, unused");
  }

  try {
    app.parse(argc, argv);
    if (app.got_subcommand("fixed-map")) run_fixed_map(fixed_map_o);
    else if (app.got_subcommand("accum")) run_accum(accum_o);
    else if (app.got_subcommand("plateaus")) run_plateaus(plateaus_o);
    else if (app.got_subcommand("loglog")) run_loglog(loglog_o);
    else if (app.got_subcommand("hybrid")) run_hybrid(hybrid_o);
    else if (app.got_subcommand("contour")) run_contour(contour_o);
    else if (app.got_subcommand("multi")) run_multi(multi_o);
    else if (app.got_subcommand("classical")) run_classical(classical_o);
    else if (app.got_subcommand("julia-mask")) run_julia_mask(julia_mask_o);
    else if (app.got_subcommand("julia-connect")) run_julia_connect(julia_connect_o);
    else if (app.got_subcommand("random-root")) run_random_root(random_root_o);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const tmset::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what()
              << " (estimate: " << e.estimated_steps() << " steps)\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
