#include "tmset/msets.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "tmset/parallel.hpp"

namespace tmset {

const char* to_string(critical_mode mode) {
  return mode == critical_mode::regular ? "regular" : "multicritical";
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t enumeration_step_bound(unsigned depth, critical_mode mode) {
  const std::uint64_t leaves = depth < 64 ? (std::uint64_t{1} << depth) : 0;
  const std::uint64_t per_root =
      mode == critical_mode::regular
          ? depth
          : std::uint64_t{depth} * (depth + 1) / 2;
  return checked_mul(leaves, per_root == 0 ? 1 : per_root);
}

namespace {

void check_enumeration(unsigned depth, critical_mode mode, const enumeration_limits& limits) {
  if (depth > k_max_enum_depth)
    throw std::invalid_argument("enumeration depth " + std::to_string(depth) +
                                " exceeds the hard cap of " + std::to_string(k_max_enum_depth));
  const std::uint64_t estimate = enumeration_step_bound(depth, mode);
  if (depth > limits.max_depth)
    throw budget_error("enumeration depth " + std::to_string(depth) +
                           " exceeds the depth budget of " + std::to_string(limits.max_depth),
                       estimate);
  if (estimate > limits.max_steps)
    throw budget_error("estimated " + std::to_string(estimate) +
                           " orbit steps exceed the budget of " + std::to_string(limits.max_steps),
                       estimate);
}

// Depth-first walker over the prefix tree of one pair. path holds the bits
// of the current branch; leaves are visited in increasing index order.
struct tree_walker {
  complex maps[2];
  double radius_sq = 4.0;
  unsigned depth = 0;
  critical_mode mode = critical_mode::regular;
  std::array<std::uint8_t, k_max_enum_depth> path{};

  bool leaf_ok() const {
    if (mode == critical_mode::regular) return true;
    for (unsigned k = 1; k < depth; ++k) {
      complex z{0.0, 0.0};
      for (unsigned i = k; i < depth; ++i) {
        z = quad_step(z, maps[path[i]]);
        if (outside_radius(z, radius_sq)) return false;
      }
    }
    return true;
  }

  template <typename Visit>
  void walk(complex z, unsigned level, std::uint64_t prefix, Visit&& visit) {
    if (level == depth) {
      if (leaf_ok()) visit(prefix);
      return;
    }
    for (std::uint8_t b = 0; b < 2; ++b) {
      const complex next = quad_step(z, maps[b]);
      if (outside_radius(next, radius_sq)) continue;
      path[level] = b;
      walk(next, level + 1, (prefix << 1) | b, visit);
    }
  }
};

tree_walker make_walker(const param_pair& pair, unsigned depth, critical_mode mode) {
  tree_walker w;
  w.maps[0] = pair.c0;
  w.maps[1] = pair.c1;
  w.radius_sq = pair.escape_radius_sq();
  w.depth = depth;
  w.mode = mode;
  return w;
}

struct branch_point {
  std::uint64_t prefix = 0;
  complex z{0.0, 0.0};
  std::array<std::uint8_t, k_max_enum_depth> path{};
};

// Surviving branch points at the split level, in index order. Escaped
// prefixes already prune everything below them here.
void gather_branches(const tree_walker& proto, complex z, unsigned level, unsigned split,
                     std::uint64_t prefix, std::array<std::uint8_t, k_max_enum_depth>& path,
                     std::vector<branch_point>& out) {
  if (level == split) {
    out.push_back(branch_point{prefix, z, path});
    return;
  }
  for (std::uint8_t b = 0; b < 2; ++b) {
    const complex next = quad_step(z, proto.maps[b]);
    if (outside_radius(next, proto.radius_sq)) continue;
    path[level] = b;
    gather_branches(proto, next, level + 1, split, (prefix << 1) | b, path, out);
  }
}

unsigned pick_split_level(unsigned depth, unsigned threads) {
  if (threads <= 1 || depth < 6) return 0;
  unsigned split = 0;
  while ((1u << split) < 8u * threads && split + 4 < depth && split < 12) ++split;
  return split;
}

// Runs the (possibly parallel) enumeration. prepare(total) is called once
// before any branch work; per_branch then receives a walker positioned at
// each surviving branch point, slots in index order.
template <typename Prepare, typename PerBranch>
void for_each_branch(const param_pair& pair, unsigned depth, critical_mode mode,
                     unsigned threads, Prepare&& prepare, PerBranch&& per_branch) {
  const tree_walker proto = make_walker(pair, depth, mode);
  const unsigned split = pick_split_level(depth, resolve_threads(threads));
  if (split == 0) {
    prepare(std::size_t{1});
    tree_walker w = proto;
    per_branch(std::size_t{0}, w, complex{0.0, 0.0}, 0u, std::uint64_t{0});
    return;
  }
  std::vector<branch_point> branches;
  std::array<std::uint8_t, k_max_enum_depth> path{};
  gather_branches(proto, complex{0.0, 0.0}, 0, split, 0, path, branches);
  prepare(branches.size());
  parallel_for(branches.size(), threads, [&](std::uint64_t t) {
    tree_walker w = proto;
    w.path = branches[t].path;
    per_branch(static_cast<std::size_t>(t), w, branches[t].z, split, branches[t].prefix);
  });
}

}  // namespace

std::uint64_t survivor_count(const param_pair& pair, unsigned depth, critical_mode mode,
                             unsigned threads, const enumeration_limits& limits) {
  check_enumeration(depth, mode, limits);
  std::vector<std::uint64_t> counts;
  for_each_branch(
      pair, depth, mode, threads, [&](std::size_t total) { counts.resize(total, 0); },
      [&](std::size_t slot, tree_walker& w, complex z, unsigned level, std::uint64_t prefix) {
        std::uint64_t n = 0;
        w.walk(z, level, prefix, [&](std::uint64_t) { ++n; });
        counts[slot] = n;
      });
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

dyadic_interval_set fixed_map_set(const param_pair& pair, unsigned depth, critical_mode mode,
                                  unsigned threads, const enumeration_limits& limits) {
  check_enumeration(depth, mode, limits);
  std::vector<std::vector<std::uint64_t>> parts;
  for_each_branch(
      pair, depth, mode, threads, [&](std::size_t total) { parts.resize(total); },
      [&](std::size_t slot, tree_walker& w, complex z, unsigned level, std::uint64_t prefix) {
        w.walk(z, level, prefix, [&](std::uint64_t index) { parts[slot].push_back(index); });
      });
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  std::vector<std::uint64_t> members;
  members.reserve(n);
  for (auto& p : parts) members.insert(members.end(), p.begin(), p.end());
  return dyadic_interval_set(depth, std::move(members));
}

double full_root_value(const param_pair& pair, unsigned depth, critical_mode mode,
                       unsigned threads, const enumeration_limits& limits) {
  const std::uint64_t n = survivor_count(pair, depth, mode, threads, limits);
  return std::ldexp(static_cast<double>(n), -static_cast<int>(depth));
}

bool is_well_behaved(const param_pair& pair, unsigned depth, critical_mode mode,
                     unsigned threads, const enumeration_limits& limits) {
  return survivor_count(pair, depth, mode, threads, limits) == (std::uint64_t{1} << depth);
}

step_function accumulation_map(const dyadic_interval_set& set) {
  const std::uint64_t cells = set.cell_count();
  const double rise = std::ldexp(1.0, -static_cast<int>(set.depth()));
  step_function f;
  f.depth = set.depth();
  f.values.resize(cells + 1);
  f.values[0] = 0.0;
  const auto& members = set.members();
  std::size_t next = 0;
  for (std::uint64_t j = 0; j < cells; ++j) {
    double v = f.values[j];
    if (next < members.size() && members[next] == j) {
      v += rise;
      ++next;
    }
    f.values[j + 1] = v;
  }
  return f;
}

std::uint64_t plateau_histogram::total_plateaus() const {
  std::uint64_t n = 0;
  for (const auto& [len, cnt] : counts) {
    (void)len;
    n += cnt;
  }
  return n;
}

std::uint64_t plateau_histogram::total_flat_cells() const {
  std::uint64_t n = 0;
  for (const auto& [len, cnt] : counts) n += len * cnt;
  return n;
}

plateau_histogram count_plateaus(const step_function& f) {
  plateau_histogram h;
  h.depth = f.depth;
  if (f.values.empty()) return h;
  const std::uint64_t cells = f.values.size() - 1;
  std::uint64_t run = 0;
  for (std::uint64_t j = 0; j < cells; ++j) {
    if (f.values[j + 1] == f.values[j]) {
      ++run;
    } else if (run > 0) {
      ++h.counts[run];
      run = 0;
    }
  }
  if (run > 0) ++h.counts[run];
  return h;
}

std::vector<std::pair<double, double>> loglog_points(const plateau_histogram& h,
                                                     bool include_zero_counts) {
  std::vector<std::pair<double, double>> points;
  if (include_zero_counts) {
    const std::uint64_t max_len = std::uint64_t{1} << h.depth;
    points.reserve(max_len);
    for (std::uint64_t len = 1; len <= max_len; ++len) {
      const auto it = h.counts.find(len);
      const double s = it == h.counts.end() ? 0.0 : static_cast<double>(it->second);
      points.emplace_back(std::log(static_cast<double>(len)), std::log(s + 1.0));
    }
  } else {
    points.reserve(h.counts.size());
    for (const auto& [len, cnt] : h.counts) {
      points.emplace_back(std::log(static_cast<double>(len)),
                          std::log(static_cast<double>(cnt) + 1.0));
    }
  }
  return points;
}

}  // namespace tmset
