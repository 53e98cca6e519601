#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tmset/core.hpp"
#include "tmset/templates.hpp"

namespace tmset {

enum class critical_mode : std::uint8_t { regular, multicritical };

const char* to_string(critical_mode mode);

// Thrown when a requested enumeration or sweep exceeds the configured work
// budget. Carries the conservative pre-pruning orbit-step estimate.
class budget_error : public std::runtime_error {
 public:
  budget_error(const std::string& what, std::uint64_t estimated_steps)
      : std::runtime_error(what), estimated_steps_(estimated_steps) {}
  std::uint64_t estimated_steps() const noexcept { return estimated_steps_; }

 private:
  std::uint64_t estimated_steps_;
};

struct enumeration_limits {
  unsigned max_depth = 24;                     // work budget on 2^N enumerations
  std::uint64_t max_steps = 10'000'000'000ull; // pre-pruning orbit-step estimate gate
};

// Saturating product, used for pre-pruning work estimates.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) noexcept;

// Upper bound on orbit steps for one depth-N enumeration, before pruning.
// Regular: 2^N * N. Multicritical adds the per-leaf suffix re-checks, giving
// 2^N * N(N+1)/2.
std::uint64_t enumeration_step_bound(unsigned depth, critical_mode mode);

// members = { j : the depth-N root of j passes the mode's survival test }.
// Depth-first prefix-tree enumeration: once a prefix escapes, its whole
// subtree is skipped. Multicritical additionally requires every suffix orbit
// (k = 1..N-1) of a surviving leaf to stay bounded; the k = 0 orbit is the
// tree orbit itself. Disjoint subtrees may be evaluated concurrently; the
// result is identical to the sequential depth-first order.
dyadic_interval_set fixed_map_set(const param_pair& pair, unsigned depth,
                                  critical_mode mode, unsigned threads = 1,
                                  const enumeration_limits& limits = {});

std::uint64_t survivor_count(const param_pair& pair, unsigned depth,
                             critical_mode mode, unsigned threads = 1,
                             const enumeration_limits& limits = {});

// phi^N(1) = |survivors| * 2^-N, the fraction of depth-N roots keeping the
// critical orbit bounded.
double full_root_value(const param_pair& pair, unsigned depth, critical_mode mode,
                       unsigned threads = 1, const enumeration_limits& limits = {});

// true iff every depth-N root survives (survivor count exactly 2^N).
bool is_well_behaved(const param_pair& pair, unsigned depth, critical_mode mode,
                     unsigned threads = 1, const enumeration_limits& limits = {});

// Accumulation map phi^N sampled at the dyadic breakpoints:
// values[j] = phi^N(j 2^-N), 2^N + 1 entries, values[0] = 0, rising by 2^-N
// across each member interval and flat elsewhere. Between breakpoints the
// map interpolates linearly on member intervals.
struct step_function {
  unsigned depth = 0;
  std::vector<double> values;

  double full_value() const { return values.empty() ? 0.0 : values.back(); }
};

step_function accumulation_map(const dyadic_interval_set& set);

// counts[l] = number of maximal flat runs of exactly l cells in a staircase.
struct plateau_histogram {
  unsigned depth = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t total_plateaus() const;
  std::uint64_t total_flat_cells() const;  // sum of l * counts[l]
};

plateau_histogram count_plateaus(const step_function& f);

// (log l, log(s(l)+1)) pairs. With include_zero_counts every length in
// [1, 2^N] is emitted; by default only represented lengths appear.
std::vector<std::pair<double, double>> loglog_points(const plateau_histogram& h,
                                                     bool include_zero_counts = false);

}  // namespace tmset
