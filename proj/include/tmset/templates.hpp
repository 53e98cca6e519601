#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tmset {

// Depth cap for enumeration-facing types: keeps 2^N indexable by 64-bit
// integers and dyadic interval endpoints exact in double precision.
inline constexpr unsigned k_max_enum_depth = 30;

// A finite binary word <s> = s_1 ... s_N. bit(0) is s_1, the first map
// applied: 0 selects f_{c0}, 1 selects f_{c1}.
class template_root {
 public:
  template_root() = default;
  explicit template_root(std::vector<std::uint8_t> bits);

  static template_root parse(std::string_view text);  // "0110..."
  static template_root zeros(std::size_t n);
  static template_root ones(std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t bit(std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  // Right k-shift s_{k+1} ... s_N; k = 0 is the identity, k = size() the
  // empty root.
  template_root suffix(std::size_t k) const;

  template_root concat(const template_root& tail) const;

  std::string str() const;

  friend bool operator==(const template_root&, const template_root&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// psi(s) = sum_n s_n 2^-n, the binary-expansion encoding into [0,1).
double psi_value(const template_root& root);

// The depth-bit big-endian expansion of index, so that
// psi_value(root_from_index(j, N)) == j * 2^-N exactly.
template_root root_from_index(std::uint64_t index, unsigned depth);
std::uint64_t index_of_root(const template_root& root);

struct random_template_spec {
  double one_probability = 0.5;
  std::size_t length = 0;
  std::uint64_t seed = 0;
};

// Each bit is independently 1 with probability one_probability. Bits are
// drawn from std::mt19937_64 (bit-exact per the C++ standard) seeded with
// spec.seed, mapped to [0,1) as (draw >> 11) * 2^-53, so identical specs
// produce identical roots on every platform.
template_root random_root(const random_template_spec& spec);

// psi-image of an N-rooted set: index j present means the half-open dyadic
// interval [j 2^-N, (j+1) 2^-N) belongs to the set. Members are kept sorted.
class dyadic_interval_set {
 public:
  dyadic_interval_set() = default;
  dyadic_interval_set(unsigned depth, std::vector<std::uint64_t> members);

  unsigned depth() const noexcept { return depth_; }
  const std::vector<std::uint64_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::uint64_t cell_count() const noexcept { return std::uint64_t{1} << depth_; }
  bool contains(std::uint64_t index) const;

  double measure() const;  // |members| * 2^-depth

  // The same point set one level deeper: each member j splits into {2j, 2j+1}.
  dyadic_interval_set refine() const;

  friend bool operator==(const dyadic_interval_set&, const dyadic_interval_set&) = default;

 private:
  unsigned depth_ = 0;
  std::vector<std::uint64_t> members_;
};

}  // namespace tmset
