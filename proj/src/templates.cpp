#include "tmset/templates.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace tmset {

template_root::template_root(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    if (b > 1) throw std::invalid_argument("template bits must be 0 or 1");
  }
}

template_root template_root::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("template literal may contain only '0' and '1'");
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return template_root(std::move(bits));
}

template_root template_root::zeros(std::size_t n) {
  return template_root(std::vector<std::uint8_t>(n, 0));
}

template_root template_root::ones(std::size_t n) {
  return template_root(std::vector<std::uint8_t>(n, 1));
}

template_root template_root::suffix(std::size_t k) const {
  if (k > size()) throw std::out_of_range("suffix shift exceeds root length");
  return template_root(std::vector<std::uint8_t>(bits_.begin() + static_cast<std::ptrdiff_t>(k),
                                                 bits_.end()));
}

template_root template_root::concat(const template_root& tail) const {
  std::vector<std::uint8_t> bits = bits_;
  bits.insert(bits.end(), tail.bits_.begin(), tail.bits_.end());
  return template_root(std::move(bits));
}

std::string template_root::str() const {
  std::string out;
  out.reserve(size());
  for (std::uint8_t b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

double psi_value(const template_root& root) {
  // Horner from the last bit: every intermediate is (integer)/2^k, exact
  // while the mantissa fits.
  double v = 0.0;
  for (std::size_t i = root.size(); i-- > 0;) {
    v = (v + root.bit(i)) * 0.5;
  }
  return v;
}

template_root root_from_index(std::uint64_t index, unsigned depth) {
  if (depth > k_max_enum_depth)
    throw std::out_of_range("root depth exceeds enumeration cap");
  if (depth < 64 && index >> depth)
    throw std::out_of_range("root index out of range for depth");
  std::vector<std::uint8_t> bits(depth);
  for (unsigned i = 0; i < depth; ++i) {
    bits[i] = static_cast<std::uint8_t>((index >> (depth - 1 - i)) & 1u);
  }
  return template_root(std::move(bits));
}

std::uint64_t index_of_root(const template_root& root) {
  if (root.size() > 63) throw std::out_of_range("root too long for a 64-bit index");
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < root.size(); ++i) value = (value << 1) | root.bit(i);
  return value;
}

template_root random_root(const random_template_spec& spec) {
  if (!(spec.one_probability >= 0.0 && spec.one_probability <= 1.0))
    throw std::invalid_argument("one_probability must lie in [0,1]");
  std::mt19937_64 gen(spec.seed);
  std::vector<std::uint8_t> bits(spec.length);
  for (std::size_t i = 0; i < spec.length; ++i) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    bits[i] = u < spec.one_probability ? 1 : 0;
  }
  return template_root(std::move(bits));
}

dyadic_interval_set::dyadic_interval_set(unsigned depth, std::vector<std::uint64_t> members)
    : depth_(depth), members_(std::move(members)) {
  if (depth > k_max_enum_depth)
    throw std::out_of_range("interval set depth exceeds enumeration cap");
  const std::uint64_t cells = std::uint64_t{1} << depth;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= cells)
      throw std::out_of_range("interval index out of range for depth");
    if (i > 0 && members_[i] <= members_[i - 1])
      throw std::invalid_argument("interval members must be strictly increasing");
  }
}

bool dyadic_interval_set::contains(std::uint64_t index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

double dyadic_interval_set::measure() const {
  return std::ldexp(static_cast<double>(members_.size()), -static_cast<int>(depth_));
}

dyadic_interval_set dyadic_interval_set::refine() const {
  std::vector<std::uint64_t> out;
  out.reserve(members_.size() * 2);
  for (std::uint64_t j : members_) {
    out.push_back(2 * j);
    out.push_back(2 * j + 1);
  }
  return dyadic_interval_set(depth_ + 1, std::move(out));
}

}  // namespace tmset
