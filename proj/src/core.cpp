#include "tmset/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tmset {
namespace {

double modulus_of(complex z) noexcept {
  const double n = z.real() * z.real() + z.imag() * z.imag();
  if (!std::isfinite(n)) return std::numeric_limits<double>::infinity();
  return std::sqrt(n);
}

}  // namespace

double param_pair::escape_radius_sq() const noexcept {
  const double n0 = c0.real() * c0.real() + c0.imag() * c0.imag();
  const double n1 = c1.real() * c1.real() + c1.imag() * c1.imag();
  return std::max({4.0, n0, n1});
}

double param_pair::escape_radius() const noexcept {
  return std::sqrt(escape_radius_sq());
}

orbit_result iterate_root(const param_pair& pair, const template_root& root, complex xi0) {
  const double radius_sq = pair.escape_radius_sq();
  complex z = xi0;
  for (std::size_t i = 0; i < root.size(); ++i) {
    z = quad_step(z, pair.map_for(root.bit(i)));
    if (outside_radius(z, radius_sq)) {
      orbit_result out;
      out.outcome = orbit_outcome::escaped;
      out.escape_step = static_cast<std::uint32_t>(i + 1);
      out.final_modulus = modulus_of(z);
      return out;
    }
  }
  orbit_result out;
  out.final_modulus = modulus_of(z);
  return out;
}

bool survives(const param_pair& pair, const template_root& root) {
  return iterate_root(pair, root, complex{0.0, 0.0}).survived();
}

}  // namespace tmset
