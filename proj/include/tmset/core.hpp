#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>

#include "tmset/templates.hpp"

namespace tmset {

using complex = std::complex<double>;

// One template step z -> z^2 + c, spelled out so the arithmetic is the same
// sequence of IEEE operations everywhere (no libm complex multiply).
inline complex quad_step(complex z, complex c) noexcept {
  const double re = z.real();
  const double im = z.imag();
  return {re * re - im * im + c.real(), 2.0 * re * im + c.imag()};
}

// Escape test against the squared radius. Overflow to infinity or NaN counts
// as escaped, even when the squared radius itself is infinite. Modulus
// exactly equal to the radius does not escape.
inline bool outside_radius(complex z, double radius_sq) noexcept {
  const double n = z.real() * z.real() + z.imag() * z.imag();
  return n > radius_sq || !std::isfinite(n);
}

struct param_pair {
  complex c0{0.0, 0.0};
  complex c1{0.0, 0.0};

  complex map_for(std::uint8_t bit) const noexcept { return bit ? c1 : c0; }

  // R_e = max(2, |c0|, |c1|); recomputed on demand, never cached.
  double escape_radius() const noexcept;
  double escape_radius_sq() const noexcept;

  friend bool operator==(const param_pair&, const param_pair&) = default;
};

enum class orbit_outcome : std::uint8_t { survived, escaped };

struct orbit_result {
  orbit_outcome outcome = orbit_outcome::survived;
  std::optional<std::uint32_t> escape_step;  // first n >= 1 with |xi_n| > R_e
  double final_modulus = 0.0;

  bool survived() const noexcept { return outcome == orbit_outcome::survived; }
};

// Applies f_{c_{s_1}}, ..., f_{c_{s_N}} in template order starting at xi0,
// short-circuiting at the first iterate whose modulus exceeds the escape
// radius. An empty root returns Survived with |xi0|.
orbit_result iterate_root(const param_pair& pair, const template_root& root, complex xi0);

// Survival of the critical orbit (xi0 = 0) under the given root.
bool survives(const param_pair& pair, const template_root& root);

}  // namespace tmset
