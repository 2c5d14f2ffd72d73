#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ssav/arith/residue_matrix.hpp"

namespace ssav::arith {

/// Roots of X^2 + X + (1+p)/4 in Z/2^k for p = 7 mod 8. alpha1 is the unit
/// root, alpha2 the even one.
struct AlphaRoots {
  std::uint64_t alpha1;
  std::uint64_t alpha2;
  int k;
};

inline AlphaRoots hensel_alpha_roots(std::uint64_t p, int k) {
  if (p % 8 != 7) {
    throw std::invalid_argument("hensel_alpha_roots: p must be 7 mod 8 (X^2+X+(p+1)/4 has no 2-adic root otherwise), got p=" +
                                std::to_string(p));
  }
  if (k < kMinPrecision || k > kMaxPrecision)
    throw std::invalid_argument("hensel_alpha_roots: precision out of range");
  const Mod2k ring(k);
  const std::uint64_t c = ring.reduce((p + 1) / 4);
  auto f = [&](std::uint64_t x) { return ring.add(ring.add(ring.mul(x, x), x), c); };

  // f'(x) = 2x + 1 is a unit, so Newton steps converge from any residue mod 2.
  auto lift = [&](std::uint64_t x) {
    for (int i = 0; i < 64 && f(x) != 0; ++i) {
      x = ring.sub(x, ring.mul(f(x), ring.inverse(ring.add(ring.mul(2, x), 1))));
    }
    if (f(x) != 0) throw std::logic_error("hensel_alpha_roots: Newton iteration did not converge");
    return x;
  };
  const AlphaRoots roots{lift(1), lift(0), k};
  if (ring.add(roots.alpha1, roots.alpha2) != ring.mask() || ring.mul(roots.alpha1, roots.alpha2) != c)
    throw std::logic_error("hensel_alpha_roots: Vieta check failed");
  return roots;
}

}  // namespace ssav::arith
