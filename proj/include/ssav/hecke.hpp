#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssav/arith/primality.hpp"
#include "ssav/count.hpp"
#include "ssav/errors.hpp"
#include "ssav/qform/class_group.hpp"

namespace ssav::hecke {

struct HeckeReport {
  std::uint64_t p = 0;
  std::uint64_t g = 0;
  std::uint64_t ell = 0;
  std::size_t pic_O_loc = 0;  // |Pic(O_E[1/ell])|
  std::size_t pic_R_loc = 0;  // |Pic(R[1/ell])|, R = Z[sqrt(-p)]
  bool guarantee = false;     // Pic(R[1/ell]) = 1
  std::optional<std::uint64_t> orbit_total_guaranteed;
  // Picard quotient per genus L_0..L_g. Not a proven orbit count unless
  // `guarantee` holds; reported as an extension.
  std::vector<std::size_t> per_genus_quotients;
};

/// ell-adic Hecke orbits in the set of classes for p = 3 mod 4. When
/// Pic(R[1/ell]) is trivial every genus is a single orbit, giving g + 1.
inline HeckeReport hecke_orbit_report(std::uint64_t p, std::uint64_t g, std::uint64_t ell) {
  if (!arith::is_prime(p) || p % 4 != 3) throw std::invalid_argument("hecke: p must be a prime = 3 mod 4");
  if (g < 1) throw std::invalid_argument("hecke: g must be >= 1");
  if (ell == 2 || ell % 2 == 0) throw std::invalid_argument("hecke: ell must be odd");
  if (!arith::is_prime(ell)) throw std::invalid_argument("hecke: ell must be prime");
  if (ell == p) throw std::invalid_argument("hecke: ell must differ from p");

  HeckeReport rep;
  rep.p = p;
  rep.g = g;
  rep.ell = ell;
  rep.pic_O_loc = qform::pic_localized(count::field_discriminant(p), ell);
  rep.pic_R_loc = qform::pic_localized(count::order_discriminant(p), ell);
  rep.guarantee = rep.pic_R_loc == 1;
  if (rep.guarantee) rep.orbit_total_guaranteed = g + 1;
  rep.per_genus_quotients.assign(g, rep.pic_O_loc);
  rep.per_genus_quotients.push_back(rep.pic_R_loc);

  if (rep.pic_R_loc == 1 && rep.pic_O_loc != 1)
    throw InvariantViolation("Pic(R[1/ell]) = 1 but Pic(O_E[1/ell]) != 1 for p=" + std::to_string(p) +
                             ", ell=" + std::to_string(ell));
  return rep;
}

}  // namespace ssav::hecke
