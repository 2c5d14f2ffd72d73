#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ssav/arith/kronecker.hpp"
#include "ssav/arith/primality.hpp"
#include "ssav/errors.hpp"
#include "ssav/qform/class_number.hpp"

// Isomorphism classes of g-dimensional abelian varieties over F_p with
// Frobenius pi satisfying pi^2 = -p, counted as classes of Z[pi]-lattices.
namespace ssav::count {

enum class Branch {
  two_or_one_mod_4,    // p = 2 or p = 1 mod 4: Z[pi] is maximal
  seven_mod_8_or_three,  // unit index 1
  three_mod_8,           // p = 3 mod 8, p != 3: unit index 3
};

inline std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::two_or_one_mod_4: return "2or1mod4";
    case Branch::seven_mod_8_or_three: return "7mod8or3";
    case Branch::three_mod_8: return "3mod8";
  }
  return "?";
}

namespace detail {

inline void require_prime(std::uint64_t p) {
  if (!arith::is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (p >> 63) throw std::invalid_argument("p must be below 2^63");
}

inline void require_genus(std::uint64_t g) {
  if (g < 1) throw std::invalid_argument("g must be >= 1");
}

inline std::size_t h(std::int64_t d) { return qform::class_number(d); }

}  // namespace detail

inline Branch branch_of(std::uint64_t p) {
  if (p == 2 || p % 4 == 1) return Branch::two_or_one_mod_4;
  if (p == 3 || p % 8 == 7) return Branch::seven_mod_8_or_three;
  return Branch::three_mod_8;
}

/// Fundamental discriminant of Q(sqrt(-p)).
inline std::int64_t field_discriminant(std::uint64_t p) {
  detail::require_prime(p);
  const auto sp = static_cast<std::int64_t>(p);
  if (p == 2) return -8;
  return p % 4 == 1 ? -4 * sp : -sp;
}

/// Discriminant of Z[sqrt(-p)].
inline std::int64_t order_discriminant(std::uint64_t p) {
  detail::require_prime(p);
  return -4 * static_cast<std::int64_t>(p);
}

/// h(sqrt(-p)): class number of the field, never of a non-maximal order.
inline std::size_t field_class_number(std::uint64_t p) { return detail::h(field_discriminant(p)); }

/// [O_E-hat^x : O_E^x R-hat^x] for p = 3 mod 4: |(O_E/2)^x| modulo the image
/// of the global units, i.e. 1 when 2 splits or p = 3 and 3 when 2 is inert.
inline std::size_t unit_index(std::uint64_t p) {
  detail::require_prime(p);
  if (p % 4 != 3) throw std::invalid_argument("unit_index: p must be 3 mod 4");
  return (p % 8 == 7 || p == 3) ? 1 : 3;
}

struct GenusSum {
  std::vector<std::size_t> per_genus;
  std::size_t total = 0;
};

/// Sum of class numbers over the genera of Z[pi]-lattices in E^g. For
/// p = 3 mod 4 the g genera with a maximal summand contribute h(sqrt(-p))
/// each and the free genus contributes h(-4p), enumerated directly.
inline GenusSum count_via_genus_sum(std::uint64_t p, std::uint64_t g) {
  detail::require_prime(p);
  detail::require_genus(g);
  GenusSum out;
  const std::size_t hf = field_class_number(p);
  if (p == 2 || p % 4 == 1) {
    out.per_genus = {hf};
  } else {
    out.per_genus.assign(g, hf);
    out.per_genus.push_back(detail::h(order_discriminant(p)));
  }
  for (const auto v : out.per_genus) out.total += v;
  return out;
}

struct CountReport {
  std::uint64_t p = 0;
  std::uint64_t g = 0;
  Branch branch = Branch::two_or_one_mod_4;
  std::size_t h_field = 0;
  std::size_t h_order = 0;
  std::size_t unit_index = 1;
  std::vector<std::size_t> per_genus;
  std::size_t total = 0;            // closed form
  std::size_t genus_sum_total = 0;  // sum of per_genus
};

inline CountReport count_superspecial(std::uint64_t p, std::uint64_t g) {
  detail::require_prime(p);
  detail::require_genus(g);
  CountReport rep;
  rep.p = p;
  rep.g = g;
  rep.branch = branch_of(p);
  rep.h_field = field_class_number(p);
  switch (rep.branch) {
    case Branch::two_or_one_mod_4: rep.total = rep.h_field; break;
    case Branch::seven_mod_8_or_three: rep.total = (g + 1) * rep.h_field; break;
    case Branch::three_mod_8: rep.total = (g + 3) * rep.h_field; break;
  }
  rep.unit_index = p % 4 == 3 ? unit_index(p) : 1;

  const GenusSum gs = count_via_genus_sum(p, g);
  rep.per_genus = gs.per_genus;
  rep.genus_sum_total = gs.total;
  rep.h_order = p % 4 == 3 ? gs.per_genus.back() : rep.h_field;
  if (p % 4 == 3 && rep.h_order != rep.unit_index * rep.h_field)
    throw InvariantViolation("h(-4p) != unit_index * h(sqrt(-p)) for p=" + std::to_string(p));
  return rep;
}

/// Number of supersingular j-invariants defined over F_p (p > 3).
inline std::size_t deuring_hprime(std::uint64_t p) {
  detail::require_prime(p);
  if (p <= 3) throw std::invalid_argument("deuring_hprime: requires p > 3");
  const std::size_t h = field_class_number(p);
  if (p % 4 == 1) {
    if (h % 2 != 0) throw InvariantViolation("h(-4p) is odd for p = 1 mod 4, p=" + std::to_string(p));
    return h / 2;
  }
  return p % 8 == 7 ? h : 2 * h;
}

/// Class number of the quaternion algebra ramified at {p, inf}:
/// (p-1)/12 + (1 - (-4/p))/4 + (1 - (-3/p))/3.
inline std::size_t eichler_h(std::uint64_t p) {
  detail::require_prime(p);
  if (p <= 3) throw std::invalid_argument("eichler_h: requires p > 3");
  const auto sp = static_cast<std::int64_t>(p);
  const std::int64_t twelve_h =
      (sp - 1) + 3 * (1 - arith::kronecker(-4, sp)) + 4 * (1 - arith::kronecker(-3, sp));
  if (twelve_h % 12 != 0) throw InvariantViolation("eichler_h: not an integer for p=" + std::to_string(p));
  return static_cast<std::size_t>(twelve_h / 12);
}

/// Type number t recovered from h' = 2t - h.
inline std::size_t type_number_check(std::uint64_t p) {
  const std::size_t sum = eichler_h(p) + deuring_hprime(p);
  if (sum % 2 != 0)
    throw InvariantViolation("h + h' is odd for p=" + std::to_string(p) + "; one of the inputs is wrong");
  return sum / 2;
}

/// All superspecial curves over F_p up to F_p-isomorphism, p in {2, 3}.
inline std::size_t sprime_small(std::uint64_t p) {
  if (p == 2) return 2 * detail::h(-4) + detail::h(-8);
  if (p == 3) return 4 * detail::h(-3);
  throw std::invalid_argument("sprime_small: only p = 2 and p = 3 are supported");
}

}  // namespace ssav::count
