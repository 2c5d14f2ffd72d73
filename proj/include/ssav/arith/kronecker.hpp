#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace ssav::arith {

/// Kronecker symbol (D/n) for n >= 1.
///
/// Totally multiplicative in n. For n = 2 the convention is 0 if D is even,
/// +1 if D = +-1 mod 8 and -1 if D = +-3 mod 8.
inline int kronecker(std::int64_t d, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("kronecker: n must be >= 1");
  int sign = 1;
  const int twos = std::countr_zero(static_cast<std::uint64_t>(n));
  if (twos > 0) {
    if ((d & 1) == 0) return 0;
    const std::int64_t d8 = ((d % 8) + 8) % 8;
    if ((twos & 1) && (d8 == 3 || d8 == 5)) sign = -sign;
    n >>= twos;
  }
  // Jacobi symbol (d mod n / n) for odd n.
  std::int64_t a = ((d % n) + n) % n;
  while (a != 0) {
    const int tz = std::countr_zero(static_cast<std::uint64_t>(a));
    a >>= tz;
    const std::int64_t n8 = n % 8;
    if ((tz & 1) && (n8 == 3 || n8 == 5)) sign = -sign;
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? sign : 0;
}

}  // namespace ssav::arith
