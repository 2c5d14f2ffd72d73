#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ssav/arith/kronecker.hpp"
#include "ssav/qform/quad_form.hpp"

namespace ssav::qform {

/// All reduced primitive forms of discriminant d, sorted by (a, b).
template <Integer Int>
std::vector<QuadForm<Int>> reduced_forms(const Int& d) {
  check_discriminant(d);
  const Int zero(0);
  const Int abs_d = zero - d;
  const bool d_odd = detail::is_odd(d);
  std::vector<QuadForm<Int>> out;
  // a <= c and |b| <= a force 3a^2 <= |d|
  for (Int a(1); !(abs_d < Int(3) * a * a); a = a + Int(1)) {
    const Int four_a = Int(4) * a;
    Int b = zero - a + Int(1);
    if (detail::is_odd(b) != d_odd) b = b + Int(1);
    for (; !(a < b); b = b + Int(2)) {
      const Int num = b * b - d;
      if (!(num % four_a == zero)) continue;
      const Int c = num / four_a;
      if (c < a) continue;
      if (a == c && b < zero) continue;
      if (detail::gcd(detail::gcd(a, b), c) != Int(1)) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

/// Number of classes of primitive positive definite forms of discriminant d,
/// by enumeration of reduced forms.
template <Integer Int>
std::size_t class_number(const Int& d) {
  return reduced_forms(d).size();
}

namespace detail {

/// Character table chi(a) = kronecker(d, a) for 0 <= a < n, filled
/// multiplicatively over a linear sieve so each prime needs one symbol.
inline std::vector<std::int8_t> kronecker_table(std::int64_t d, std::size_t n) {
  std::vector<std::int8_t> chi(n, 0);
  if (n > 1) chi[1] = 1;
  std::vector<std::uint32_t> primes;
  std::vector<bool> composite(n, false);
  for (std::size_t i = 2; i < n; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      chi[i] = static_cast<std::int8_t>(arith::kronecker(d, static_cast<std::int64_t>(i)));
    }
    for (const std::uint32_t q : primes) {
      const std::size_t iq = i * q;
      if (iq >= n) break;
      composite[iq] = true;
      chi[iq] = static_cast<std::int8_t>(chi[i] * chi[q]);
      if (i % q == 0) break;
    }
  }
  return chi;
}

/// (w / 2|d|) * |sum_{a=1}^{|d|-1} chi(a) a| for a fundamental discriminant d.
inline std::int64_t dirichlet_fundamental(std::int64_t d) {
  const std::int64_t abs_d = -d;
  const auto chi = kronecker_table(d, static_cast<std::size_t>(abs_d));
  std::int64_t sum = 0;
  for (std::int64_t a = 1; a < abs_d; ++a) sum += chi[static_cast<std::size_t>(a)] * a;
  if (sum < 0) sum = -sum;
  const std::int64_t w = d == -3 ? 6 : d == -4 ? 4 : 2;
  const std::int64_t num = w * sum;
  if (num % (2 * abs_d) != 0) throw std::logic_error("dirichlet: character sum not divisible by 2|D|/w");
  return num / (2 * abs_d);
}

}  // namespace detail

/// Class number from the analytic class number formula, independent of form
/// enumeration. Supports fundamental d and conductor-2 orders only.
template <Integer Int>
std::size_t class_number_dirichlet(const Int& d) {
  const auto fac = factor_discriminant(d);
  const std::int64_t dk = detail::to_i64(fac.fundamental);
  if (fac.conductor == Int(1)) return static_cast<std::size_t>(detail::dirichlet_fundamental(dk));
  if (!(fac.conductor == Int(2)))
    throw std::invalid_argument("class_number_dirichlet: only conductors 1 and 2 are supported");
  // h(O_2) = h(dK) * 2 * (1 - chi(2)/2) / [O_K^x : O^x] = h(dK) * (2 - chi(2)) / u
  const std::int64_t hk = detail::dirichlet_fundamental(dk);
  const std::int64_t u = dk == -3 ? 3 : dk == -4 ? 2 : 1;
  const std::int64_t num = hk * (2 - arith::kronecker(dk, 2));
  if (num % u != 0) throw std::logic_error("class_number_dirichlet: conductor formula not integral");
  return static_cast<std::size_t>(num / u);
}

}  // namespace ssav::qform
