#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ssav/qform/integer.hpp"

namespace ssav::qform {

/// Binary quadratic form a x^2 + b xy + c y^2.
template <Integer Int = std::int64_t>
struct QuadForm {
  Int a{0};
  Int b{0};
  Int c{0};

  Int discriminant() const { return b * b - Int(4) * a * c; }

  bool is_positive_definite() const { return Int(0) < a && discriminant() < Int(0); }
  bool is_primitive() const { return detail::gcd(detail::gcd(a, b), c) == Int(1); }

  /// |b| <= a <= c, with b >= 0 when |b| = a or a = c.
  bool is_reduced() const {
    const Int ab = detail::abs(b);
    if (a < ab || c < a) return false;
    if ((ab == a || a == c) && b < Int(0)) return false;
    return true;
  }

  /// Class inverse (a, -b, c).
  QuadForm inverse() const { return {a, Int(0) - b, c}; }

  friend bool operator==(const QuadForm& x, const QuadForm& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
  friend bool operator<(const QuadForm& x, const QuadForm& y) {
    if (!(x.a == y.a)) return x.a < y.a;
    if (!(x.b == y.b)) return x.b < y.b;
    return x.c < y.c;
  }
  friend std::ostream& operator<<(std::ostream& os, const QuadForm& f) {
    return os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
  }
};

/// Throws unless d < 0 and d = 0, 1 mod 4.
template <Integer Int>
void check_discriminant(const Int& d) {
  if (!(d < Int(0))) throw std::invalid_argument("discriminant must be negative");
  const Int r = detail::floor_mod(d, Int(4));
  if (!(r == Int(0) || r == Int(1)))
    throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
}

/// The identity form (1, d mod 2, (b^2 - d)/4).
template <Integer Int>
QuadForm<Int> principal_form(const Int& d) {
  check_discriminant(d);
  const Int b = detail::floor_mod(d, Int(2));
  return {Int(1), b, (b * b - d) / Int(4)};
}

/// Builds the form (a, b, (b^2 - d)/(4a)); throws if 4a does not divide b^2 - d.
template <Integer Int>
QuadForm<Int> form_from_ab(const Int& a, const Int& b, const Int& d) {
  const Int num = b * b - d;
  if (!(num % (Int(4) * a) == Int(0)))
    throw std::invalid_argument("form_from_ab: 4a does not divide b^2 - D");
  return {a, b, num / (Int(4) * a)};
}

/// Unique reduced form properly equivalent to a positive definite form.
template <Integer Int>
QuadForm<Int> reduce(QuadForm<Int> f) {
  if (!f.is_positive_definite()) throw std::invalid_argument("reduce: form is not positive definite");
  const Int zero(0);
  auto normalize = [&] {
    // b <- b + 2 a s with b in (-a, a]; c follows from the discriminant.
    const Int two_a = Int(2) * f.a;
    const Int s = detail::floor_div<Int>(f.a - f.b, two_a);
    if (s == zero) return;
    f.c = f.c + s * (f.b + s * f.a);
    f.b = f.b + s * two_a;
  };
  normalize();
  while (f.c < f.a) {
    f = {f.c, zero - f.b, f.a};
    normalize();
  }
  if (f.a == f.c && f.b < zero) f.b = zero - f.b;
  return f;
}

/// d = conductor^2 * fundamental.
template <Integer Int>
struct DiscriminantFactorization {
  Int fundamental;
  Int conductor;
};

template <Integer Int>
bool is_fundamental_discriminant(const Int& d) {
  check_discriminant(d);
  auto squarefree = [](Int m) {
    m = detail::abs(m);
    for (Int q(2); !(m < q * q); q = q + Int(1)) {
      if (m % (q * q) == Int(0)) return false;
      if (m % q == Int(0)) m = m / q;
    }
    return true;
  };
  const Int r = detail::floor_mod(d, Int(4));
  if (r == Int(1)) return squarefree(d);
  const Int m = d / Int(4);
  const Int m4 = detail::floor_mod(m, Int(4));
  return (m4 == Int(2) || m4 == Int(3)) && squarefree(m);
}

/// Splits d into conductor and fundamental discriminant by trial division.
template <Integer Int>
DiscriminantFactorization<Int> factor_discriminant(const Int& d) {
  check_discriminant(d);
  Int f(1);
  Int core = d;
  // strip odd square factors q^2 (fundamental discriminants are squarefree
  // away from 2)
  Int m = detail::abs(d);
  for (Int q(3); !(m < q * q); q = q + Int(2)) {
    while (m % (q * q) == Int(0)) {
      m = m / (q * q);
      core = core / (q * q);
      f = f * q;
    }
    while (m % q == Int(0)) m = m / q;
  }
  // powers of 2: divide by 4 while the quotient is still a discriminant that
  // is not fundamental
  while (!is_fundamental_discriminant(core)) {
    const Int q = core / Int(4);
    core = q;
    f = f * Int(2);
  }
  return {core, f};
}

}  // namespace ssav::qform
