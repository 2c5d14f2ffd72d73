#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>

// Helpers written only in terms of ring operations and comparisons, so that
// the form machinery works equally over std::int64_t and arbitrary-precision
// types such as boost::multiprecision::cpp_int.
namespace ssav::qform {

template <class T>
concept Integer = requires(T a, T b) {
  T(std::int64_t{0});
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { a % b } -> std::convertible_to<T>;
  { a < b } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
};

namespace detail {

template <Integer Int>
Int abs(const Int& x) {
  return x < Int(0) ? Int(0) - x : x;
}

/// Remainder in [0, |m|).
template <Integer Int>
Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < Int(0)) r = r + abs(m);
  return r;
}

/// Quotient rounded towards negative infinity.
template <Integer Int>
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != Int(0)) && ((a < Int(0)) != (b < Int(0)))) q = q - Int(1);
  return q;
}

template <Integer Int>
Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (!(b == Int(0))) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

template <Integer Int>
struct ExtGcd {
  Int g, x, y;  // g = x*a + y*b, g >= 0
};

template <Integer Int>
ExtGcd<Int> ext_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_s(1), s(0);
  Int old_t(0), t(1);
  while (!(r == Int(0))) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < Int(0)) return {Int(0) - old_r, Int(0) - old_s, Int(0) - old_t};
  return {old_r, old_s, old_t};
}

/// floor(sqrt(n)) for n >= 0.
template <Integer Int>
Int isqrt(const Int& n) {
  if (n < Int(0)) throw std::domain_error("isqrt: negative argument");
  if (n < Int(2)) return n;
  Int x = n;
  Int y = (x + Int(1)) / Int(2);
  while (y < x) {
    x = y;
    y = (x + n / x) / Int(2);
  }
  return x;
}

template <Integer Int>
std::int64_t to_i64(const Int& x) {
  return static_cast<std::int64_t>(x);
}

template <Integer Int>
bool is_odd(const Int& x) {
  return !(floor_mod(x, Int(2)) == Int(0));
}

}  // namespace detail
}  // namespace ssav::qform
