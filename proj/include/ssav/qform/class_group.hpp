#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ssav/arith/kronecker.hpp"
#include "ssav/arith/primality.hpp"
#include "ssav/qform/class_number.hpp"
#include "ssav/qform/quad_form.hpp"

namespace ssav::qform {

/// Gauss composition (Dirichlet's united-form construction), reduced.
///
/// With e = (b1+b2)/2 and g = gcd(a1, a2, e) = x a1 + y a2 + z e:
///   A = a1 a2 / g^2,
///   B = (a1 b2 x + a2 b1 y + z (b1 b2 + D)/2) / g  mod 2A,
///   C = (B^2 - D) / 4A.
template <Integer Int>
QuadForm<Int> compose(const QuadForm<Int>& f, const QuadForm<Int>& g) {
  const Int d = f.discriminant();
  if (!(d == g.discriminant())) throw std::invalid_argument("compose: discriminants differ");
  if (!f.is_positive_definite() || !g.is_positive_definite())
    throw std::invalid_argument("compose: forms must be positive definite");
  if (!f.is_primitive() || !g.is_primitive()) throw std::invalid_argument("compose: forms must be primitive");

  const Int e = (f.b + g.b) / Int(2);
  const auto inner = detail::ext_gcd(f.a, g.a);
  const auto outer = detail::ext_gcd(inner.g, e);
  const Int div = outer.g;
  const Int x = outer.x * inner.x;
  const Int y = outer.x * inner.y;
  const Int z = outer.y;

  const Int a3 = (f.a / div) * (g.a / div);
  const Int num = f.a * g.b * x + g.a * f.b * y + z * ((f.b * g.b + d) / Int(2));
  if (!(num % div == Int(0))) throw std::logic_error("compose: numerator not divisible by gcd");
  const Int b3 = detail::floor_mod<Int>(num / div, Int(2) * a3);
  return reduce(form_from_ab(a3, b3, d));
}

/// Reduced primitive forms of one discriminant under composition.
///
/// Elements are kept sorted; group operations work on indices. The full
/// Cayley table is materialized when the class number is at most
/// kTableLimit, otherwise products are composed on demand.
template <Integer Int = std::int64_t>
class FormClassGroup {
 public:
  static constexpr std::size_t kTableLimit = 2000;

  explicit FormClassGroup(const Int& d, std::size_t table_limit = kTableLimit)
      : d_(d), elements_(reduced_forms(d)) {
    identity_ = index_of(principal_form(d));
    const std::size_t h = elements_.size();
    if (h <= table_limit) {
      table_.resize(h * h);
      for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i; j < h; ++j) {
          const std::size_t k = locate(qform::compose(elements_[i], elements_[j]));
          table_[i * h + j] = k;
          table_[j * h + i] = k;
        }
    }
    inverses_.resize(h);
    for (std::size_t i = 0; i < h; ++i) inverses_[i] = index_of(elements_[i].inverse());
    orders_.resize(h);
    for (std::size_t i = 0; i < h; ++i) {
      std::size_t ord = 1;
      for (std::size_t cur = i; cur != identity_; cur = compose(cur, i)) ++ord;
      orders_[i] = ord;
    }
  }

  const Int& discriminant() const { return d_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<QuadForm<Int>>& elements() const { return elements_; }
  const QuadForm<Int>& element(std::size_t i) const { return elements_.at(i); }
  std::size_t identity() const { return identity_; }
  bool has_table() const { return !table_.empty(); }

  /// Index of the class of f (any form of this discriminant).
  std::size_t index_of(const QuadForm<Int>& f) const {
    if (!(f.discriminant() == d_)) throw std::invalid_argument("index_of: discriminant mismatch");
    return locate(reduce(f));
  }

  std::size_t compose(std::size_t i, std::size_t j) const {
    if (has_table()) return table_[i * size() + j];
    return locate(qform::compose(elements_.at(i), elements_.at(j)));
  }
  std::size_t inverse(std::size_t i) const { return inverses_.at(i); }
  std::size_t order(std::size_t i) const { return orders_.at(i); }
  const std::vector<std::size_t>& orders() const { return orders_; }

  bool is_cyclic() const {
    return std::find(orders_.begin(), orders_.end(), size()) != orders_.end();
  }

 private:
  std::size_t locate(const QuadForm<Int>& reduced) const {
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), reduced);
    if (it == elements_.end() || !(*it == reduced))
      throw std::logic_error("FormClassGroup: form is not a reduced primitive form of this discriminant");
    return static_cast<std::size_t>(it - elements_.begin());
  }

  Int d_;
  std::vector<QuadForm<Int>> elements_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverses_;
  std::vector<std::size_t> orders_;
};

template <Integer Int>
FormClassGroup<Int> class_group(const Int& d) {
  check_discriminant(d);
  return FormClassGroup<Int>(d);
}

/// Order of the class of f under composition.
template <Integer Int>
std::size_t class_order(const QuadForm<Int>& f) {
  const QuadForm<Int> id = principal_form(f.discriminant());
  const QuadForm<Int> base = reduce(f);
  std::size_t ord = 1;
  for (QuadForm<Int> cur = base; !(cur == id); cur = compose(cur, base)) ++ord;
  return ord;
}

/// A primitive form (ell, b, c) of discriminant d, if ell is represented.
template <Integer Int>
std::optional<QuadForm<Int>> prime_form(const Int& d, std::uint64_t ell) {
  const Int l(static_cast<std::int64_t>(ell));
  const Int four_l = Int(4) * l;
  const std::int64_t start = detail::is_odd(d) ? 1 : 0;
  for (std::int64_t b = start; b < 2 * static_cast<std::int64_t>(ell); b += 2) {
    const Int bb(b);
    if (detail::floor_mod<Int>(bb * bb - d, four_l) == Int(0)) {
      QuadForm<Int> f{l, bb, (bb * bb - d) / four_l};
      if (f.is_primitive()) return f;
    }
  }
  return std::nullopt;
}

/// |Pic(O[1/ell])| = |Cl(d) / <classes of forms representing ell>| for the
/// order O of discriminant d and an odd prime ell prime to the conductor.
template <Integer Int>
std::size_t pic_localized(const Int& d, std::uint64_t ell) {
  check_discriminant(d);
  if (ell == 2) throw std::invalid_argument("pic_localized: ell must be odd");
  if (!arith::is_prime(ell)) throw std::invalid_argument("pic_localized: ell must be prime");
  const Int l(static_cast<std::int64_t>(ell));
  if (factor_discriminant(d).conductor % l == Int(0))
    throw std::invalid_argument("pic_localized: ell divides the conductor");

  const std::size_t h = class_number(d);
  const std::int64_t d_mod = detail::to_i64(detail::floor_mod(d, Int(8) * l));
  if (arith::kronecker(d_mod, static_cast<std::int64_t>(ell)) == -1) return h;
  const auto pf = prime_form(d, ell);
  if (!pf) throw std::logic_error("pic_localized: split or ramified prime has no prime form");
  const std::size_t ord = class_order(*pf);
  if (h % ord != 0) throw std::logic_error("pic_localized: element order does not divide h");
  return h / ord;
}

}  // namespace ssav::qform
