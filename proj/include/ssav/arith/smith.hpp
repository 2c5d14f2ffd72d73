#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <vector>

#include "ssav/arith/f2_linear.hpp"
#include "ssav/arith/residue_matrix.hpp"

namespace ssav::arith {

/// 2-adic valuation of an elementary divisor over Z/2^k; infinite for an
/// exactly-zero diagonal entry.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(int v) : v_(v) {}
  static constexpr Valuation infinite() { return Valuation(kInfinite); }

  constexpr bool is_infinite() const { return v_ == kInfinite; }
  constexpr int value() const { return v_; }

  friend constexpr auto operator<=>(Valuation, Valuation) = default;

  friend std::ostream& operator<<(std::ostream& os, Valuation v) {
    return v.is_infinite() ? os << "inf" : os << v.v_;
  }

 private:
  static constexpr int kInfinite = std::numeric_limits<int>::max();
  int v_ = 0;
};

/// left * A * right == diagonal, with left/right invertible over Z/2^k and
/// diagonal entries exact powers of two (or zero) in non-decreasing valuation.
struct SmithForm {
  ResidueMatrix left;
  ResidueMatrix diagonal;
  ResidueMatrix right;
  std::vector<Valuation> valuations;
};

/// Diagonalizes over the chain ring Z/2^k. Each step pivots on an entry of
/// minimal valuation in the trailing block, ties broken in row-major order.
inline SmithForm smith_form(const ResidueMatrix& a) {
  const std::size_t n = a.size();
  const Mod2k& ring = a.ring();
  ResidueMatrix d = a;
  ResidueMatrix left = ResidueMatrix::identity(n, a.precision());
  ResidueMatrix right = ResidueMatrix::identity(n, a.precision());
  std::vector<Valuation> vals;
  vals.reserve(n);

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pr = n, pc = n;
    int best = ring.precision();
    for (std::size_t i = t; i < n; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        const auto v = ring.valuation(d(i, j));
        if (v && *v < best) {
          best = *v;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == n) {
      vals.insert(vals.end(), n - t, Valuation::infinite());
      break;
    }
    d.swap_rows(t, pr);
    left.swap_rows(t, pr);
    d.swap_cols(t, pc);
    right.swap_cols(t, pc);

    // normalize pivot to exactly 2^best
    const std::uint64_t unit = ring.inverse(d(t, t) >> best);
    d.scale_row(t, unit);
    left.scale_row(t, unit);

    for (std::size_t i = t + 1; i < n; ++i) {
      if (d(i, t) == 0) continue;
      const std::uint64_t f = ring.neg(d(i, t) >> best);
      d.add_row(i, t, f);
      left.add_row(i, t, f);
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (d(t, j) == 0) continue;
      const std::uint64_t f = ring.neg(d(t, j) >> best);
      d.add_col(j, t, f);
      right.add_col(j, t, f);
    }
    vals.emplace_back(best);
  }
  return SmithForm{std::move(left), std::move(d), std::move(right), std::move(vals)};
}

/// Multiset of elementary-divisor valuations, sorted ascending (inf last).
inline std::vector<Valuation> snf_mod2k(const ResidueMatrix& a) {
  auto vals = smith_form(a).valuations;
  std::sort(vals.begin(), vals.end());
  return vals;
}

inline std::size_t rank_mod2(const ResidueMatrix& a) { return f2::rank(f2::reduce(a)); }

}  // namespace ssav::arith
