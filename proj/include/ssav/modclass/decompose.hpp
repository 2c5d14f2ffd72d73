#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ssav/arith/f2_linear.hpp"
#include "ssav/arith/hensel.hpp"
#include "ssav/arith/residue_matrix.hpp"
#include "ssav/arith/smith.hpp"
#include "ssav/errors.hpp"
#include "ssav/modclass/module.hpp"

namespace ssav::modclass {

namespace f2 = arith::f2;

/// Invariants of a valid module.
///
/// Case a: dim M/(2,w)M = n - rank(W mod 2) = r + 2s and r + s = n/2.
/// Case b: the elementary divisors of W - 2 alpha1 are 0 on each free
/// summand's unit part, 1 on each R/(w-2 alpha2), and inf on the rest, so
/// r = #0, t = #1, s = #inf - r.
inline DecompInvariants decompose(const TwoAdicModule& m) {
  detail::require_valid(m);
  const std::size_t n = m.rank();
  const std::size_t rank2 = arith::rank_mod2(m.action);
  DecompInvariants inv;
  inv.kase = module_case(m.p);
  if (inv.kase == ModuleCase::a) {
    if (2 * rank2 > n) throw PrecisionError("decompose: rank of W mod 2 exceeds n/2");
    inv.r = rank2;
    inv.s = n / 2 - rank2;
    return inv;
  }

  const auto roots = arith::hensel_alpha_roots(m.p, m.precision());
  const auto& ring = m.action.ring();
  ResidueMatrix shifted = m.action;
  for (std::size_t i = 0; i < n; ++i) shifted.set(i, i, ring.sub(shifted(i, i), ring.mul(2, roots.alpha1)));

  std::size_t zeros = 0, ones = 0, infinite = 0;
  for (const auto v : arith::snf_mod2k(shifted)) {
    if (v.is_infinite()) {
      ++infinite;
    } else if (v.value() == 0) {
      ++zeros;
    } else if (v.value() == 1) {
      ++ones;
    } else {
      throw PrecisionError("decompose: elementary divisor of valuation " + std::to_string(v.value()) +
                           " of W - 2 alpha1 at precision k=" + std::to_string(m.precision()));
    }
  }
  if (infinite < zeros) throw PrecisionError("decompose: fewer exact kernel directions than free summands");
  inv.r = zeros;
  inv.t = ones;
  inv.s = infinite - zeros;
  if (inv.rank() != n) throw InvariantViolation("decompose: 2r + s + t != n");
  if (inv.r != rank2) throw PrecisionError("decompose: free rank from W - 2 alpha1 disagrees with rank of W mod 2");
  return inv;
}

/// Basis change U (columns = new basis) with U^-1 W U equal to the canonical
/// module of `invariants`.
struct SplitResult {
  ResidueMatrix basis;
  DecompInvariants invariants;
};

namespace detail {

using Column = std::vector<std::uint64_t>;

inline std::vector<std::uint64_t> lift(const f2::Vector& v) { return {v.begin(), v.end()}; }

inline Column unit_column(std::size_t n, std::size_t i) {
  Column c(n, 0);
  c[i] = 1;
  return c;
}

inline SplitResult assemble_and_verify(const TwoAdicModule& m, const DecompInvariants& inv,
                                       const std::vector<Column>& columns) {
  const std::size_t n = m.rank();
  if (columns.size() != n) throw PrecisionError("split: basis has wrong length");
  ResidueMatrix u(n, m.precision());
  for (std::size_t j = 0; j < n; ++j) u.set_column(j, columns[j]);
  const auto u_inv = arith::inverse(u);
  if (!u_inv) throw PrecisionError("split: assembled basis is singular mod 2");
  if (!(*u_inv * m.action * u == canonical_module(m.p, m.precision(), inv).action))
    throw PrecisionError("split: conjugated action differs from the canonical form");
  return {std::move(u), inv};
}

// Case a: peel off O_E summands <x, w x / 2> for x in ker(W mod 2) outside
// im(W mod 2) + (previous summands). The halving loses the top bit; it is
// restored by solving (W mod 2) z = e where 2^(k-1) e is the residual of
// the relation w y = -2y - (p+1)/2 x.
inline SplitResult split_inert(const TwoAdicModule& m, const DecompInvariants& inv) {
  const ResidueMatrix& w = m.action;
  const auto& ring = w.ring();
  const std::size_t n = m.rank();
  const int k = m.precision();
  const std::uint64_t low_mask = (std::uint64_t{1} << (k - 1)) - 1;
  const std::uint64_t half_p1 = ring.reduce((m.p + 1) / 2);

  const f2::Matrix wbar = f2::reduce(w);
  const f2::Matrix kernel = f2::kernel_basis(wbar);
  f2::Span covered(n);
  for (const auto& v : f2::image_basis(wbar)) covered.insert(v);

  std::vector<Column> maximal;
  for (const auto& kv : kernel) {
    if (covered.dimension() == kernel.size()) break;
    if (covered.contains(kv)) continue;
    const Column x = lift(kv);
    const Column wx = w.apply(x);
    Column y(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (wx[i] & 1) throw InvariantViolation("split: kernel vector mod 2 has odd image");
      y[i] = wx[i] >> 1;
    }
    const Column wy = w.apply(y);
    f2::Vector e(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t res = ring.add(ring.add(wy[i], ring.mul(2, y[i])), ring.mul(half_p1, x[i]));
      if (res & low_mask) throw PrecisionError("split: O_E relation fails below the top bit");
      e[i] = static_cast<std::uint8_t>(res >> (k - 1));
    }
    const auto z = f2::solve(wbar, e);
    if (!z) throw PrecisionError("split: top-bit correction has no solution (module not liftable at this precision)");
    for (std::size_t i = 0; i < n; ++i) y[i] = ring.add(y[i], std::uint64_t{(*z)[i]} << (k - 1));
    if (!covered.insert(kv) || !covered.insert(f2::reduce(y)))
      throw PrecisionError("split: O_E summand is not independent mod 2");
    maximal.push_back(x);
    maximal.push_back(std::move(y));
  }
  if (covered.dimension() != kernel.size() || maximal.size() != 2 * inv.s)
    throw PrecisionError("split: O_E summands do not exhaust ker(W mod 2)");

  f2::Span kspan(n);
  for (const auto& v : kernel) kspan.insert(v);
  std::vector<Column> columns;
  for (const std::size_t i : kspan.complement_units()) {
    Column x = unit_column(n, i);
    Column wx = w.apply(x);
    columns.push_back(std::move(x));
    columns.push_back(std::move(wx));
  }
  columns.insert(columns.end(), maximal.begin(), maximal.end());
  return assemble_and_verify(m, inv, columns);
}

struct ExactKernel {
  std::vector<Column> basis;  // columns of the right transform at inf positions
  ResidueMatrix coordinates;  // inverse of the right transform
  std::size_t offset;         // first inf position
};

inline ExactKernel exact_kernel(const ResidueMatrix& a) {
  auto sf = arith::smith_form(a);
  const std::size_t n = a.size();
  std::size_t offset = n;
  while (offset > 0 && sf.valuations[offset - 1].is_infinite()) --offset;
  std::vector<Column> basis;
  for (std::size_t j = offset; j < n; ++j) basis.push_back(sf.right.column(j));
  auto coords = arith::inverse(sf.right);
  if (!coords) throw InvariantViolation("smith_form: right transform not invertible");
  return {std::move(basis), std::move(*coords), offset};
}

/// Completes the images {shift * x_i} (which lie in the kernel) to a basis
/// of the kernel; returns the added kernel vectors.
inline std::vector<Column> complete_in_kernel(const ExactKernel& ker, const ResidueMatrix& shift,
                                              const std::vector<Column>& free_generators) {
  const std::size_t n = shift.size();
  const std::size_t dim = ker.basis.size();
  f2::Span span(dim);
  for (const auto& x : free_generators) {
    const Column full = ker.coordinates.apply(shift.apply(x));
    f2::Vector c(dim);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < ker.offset) {
        // Off-kernel coordinates can only be 2^(k-1) multiples (torsion of
        // the truncation); they vanish mod 2.
        if (full[i] & 1) throw PrecisionError("split: image of a free generator is not in the exact kernel");
      } else {
        c[i - ker.offset] = static_cast<std::uint8_t>(full[i] & 1);
      }
    }
    if (!span.insert(c)) throw PrecisionError("split: free generator images are dependent mod 2");
  }
  std::vector<Column> out;
  for (const std::size_t j : span.complement_units()) out.push_back(ker.basis[j]);
  return out;
}

// Case b: M1 = ker(w - 2 alpha1), M2 = ker(w - 2 alpha2) as exact kernels
// from Smith forms; x_i lift a basis of M/(M1 + M2) and generate the free
// part F0; y_j complete (w - 2 alpha2) F0 in M1, z_j complete
// (w - 2 alpha1) F0 in M2.
inline SplitResult split_split(const TwoAdicModule& m, const DecompInvariants& inv) {
  const ResidueMatrix& w = m.action;
  const auto& ring = w.ring();
  const std::size_t n = m.rank();
  const auto roots = arith::hensel_alpha_roots(m.p, m.precision());

  ResidueMatrix shift1 = w, shift2 = w;
  for (std::size_t i = 0; i < n; ++i) {
    shift1.set(i, i, ring.sub(w(i, i), ring.mul(2, roots.alpha1)));
    shift2.set(i, i, ring.sub(w(i, i), ring.mul(2, roots.alpha2)));
  }
  const ExactKernel m1 = exact_kernel(shift1);
  const ExactKernel m2 = exact_kernel(shift2);
  if (m1.basis.size() != inv.r + inv.s || m2.basis.size() != inv.r + inv.t)
    throw PrecisionError("split: eigen-kernel ranks disagree with the invariants");

  f2::Span sum(n);
  for (const auto& c : m1.basis) sum.insert(f2::reduce(c));
  for (const auto& c : m2.basis) sum.insert(f2::reduce(c));
  const auto free_units = sum.complement_units();
  if (free_units.size() != inv.r) throw PrecisionError("split: dim M/(M1+M2) differs from r");

  std::vector<Column> generators;
  for (const std::size_t i : free_units) generators.push_back(unit_column(n, i));
  const auto ys = complete_in_kernel(m1, shift2, generators);
  const auto zs = complete_in_kernel(m2, shift1, generators);

  std::vector<Column> columns;
  for (const auto& x : generators) {
    columns.push_back(x);
    columns.push_back(w.apply(x));
  }
  columns.insert(columns.end(), ys.begin(), ys.end());
  columns.insert(columns.end(), zs.begin(), zs.end());
  return assemble_and_verify(m, inv, columns);
}

}  // namespace detail

/// Explicit splitting basis. The result is verified: U^-1 W U equals the
/// canonical module exactly mod 2^k, or PrecisionError is thrown.
inline SplitResult split(const TwoAdicModule& m) {
  const DecompInvariants inv = decompose(m);
  return inv.kase == ModuleCase::a ? detail::split_inert(m, inv) : detail::split_split(m, inv);
}

}  // namespace ssav::modclass
