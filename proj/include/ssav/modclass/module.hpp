#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "ssav/arith/hensel.hpp"
#include "ssav/arith/primality.hpp"
#include "ssav/arith/residue_matrix.hpp"
#include "ssav/errors.hpp"

namespace ssav::modclass {

using arith::ResidueMatrix;

/// p = 3 mod 8 (2 inert, case a) or p = 7 mod 8 (2 split, case b).
enum class ModuleCase { a, b };

inline ModuleCase module_case(std::uint64_t p) {
  if (p % 8 == 3) return ModuleCase::a;
  if (p % 8 == 7) return ModuleCase::b;
  throw std::invalid_argument("module_case: p must be 3 mod 4, got " + std::to_string(p));
}

inline char to_char(ModuleCase c) { return c == ModuleCase::a ? 'a' : 'b'; }

/// A Z_2-lattice of rank n, truncated at 2^k, with omega = pi - 1 acting by
/// `action` on a chosen basis. Valid modules satisfy
/// W^2 + 2W + (1+p) I = 0 mod 2^k.
struct TwoAdicModule {
  std::uint64_t p;
  ResidueMatrix action;

  std::size_t rank() const { return action.size(); }
  int precision() const { return action.precision(); }
};

/// Multiplicities in R^r + O_E^s (case a) or
/// R^r + [R/(w-2a1)]^s + [R/(w-2a2)]^t (case b).
struct DecompInvariants {
  ModuleCase kase = ModuleCase::a;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t t = 0;  // always 0 in case a

  std::size_t rank() const { return kase == ModuleCase::a ? 2 * r + 2 * s : 2 * r + s + t; }
  friend bool operator==(const DecompInvariants&, const DecompInvariants&) = default;
};

/// Tate modules of abelian varieties in the isogeny class have s = t in case b.
inline bool is_tate_like(const DecompInvariants& inv) { return inv.kase == ModuleCase::a || inv.s == inv.t; }

struct Validation {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// W^2 + 2W + (1+p) I.
inline ResidueMatrix minimal_polynomial_at(const TwoAdicModule& m) {
  const auto& w = m.action;
  const auto& ring = w.ring();
  ResidueMatrix out = w * w + w * 2;
  const std::uint64_t c = ring.reduce(m.p + 1);
  for (std::size_t i = 0; i < w.size(); ++i) out.set(i, i, ring.add(out(i, i), c));
  return out;
}

inline Validation validate(const TwoAdicModule& m) {
  if (!arith::is_prime(m.p)) return {false, "p=" + std::to_string(m.p) + " is not prime"};
  if (m.p % 4 != 3) return {false, "p=" + std::to_string(m.p) + " is not 3 mod 4"};
  if (m.precision() < arith::kMinPrecision)
    return {false, "precision k=" + std::to_string(m.precision()) + " is below 4"};
  if (m.p % 8 == 3 && m.rank() % 2 != 0)
    return {false, "rank n=" + std::to_string(m.rank()) + " must be even when p = 3 mod 8"};
  const ResidueMatrix f = minimal_polynomial_at(m);
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = 0; j < m.rank(); ++j)
      if (f(i, j) != 0) {
        return {false, "W^2 + 2W + (1+p)I is nonzero mod 2^" + std::to_string(m.precision()) + " at entry (" +
                           std::to_string(i) + "," + std::to_string(j) + ")"};
      }
  return {};
}

namespace detail {

inline void require_valid(const TwoAdicModule& m) {
  if (const auto v = validate(m); !v) throw InvalidModuleError("invalid module: " + v.diagnostic);
}

inline void place(ResidueMatrix& w, std::size_t offset, const ResidueMatrix& block) {
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = 0; j < block.size(); ++j) w.set(offset + i, offset + j, block(i, j));
}

}  // namespace detail

/// Action of omega on R with basis (1, omega): companion of X^2 + 2X + (1+p).
inline ResidueMatrix free_block(std::uint64_t p, int k) {
  const arith::Mod2k ring(k);
  ResidueMatrix b(2, k);
  b.set(0, 1, ring.neg(ring.reduce(p + 1)));
  b.set(1, 0, 1);
  b.set(1, 1, ring.neg(2));
  return b;
}

/// Action of omega on O_E with basis (1, alpha):
/// omega*1 = 2 alpha, omega*alpha = -2 alpha - (p+1)/2.
inline ResidueMatrix maximal_block(std::uint64_t p, int k) {
  const arith::Mod2k ring(k);
  ResidueMatrix b(2, k);
  b.set(0, 1, ring.neg(ring.reduce((p + 1) / 2)));
  b.set(1, 0, 2);
  b.set(1, 1, ring.neg(2));
  return b;
}

/// Block-diagonal normal form: free blocks, then O_E (case a) or 2*alpha1
/// scalars (case b), then 2*alpha2 scalars.
inline TwoAdicModule canonical_module(std::uint64_t p, int k, std::size_t r, std::size_t s,
                                      std::optional<std::size_t> t = std::nullopt) {
  if (!arith::is_prime(p) || p % 4 != 3) throw std::invalid_argument("canonical_module: p must be a prime = 3 mod 4");
  const ModuleCase kase = module_case(p);
  if (kase == ModuleCase::a && t) throw std::invalid_argument("canonical_module: t is only meaningful for p = 7 mod 8");
  if (kase == ModuleCase::b && !t) throw std::invalid_argument("canonical_module: p = 7 mod 8 requires t");
  const std::size_t n = kase == ModuleCase::a ? 2 * (r + s) : 2 * r + s + *t;
  if (n == 0) throw std::invalid_argument("canonical_module: module must have positive rank");

  ResidueMatrix w(n, k);
  std::size_t at = 0;
  const ResidueMatrix fb = free_block(p, k);
  for (std::size_t i = 0; i < r; ++i, at += 2) detail::place(w, at, fb);
  if (kase == ModuleCase::a) {
    const ResidueMatrix mb = maximal_block(p, k);
    for (std::size_t i = 0; i < s; ++i, at += 2) detail::place(w, at, mb);
  } else {
    const auto roots = arith::hensel_alpha_roots(p, k);
    const auto& ring = w.ring();
    for (std::size_t i = 0; i < s; ++i, ++at) w.set(at, at, ring.mul(2, roots.alpha1));
    for (std::size_t i = 0; i < *t; ++i, ++at) w.set(at, at, ring.mul(2, roots.alpha2));
  }
  return {p, std::move(w)};
}

inline TwoAdicModule canonical_module(std::uint64_t p, int k, const DecompInvariants& inv) {
  return inv.kase == ModuleCase::a ? canonical_module(p, k, inv.r, inv.s)
                                   : canonical_module(p, k, inv.r, inv.s, inv.t);
}

inline TwoAdicModule direct_sum(const TwoAdicModule& x, const TwoAdicModule& y) {
  if (x.p != y.p) throw std::invalid_argument("direct_sum: modules over different p");
  return {x.p, arith::direct_sum(x.action, y.action)};
}

/// Change of basis: returns U^-1 W U. U must be invertible mod 2.
inline TwoAdicModule conjugate(const TwoAdicModule& m, const ResidueMatrix& u) {
  const auto inv = arith::inverse(u);
  if (!inv) throw std::invalid_argument("conjugate: matrix is not invertible mod 2");
  return {m.p, *inv * m.action * u};
}

/// Pseudorandom unimodular matrix: a product of 4n^2 elementary operations
/// drawn from mt19937_64 (whose raw output is fully specified, so the result
/// depends only on the seed).
inline ResidueMatrix random_unimodular(std::size_t n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const arith::Mod2k ring(k);
  ResidueMatrix u = ResidueMatrix::identity(n, k);
  const std::size_t steps = 4 * n * n;
  for (std::size_t step = 0; step < steps; ++step) {
    const std::uint64_t kind = rng() % 4;
    const std::size_t i = static_cast<std::size_t>(rng() % n);
    std::size_t j = static_cast<std::size_t>(rng() % n);
    const std::uint64_t f = ring.reduce(rng());
    if (kind == 3) {
      u.scale_col(i, f | 1);
    } else if (kind == 2) {
      u.swap_cols(i, j);
    } else if (n > 1) {
      if (j == i) j = (i + 1) % n;
      u.add_col(i, j, f);
    }
  }
  return u;
}

inline TwoAdicModule random_conjugate(const TwoAdicModule& m, std::uint64_t seed) {
  detail::require_valid(m);
  return conjugate(m, random_unimodular(m.rank(), m.precision(), seed));
}

}  // namespace ssav::modclass
