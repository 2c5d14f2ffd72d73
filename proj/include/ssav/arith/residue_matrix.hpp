#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssav::arith {

inline constexpr int kMinPrecision = 4;
inline constexpr int kMaxPrecision = 60;

/// Arithmetic in Z/2^k on 64-bit words: unsigned wrap-around is arithmetic
/// mod 2^64, so masking after each operation is reduction mod 2^k.
class Mod2k {
 public:
  explicit constexpr Mod2k(int k) : k_(k), mask_((std::uint64_t{1} << k) - 1) {}

  constexpr int precision() const { return k_; }
  constexpr std::uint64_t modulus() const { return mask_ + 1; }
  constexpr std::uint64_t mask() const { return mask_; }

  constexpr std::uint64_t reduce(std::uint64_t x) const { return x & mask_; }
  constexpr std::uint64_t from_signed(std::int64_t x) const {
    return static_cast<std::uint64_t>(x) & mask_;
  }
  constexpr std::int64_t to_signed(std::uint64_t x) const {
    // symmetric representative in (-2^(k-1), 2^(k-1)]
    x &= mask_;
    return x > (mask_ >> 1) + 1 ? static_cast<std::int64_t>(x) - static_cast<std::int64_t>(mask_ + 1)
                                : static_cast<std::int64_t>(x);
  }
  constexpr std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) & mask_; }
  constexpr std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a - b) & mask_; }
  constexpr std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) & mask_; }
  constexpr std::uint64_t neg(std::uint64_t a) const { return (0 - a) & mask_; }

  /// Inverse of an odd residue (Newton iteration, doubling correct bits).
  constexpr std::uint64_t inverse(std::uint64_t u) const {
    if ((u & 1) == 0) throw std::domain_error("Mod2k::inverse: even residue");
    std::uint64_t x = u;  // correct mod 8
    for (int i = 0; i < 5; ++i) x *= 2 - u * x;
    return x & mask_;
  }

  /// 2-adic valuation; nullopt for zero.
  constexpr std::optional<int> valuation(std::uint64_t a) const {
    a &= mask_;
    if (a == 0) return std::nullopt;
    int v = 0;
    while ((a & 1) == 0) {
      a >>= 1;
      ++v;
    }
    return v;
  }

 private:
  int k_;
  std::uint64_t mask_;
};

/// Square matrix over Z/2^k with canonically reduced entries.
class ResidueMatrix {
 public:
  ResidueMatrix(std::size_t n, int k) : n_(n), ring_(check_precision(k)), data_(n * n, 0) {
    if (n == 0) throw std::invalid_argument("ResidueMatrix: dimension must be positive");
  }

  static ResidueMatrix identity(std::size_t n, int k) {
    ResidueMatrix m(n, k);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
  }

  /// Row-major signed entries, canonicalized mod 2^k.
  static ResidueMatrix from_signed(std::size_t n, int k, std::span<const std::int64_t> entries) {
    if (entries.size() != n * n) {
      throw std::invalid_argument("ResidueMatrix: expected " + std::to_string(n * n) +
                                  " entries, got " + std::to_string(entries.size()));
    }
    ResidueMatrix m(n, k);
    for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = m.ring_.from_signed(entries[i]);
    return m;
  }
  static ResidueMatrix from_signed(std::size_t n, int k, std::initializer_list<std::int64_t> entries) {
    return from_signed(n, k, std::span<const std::int64_t>(entries.begin(), entries.size()));
  }

  static ResidueMatrix diagonal(int k, std::span<const std::uint64_t> diag) {
    ResidueMatrix m(diag.size(), k);
    for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
    return m;
  }

  std::size_t size() const { return n_; }
  int precision() const { return ring_.precision(); }
  const Mod2k& ring() const { return ring_; }

  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint64_t v) { data_[i * n_ + j] = ring_.reduce(v); }
  std::span<const std::uint64_t> entries() const { return data_; }

  std::vector<std::uint64_t> column(std::size_t j) const {
    std::vector<std::uint64_t> c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_column(std::size_t j, std::span<const std::uint64_t> c) {
    for (std::size_t i = 0; i < n_; ++i) set(i, j, c[i]);
  }

  std::vector<std::uint64_t> apply(std::span<const std::uint64_t> x) const {
    std::vector<std::uint64_t> y(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < n_; ++j) acc += data_[i * n_ + j] * x[j];
      y[i] = ring_.reduce(acc);
    }
    return y;
  }

  ResidueMatrix& operator+=(const ResidueMatrix& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = ring_.add(data_[i], o.data_[i]);
    return *this;
  }
  ResidueMatrix& operator-=(const ResidueMatrix& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = ring_.sub(data_[i], o.data_[i]);
    return *this;
  }
  ResidueMatrix& operator*=(std::uint64_t scalar) {
    for (auto& x : data_) x = ring_.mul(x, scalar);
    return *this;
  }

  friend ResidueMatrix operator+(ResidueMatrix a, const ResidueMatrix& b) { return a += b; }
  friend ResidueMatrix operator-(ResidueMatrix a, const ResidueMatrix& b) { return a -= b; }
  friend ResidueMatrix operator*(ResidueMatrix a, std::uint64_t s) { return a *= s; }
  friend ResidueMatrix operator*(std::uint64_t s, ResidueMatrix a) { return a *= s; }

  friend ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) {
    a.check_compatible(b);
    const std::size_t n = a.n_;
    ResidueMatrix c(n, a.precision());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        const std::uint64_t ail = a.data_[i * n + l];
        if (ail == 0) continue;
        for (std::size_t j = 0; j < n; ++j) c.data_[i * n + j] += ail * b.data_[l * n + j];
      }
    }
    for (auto& x : c.data_) x = c.ring_.reduce(x);
    return c;
  }

  friend bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) {
    return a.n_ == b.n_ && a.precision() == b.precision() && a.data_ == b.data_;
  }

  // Elementary operations (used by elimination and random conjugation).
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n_; ++j) std::swap(data_[a * n_ + j], data_[b * n_ + j]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < n_; ++i) std::swap(data_[i * n_ + a], data_[i * n_ + b]);
  }
  void scale_row(std::size_t r, std::uint64_t f) {
    for (std::size_t j = 0; j < n_; ++j) data_[r * n_ + j] = ring_.mul(data_[r * n_ + j], f);
  }
  void scale_col(std::size_t c, std::uint64_t f) {
    for (std::size_t i = 0; i < n_; ++i) data_[i * n_ + c] = ring_.mul(data_[i * n_ + c], f);
  }
  /// row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, std::uint64_t f) {
    for (std::size_t j = 0; j < n_; ++j)
      data_[dst * n_ + j] = ring_.add(data_[dst * n_ + j], ring_.mul(f, data_[src * n_ + j]));
  }
  /// col[dst] += f * col[src]
  void add_col(std::size_t dst, std::size_t src, std::uint64_t f) {
    for (std::size_t i = 0; i < n_; ++i)
      data_[i * n_ + dst] = ring_.add(data_[i * n_ + dst], ring_.mul(f, data_[i * n_ + src]));
  }

 private:
  static int check_precision(int k) {
    if (k < kMinPrecision || k > kMaxPrecision) {
      throw std::invalid_argument("ResidueMatrix: precision k must lie in [" +
                                  std::to_string(kMinPrecision) + ", " +
                                  std::to_string(kMaxPrecision) + "], got " + std::to_string(k));
    }
    return k;
  }
  void check_compatible(const ResidueMatrix& o) const {
    if (n_ != o.n_ || precision() != o.precision())
      throw std::invalid_argument("ResidueMatrix: shape or precision mismatch");
  }

  std::size_t n_;
  Mod2k ring_;
  std::vector<std::uint64_t> data_;
};

/// Block-diagonal sum; both blocks must share the precision.
inline ResidueMatrix direct_sum(const ResidueMatrix& a, const ResidueMatrix& b) {
  if (a.precision() != b.precision()) throw std::invalid_argument("direct_sum: precision mismatch");
  const std::size_t n = a.size() + b.size();
  ResidueMatrix m(n, a.precision());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m.set(a.size() + i, a.size() + j, b(i, j));
  return m;
}

/// Inverse over Z/2^k; nullopt when the matrix is singular mod 2.
inline std::optional<ResidueMatrix> inverse(ResidueMatrix a) {
  const std::size_t n = a.size();
  const Mod2k& ring = a.ring();
  ResidueMatrix inv = ResidueMatrix::identity(n, a.precision());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (a(r, col) & 1) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return std::nullopt;
    a.swap_rows(col, pivot);
    inv.swap_rows(col, pivot);
    const std::uint64_t u = ring.inverse(a(col, col));
    a.scale_row(col, u);
    inv.scale_row(col, u);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const std::uint64_t f = ring.neg(a(r, col));
      a.add_row(r, col, f);
      inv.add_row(r, col, f);
    }
  }
  return inv;
}

}  // namespace ssav::arith
