#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ssav/arith/residue_matrix.hpp"

// Small dense linear algebra over the field with two elements. Vectors are
// byte-per-coordinate; dimensions here never exceed a few dozen.
namespace ssav::arith::f2 {

using Vector = std::vector<std::uint8_t>;
using Matrix = std::vector<Vector>;  // row-major

inline Matrix reduce(const ResidueMatrix& m) {
  Matrix out(m.size(), Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = static_cast<std::uint8_t>(m(i, j) & 1);
  return out;
}

inline Vector reduce(const std::vector<std::uint64_t>& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint8_t>(v[i] & 1);
  return out;
}

inline Vector unit(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

/// Incrementally built subspace kept in echelon form.
class Span {
 public:
  explicit Span(std::size_t dim) : dim_(dim) {}

  std::size_t ambient_dimension() const { return dim_; }
  std::size_t dimension() const { return rows_.size(); }

  bool contains(Vector v) const { return is_zero(eliminate(std::move(v))); }

  /// Adds v; returns false (and leaves the span unchanged) if v already lies in it.
  bool insert(Vector v) {
    v = eliminate(std::move(v));
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j]) {
        rows_.push_back(std::move(v));
        pivots_.push_back(j);
        return true;
      }
    }
    return false;
  }

  /// Unit vectors e_i that extend the span to the whole space, in index order.
  std::vector<std::size_t> complement_units() const {
    Span s = *this;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim_ && s.dimension() < dim_; ++i) {
      if (s.insert(unit(dim_, i))) out.push_back(i);
    }
    return out;
  }

 private:
  Vector eliminate(Vector v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (v[pivots_[r]]) {
        for (std::size_t j = 0; j < dim_; ++j) v[j] ^= rows_[r][j];
      }
    }
    return v;
  }
  static bool is_zero(const Vector& v) {
    for (auto x : v)
      if (x) return false;
    return true;
  }

  std::size_t dim_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const Matrix& a) {
  if (a.empty()) return 0;
  Span s(a.front().size());
  for (const auto& row : a) s.insert(row);
  return s.dimension();
}

/// Solves A x = b (A is rows x cols). Returns one solution, free variables zero.
inline std::optional<Vector> solve(Matrix a, Vector b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && !a[p][c]) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && a[i][c]) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] ^= a[r][j];
        b[i] ^= b[r];
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i]) return std::nullopt;
  Vector x(cols, 0);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i];
  return x;
}

/// Basis of the null space {x : A x = 0}.
inline Matrix kernel_basis(Matrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && !a[p][c]) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && a[i][c]) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] ^= a[r][j];
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of the column space of A.
inline Matrix image_basis(const Matrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  Span s(rows);
  Matrix basis;
  for (std::size_t c = 0; c < cols; ++c) {
    Vector col(rows);
    for (std::size_t i = 0; i < rows; ++i) col[i] = a[i][c];
    if (s.insert(col)) basis.push_back(std::move(col));
  }
  return basis;
}

}  // namespace ssav::arith::f2
