#pragma once

#include "kitt/polynomial.hpp"

#include <vector>

namespace kitt {

/// Dense row-major matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

  static PolyMatrix identity(RingPtr ring, std::size_t n);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<Polynomial>& entries() const { return entries_; }

  std::vector<Polynomial> column(std::size_t j) const;
  std::vector<Polynomial> row(std::size_t i) const;

  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  /// Columns of `a` followed by columns of `b`.
  static PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix transposed() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  bool is_zero() const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// Fraction-free cofactor expansion along rows, memoised over column subsets.
/// Throws DomainError for a non-square matrix.
Polynomial determinant(const PolyMatrix& m);

/// All k x k minors, ordered by row subset then column subset, both
/// lexicographically. Throws DomainError unless 1 <= k <= min(rows, cols).
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k);

/// k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace kitt
