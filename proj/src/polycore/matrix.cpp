#include "kitt/matrix.hpp"

#include "kitt/error.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

namespace kitt {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw DomainError("matrix entry count does not match its shape");
  for (const auto& e : entries_) require_compatible(*e.ring(), *ring_);
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::from_int(ring, 1);
  return m;
}

std::vector<Polynomial> PolyMatrix::column(std::size_t j) const {
  std::vector<Polynomial> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

std::vector<Polynomial> PolyMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  PolyMatrix m(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  }
  return m;
}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_) throw DomainError("hconcat: row counts differ");
  PolyMatrix m(a.ring_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
  }
  return m;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix m(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  }
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: inner dimensions differ");
  PolyMatrix m(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial s(a.ring_);
      for (std::size_t k = 0; k < a.cols_; ++k) s += a(i, k) * b(k, j);
      m(i, j) = std::move(s);
    }
  }
  return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum: shapes differ");
  PolyMatrix m(a.ring_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) m.entries_[k] = a.entries_[k] + b.entries_[k];
  return m;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::from_int(m.ring(), 1);
  if (n > 24) throw DomainError("determinant: matrix too large for cofactor expansion");

  // det of rows [n - |mask|, n) restricted to the columns in mask
  std::unordered_map<std::uint32_t, Polynomial> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> Polynomial {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size == 1) return m(n - 1, static_cast<std::size_t>(std::countr_zero(mask)));
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const std::size_t row = n - size;
    Polynomial acc(m.ring());
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const Polynomial& entry = m(row, c);
      if (!entry.is_zero()) {
        Polynomial minor = self(self, mask & ~(1u << c));
        if (!minor.is_zero()) {
          Polynomial t = entry * minor;
          acc = (position % 2 == 0) ? acc + t : acc - t;
        }
      }
      ++position;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (n == 32 ? 0u : (1u << n)) - 1u);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k) {
  if (k < 1 || k > std::min(m.rows(), m.cols())) {
    throw DomainError("minor size " + std::to_string(k) + " out of range");
  }
  std::vector<Polynomial> out;
  const auto row_sets = subsets(m.rows(), k);
  const auto col_sets = subsets(m.cols(), k);
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) out.push_back(determinant(m.submatrix(rs, cs)));
  }
  return out;
}

}  // namespace kitt
