#pragma once

// Helpers shared by the test binaries: small random generators and a
// brute-force linear algebra oracle over graded pieces (GF(p) only).

#include "kitt/parser.hpp"
#include "kitt/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using kitt::Polynomial;
using kitt::RingPtr;

inline RingPtr gf_ring(std::uint64_t p, std::vector<std::string> vars) {
  return kitt::PolyRing::make(kitt::Field::prime(p), std::move(vars));
}

inline RingPtr qq_ring(std::vector<std::string> vars) {
  return kitt::PolyRing::make(kitt::Field::rationals(), std::move(vars));
}

inline Polynomial P(const RingPtr& ring, const std::string& text) { return kitt::parse_poly(text, ring); }

inline std::vector<Polynomial> Ps(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(ring, t));
  return out;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 eng_;
};

/// All exponent vectors of total degree d in n variables, lex descending.
inline std::vector<std::vector<int>> exponents_of_degree(std::size_t n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

inline kitt::Monomial mono_of(const std::vector<int>& e) { return kitt::Monomial(e); }

inline Polynomial random_monomial_poly(const RingPtr& ring, Rng& rng, int deg) {
  auto all = exponents_of_degree(ring->nvars(), deg);
  auto c = ring->field().from_int(rng.uniform(1, 100));
  return Polynomial::term(ring, c, mono_of(rng.pick(all)));
}

/// Homogeneous polynomial of degree `deg` with up to `max_terms` terms.
inline Polynomial random_homogeneous(const RingPtr& ring, Rng& rng, int deg, int max_terms) {
  Polynomial p(ring);
  const int terms = rng.uniform(1, max_terms);
  for (int k = 0; k < terms; ++k) p += random_monomial_poly(ring, rng, deg);
  if (p.is_zero()) return random_monomial_poly(ring, rng, deg);
  return p;
}

/// Possibly inhomogeneous polynomial with degrees in [min_deg, max_deg].
inline Polynomial random_poly(const RingPtr& ring, Rng& rng, int min_deg, int max_deg, int max_terms) {
  Polynomial p(ring);
  const int terms = rng.uniform(1, max_terms);
  for (int k = 0; k < terms; ++k) p += random_monomial_poly(ring, rng, rng.uniform(min_deg, max_deg));
  if (p.is_zero()) return random_monomial_poly(ring, rng, max_deg);
  return p;
}

/// Dense row reduction mod p. Returns the rank.
class ModpEchelon {
 public:
  explicit ModpEchelon(std::uint64_t p) : p_(p) {}

  /// Reduces `row` against the stored pivots; returns true if it was
  /// independent (and stores it).
  bool insert(std::vector<std::uint64_t> row) {
    reduce(row);
    auto it = std::find_if(row.begin(), row.end(), [](std::uint64_t v) { return v != 0; });
    if (it == row.end()) return false;
    const std::size_t col = static_cast<std::size_t>(it - row.begin());
    const std::uint64_t inv = inverse(row[col]);
    for (auto& v : row) v = v * inv % p_;
    rows_.emplace(col, std::move(row));
    return true;
  }

  bool in_span(std::vector<std::uint64_t> row) const {
    reduce(row);
    return std::all_of(row.begin(), row.end(), [](std::uint64_t v) { return v == 0; });
  }

  std::size_t rank() const { return rows_.size(); }

  /// Remainder after clearing every pivot column.
  void reduce(std::vector<std::uint64_t>& row) const {
    for (const auto& [col, pivot] : rows_) {
      const std::uint64_t c = row[col];
      if (c == 0) continue;
      for (std::size_t k = 0; k < row.size(); ++k) {
        row[k] = (row[k] + (p_ - c) * pivot[k]) % p_;
      }
    }
  }


 private:
  std::uint64_t inverse(std::uint64_t a) const {
    std::uint64_t r = 1, b = a, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return r;
  }

  std::uint64_t p_;
  std::map<std::size_t, std::vector<std::uint64_t>> rows_;
};

/// Basis of the kernel of the matrix whose columns are `cols` (mod p).
inline std::vector<std::vector<std::uint64_t>> kernel_mod_p(const std::vector<std::vector<std::uint64_t>>& cols,
                                                            std::uint64_t p) {
  const std::size_t n = cols.size();
  if (n == 0) return {};
  const std::size_t m = cols.front().size();
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<std::vector<std::uint64_t>> a(m, std::vector<std::uint64_t>(n));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < m; ++r) a[r][c] = cols[c][r] % p;
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t k = row;
    while (k < m && a[k][c] == 0) ++k;
    if (k == m) continue;
    std::swap(a[k], a[row]);
    const std::uint64_t iv = inv(a[row][c]);
    for (auto& v : a[row]) v = v * iv % p;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const std::uint64_t f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) a[r][j] = (a[r][j] + (p - f) * a[row][j]) % p;
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<std::uint64_t> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - a[r][free]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

/// Coordinates of a homogeneous polynomial of degree d in the monomial basis.
inline std::vector<std::uint64_t> coordinates(const Polynomial& f, const std::vector<std::vector<int>>& basis) {
  std::vector<std::uint64_t> row(basis.size(), 0);
  for (const auto& t : f.terms()) {
    std::vector<int> e(f.ring()->nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono[i];
    auto it = std::find(basis.begin(), basis.end(), e);
    row[static_cast<std::size_t>(it - basis.begin())] = t.coeff.residue();
  }
  return row;
}

/// The degree-d piece of the ideal generated by homogeneous `gens`, as an
/// echelon form in the monomial basis of degree d.
inline ModpEchelon graded_piece(const std::vector<Polynomial>& gens, const RingPtr& ring, int d) {
  const auto basis = exponents_of_degree(ring->nvars(), d);
  ModpEchelon ech(ring->field().characteristic());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const int e = d - g.total_degree();
    if (e < 0) continue;
    for (const auto& m : exponents_of_degree(ring->nvars(), e)) {
      Polynomial mg = g.times_term(ring->field().one(), mono_of(m));
      ech.insert(coordinates(mg, basis));
    }
  }
  return ech;
}

/// Membership of a homogeneous f in (gens) by linear algebra in degree deg f.
inline bool graded_member(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  const auto& ring = f.ring();
  const int d = f.total_degree();
  return graded_piece(gens, ring, d).in_span(coordinates(f, exponents_of_degree(ring->nvars(), d)));
}

/// dim_k (R/(gens))_d for d = 0..max_degree.
inline std::vector<long long> graded_hilbert_function(const std::vector<Polynomial>& gens, const RingPtr& ring,
                                                      int max_degree) {
  std::vector<long long> h;
  for (int d = 0; d <= max_degree; ++d) {
    const auto total = exponents_of_degree(ring->nvars(), d).size();
    h.push_back(static_cast<long long>(total - graded_piece(gens, ring, d).rank()));
  }
  return h;
}

/// dim_k (a : I)_d for homogeneous a and f, as the kernel of
/// R_d -> ⊕_i (R/a)_{d + deg f_i}, g -> (g f_i).
inline std::size_t graded_colon_dim(const std::vector<Polynomial>& a, const std::vector<Polynomial>& f,
                                    const RingPtr& ring, int d) {
  const auto basis = exponents_of_degree(ring->nvars(), d);
  std::vector<std::vector<std::uint64_t>> cols(basis.size());
  for (const auto& fi : f) {
    if (fi.is_zero()) continue;
    const int e = d + fi.total_degree();
    const auto target = exponents_of_degree(ring->nvars(), e);
    const ModpEchelon piece = graded_piece(a, ring, e);
    for (std::size_t c = 0; c < basis.size(); ++c) {
      auto row = coordinates(fi.times_term(ring->field().one(), mono_of(basis[c])), target);
      piece.reduce(row);
      cols[c].insert(cols[c].end(), row.begin(), row.end());
    }
  }
  if (cols.front().empty()) return basis.size();
  return kernel_mod_p(cols, ring->field().characteristic()).size();
}

}  // namespace testing_support
