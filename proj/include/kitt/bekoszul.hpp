#pragma once

#include "kitt/koszul.hpp"
#include "kitt/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kitt {

/// Φ: F = R^f -> G = R^g as a g x f matrix; row k is the functional φ_{k+1},
/// so Φ(w) = Σ_k φ_k(w) T_k.
class LinearMap {
 public:
  /// DomainError unless 1 <= g <= f.
  explicit LinearMap(PolyMatrix matrix);

  const RingPtr& ring() const { return matrix_.ring(); }
  const PolyMatrix& matrix() const { return matrix_; }
  std::size_t f_rank() const { return matrix_.cols(); }
  std::size_t g_rank() const { return matrix_.rows(); }

 private:
  PolyMatrix matrix_;
};

/// Interior product ∂_{φ_k}(w) with row k (1-based) of the matrix.
ExtElement contract(const LinearMap& phi, const ExtElement& w, std::size_t k);

/// ε_d(w) = ∂_{φ_g}(⋯∂_{φ_1}(w)) for w of degree d + g. With this order the
/// square case gives +det Φ on e_{1..g}.
ExtElement connecting_map(const LinearMap& phi, std::size_t d, const ExtElement& w);

struct BEModule {
  std::size_t rank;
  std::string label;
};

/// 𝒞^d(Φ). modules[p] sits in homological position p; diffs[p - 1] is the
/// rank(p-1) x rank(p) matrix of the map from position p to p - 1.
/// Positions 0..d: ∧^pF ⊗ S_{d-p}; positions d+i (i >= 1): ∧^{g+d+i-1}F ⊗ (S_{i-1})^*.
struct BEComplex {
  std::size_t d = 0;
  std::vector<BEModule> modules;
  std::vector<PolyMatrix> diffs;
  std::size_t joining_index = 0;  // diffs[joining_index] is ε_d

  std::vector<std::size_t> ranks() const;
};

/// Throws DomainError unless 0 <= d <= f - g, InternalError if d∘d ≠ 0.
BEComplex be_complex(const LinearMap& phi, std::size_t d);

/// Entry p - 1 tells whether homology vanishes at position p, for p = 1 up to
/// the left end (where it means injectivity). DomainError when the total
/// rank exceeds 60.
std::vector<bool> complex_homology(const BEComplex& c);

/// Finite model of ∧F ⊗ Č^•(T_1..T_g; S): terms keyed by the localization
/// set U and a Laurent exponent vector (negative entries only inside U).
class CechFraction {
 public:
  using Key = std::pair<IndexSet, std::vector<int>>;

  CechFraction(RingPtr ring, std::size_t f_rank, std::size_t g_rank) :
      ring_(std::move(ring)), f_(f_rank), g_(g_rank) {}

  void add(IndexSet u, std::vector<int> exponents, const ExtElement& w);
  const std::map<Key, ExtElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Čech differential: (U, x) -> Σ_{k∉U} (-1)^{#{u∈U : u<k}} (U ∪ {k}, x).
  CechFraction vertical() const;
  /// Koszul differential Σ_k ∂_{φ_k} ⊗ T_k.
  CechFraction horizontal(const LinearMap& phi) const;

  CechFraction operator-() const;
  friend bool operator==(const CechFraction& a, const CechFraction& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t f_;
  std::size_t g_;
  std::map<Key, ExtElement> terms_;
};

/// m_i = Σ_{|L|=i} sgn(L) ∂_L(w) ⊗ 1/T_{L^c}, ∂_L = ∂_{ℓ_1}∘⋯∘∂_{ℓ_m}.
CechFraction lift_term(const LinearMap& phi, const ExtElement& w, std::size_t i);

struct LiftReport {
  bool ok = false;
  /// steps[i] = σ with d_h(m_i) = σ d_v(m_{i+1}); 0 when the relation fails.
  std::vector<int> step_signs;
  /// m_g = terminal_sign * ε_d(w); 0 when neither sign fits.
  int terminal_sign = 0;
  std::string convention;
};

LiftReport lift_report(const LinearMap& phi, std::size_t d, const ExtElement& w);
/// All lift steps hold with the signs (-1)^i and m_g = (-1)^{g(g-1)/2} ε_d(w).
bool verify_lift(const LinearMap& phi, std::size_t d, const ExtElement& w);

}  // namespace kitt
