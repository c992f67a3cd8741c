#pragma once

#include "kitt/polynomial.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kitt {

/// Ideal of a PolyRing given by generators. When the ring carries a modulus
/// (Q), the ideal is read in R/(Q): its Groebner basis is that of gens + Q.
///
/// Values are immutable. The reduced Groebner basis is computed lazily, at
/// most once per value (copies share the cache), and is safe to request from
/// several threads.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> gens = {});

  const RingPtr& ring() const;
  const std::vector<Polynomial>& generators() const;
  const std::vector<Polynomial>& groebner_basis() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  /// this ⊇ other
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const { return groebner_basis().empty(); }

  /// Ideal sum.
  friend Ideal operator+(const Ideal& a, const Ideal& b);
  /// Same generators viewed in another compatible ring.
  Ideal in_ring(const RingPtr& ring) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Reduced Groebner basis of (gens) + (Q) under the ring order.
std::vector<Polynomial> groebner(std::span<const Polynomial> gens, const RingPtr& ring);

Polynomial normal_form(const Polynomial& f, const Ideal& a);
bool ideal_equal(const Ideal& a, const Ideal& b);

/// A ∩ B, by eliminating t from t*A + (1 - t)*B.
Ideal intersect(const Ideal& a, const Ideal& b);

/// (A : f) = (A ∩ (f)) / f.
Ideal colon(const Ideal& a, const Polynomial& f);
/// (A : I) as the intersection of (A : g) over generators g of I.
/// Throws InternalError if an exact division fails.
Ideal colon(const Ideal& a, const Ideal& i);

/// f ∈ √A, via 1 ∈ A + (1 - t*f) in R[t].
bool radical_member(const Polynomial& f, const Ideal& a);

/// Krull dimension of R/A (R/(A + Q) when the ring has a modulus), as the
/// largest set of variables independent modulo the leading-term ideal.
/// Returns -1 for the unit ideal.
int dim_quotient(const Ideal& a);

/// nvars - dim_quotient(A) in a modulus-free ring; nvars + 1 for the unit
/// ideal. std::nullopt when the ring has a modulus (height there is not
/// computed by this engine).
std::optional<int> height(const Ideal& a);

/// Leading monomials of the reduced Groebner basis.
std::vector<Monomial> leading_monomials(const Ideal& a);

/// Krull dimension of k[x]/M for a monomial ideal M given by generators.
int monomial_dimension(std::span<const Monomial> gens, std::size_t nvars);

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of R/A.
struct HilbertNumerator {
  std::vector<long long> coeffs;  // coeffs[d] is the coefficient of t^d

  std::string to_string(const std::string& var = "t") const;
  /// Hilbert function values h(0..max_degree) of the quotient.
  std::vector<long long> hilbert_function(std::size_t nvars, std::size_t max_degree) const;
  friend bool operator==(const HilbertNumerator&, const HilbertNumerator&) = default;
};

/// Requires homogeneous generators and a modulus-free ring (DomainError
/// otherwise).
HilbertNumerator hilbert_series(const Ideal& a);
HilbertNumerator monomial_hilbert_numerator(std::vector<Monomial> gens);

/// Exact quotient p / f; throws InternalError when f does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& f);

/// R with one extra variable; `front` places it first under an elimination
/// block order, otherwise it is appended and the order kept as grevlex.
/// The result carries no modulus.
RingPtr ring_with_extra_variable(const RingPtr& ring, bool front);

}  // namespace kitt
