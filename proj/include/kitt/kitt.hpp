#pragma once

#include "kitt/ideal.hpp"
#include "kitt/koszul.hpp"
#include "kitt/matrix.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kitt {

/// I = (f_1..f_r), a = (a_1..a_s) ⊆ I and Φ (r x s) with a = f·Φ, read in
/// R/(Q) when the ring has a modulus.
class Representation {
 public:
  /// Validates shapes and the identity a = f·Φ (DomainError otherwise).
  Representation(RingPtr ring, std::vector<Polynomial> f, std::vector<Polynomial> a, PolyMatrix phi);
  /// Finds Φ with find_phi.
  static Representation with_found_phi(RingPtr ring, std::vector<Polynomial> f, std::vector<Polynomial> a);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& f() const { return f_; }
  const std::vector<Polynomial>& a() const { return a_; }
  const PolyMatrix& phi() const { return phi_; }
  std::size_t r() const { return f_.size(); }
  std::size_t s() const { return a_.size(); }

  Ideal i_ideal() const { return Ideal(ring_, f_); }
  Ideal a_ideal() const { return Ideal(ring_, a_); }
  /// The same data over another compatible ring (e.g. with a larger modulus).
  Representation in_ring(const RingPtr& ring) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> f_;
  std::vector<Polynomial> a_;
  PolyMatrix phi_;
};

/// Some Φ with a = f·Φ (modulo Q). DomainError naming the first a_j outside (f).
PolyMatrix find_phi(const RingPtr& ring, const std::vector<Polynomial>& f, const std::vector<Polynomial>& a);

/// ζ_j = Σ_i Φ[i][j] e_i.
std::vector<ExtElement> zeta_elements(const Representation& rep);
/// ζ_L = ∧_{j∈L} ζ_j over |L| = k in lexicographic order; Γ_0 = {1}, empty
/// for k > s. DomainError when k > r.
std::vector<ExtElement> gamma_basis(const Representation& rep, std::size_t k);

struct KittProvenance {
  IndexSet l1 = 0;               // subset of {1..s}
  std::size_t cycle_degree = 0;  // j
  std::size_t cycle_index = 0;   // position in cycles(j)

  std::string to_string() const;
};

struct KittResult {
  std::vector<Polynomial> generators;  // nonzero ones only
  std::vector<KittProvenance> provenance;
  Ideal ideal;
};

/// ⟨Γ·Z⟩_r: coefficients of e_{1..r} in ζ_{L1} ∧ z, enumerated by j
/// ascending, then L1, then cycle index.
KittResult kitt_ideal(const Representation& rep);
KittResult kitt_ideal(const Representation& rep, const KoszulComplex& koszul);

/// a + ⟨Γ·H̃⟩_r with H̃ spanned by products of homology representatives.
Ideal kitt_via_homology(const Representation& rep);
Ideal kitt_via_homology(const Representation& rep, const KoszulComplex& koszul);
/// Same with caller-chosen representatives: reps(d) must span H_d modulo
/// boundaries (degree 0 included).
using HomologyChoice = std::function<std::vector<ExtElement>(std::size_t)>;
Ideal kitt_via_homology(const Representation& rep, const HomologyChoice& reps);

/// I_r(Φ | Ψ), Ψ the syzygies of f.
Ideal fitting_ideal(const Representation& rep);

/// ⟨Γ·B⟩_r as an ideal.
Ideal gamma_boundary_ideal(const Representation& rep, const KoszulComplex& koszul);
/// ⟨Γ·B⟩_r = a.
bool boundary_lemma_check(const Representation& rep);

/// f0 is a nonzerodivisor on R/(Q).
bool is_regular_element(const Polynomial& f0);

/// Kitt(a, I) + (f0) against Kitt computed over R/(Q, f0). DomainError when
/// f0 ∉ a or f0 is a zero-divisor (f0 = 0 included).
bool specialization_check(const Representation& rep, const Polynomial& f0);

struct VerifyReport {
  VerifyReport(Ideal k, Ideal j, Ideal fitt) : kitt(std::move(k)), colon(std::move(j)), fitting(std::move(fitt)) {}

  Ideal kitt;
  Ideal colon;  // J = a : I
  Ideal fitting;
  bool a_in_kitt = false;
  bool fitting_in_kitt = false;
  bool kitt_in_colon = false;
  bool kitt_equals_colon = false;
  bool colon_in_radical_of_kitt = false;  // every generator of J passes radical_member
  bool proper = false;                    // J ≠ R
  std::size_t s = 0;
  std::optional<int> height_i;       // g; std::nullopt when unverified
  std::optional<int> height_colon;   // ht(J)
  std::optional<int> height_i_plus_colon;
  std::optional<bool> algebraic_residual;  // ht(J) >= s
  std::optional<bool> geometric_residual;  // ht(I + J) >= s + 1
  /// s <= g + 1 and ht(J) >= s imply Kitt = J; std::nullopt when unverified.
  std::optional<bool> small_s_implication;
  std::string arithmetic_residual = "not checked";
};

VerifyReport verify_report(const Representation& rep);

}  // namespace kitt
