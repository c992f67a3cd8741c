#pragma once

#include "kitt/module.hpp"
#include "kitt/polynomial.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kitt {

/// Subset of {0..31} as a bit mask; bit i stands for the basis vector e_{i+1}.
using IndexSet = std::uint32_t;

inline constexpr std::size_t kMaxKoszulRank = 31;

/// Lexicographic order on sorted element lists of equal size.
bool lex_less(IndexSet a, IndexSet b);

struct LexLess {
  bool operator()(IndexSet a, IndexSet b) const { return lex_less(a, b); }
};

/// k-element subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> index_subsets(std::size_t n, std::size_t k);
std::size_t binomial(std::size_t n, std::size_t k);

/// Sign of the permutation of I that moves the elements of J (a subset of I)
/// to the front, keeping relative orders.
int sgn_subset(IndexSet j, IndexSet i);
/// e_a ∧ e_b = wedge_sign(a, b) * e_{a ∪ b}; 0 when a and b meet.
int wedge_sign(IndexSet a, IndexSet b);
/// "{1,3}" with 1-based indices.
std::string index_set_to_string(IndexSet s);
std::vector<std::size_t> index_set_elements(IndexSet s);
IndexSet index_set_of(std::span<const std::size_t> elements);

/// Homogeneous element of the exterior algebra over R^rank.
class ExtElement {
 public:
  using Coeffs = std::map<IndexSet, Polynomial, LexLess>;

  ExtElement(RingPtr ring, std::size_t rank, std::size_t degree);

  static ExtElement basis(RingPtr ring, std::size_t rank, IndexSet l);
  static ExtElement scalar(const Polynomial& c, std::size_t rank);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  std::size_t degree() const { return degree_; }
  const Coeffs& coeffs() const { return coeffs_; }
  Polynomial coeff(IndexSet l) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c * e_l.
  void add_term(IndexSet l, const Polynomial& c);

  ExtElement operator-() const;
  friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator*(const Polynomial& c, const ExtElement& a);
  friend bool operator==(const ExtElement& a, const ExtElement& b);

  /// "x*e1 - y*e2", "(x + y)*e{1,2}", or "0".
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rank_;
  std::size_t degree_;
  Coeffs coeffs_;
};

ExtElement wedge(const ExtElement& a, const ExtElement& b);

/// Koszul differential for the sequence f (one entry per basis vector):
/// ∂(e_L) = Σ_{j∈L} sgn({j} ⊆ L) f_j e_{L∖j}. Throws DomainError on degree 0.
ExtElement koszul_diff(const ExtElement& a, std::span<const Polynomial> f);

/// Coordinates in the lexicographic basis of subsets of size degree().
FreeVector to_vector(const ExtElement& a);
ExtElement from_vector(const FreeVector& v, std::size_t rank, std::size_t degree);

/// K_•(f; R) with lazily computed cycle and boundary bases, each computed at
/// most once per complex value (copies share the cache).
class KoszulComplex {
 public:
  KoszulComplex(RingPtr ring, std::vector<Polynomial> f);

  const RingPtr& ring() const;
  const std::vector<Polynomial>& sequence() const;
  std::size_t rank() const;

  ExtElement diff(const ExtElement& a) const { return koszul_diff(a, sequence()); }

  /// Generators of Z_i, 0 <= i <= r. Raw syzygy output (not minimized).
  const std::vector<ExtElement>& cycles(std::size_t i) const;
  /// ∂(e_L) for |L| = i + 1 in lexicographic order, 0 <= i <= r - 1.
  const std::vector<ExtElement>& boundaries(std::size_t i) const;
  /// B_i as a submodule of K_i (zero for i = r).
  const Submodule& boundary_module(std::size_t i) const;
  /// Normal forms of the cycle generators modulo B_i, zeros discarded.
  std::vector<ExtElement> homology_reps(std::size_t i) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// f0 * z ∈ B_i for every generator z of Z_i and every i in `degrees`.
bool annihilates_homology(const KoszulComplex& c, const Polynomial& f0, std::span<const std::size_t> degrees);

/// Every generator of Z_i is an R-combination of i-fold wedge products of
/// generators of Z_1, for all i.
bool cycles_generated_in_degree_one(const KoszulComplex& c);
/// The same modulo boundaries: H_•(f; R) is generated by H_1.
bool homology_generated_in_degree_one(const KoszulComplex& c);

/// Splits z ∈ K_i(f0, f) (index 0 is e_0) as e_0 ∧ w + w', returning (w, w')
/// in the exterior algebra over the remaining r indices.
std::pair<ExtElement, ExtElement> split_first_index(const ExtElement& z);
/// Inverse of split_first_index.
ExtElement join_first_index(const ExtElement& w, const ExtElement& w_prime);
/// Some w' with ∂(w') = target, or std::nullopt when target is not a
/// boundary. With target = -f0 * w this builds the cycle e_0 ∧ w + w'.
std::optional<ExtElement> boundary_preimage(const KoszulComplex& c, const ExtElement& target);

}  // namespace kitt
