#pragma once

#include "kitt/polynomial.hpp"

#include <span>
#include <vector>

namespace kitt::gb {

/// Counters from one Buchberger run.
struct Stats {
  std::size_t pairs_considered = 0;
  std::size_t product_skips = 0;
  std::size_t chain_skips = 0;
  std::size_t reductions_to_zero = 0;
};

/// Reduced Groebner basis of the module spanned by `gens` in the ring
/// `ring`, where each term's component selects a coordinate of the free
/// module (plain ideals use only component 0). Output is monic and sorted by
/// increasing leading term. The ring's modulus is NOT added here; callers
/// that work over R/(Q) supply Q (or Q times unit vectors) explicitly.
///
/// Buchberger with normal selection (smallest lcm degree first), the chain
/// criterion, and the product criterion when every input lives in
/// component 0.
std::vector<Polynomial> reduced_basis(std::vector<Polynomial> gens, const RingPtr& ring,
                                      Stats* stats = nullptr);

/// Remainder of full multivariate division of `f` by the monic `basis`.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis);

/// Division that also records quotients: f = sum q_i * basis_i + remainder.
/// Basis elements need not be monic. Only ring elements (component 0).
Polynomial reduce_with_quotients(const Polynomial& f, std::span<const Polynomial> basis,
                                 std::vector<Polynomial>& quotients);

/// S-polynomial of two elements with leading terms in the same component.
Polynomial spoly(const Polynomial& a, const Polynomial& b);

/// Every S-pair of `basis` reduces to zero (Buchberger's criterion).
bool is_groebner(std::span<const Polynomial> basis);

}  // namespace kitt::gb
