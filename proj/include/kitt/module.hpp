#pragma once

#include "kitt/polynomial.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kitt {

/// Element of the free module R^m.
struct FreeVector {
  std::vector<Polynomial> components;

  std::size_t rank() const { return components.size(); }
  bool is_zero() const;
  std::string to_string() const;

  static FreeVector zero(const RingPtr& ring, std::size_t rank);
  static FreeVector unit(const RingPtr& ring, std::size_t rank, std::size_t i);

  friend bool operator==(const FreeVector&, const FreeVector&) = default;
};

/// Single term list with component i holding coordinate i (0 = most
/// significant under position-over-term).
Polynomial pack(const FreeVector& v, const RingPtr& ring, std::size_t offset = 0);
/// Inverse of pack for components [offset, offset + rank).
FreeVector unpack(const Polynomial& p, const RingPtr& ring, std::size_t rank, std::size_t offset = 0);

/// Submodule of R^m spanned by generators, read modulo Q*R^m when the ring
/// has a modulus. Same caching contract as Ideal.
class Submodule {
 public:
  Submodule(RingPtr ring, std::size_t rank, std::vector<FreeVector> gens);

  const RingPtr& ring() const;
  std::size_t rank() const;
  const std::vector<FreeVector>& generators() const;
  /// Packed reduced basis under position-over-term; includes Q times unit vectors.
  const std::vector<Polynomial>& groebner_basis() const;

  FreeVector normal_form(const FreeVector& v) const;
  bool contains(const FreeVector& v) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// v ∈ S + Q*R^m. Throws DomainError on rank mismatch.
bool module_member(const FreeVector& v, const Submodule& s);

/// Generators of the kernel of R^n -> R^m, e_i -> vs[i], computed over
/// R/(Q) when the ring has a modulus (lifted to R^n). Uses a module
/// Groebner basis of (vs[i], e_i) with the first m coordinates dominant.
std::vector<FreeVector> syzygies(const RingPtr& ring, std::size_t m, std::span<const FreeVector> vs);

/// Coefficients c with sum c_i * gens[i] = v (modulo Q*R^m when the ring has
/// a modulus), or std::nullopt when v is not in the span. Found by reducing v
/// against a module Groebner basis that tracks generator coordinates.
std::optional<std::vector<Polynomial>> lift(const RingPtr& ring, std::size_t m, std::span<const FreeVector> gens,
                                            const FreeVector& v);

/// Syzygies of a sequence of ring elements (columns of rank 1).
std::vector<FreeVector> syzygies(const RingPtr& ring, std::span<const Polynomial> f);

}  // namespace kitt
