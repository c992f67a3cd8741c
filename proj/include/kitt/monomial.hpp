#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace kitt {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector with a cached total degree. Free-module terms additionally
/// carry a component index; plain ring elements always use component 0.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::span<const int> exponents, std::uint16_t component = 0);

  std::size_t nvars() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  std::uint16_t component() const { return component_; }
  int operator[](std::size_t i) const { return exp_[i]; }
  bool is_one() const { return degree_ == 0; }

  void set_exponent(std::size_t i, int e);
  Monomial with_component(std::uint16_t c) const;

  /// Product; at most one factor may carry a nonzero component.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires divides(b, a). Component of a is kept when b's is 0.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// a | b, including equality of components.
  friend bool divides(const Monomial& a, const Monomial& b);
  /// Least common multiple (components must agree).
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
  std::uint16_t component_ = 0;
  std::uint8_t nvars_ = 0;
};

/// Term order on monomials of a fixed ring. Free-module terms are compared
/// position-over-term with component 0 the most significant position.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  /// Variables [0, split) form an elimination block; each block is grevlex.
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::block, split); }

  Kind kind() const { return kind_; }
  std::size_t block_split() const { return split_; }

  /// Sign of (a - b) in the order, components ignored.
  int compare_monomials(const Monomial& a, const Monomial& b) const;
  /// Sign of (a - b) including the position-over-term component rule.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.component() != b.component()) return a.component() < b.component() ? 1 : -1;
    return compare_monomials(a, b);
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t split) : kind_(kind), split_(split) {}

  Kind kind_;
  std::size_t split_;
};

}  // namespace kitt
