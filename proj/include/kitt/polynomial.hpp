#pragma once

#include "kitt/field.hpp"
#include "kitt/monomial.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kitt {

class PolyRing;
class Polynomial;
using RingPtr = std::shared_ptr<const PolyRing>;

/// k[x_1..x_n] under a fixed term order, optionally read modulo an ideal (Q).
/// Rings are immutable and shared; the modulus generators live in the
/// modulus-free base ring.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
 public:
  static RingPtr make(Field field, std::vector<std::string> vars,
                      MonomialOrder order = MonomialOrder::grevlex());
  /// Same ring with `extra` appended to the modulus.
  static RingPtr with_modulus(const RingPtr& ring, std::vector<Polynomial> extra);

  const Field& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }

  bool has_modulus() const;
  const std::vector<Polynomial>& modulus() const { return modulus_; }
  /// The ring without modulus (this ring itself when there is none).
  RingPtr base() const;

  std::optional<std::size_t> var_index(const std::string& name) const;

  /// Same field, variables and order. The modulus does not affect how
  /// elements are represented, so it is ignored here.
  bool compatible(const PolyRing& other) const {
    return field_ == other.field_ && vars_ == other.vars_ && order_ == other.order_;
  }

  std::string describe() const;

  PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order);

 private:
  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::vector<Polynomial> modulus_;
  RingPtr base_;
};

struct Term {
  Coeff coeff;
  Monomial mono;
};

/// Element of a PolyRing: terms strictly decreasing in the ring order with no
/// zero coefficients. Terms may carry a free-module component (see Monomial);
/// the engine uses this to store vectors as single sorted term lists.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial from_int(RingPtr ring, long long v);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, const Coeff& c, const Monomial& m);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusted constructor: `terms` already canonical.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const;
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& lead_term() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Coeff& lead_coeff() const { return terms_.front().coeff; }

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const Coeff& c) const;
  Polynomial times_term(const Coeff& c, const Monomial& m) const;
  Polynomial pow(unsigned n) const;
  /// Leading coefficient scaled to one (zero stays zero).
  Polynomial monic() const;

  /// Same terms, viewed in another compatible ring (e.g. R versus R/(Q)).
  Polynomial in_ring(RingPtr other) const;

  /// Exact term-by-term equality; rings must be compatible.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Throws RingMismatch unless the two rings are compatible.
void require_compatible(const PolyRing& a, const PolyRing& b);

/// `add`, `sub` or `mul` by name; convenience for table-driven callers.
enum class ArithOp { add, sub, mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

/// Maps variable i of `p` to variable `map[i]` of `target`. Used to move
/// polynomials into rings with extra variables.
Polynomial embed(const Polynomial& p, const RingPtr& target, std::span<const std::size_t> map);

}  // namespace kitt
