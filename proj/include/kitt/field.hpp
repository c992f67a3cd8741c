#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace kitt {

/// A field element. Prime-field residues live in [0, p); rationals are
/// kept in lowest terms with positive denominator.
class Coeff {
 public:
  Coeff() = default;
  explicit Coeff(std::uint64_t residue) : value_(residue) {}
  explicit Coeff(mpq_class q) : value_(std::move(q)) {}

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  friend bool operator==(const Coeff&, const Coeff&) = default;

 private:
  std::variant<std::uint64_t, mpq_class> value_{std::uint64_t{0}};
};

/// Coefficient field: either Q or GF(p).
class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  /// Throws DomainError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_prime() const { return kind_ == Kind::prime; }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(long long v) const;
  Coeff from_mpz(const mpz_class& v) const;
  /// num/den; throws DomainError when den vanishes in the field.
  Coeff from_fraction(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;
  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  /// Throws DomainError on zero.
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  /// Prime residues print in the symmetric range (-p/2, p/2].
  std::string to_string(const Coeff& a) const;
  /// Negative with respect to the printed form.
  bool prints_negative(const Coeff& a) const;

  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace kitt
