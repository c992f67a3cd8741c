#include "kitt/field.hpp"

#include "kitt/error.hpp"

namespace kitt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !kitt::is_prime(p)) {
    throw DomainError("field characteristic " + std::to_string(p) +
                      " is not a prime below 2^31");
  }
  return Field(Kind::prime, p);
}

Coeff Field::zero() const {
  return is_prime() ? Coeff(std::uint64_t{0}) : Coeff(mpq_class(0));
}

Coeff Field::one() const {
  return is_prime() ? Coeff(std::uint64_t{1}) : Coeff(mpq_class(1));
}

Coeff Field::from_int(long long v) const {
  if (!is_prime()) return Coeff(mpq_class(static_cast<long>(v)));
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += static_cast<long long>(p_);
  return Coeff(static_cast<std::uint64_t>(m));
}

Coeff Field::from_mpz(const mpz_class& v) const {
  if (!is_prime()) return Coeff(mpq_class(v));
  mpz_class m = v % mpz_class(static_cast<unsigned long>(p_));
  if (m < 0) m += static_cast<unsigned long>(p_);
  return Coeff(static_cast<std::uint64_t>(m.get_ui()));
}

Coeff Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (!is_prime()) {
    if (den == 0) throw DomainError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Coeff(std::move(q));
  }
  Coeff d = from_mpz(den);
  if (is_zero(d)) {
    throw DomainError("denominator vanishes in GF(" + std::to_string(p_) + ")");
  }
  return div(from_mpz(num), d);
}

bool Field::is_zero(const Coeff& a) const {
  return is_prime() ? a.residue() == 0 : sgn(a.rational()) == 0;
}

bool Field::is_one(const Coeff& a) const {
  return is_prime() ? a.residue() == 1 : a.rational() == 1;
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (is_prime()) {
    std::uint64_t s = a.residue() + b.residue();
    return Coeff(s >= p_ ? s - p_ : s);
  }
  return Coeff(mpq_class(a.rational() + b.rational()));
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (is_prime()) {
    std::uint64_t x = a.residue(), y = b.residue();
    return Coeff(x >= y ? x - y : x + p_ - y);
  }
  return Coeff(mpq_class(a.rational() - b.rational()));
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (is_prime()) return Coeff((a.residue() * b.residue()) % p_);
  return Coeff(mpq_class(a.rational() * b.rational()));
}

Coeff Field::neg(const Coeff& a) const {
  if (is_prime()) return Coeff(a.residue() == 0 ? 0 : p_ - a.residue());
  return Coeff(mpq_class(-a.rational()));
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw DomainError("division by zero");
  if (!is_prime()) return Coeff(mpq_class(1 / a.rational()));
  // extended Euclid on (a, p)
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p_), new_r = static_cast<long long>(a.residue());
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<long long>(p_);
  return Coeff(static_cast<std::uint64_t>(t));
}

bool Field::prints_negative(const Coeff& a) const {
  if (is_prime()) return a.residue() > p_ / 2;
  return sgn(a.rational()) < 0;
}

std::string Field::to_string(const Coeff& a) const {
  if (is_prime()) {
    std::uint64_t v = a.residue();
    if (v > p_ / 2) return "-" + std::to_string(p_ - v);
    return std::to_string(v);
  }
  return a.rational().get_str();
}

std::string Field::describe() const {
  return is_prime() ? "GF(" + std::to_string(p_) + ")" : "QQ";
}

}  // namespace kitt
