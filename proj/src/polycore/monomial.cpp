#include "kitt/monomial.hpp"

#include "kitt/error.hpp"

#include <algorithm>
#include <limits>

namespace kitt {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) {
    throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
}

Monomial::Monomial(std::span<const int> exponents, std::uint16_t component)
    : Monomial(exponents.size()) {
  component_ = component;
  for (std::size_t i = 0; i < exponents.size(); ++i) set_exponent(i, exponents[i]);
}

void Monomial::set_exponent(std::size_t i, int e) {
  if (e < 0 || e > std::numeric_limits<std::uint16_t>::max()) {
    throw DomainError("exponent out of range");
  }
  degree_ = degree_ - exp_[i] + static_cast<std::uint32_t>(e);
  exp_[i] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::with_component(std::uint16_t c) const {
  Monomial m = *this;
  m.component_ = c;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp_[i] += b.exp_[i];
  m.degree_ += b.degree_;
  m.component_ = a.component_ + b.component_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp_[i] -= b.exp_[i];
  m.degree_ -= b.degree_;
  m.component_ = a.component_ - b.component_;
  return m;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.component_ != b.component_ || a.degree_ > b.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp_[i] > b.exp_[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    deg += m.exp_[i];
  }
  m.degree_ = deg;
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp_[i] != 0 && b.exp_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = component_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u ^ exp_[i];
  return h;
}

namespace {

// grevlex restricted to variables [lo, hi)
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare_monomials(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  switch (kind_) {
    case Kind::grevlex: {
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
    case Kind::lex: {
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    }
    case Kind::block: {
      int c = grevlex_range(a, b, 0, split_);
      if (c != 0) return c;
      return grevlex_range(a, b, split_, n);
    }
  }
  return 0;
}

}  // namespace kitt
