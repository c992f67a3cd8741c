#include "kitt/polynomial.hpp"

#include "kitt/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace kitt {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

PolyRing::PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {}

RingPtr PolyRing::make(Field field, std::vector<std::string> vars, MonomialOrder order) {
  if (vars.size() > kMaxVars) {
    throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw DomainError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
  if (order.kind() == MonomialOrder::Kind::block &&
      (order.block_split() == 0 || order.block_split() >= vars.size())) {
    throw DomainError("block order split must lie strictly inside the variable list");
  }
  return std::make_shared<const PolyRing>(field, std::move(vars), order);
}

RingPtr PolyRing::with_modulus(const RingPtr& ring, std::vector<Polynomial> extra) {
  RingPtr base = ring->base();
  auto r = std::make_shared<PolyRing>(ring->field_, ring->vars_, ring->order_);
  r->modulus_ = ring->modulus_;
  for (auto& q : extra) {
    require_compatible(*q.ring(), *ring);
    if (!q.is_zero()) r->modulus_.push_back(q.in_ring(base));
  }
  r->base_ = r->modulus_.empty() ? nullptr : base;
  if (r->modulus_.empty()) return base;
  return r;
}

bool PolyRing::has_modulus() const { return !modulus_.empty(); }

RingPtr PolyRing::base() const {
  if (base_) return base_;
  return shared_from_this();
}

std::optional<std::size_t> PolyRing::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

std::string PolyRing::describe() const {
  std::string s = field_.describe() + "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
  s += "]";
  if (has_modulus()) {
    s += "/(";
    for (std::size_t i = 0; i < modulus_.size(); ++i) s += (i ? ", " : "") + modulus_[i].to_string();
    s += ")";
  }
  return s;
}

void require_compatible(const PolyRing& a, const PolyRing& b) {
  if (&a != &b && !a.compatible(b)) {
    throw RingMismatch("ring mismatch: " + a.describe() + " vs " + b.describe());
  }
}

// ---------------------------------------------------------------------------

const Field& Polynomial::field() const { return ring_->field(); }

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({c, Monomial(ring->nvars())});
  return p;
}

Polynomial Polynomial::from_int(RingPtr ring, long long v) {
  Coeff c = ring->field().from_int(v);
  return constant(std::move(ring), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw DomainError("variable index out of range");
  Monomial m(ring->nvars());
  m.set_exponent(index, 1);
  Polynomial p(ring);
  p.terms_.push_back({ring->field().one(), m});
  return p;
}

Polynomial Polynomial::term(RingPtr ring, const Coeff& c, const Monomial& m) {
  Polynomial p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  const auto& field = ring->field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && field.is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && field.is_zero(out.back().coeff)) out.pop_back();
  return from_sorted(std::move(ring), std::move(out));
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].mono.component() == 0 &&
         field().is_one(terms_[0].coeff);
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({field().neg(t.coeff), t.mono});
  return p;
}

namespace {

// Merge a + sign*b for canonical term lists.
std::vector<Term> merge(const PolyRing& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
  const auto& order = ring.order();
  const auto& field = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = order.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({subtract ? field.neg(b[j].coeff) : b[j].coeff, b[j].mono});
      ++j;
    } else {
      Coeff s = subtract ? field.sub(a[i].coeff, b[j].coeff) : field.add(a[i].coeff, b[j].coeff);
      if (!field.is_zero(s)) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({subtract ? field.neg(b[j].coeff) : b[j].coeff, b[j].mono});
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_compatible(*a.ring_, *b.ring_);
  return Polynomial::from_sorted(a.ring_, merge(*a.ring_, a.terms_, b.terms_, false));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_compatible(*a.ring_, *b.ring_);
  return Polynomial::from_sorted(a.ring_, merge(*a.ring_, a.terms_, b.terms_, true));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_compatible(*a.ring_, *b.ring_);
  const auto& field = a.field();
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.size() == 1) return a.times_term(b.terms_[0].coeff, b.terms_[0].mono);
  if (a.size() == 1) return b.times_term(a.terms_[0].coeff, a.terms_[0].mono).in_ring(a.ring_);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({field.mul(s.coeff, t.coeff), s.mono * t.mono});
  }
  return Polynomial::from_terms(a.ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  const auto& f = field();
  if (f.is_zero(c)) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({f.mul(t.coeff, c), t.mono});
  return p;
}

Polynomial Polynomial::times_term(const Coeff& c, const Monomial& m) const {
  const auto& f = field();
  if (f.is_zero(c)) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves the order (components shift uniformly)
  for (const auto& t : terms_) p.terms_.push_back({f.mul(t.coeff, c), t.mono * m});
  return p;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = from_int(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || field().is_one(lead_coeff())) return *this;
  return scaled(field().inv(lead_coeff()));
}

Polynomial Polynomial::in_ring(RingPtr other) const {
  require_compatible(*ring_, *other);
  Polynomial p(std::move(other));
  p.terms_ = terms_;
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  require_compatible(*a.ring_, *b.ring_);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& f = field();
  const auto& vars = ring_->vars();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = f.prints_negative(t.coeff);
    Coeff mag = neg ? f.neg(t.coeff) : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (t.mono.component() != 0) {
      if (!mono.empty()) mono += "*";
      mono += "<" + std::to_string(t.mono.component()) + ">";
    }
    if (mono.empty()) {
      out += f.to_string(mag);
    } else if (f.is_one(mag)) {
      out += mono;
    } else {
      out += f.to_string(mag) + "*" + mono;
    }
  }
  return out;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  return a;
}

Polynomial embed(const Polynomial& p, const RingPtr& target, std::span<const std::size_t> map) {
  if (map.size() != p.ring()->nvars()) throw DomainError("embedding map has wrong length");
  if (!(p.field() == target->field())) throw RingMismatch("embedding across different fields");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (t.mono[i]) m.set_exponent(map[i], t.mono[i]);
    }
    terms.push_back({t.coeff, m.with_component(t.mono.component())});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace kitt
