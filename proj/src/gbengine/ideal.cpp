#include "kitt/ideal.hpp"

#include "kitt/error.hpp"
#include "kitt/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <numeric>

namespace kitt {

struct Ideal::State {
  RingPtr ring;
  std::vector<Polynomial> gens;
  std::once_flag once;
  std::vector<Polynomial> gb;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : state_(std::make_shared<State>()) {
  for (auto& g : gens) {
    require_compatible(*g.ring(), *ring);
    g = g.in_ring(ring);
  }
  state_->ring = std::move(ring);
  state_->gens = std::move(gens);
}

const RingPtr& Ideal::ring() const { return state_->ring; }
const std::vector<Polynomial>& Ideal::generators() const { return state_->gens; }

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(state_->once, [s = state_.get()] { s->gb = groebner(s->gens, s->ring); });
  return state_->gb;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  require_compatible(*f.ring(), *ring());
  return gb::reduce(f.in_ring(ring()), groebner_basis());
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_unit() const {
  const auto& basis = groebner_basis();
  return basis.size() == 1 && basis.front().is_constant();
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  require_compatible(*a.ring(), *b.ring());
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(gens));
}

Ideal Ideal::in_ring(const RingPtr& ring) const { return Ideal(ring, generators()); }

std::vector<Polynomial> groebner(std::span<const Polynomial> gens, const RingPtr& ring) {
  std::vector<Polynomial> all;
  all.reserve(gens.size() + ring->modulus().size());
  for (const auto& g : gens) all.push_back(g);
  for (const auto& q : ring->modulus()) all.push_back(q);
  return gb::reduced_basis(std::move(all), ring);
}

Polynomial normal_form(const Polynomial& f, const Ideal& a) { return a.normal_form(f); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_compatible(*a.ring(), *b.ring());
  return a.contains(b) && b.contains(a);
}

RingPtr ring_with_extra_variable(const RingPtr& ring, bool front) {
  std::string name = "_t";
  while (ring->var_index(name)) name += "_";
  std::vector<std::string> vars = ring->vars();
  if (front) {
    vars.insert(vars.begin(), name);
    return PolyRing::make(ring->field(), std::move(vars), MonomialOrder::block(1));
  }
  vars.push_back(name);
  return PolyRing::make(ring->field(), std::move(vars), ring->order());
}

namespace {

std::vector<std::size_t> shift_map(std::size_t n, std::size_t by) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), by);
  return map;
}

// Drops variable 0 (which must not occur) and maps back into `target`.
Polynomial drop_front_variable(const Polynomial& p, const RingPtr& target) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < target->nvars(); ++i) {
      if (t.mono[i + 1]) m.set_exponent(i, t.mono[i + 1]);
    }
    terms.push_back({t.coeff, m});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

std::vector<Polynomial> with_modulus_gens(const Ideal& a) {
  std::vector<Polynomial> gens = a.generators();
  for (const auto& q : a.ring()->modulus()) gens.push_back(q);
  return gens;
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_compatible(*a.ring(), *b.ring());
  const RingPtr& ring = a.ring();
  RingPtr base = ring->base();
  RingPtr ext = ring_with_extra_variable(base, true);
  const auto map = shift_map(ring->nvars(), 1);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::from_int(ext, 1) - t;

  std::vector<Polynomial> gens;
  for (const auto& g : with_modulus_gens(a)) gens.push_back(t * embed(g, ext, map));
  for (const auto& g : with_modulus_gens(b.in_ring(ring))) gens.push_back(one_minus_t * embed(g, ext, map));
  std::vector<Polynomial> out;
  for (const auto& g : gb::reduced_basis(std::move(gens), ext)) {
    // block order: t-free leading term means the whole element is t-free
    if (g.lead_monomial()[0] == 0) out.push_back(drop_front_variable(g, base).in_ring(ring));
  }
  return Ideal(ring, std::move(out));
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& f) {
  if (f.is_zero()) throw InternalError("exact division by zero");
  std::vector<Polynomial> q;
  const std::vector<Polynomial> divisor{f};
  Polynomial rem = gb::reduce_with_quotients(p, divisor, q);
  if (!rem.is_zero()) {
    throw InternalError("exact division failed: " + f.to_string() + " does not divide " + p.to_string());
  }
  return q.front();
}

Ideal colon(const Ideal& a, const Polynomial& f) {
  const RingPtr& ring = a.ring();
  Polynomial g = f.in_ring(ring);
  if (a.contains(g)) return Ideal(ring, {Polynomial::from_int(ring, 1)});
  RingPtr base = ring->base();
  Polynomial gb_ = g.in_ring(base);
  Ideal lifted(base, with_modulus_gens(a));
  Ideal meet = intersect(lifted, Ideal(base, {gb_}));
  std::vector<Polynomial> out;
  for (const auto& h : meet.groebner_basis()) out.push_back(divide_exact(h, gb_).in_ring(ring));
  return Ideal(ring, std::move(out));
}

Ideal colon(const Ideal& a, const Ideal& i) {
  require_compatible(*a.ring(), *i.ring());
  std::optional<Ideal> acc;
  for (const auto& g : i.generators()) {
    if (g.is_zero()) continue;
    Ideal c = colon(a, g);
    acc = acc ? intersect(*acc, c) : c;
  }
  if (!acc) return Ideal(a.ring(), {Polynomial::from_int(a.ring(), 1)});
  return *acc;
}

bool radical_member(const Polynomial& f, const Ideal& a) {
  const RingPtr& ring = a.ring();
  RingPtr ext = ring_with_extra_variable(ring->base(), false);
  const auto map = shift_map(ring->nvars(), 0);
  std::vector<Polynomial> gens;
  for (const auto& g : with_modulus_gens(a)) gens.push_back(embed(g, ext, map));
  Polynomial t = Polynomial::variable(ext, ring->nvars());
  gens.push_back(Polynomial::from_int(ext, 1) - t * embed(f.in_ring(ring), ext, map));
  auto basis = gb::reduced_basis(std::move(gens), ext);
  return basis.size() == 1 && basis.front().is_constant();
}

std::vector<Monomial> leading_monomials(const Ideal& a) {
  std::vector<Monomial> out;
  for (const auto& g : a.groebner_basis()) out.push_back(g.lead_monomial());
  return out;
}

int monomial_dimension(std::span<const Monomial> gens, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& m : gens) {
    if (m.is_one()) return -1;
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (m[i]) s |= 1u << i;
    }
    supports.push_back(s);
  }
  int best = 0;
  const std::uint32_t limit = 1u << nvars;
  for (std::uint32_t u = 0; u < limit; ++u) {
    const int size = std::popcount(u);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [u](std::uint32_t s) { return (s & ~u) == 0; });
    if (independent) best = size;
  }
  return best;
}

int dim_quotient(const Ideal& a) {
  auto lms = leading_monomials(a);
  return monomial_dimension(lms, a.ring()->nvars());
}

std::optional<int> height(const Ideal& a) {
  if (a.ring()->has_modulus()) return std::nullopt;
  const int d = dim_quotient(a);
  const int n = static_cast<int>(a.ring()->nvars());
  return d < 0 ? n + 1 : n - d;
}

namespace {

using Series = std::vector<long long>;

Series series_mul(const Series& a, const Series& b) {
  Series out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void series_add_shifted(Series& acc, const Series& b, std::size_t shift) {
  if (acc.size() < b.size() + shift) acc.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) acc[i + shift] += b[i];
}

void trim(Series& s) {
  while (s.size() > 1 && s.back() == 0) s.pop_back();
}

std::vector<Monomial> minimize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& k) { return divides(k, m); });
    if (!redundant) out.push_back(m);
  }
  return out;
}

Series numerator(std::vector<Monomial> gens) {
  gens = minimize(std::move(gens));
  if (gens.empty()) return {1};
  const std::size_t n = gens.front().nvars();

  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
    }
  }
  if (pairwise_coprime) {
    Series acc{1};
    for (const auto& m : gens) {
      Series factor(m.degree() + 1, 0);
      factor[0] = 1;
      factor[m.degree()] -= 1;
      acc = series_mul(acc, factor);
    }
    return acc;
  }

  // pivot on the variable occurring in the most generators
  std::vector<int> counts(n, 0);
  for (const auto& m : gens) {
    for (std::size_t i = 0; i < n; ++i) counts[i] += m[i] > 0;
  }
  const auto var = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
  Monomial p(n);
  p.set_exponent(var, 1);

  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> quot;
  quot.reserve(gens.size());
  for (const auto& m : gens) {
    Monomial q = m;
    if (q[var] > 0) q.set_exponent(var, q[var] - 1);
    quot.push_back(q);
  }
  Series out = numerator(std::move(plus));
  series_add_shifted(out, numerator(std::move(quot)), 1);
  trim(out);
  return out;
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

HilbertNumerator monomial_hilbert_numerator(std::vector<Monomial> gens) {
  Series s = numerator(std::move(gens));
  trim(s);
  return HilbertNumerator{std::move(s)};
}

HilbertNumerator hilbert_series(const Ideal& a) {
  if (a.ring()->has_modulus()) throw DomainError("hilbert_series requires a ring without modulus");
  for (const auto& g : a.generators()) {
    if (!g.is_homogeneous()) throw DomainError("hilbert_series requires homogeneous generators");
  }
  auto lms = leading_monomials(a);
  if (lms.empty()) return HilbertNumerator{{1}};
  return monomial_hilbert_numerator(std::move(lms));
}

std::string HilbertNumerator::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    long long c = coeffs[d];
    if (c == 0) continue;
    const long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono = d == 0 ? "" : (d == 1 ? var : var + "^" + std::to_string(d));
    if (mono.empty()) {
      out += std::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += std::to_string(mag) + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<long long> HilbertNumerator::hilbert_function(std::size_t nvars, std::size_t max_degree) const {
  std::vector<long long> h(max_degree + 1, 0);
  const auto n = static_cast<long long>(nvars);
  for (std::size_t d = 0; d <= max_degree; ++d) {
    long long v = 0;
    for (std::size_t k = 0; k < coeffs.size() && k <= d; ++k) {
      const auto rest = static_cast<long long>(d - k);
      v += coeffs[k] * (n == 0 ? (rest == 0 ? 1 : 0) : binomial(rest + n - 1, n - 1));
    }
    h[d] = v;
  }
  return h;
}

}  // namespace kitt
