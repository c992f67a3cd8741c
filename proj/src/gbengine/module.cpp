#include "kitt/module.hpp"

#include "kitt/error.hpp"
#include "kitt/groebner.hpp"

#include <algorithm>
#include <mutex>

namespace kitt {

bool FreeVector::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::string FreeVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components.size(); ++i) s += (i ? ", " : "") + components[i].to_string();
  return s + ")";
}

FreeVector FreeVector::zero(const RingPtr& ring, std::size_t rank) {
  return FreeVector{std::vector<Polynomial>(rank, Polynomial(ring))};
}

FreeVector FreeVector::unit(const RingPtr& ring, std::size_t rank, std::size_t i) {
  FreeVector v = zero(ring, rank);
  v.components.at(i) = Polynomial::from_int(ring, 1);
  return v;
}

Polynomial pack(const FreeVector& v, const RingPtr& ring, std::size_t offset) {
  if (offset + v.rank() > 0xFFFF) throw DomainError("free module rank too large");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.rank(); ++i) {
    require_compatible(*v.components[i].ring(), *ring);
    const auto c = static_cast<std::uint16_t>(offset + i);
    for (const auto& t : v.components[i].terms()) terms.push_back({t.coeff, t.mono.with_component(c)});
  }
  // position-over-term: concatenation in component order is already sorted
  return Polynomial::from_sorted(ring, std::move(terms));
}

FreeVector unpack(const Polynomial& p, const RingPtr& ring, std::size_t rank, std::size_t offset) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : p.terms()) {
    const std::size_t c = t.mono.component();
    if (c < offset || c >= offset + rank) continue;
    parts[c - offset].push_back({t.coeff, t.mono.with_component(0)});
  }
  FreeVector v;
  v.components.reserve(rank);
  for (auto& part : parts) v.components.push_back(Polynomial::from_sorted(ring, std::move(part)));
  return v;
}

struct Submodule::State {
  RingPtr ring;
  std::size_t rank = 0;
  std::vector<FreeVector> gens;
  std::once_flag once;
  std::vector<Polynomial> gb;
};

Submodule::Submodule(RingPtr ring, std::size_t rank, std::vector<FreeVector> gens)
    : state_(std::make_shared<State>()) {
  for (const auto& g : gens) {
    if (g.rank() != rank) throw DomainError("submodule generator has the wrong rank");
  }
  state_->ring = std::move(ring);
  state_->rank = rank;
  state_->gens = std::move(gens);
}

const RingPtr& Submodule::ring() const { return state_->ring; }
std::size_t Submodule::rank() const { return state_->rank; }
const std::vector<FreeVector>& Submodule::generators() const { return state_->gens; }

const std::vector<Polynomial>& Submodule::groebner_basis() const {
  std::call_once(state_->once, [s = state_.get()] {
    std::vector<Polynomial> packed;
    for (const auto& g : s->gens) packed.push_back(pack(g, s->ring));
    for (const auto& q : s->ring->modulus()) {
      for (std::size_t j = 0; j < s->rank; ++j) {
        FreeVector v = FreeVector::zero(s->ring, s->rank);
        v.components[j] = q.in_ring(s->ring);
        packed.push_back(pack(v, s->ring));
      }
    }
    s->gb = gb::reduced_basis(std::move(packed), s->ring);
  });
  return state_->gb;
}

FreeVector Submodule::normal_form(const FreeVector& v) const {
  if (v.rank() != rank()) throw DomainError("vector rank does not match the submodule");
  return unpack(gb::reduce(pack(v, ring()), groebner_basis()), ring(), rank());
}

bool Submodule::contains(const FreeVector& v) const { return normal_form(v).is_zero(); }

bool module_member(const FreeVector& v, const Submodule& s) { return s.contains(v); }

namespace {

// Basis of the module spanned by (vs[i], e_{m+i}) and Q*e_j, j < m.
std::vector<Polynomial> tagged_basis(const RingPtr& ring, std::size_t m, std::span<const FreeVector> vs) {
  const std::size_t n = vs.size();
  std::vector<Polynomial> packed;
  packed.reserve(n + m * ring->modulus().size());
  for (std::size_t i = 0; i < n; ++i) {
    if (vs[i].rank() != m) throw DomainError("vector rank mismatch");
    Polynomial tag = pack(FreeVector::unit(ring, n, i), ring, m);
    packed.push_back(pack(vs[i], ring) + tag);
  }
  for (const auto& q : ring->modulus()) {
    for (std::size_t j = 0; j < m; ++j) {
      FreeVector v = FreeVector::zero(ring, m);
      v.components[j] = q.in_ring(ring);
      packed.push_back(pack(v, ring));
    }
  }
  return gb::reduced_basis(std::move(packed), ring);
}

}  // namespace

std::vector<FreeVector> syzygies(const RingPtr& ring, std::size_t m, std::span<const FreeVector> vs) {
  const std::size_t n = vs.size();
  if (n == 0) return {};
  std::vector<FreeVector> out;
  for (const auto& g : tagged_basis(ring, m, vs)) {
    // position-over-term: a leading component >= m means the first m coordinates vanish
    if (g.lead_monomial().component() >= m) out.push_back(unpack(g, ring, n, m));
  }
  return out;
}

std::optional<std::vector<Polynomial>> lift(const RingPtr& ring, std::size_t m, std::span<const FreeVector> gens,
                                            const FreeVector& v) {
  if (v.rank() != m) throw DomainError("lift: vector rank mismatch");
  if (v.is_zero()) return std::vector<Polynomial>(gens.size(), Polynomial(ring));
  if (gens.empty()) return std::nullopt;
  Polynomial rem = gb::reduce(pack(v, ring), tagged_basis(ring, m, gens));
  if (!rem.is_zero() && rem.lead_monomial().component() < m) return std::nullopt;
  FreeVector tail = unpack(rem, ring, gens.size(), m);
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (auto& c : tail.components) out.push_back(-c);
  return out;
}

std::vector<FreeVector> syzygies(const RingPtr& ring, std::span<const Polynomial> f) {
  std::vector<FreeVector> vs;
  vs.reserve(f.size());
  for (const auto& p : f) vs.push_back(FreeVector{{p.in_ring(ring)}});
  return syzygies(ring, 1, vs);
}

}  // namespace kitt
