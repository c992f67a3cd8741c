#include "kitt/koszul.hpp"

#include "kitt/error.hpp"
#include "kitt/matrix.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <optional>

namespace kitt {

bool lex_less(IndexSet a, IndexSet b) {
  if (a == b) return false;
  const IndexSet diff = a ^ b;
  const IndexSet low = diff & (~diff + 1);
  return (a & low) != 0;
}

std::vector<IndexSet> index_subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  for (const auto& s : subsets(n, k)) out.push_back(index_set_of(s));
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int sgn_subset(IndexSet j, IndexSet i) {
  const IndexSet rest = i & ~j;
  int inversions = 0;
  for (IndexSet m = j; m; m &= m - 1) {
    const int bit = std::countr_zero(m);
    inversions += std::popcount(rest & ((IndexSet{1} << bit) - 1));
  }
  return inversions % 2 ? -1 : 1;
}

int wedge_sign(IndexSet a, IndexSet b) {
  if (a & b) return 0;
  int inversions = 0;
  for (IndexSet m = b; m; m &= m - 1) {
    const int bit = std::countr_zero(m);
    inversions += std::popcount(a >> bit);
  }
  return inversions % 2 ? -1 : 1;
}

std::vector<std::size_t> index_set_elements(IndexSet s) {
  std::vector<std::size_t> out;
  for (; s; s &= s - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
  return out;
}

IndexSet index_set_of(std::span<const std::size_t> elements) {
  IndexSet s = 0;
  for (auto e : elements) {
    if (e >= kMaxKoszulRank) throw DomainError("index out of range for an exterior basis");
    s |= IndexSet{1} << e;
  }
  return s;
}

std::string index_set_to_string(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (auto e : index_set_elements(s)) {
    out += (first ? "" : ",") + std::to_string(e + 1);
    first = false;
  }
  return out + "}";
}

ExtElement::ExtElement(RingPtr ring, std::size_t rank, std::size_t degree)
    : ring_(std::move(ring)), rank_(rank), degree_(degree) {
  if (rank > kMaxKoszulRank) throw DomainError("exterior algebra rank exceeds " + std::to_string(kMaxKoszulRank));
}

ExtElement ExtElement::basis(RingPtr ring, std::size_t rank, IndexSet l) {
  ExtElement e(ring, rank, static_cast<std::size_t>(std::popcount(l)));
  e.add_term(l, Polynomial::from_int(ring, 1));
  return e;
}

ExtElement ExtElement::scalar(const Polynomial& c, std::size_t rank) {
  ExtElement e(c.ring(), rank, 0);
  e.add_term(0, c);
  return e;
}

Polynomial ExtElement::coeff(IndexSet l) const {
  auto it = coeffs_.find(l);
  return it == coeffs_.end() ? Polynomial(ring_) : it->second;
}

void ExtElement::add_term(IndexSet l, const Polynomial& c) {
  if (static_cast<std::size_t>(std::popcount(l)) != degree_) {
    throw DomainError("basis element " + index_set_to_string(l) + " has the wrong degree");
  }
  if (rank_ < kMaxKoszulRank && (l >> rank_) != 0) {
    throw DomainError("basis element " + index_set_to_string(l) + " exceeds the rank");
  }
  if (c.is_zero()) return;
  require_compatible(*c.ring(), *ring_);
  auto [it, inserted] = coeffs_.try_emplace(l, c.in_ring(ring_));
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

ExtElement ExtElement::operator-() const {
  ExtElement out(ring_, rank_, degree_);
  for (const auto& [l, c] : coeffs_) out.coeffs_.emplace(l, -c);
  return out;
}

namespace {

void require_same_space(const ExtElement& a, const ExtElement& b) {
  require_compatible(*a.ring(), *b.ring());
  if (a.rank() != b.rank()) throw DomainError("exterior elements over different ranks");
}

}  // namespace

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
  require_same_space(a, b);
  if (a.degree() != b.degree()) throw DomainError("sum of exterior elements of different degrees");
  ExtElement out = a;
  for (const auto& [l, c] : b.coeffs()) out.add_term(l, c);
  return out;
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) { return a + (-b); }

ExtElement operator*(const Polynomial& c, const ExtElement& a) {
  ExtElement out(a.ring(), a.rank(), a.degree());
  if (c.is_zero()) return out;
  for (const auto& [l, v] : a.coeffs()) out.add_term(l, c * v);
  return out;
}

bool operator==(const ExtElement& a, const ExtElement& b) {
  return a.rank() == b.rank() && a.degree() == b.degree() && a.coeffs() == b.coeffs();
}

std::string ExtElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [l, c] : coeffs_) {
    std::string basis_name;
    if (degree_ == 1) {
      basis_name = "e" + std::to_string(std::countr_zero(l) + 1);
    } else if (degree_ > 1) {
      basis_name = "e" + index_set_to_string(l);
    }
    std::string coef = c.to_string();
    bool negative = false;
    if (c.size() == 1 && coef.front() == '-') {
      negative = true;
      coef.erase(0, 1);
    }
    std::string term;
    if (basis_name.empty()) {
      term = c.size() > 1 && !out.empty() ? "(" + coef + ")" : coef;
    } else if (c.size() > 1) {
      term = "(" + coef + ")*" + basis_name;
    } else if (coef == "1") {
      term = basis_name;
    } else {
      term = coef + "*" + basis_name;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

ExtElement wedge(const ExtElement& a, const ExtElement& b) {
  require_same_space(a, b);
  ExtElement out(a.ring(), a.rank(), a.degree() + b.degree());
  if (out.degree() > a.rank()) return out;
  for (const auto& [la, ca] : a.coeffs()) {
    for (const auto& [lb, cb] : b.coeffs()) {
      const int s = wedge_sign(la, lb);
      if (s == 0) continue;
      Polynomial p = ca * cb;
      out.add_term(la | lb, s > 0 ? p : -p);
    }
  }
  return out;
}

ExtElement koszul_diff(const ExtElement& a, std::span<const Polynomial> f) {
  if (a.degree() == 0) throw DomainError("the Koszul differential is not defined in degree 0");
  if (f.size() != a.rank()) throw DomainError("sequence length does not match the exterior rank");
  ExtElement out(a.ring(), a.rank(), a.degree() - 1);
  for (const auto& [l, c] : a.coeffs()) {
    int position = 0;
    for (auto j : index_set_elements(l)) {
      if (!f[j].is_zero()) {
        Polynomial p = f[j] * c;
        out.add_term(l & ~(IndexSet{1} << j), position % 2 ? -p : p);
      }
      ++position;
    }
  }
  return out;
}

FreeVector to_vector(const ExtElement& a) {
  const auto basis = index_subsets(a.rank(), a.degree());
  FreeVector v = FreeVector::zero(a.ring(), basis.size());
  for (const auto& [l, c] : a.coeffs()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), l, LexLess{});
    v.components[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return v;
}

ExtElement from_vector(const FreeVector& v, std::size_t rank, std::size_t degree) {
  const auto basis = index_subsets(rank, degree);
  if (v.rank() != basis.size()) throw DomainError("vector length does not match the exterior power");
  if (basis.empty()) throw DomainError("empty exterior power");
  ExtElement e(v.components.front().ring(), rank, degree);
  for (std::size_t k = 0; k < basis.size(); ++k) e.add_term(basis[k], v.components[k]);
  return e;
}

struct KoszulComplex::State {
  RingPtr ring;
  std::vector<Polynomial> f;
  std::vector<std::once_flag> cycle_once;
  std::vector<std::vector<ExtElement>> cycles;
  std::vector<std::once_flag> boundary_once;
  std::vector<std::vector<ExtElement>> boundaries;
  std::vector<std::optional<Submodule>> boundary_modules;

  State(RingPtr r, std::vector<Polynomial> seq)
      : ring(std::move(r)), f(std::move(seq)), cycle_once(f.size() + 1), cycles(f.size() + 1),
        boundary_once(f.size() + 1), boundaries(f.size() + 1), boundary_modules(f.size() + 1) {}
};

KoszulComplex::KoszulComplex(RingPtr ring, std::vector<Polynomial> f) {
  if (f.empty()) throw DomainError("a Koszul complex needs at least one element");
  if (f.size() > kMaxKoszulRank) throw DomainError("too many elements for a Koszul complex");
  for (auto& p : f) {
    require_compatible(*p.ring(), *ring);
    p = p.in_ring(ring);
  }
  state_ = std::make_shared<State>(std::move(ring), std::move(f));
}

const RingPtr& KoszulComplex::ring() const { return state_->ring; }
const std::vector<Polynomial>& KoszulComplex::sequence() const { return state_->f; }
std::size_t KoszulComplex::rank() const { return state_->f.size(); }

const std::vector<ExtElement>& KoszulComplex::cycles(std::size_t i) const {
  const std::size_t r = rank();
  if (i > r) throw DomainError("cycle degree " + std::to_string(i) + " out of range");
  std::call_once(state_->cycle_once[i], [&] {
    auto& out = state_->cycles[i];
    if (i == 0) {
      out.push_back(ExtElement::scalar(Polynomial::from_int(ring(), 1), r));
      return;
    }
    std::vector<FreeVector> cols;
    for (IndexSet l : index_subsets(r, i)) cols.push_back(to_vector(diff(ExtElement::basis(ring(), r, l))));
    for (const auto& v : syzygies(ring(), binomial(r, i - 1), cols)) out.push_back(from_vector(v, r, i));
  });
  return state_->cycles[i];
}

namespace {

void fill_boundaries(const KoszulComplex& c, std::size_t i, std::vector<ExtElement>& out) {
  const std::size_t r = c.rank();
  if (i >= r) return;
  for (IndexSet l : index_subsets(r, i + 1)) out.push_back(c.diff(ExtElement::basis(c.ring(), r, l)));
}

}  // namespace

const std::vector<ExtElement>& KoszulComplex::boundaries(std::size_t i) const {
  if (i >= rank()) throw DomainError("boundary degree " + std::to_string(i) + " out of range");
  boundary_module(i);
  return state_->boundaries[i];
}

const Submodule& KoszulComplex::boundary_module(std::size_t i) const {
  const std::size_t r = rank();
  if (i > r) throw DomainError("boundary degree " + std::to_string(i) + " out of range");
  std::call_once(state_->boundary_once[i], [&] {
    fill_boundaries(*this, i, state_->boundaries[i]);
    std::vector<FreeVector> gens;
    for (const auto& b : state_->boundaries[i]) gens.push_back(to_vector(b));
    state_->boundary_modules[i].emplace(ring(), binomial(r, i), std::move(gens));
  });
  return *state_->boundary_modules[i];
}

std::vector<ExtElement> KoszulComplex::homology_reps(std::size_t i) const {
  const auto& z = cycles(i);
  const auto& b = boundary_module(i);
  std::vector<ExtElement> out;
  for (const auto& c : z) {
    FreeVector nf = b.normal_form(to_vector(c));
    if (nf.is_zero()) continue;
    ExtElement rep = from_vector(nf, rank(), i);
    if (std::find(out.begin(), out.end(), rep) == out.end()) out.push_back(std::move(rep));
  }
  return out;
}

bool annihilates_homology(const KoszulComplex& c, const Polynomial& f0, std::span<const std::size_t> degrees) {
  for (auto i : degrees) {
    const auto& b = c.boundary_module(i);
    for (const auto& z : c.cycles(i)) {
      if (!b.contains(to_vector(f0 * z))) return false;
    }
  }
  return true;
}

namespace {

bool degree_one_generation(const KoszulComplex& c, bool modulo_boundaries) {
  const std::size_t r = c.rank();
  const auto& z1 = c.cycles(1);
  for (std::size_t i = 2; i <= r; ++i) {
    std::vector<FreeVector> gens;
    for (const auto& pick : subsets(z1.size(), i)) {
      ExtElement p = z1[pick[0]];
      for (std::size_t k = 1; k < pick.size(); ++k) p = wedge(p, z1[pick[k]]);
      if (!p.is_zero()) gens.push_back(to_vector(p));
    }
    if (modulo_boundaries) {
      for (const auto& b : c.boundary_module(i).generators()) gens.push_back(b);
    }
    Submodule span(c.ring(), binomial(r, i), std::move(gens));
    for (const auto& z : c.cycles(i)) {
      if (!span.contains(to_vector(z))) return false;
    }
  }
  return true;
}

}  // namespace

bool cycles_generated_in_degree_one(const KoszulComplex& c) { return degree_one_generation(c, false); }
bool homology_generated_in_degree_one(const KoszulComplex& c) { return degree_one_generation(c, true); }

std::pair<ExtElement, ExtElement> split_first_index(const ExtElement& z) {
  if (z.degree() == 0 || z.rank() == 0) throw DomainError("split_first_index needs positive degree and rank");
  ExtElement w(z.ring(), z.rank() - 1, z.degree() - 1);
  ExtElement w_prime(z.ring(), z.rank() - 1, z.degree());
  for (const auto& [l, c] : z.coeffs()) {
    if (l & 1u) {
      w.add_term(l >> 1, c);
    } else {
      w_prime.add_term(l >> 1, c);
    }
  }
  return {w, w_prime};
}

ExtElement join_first_index(const ExtElement& w, const ExtElement& w_prime) {
  require_same_space(w, w_prime);
  if (w.degree() + 1 != w_prime.degree()) throw DomainError("join_first_index: degrees do not fit");
  ExtElement z(w.ring(), w.rank() + 1, w_prime.degree());
  for (const auto& [l, c] : w.coeffs()) z.add_term((l << 1) | 1u, c);
  for (const auto& [l, c] : w_prime.coeffs()) z.add_term(l << 1, c);
  return z;
}

std::optional<ExtElement> boundary_preimage(const KoszulComplex& c, const ExtElement& target) {
  const std::size_t k = target.degree();
  const std::size_t r = c.rank();
  ExtElement out(c.ring(), r, k + 1);
  if (target.is_zero()) return out;
  if (k >= r) return std::nullopt;
  std::vector<FreeVector> gens;
  for (const auto& b : c.boundaries(k)) gens.push_back(to_vector(b));
  auto coeffs = lift(c.ring(), binomial(r, k), gens, to_vector(target));
  if (!coeffs) return std::nullopt;
  const auto basis = index_subsets(r, k + 1);
  for (std::size_t n = 0; n < basis.size(); ++n) out.add_term(basis[n], (*coeffs)[n]);
  return out;
}

}  // namespace kitt
