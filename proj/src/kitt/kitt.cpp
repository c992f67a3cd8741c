#include "kitt/kitt.hpp"

#include "kitt/error.hpp"

#include <algorithm>
#include <functional>

namespace kitt {

namespace {

bool zero_mod_q(const Polynomial& p, const RingPtr& ring) {
  if (p.is_zero()) return true;
  if (!ring->has_modulus()) return false;
  return Ideal(ring).contains(p);
}

PolyMatrix matrix_in_ring(const PolyMatrix& m, const RingPtr& ring) {
  std::vector<Polynomial> entries;
  entries.reserve(m.entries().size());
  for (const auto& e : m.entries()) entries.push_back(e.in_ring(ring));
  return PolyMatrix(ring, m.rows(), m.cols(), std::move(entries));
}

std::vector<Polynomial> polys_in_ring(const std::vector<Polynomial>& ps, const RingPtr& ring) {
  std::vector<Polynomial> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.in_ring(ring));
  return out;
}

IndexSet full_set(std::size_t r) { return r == 32 ? ~IndexSet{0} : (IndexSet{1} << r) - 1; }

// coefficient of e_{1..r} in a ∧ b, without forming the whole product
Polynomial top_coefficient(const ExtElement& a, const ExtElement& b, IndexSet full) {
  Polynomial out(a.ring());
  for (const auto& [la, ca] : a.coeffs()) {
    IndexSet rest = full & ~la;
    auto it = b.coeffs().find(rest);
    if (it == b.coeffs().end()) continue;
    const Polynomial prod = ca * it->second;
    out += wedge_sign(la, rest) > 0 ? prod : -prod;
  }
  return out;
}

std::vector<std::size_t> one_based(IndexSet s) {
  auto v = index_set_elements(s);
  for (auto& x : v) ++x;
  return v;
}

}  // namespace

Representation::Representation(RingPtr ring, std::vector<Polynomial> f, std::vector<Polynomial> a, PolyMatrix phi)
    : ring_(std::move(ring)),
      f_(polys_in_ring(f, ring_)),
      a_(polys_in_ring(a, ring_)),
      phi_(matrix_in_ring(phi, ring_)) {
  if (f_.empty()) throw DomainError("I needs at least one generator");
  if (f_.size() > kMaxKoszulRank) throw DomainError("too many generators of I");
  if (phi_.rows() != f_.size() || phi_.cols() != a_.size()) {
    throw DomainError("phi must be " + std::to_string(f_.size()) + "x" + std::to_string(a_.size()) + ", got " +
                      std::to_string(phi_.rows()) + "x" + std::to_string(phi_.cols()));
  }
  for (std::size_t j = 0; j < a_.size(); ++j) {
    Polynomial sum(ring_);
    for (std::size_t i = 0; i < f_.size(); ++i) sum += phi_(i, j) * f_[i];
    if (!zero_mod_q(sum - a_[j], ring_)) {
      throw DomainError("column " + std::to_string(j + 1) + " of phi does not express a_" + std::to_string(j + 1));
    }
  }
}

Representation Representation::with_found_phi(RingPtr ring, std::vector<Polynomial> f, std::vector<Polynomial> a) {
  PolyMatrix phi = find_phi(ring, f, a);
  return Representation(std::move(ring), std::move(f), std::move(a), std::move(phi));
}

Representation Representation::in_ring(const RingPtr& ring) const { return Representation(ring, f_, a_, phi_); }

PolyMatrix find_phi(const RingPtr& ring, const std::vector<Polynomial>& f, const std::vector<Polynomial>& a) {
  std::vector<FreeVector> gens;
  for (const auto& p : f) gens.push_back(FreeVector{{p.in_ring(ring)}});
  PolyMatrix phi(ring, f.size(), a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    auto c = lift(ring, 1, gens, FreeVector{{a[j].in_ring(ring)}});
    if (!c) throw DomainError("a_" + std::to_string(j + 1) + " is not in I");
    for (std::size_t i = 0; i < f.size(); ++i) phi(i, j) = (*c)[i];
  }
  return phi;
}

std::vector<ExtElement> zeta_elements(const Representation& rep) {
  std::vector<ExtElement> out;
  for (std::size_t j = 0; j < rep.s(); ++j) {
    ExtElement z(rep.ring(), rep.r(), 1);
    for (std::size_t i = 0; i < rep.r(); ++i) z.add_term(IndexSet{1} << i, rep.phi()(i, j));
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<ExtElement> gamma_basis(const Representation& rep, std::size_t k) {
  if (k > rep.r()) throw DomainError("gamma degree " + std::to_string(k) + " exceeds r = " + std::to_string(rep.r()));
  if (k == 0) return {ExtElement::scalar(Polynomial::from_int(rep.ring(), 1), rep.r())};
  if (k > rep.s()) return {};
  const auto zetas = zeta_elements(rep);
  std::vector<ExtElement> out;
  for (IndexSet l : index_subsets(rep.s(), k)) {
    auto idx = index_set_elements(l);
    ExtElement acc = zetas[idx[0]];
    for (std::size_t t = 1; t < idx.size(); ++t) acc = wedge(acc, zetas[idx[t]]);
    out.push_back(std::move(acc));
  }
  return out;
}

std::string KittProvenance::to_string() const {
  std::string out = "L1={";
  bool first = true;
  for (auto x : one_based(l1)) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "} z=Z" + std::to_string(cycle_degree) + "[" + std::to_string(cycle_index) + "]";
}

KittResult kitt_ideal(const Representation& rep) { return kitt_ideal(rep, KoszulComplex(rep.ring(), rep.f())); }

KittResult kitt_ideal(const Representation& rep, const KoszulComplex& koszul) {
  const std::size_t r = rep.r();
  const std::size_t s = rep.s();
  const IndexSet full = full_set(r);
  std::vector<Polynomial> gens;
  std::vector<KittProvenance> prov;
  for (std::size_t j = r > s ? r - s : 0; j <= r; ++j) {
    const auto gammas = gamma_basis(rep, r - j);
    const auto subsets = r - j == 0 ? std::vector<IndexSet>{0} : index_subsets(s, r - j);
    const auto& cycles = koszul.cycles(j);
    for (std::size_t l = 0; l < gammas.size(); ++l) {
      for (std::size_t c = 0; c < cycles.size(); ++c) {
        Polynomial g = top_coefficient(gammas[l], cycles[c], full);
        if (zero_mod_q(g, rep.ring())) continue;
        gens.push_back(std::move(g));
        prov.push_back({subsets[l], j, c});
      }
    }
  }
  Ideal ideal(rep.ring(), gens);
  return {std::move(gens), std::move(prov), std::move(ideal)};
}

Ideal kitt_via_homology(const Representation& rep) {
  return kitt_via_homology(rep, KoszulComplex(rep.ring(), rep.f()));
}

Ideal kitt_via_homology(const Representation& rep, const KoszulComplex& koszul) {
  return kitt_via_homology(rep, [&](std::size_t d) { return koszul.homology_reps(d); });
}

Ideal kitt_via_homology(const Representation& rep, const HomologyChoice& choice) {
  const auto r = static_cast<long>(rep.r());
  const auto s = static_cast<long>(rep.s());
  long g = 0;
  if (!rep.ring()->has_modulus()) g = height(rep.i_ideal()).value_or(0);
  const long lo = std::max(0L, r - s);
  const long hi = r - g;
  const IndexSet full = full_set(rep.r());

  std::vector<Polynomial> gens = rep.a();
  if (hi < lo) return Ideal(rep.ring(), gens);

  struct Rep {
    std::size_t degree;
    ExtElement value;
  };
  std::vector<Rep> reps;
  for (long d = 1; d <= hi; ++d) {
    for (auto& h : choice(static_cast<std::size_t>(d))) reps.push_back({static_cast<std::size_t>(d), h});
  }

  auto add_products = [&](const ExtElement& h, std::size_t j) {
    for (const auto& gamma : gamma_basis(rep, rep.r() - j)) {
      Polynomial c = top_coefficient(gamma, h, full);
      if (!zero_mod_q(c, rep.ring())) gens.push_back(std::move(c));
    }
  };

  for (long j = lo; j <= hi; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    if (ju == 0) {
      for (const auto& h : choice(0)) add_products(h, 0);
      continue;
    }
    // wedge products of representatives with total degree j, indices non-decreasing
    std::function<void(std::size_t, std::size_t, const ExtElement*)> walk = [&](std::size_t start, std::size_t left,
                                                                              const ExtElement* acc) {
      if (left == 0) {
        if (acc && !acc->is_zero()) add_products(*acc, ju);
        return;
      }
      for (std::size_t t = start; t < reps.size(); ++t) {
        if (reps[t].degree > left) continue;
        ExtElement next = acc ? wedge(*acc, reps[t].value) : reps[t].value;
        if (next.is_zero()) continue;
        walk(t, left - reps[t].degree, &next);
      }
    };
    walk(0, ju, nullptr);
  }
  return Ideal(rep.ring(), gens);
}

Ideal fitting_ideal(const Representation& rep) {
  const RingPtr& ring = rep.ring();
  const auto syz = syzygies(ring, std::span<const Polynomial>(rep.f()));
  const std::size_t r = rep.r();
  PolyMatrix psi(ring, r, syz.size());
  for (std::size_t c = 0; c < syz.size(); ++c) {
    for (std::size_t i = 0; i < r; ++i) psi(i, c) = syz[c].components[i];
  }
  PolyMatrix m = PolyMatrix::hconcat(rep.phi(), psi);
  if (m.cols() < r) return Ideal(ring);
  std::vector<Polynomial> gens;
  for (auto& p : minors(m, r)) {
    if (!zero_mod_q(p, ring)) gens.push_back(std::move(p));
  }
  return Ideal(ring, std::move(gens));
}

Ideal gamma_boundary_ideal(const Representation& rep, const KoszulComplex& koszul) {
  const std::size_t r = rep.r();
  const std::size_t s = rep.s();
  const IndexSet full = full_set(r);
  std::vector<Polynomial> gens;
  for (std::size_t k = r > s ? r - s : 0; k < r; ++k) {
    const auto gammas = gamma_basis(rep, r - k);
    for (const auto& b : koszul.boundaries(k)) {
      for (const auto& gamma : gammas) {
        Polynomial c = top_coefficient(gamma, b, full);
        if (!zero_mod_q(c, rep.ring())) gens.push_back(std::move(c));
      }
    }
  }
  return Ideal(rep.ring(), std::move(gens));
}

bool boundary_lemma_check(const Representation& rep) {
  return ideal_equal(gamma_boundary_ideal(rep, KoszulComplex(rep.ring(), rep.f())), rep.a_ideal());
}

bool is_regular_element(const Polynomial& f0) {
  const RingPtr& ring = f0.ring();
  if (zero_mod_q(f0, ring)) return false;
  const std::vector<Polynomial> seq{f0};
  for (const auto& v : syzygies(ring, std::span<const Polynomial>(seq))) {
    if (!zero_mod_q(v.components[0], ring)) return false;
  }
  return true;
}

bool specialization_check(const Representation& rep, const Polynomial& f0) {
  const RingPtr& ring = rep.ring();
  const Polynomial g = f0.in_ring(ring);
  if (!rep.a_ideal().contains(g)) throw DomainError("f0 is not in a");
  if (!is_regular_element(g)) throw DomainError("f0 is a zero-divisor");

  RingPtr special = PolyRing::with_modulus(ring, {g});
  std::vector<Polynomial> lhs;
  for (const auto& p : kitt_ideal(rep).generators) lhs.push_back(p.in_ring(special));
  lhs.push_back(g.in_ring(special));
  const Ideal rhs = kitt_ideal(rep.in_ring(special)).ideal;
  return ideal_equal(Ideal(special, std::move(lhs)), rhs);
}

VerifyReport verify_report(const Representation& rep) {
  const Ideal i = rep.i_ideal();
  const Ideal a = rep.a_ideal();
  VerifyReport out(kitt_ideal(rep).ideal, colon(a, i), fitting_ideal(rep));
  out.a_in_kitt = out.kitt.contains(a);
  out.fitting_in_kitt = out.kitt.contains(out.fitting);
  out.kitt_in_colon = out.colon.contains(out.kitt);
  out.kitt_equals_colon = out.kitt_in_colon && out.kitt.contains(out.colon);
  out.colon_in_radical_of_kitt = std::all_of(out.colon.generators().begin(), out.colon.generators().end(),
                                             [&](const Polynomial& p) { return radical_member(p, out.kitt); });
  out.proper = !out.colon.is_unit();
  out.s = rep.s();
  out.height_i = height(i);
  out.height_colon = height(out.colon);
  out.height_i_plus_colon = height(i + out.colon);
  const auto s = static_cast<int>(rep.s());
  if (out.height_colon) out.algebraic_residual = out.proper && *out.height_colon >= s;
  if (out.algebraic_residual && out.height_i_plus_colon) {
    out.geometric_residual = *out.algebraic_residual && *out.height_i_plus_colon >= s + 1;
  }
  if (out.height_i && out.height_colon) {
    const bool antecedent = s <= *out.height_i + 1 && *out.height_colon >= s;
    out.small_s_implication = !antecedent || out.kitt_equals_colon;
  }
  return out;
}

}  // namespace kitt
