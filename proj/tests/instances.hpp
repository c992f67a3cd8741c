#pragma once

#include "kitt/kitt.hpp"
#include "support.hpp"

namespace testing_support {

using kitt::PolyMatrix;
using kitt::Representation;

/// Sparse Φ entries of degree 0 or 1.
inline Polynomial random_phi_entry(const RingPtr& ring, Rng& rng) {
  if (rng.coin(0.35)) return Polynomial(ring);
  Polynomial p = random_monomial_poly(ring, rng, rng.uniform(0, 1));
  if (rng.coin(0.3)) p += random_monomial_poly(ring, rng, rng.uniform(0, 1));
  return p;
}

/// I = (f) with sparse f_i of degree 1..2, a = f·Φ.
inline Representation random_representation(const RingPtr& ring, Rng& rng, std::size_t r, std::size_t s) {
  std::vector<Polynomial> f;
  for (std::size_t i = 0; i < r; ++i) {
    Polynomial p = random_monomial_poly(ring, rng, rng.uniform(1, 2));
    if (rng.coin(0.4)) p += random_monomial_poly(ring, rng, rng.uniform(1, 2));
    if (p.is_zero()) p = random_monomial_poly(ring, rng, 1);
    f.push_back(p);
  }
  PolyMatrix phi(ring, r, s);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) phi(i, j) = random_phi_entry(ring, rng);
  }
  std::vector<Polynomial> a;
  for (std::size_t j = 0; j < s; ++j) {
    Polynomial sum(ring);
    for (std::size_t i = 0; i < r; ++i) sum += phi(i, j) * f[i];
    a.push_back(sum);
  }
  return Representation(ring, f, a, phi);
}

/// GF(101), 2..4 variables, r and s in 1..4.
inline Representation random_suite_instance(Rng& rng, std::size_t max_r = 4, std::size_t max_s = 4) {
  static const std::vector<std::string> names{"x", "y", "z", "w"};
  const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
  auto ring = gf_ring(101, std::vector<std::string>(names.begin(), names.begin() + static_cast<long>(n)));
  const auto r = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_r)));
  const auto s = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_s)));
  return random_representation(ring, rng, r, s);
}

/// Φ + N with N's columns random combinations of syzygies of f.
inline Representation perturb_by_syzygies(const Representation& rep, Rng& rng) {
  const auto& ring = rep.ring();
  const auto syz = kitt::syzygies(ring, std::span<const Polynomial>(rep.f()));
  PolyMatrix phi = rep.phi();
  for (std::size_t j = 0; j < rep.s(); ++j) {
    for (const auto& v : syz) {
      Polynomial c = random_phi_entry(ring, rng);
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < rep.r(); ++i) phi(i, j) += c * v.components[i];
    }
  }
  return Representation(ring, rep.f(), rep.a(), phi);
}

/// Appends a redundant generator of a (a random combination of the a_j)
/// with the matching column of Φ.
inline Representation add_redundant_a(const Representation& rep, Rng& rng) {
  const auto& ring = rep.ring();
  std::vector<Polynomial> coeffs;
  for (std::size_t j = 0; j < rep.s(); ++j) coeffs.push_back(random_phi_entry(ring, rng));
  auto a = rep.a();
  Polynomial extra(ring);
  for (std::size_t j = 0; j < rep.s(); ++j) extra += coeffs[j] * rep.a()[j];
  a.push_back(extra);
  PolyMatrix phi(ring, rep.r(), rep.s() + 1);
  for (std::size_t i = 0; i < rep.r(); ++i) {
    Polynomial col(ring);
    for (std::size_t j = 0; j < rep.s(); ++j) {
      phi(i, j) = rep.phi()(i, j);
      col += coeffs[j] * rep.phi()(i, j);
    }
    phi(i, rep.s()) = col;
  }
  return Representation(ring, rep.f(), a, phi);
}

/// Appends a redundant generator of I (a combination of the f_i) with a
/// zero row in Φ.
inline Representation add_redundant_f(const Representation& rep, Rng& rng) {
  const auto& ring = rep.ring();
  auto f = rep.f();
  Polynomial extra(ring);
  for (const auto& fi : rep.f()) extra += random_phi_entry(ring, rng) * fi;
  f.push_back(extra);
  PolyMatrix phi(ring, rep.r() + 1, rep.s());
  for (std::size_t i = 0; i < rep.r(); ++i) {
    for (std::size_t j = 0; j < rep.s(); ++j) phi(i, j) = rep.phi()(i, j);
  }
  return Representation(ring, f, rep.a(), phi);
}

/// Another choice of homology representatives: each normal-form
/// representative scaled by a unit and moved by a random boundary, plus the
/// sum of the first two as a redundant extra.
inline kitt::HomologyChoice alternative_homology_choice(const kitt::KoszulComplex& c, Rng& rng) {
  const auto& ring = c.ring();
  std::vector<std::vector<kitt::ExtElement>> by_degree;
  for (std::size_t d = 0; d <= c.rank(); ++d) {
    std::vector<kitt::ExtElement> out;
    for (const auto& h : c.homology_reps(d)) {
      kitt::ExtElement moved = Polynomial::from_int(ring, rng.uniform(1, 100)) * h;
      if (d < c.rank()) {
        for (const auto& b : c.boundaries(d)) {
          if (rng.coin(0.5)) moved = moved + random_poly(ring, rng, 0, 1, 2) * b;
        }
      }
      out.push_back(moved);
    }
    if (out.size() >= 2) out.push_back(out[0] + out[1]);
    by_degree.push_back(std::move(out));
  }
  return [by_degree](std::size_t d) { return d < by_degree.size() ? by_degree[d] : std::vector<kitt::ExtElement>{}; };
}

}  // namespace testing_support
