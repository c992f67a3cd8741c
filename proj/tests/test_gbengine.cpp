#include "doctest.h"

#include "kitt/error.hpp"
#include "kitt/groebner.hpp"
#include "kitt/ideal.hpp"
#include "kitt/module.hpp"
#include "support.hpp"

#include <thread>

using namespace kitt;
using namespace testing_support;

namespace {

Ideal ideal(const RingPtr& R, std::initializer_list<const char*> gens) { return Ideal(R, Ps(R, gens)); }

// Every monomial of degree <= max_deg that lies in `a`, decided by the oracle.
bool monomials_agree(const Ideal& a, const std::vector<Polynomial>& oracle_gens, int max_deg) {
  const auto& R = a.ring();
  for (int d = 0; d <= max_deg; ++d) {
    for (const auto& e : exponents_of_degree(R->nvars(), d)) {
      Polynomial m = Polynomial::term(R, R->field().one(), mono_of(e));
      if (a.contains(m) != graded_member(m, oracle_gens)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("groebner examples") {
  auto R = qq_ring({"x", "y"});
  CHECK(groebner(Ps(R, {"x", "y"}), R) == Ps(R, {"y", "x"}));
  auto gb = groebner(Ps(R, {"x^2 + y^2", "x*y"}), R);
  CHECK(std::find(gb.begin(), gb.end(), P(R, "y^3")) != gb.end());
  CHECK(gb::is_groebner(gb));
  CHECK(groebner(Ps(R, {"1"}), R) == Ps(R, {"1"}));
  CHECK(groebner(Ps(R, {"2*x + 4"}), R) == Ps(R, {"x + 2"}));
}

TEST_CASE("normal form") {
  auto R = qq_ring({"x", "y"});
  Ideal a = ideal(R, {"x^2 - y"});
  CHECK(normal_form(P(R, "x^2"), a) == P(R, "y"));
  CHECK(a.contains(P(R, "x^2 - y")));
  CHECK(!a.contains(P(R, "1")));
}

TEST_CASE("ideal equality") {
  auto R = qq_ring({"x", "y"});
  CHECK(ideal_equal(ideal(R, {"x", "y"}), ideal(R, {"y", "x + y"})));
  CHECK(!ideal_equal(ideal(R, {"x"}), ideal(R, {"x^2"})));
}

TEST_CASE("intersection") {
  auto R = qq_ring({"x", "y"});
  CHECK(ideal_equal(intersect(ideal(R, {"x"}), ideal(R, {"y"})), ideal(R, {"x*y"})));
  Ideal a = ideal(R, {"x^2", "y"});
  CHECK(ideal_equal(intersect(a, a), a));
  Ideal meet = intersect(a, ideal(R, {"x"}));
  CHECK(ideal_equal(meet, ideal(R, {"x^2", "x*y"})));

  auto G = gf_ring(101, {"x", "y"});
  CHECK(monomials_agree(intersect(ideal(G, {"x^2", "y"}), ideal(G, {"x"})), Ps(G, {"x^2", "x*y"}), 4));
}

TEST_CASE("colon") {
  auto R = gf_ring(101, {"x", "y"});
  Ideal c = colon(ideal(R, {"x^2", "y^2"}), ideal(R, {"x", "y"}));
  CHECK(ideal_equal(c, ideal(R, {"x^2", "x*y", "y^2"})));
  CHECK(monomials_agree(c, Ps(R, {"x^2", "x*y", "y^2"}), 3));
  Ideal a = ideal(R, {"x^3", "x*y"});
  CHECK(ideal_equal(colon(a, ideal(R, {"1"})), a));
  CHECK(colon(a, ideal(R, {"x^3"})).is_unit());
}

TEST_CASE("colon properties on random ideals") {
  auto R = gf_ring(101, {"x", "y", "z"});
  Rng rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> ag, ig;
    for (int k = 0; k < 3; ++k) ag.push_back(random_homogeneous(R, rng, rng.uniform(2, 3), 2));
    for (int k = 0; k < 2; ++k) ig.push_back(random_homogeneous(R, rng, rng.uniform(1, 2), 2));
    Ideal a(R, ag), i(R, ig);
    Ideal c = colon(a, i);
    CHECK(c.contains(a));
    for (const auto& f : c.generators()) {
      for (const auto& g : ig) CHECK(a.contains(f * g));
    }
  }
}

TEST_CASE("radical membership") {
  auto R = qq_ring({"x", "y"});
  CHECK(radical_member(P(R, "x"), ideal(R, {"x^2"})));
  CHECK(!radical_member(P(R, "y"), ideal(R, {"x^2"})));
  CHECK(radical_member(P(R, "x + y"), ideal(R, {"x^3", "y^2"})));
}

TEST_CASE("dimension and height") {
  auto R = qq_ring({"x", "y", "z"});
  CHECK(dim_quotient(ideal(R, {"x*y"})) == 2);
  auto S = qq_ring({"x", "y"});
  CHECK(dim_quotient(ideal(S, {"x", "y"})) == 0);
  CHECK(dim_quotient(ideal(S, {"1"})) == -1);
  CHECK(height(ideal(S, {"1"})) == 3);
  CHECK(height(ideal(R, {"x*y", "x*z"})) == 1);
  CHECK(height(ideal(R, {})) == 0);

  // monomial ideals: dim of the ideal equals dim of its leading-term ideal
  auto M = gf_ring(101, {"a", "b", "c", "d"});
  CHECK(dim_quotient(ideal(M, {"a*b", "c*d"})) == 2);
  CHECK(dim_quotient(ideal(M, {"a*b", "b*c", "c*d"})) == 2);
  CHECK(dim_quotient(ideal(M, {"a", "b*c*d"})) == 2);
  Ideal g = ideal(M, {"a^2 - b*c", "a*d + c^2"});
  auto lms = leading_monomials(g);
  CHECK(dim_quotient(g) == monomial_dimension(lms, 4));

  auto Q = PolyRing::with_modulus(R, Ps(R, {"x"}));
  CHECK(!height(ideal(Q, {"y"})).has_value());
  CHECK(dim_quotient(ideal(Q, {"y"})) == 1);
}

TEST_CASE("hilbert series") {
  auto R = qq_ring({"x", "y"});
  CHECK(hilbert_series(ideal(R, {"x"})).to_string() == "1 - t");
  CHECK(hilbert_series(ideal(R, {})).to_string() == "1");
  CHECK(hilbert_series(ideal(R, {"x^2", "y^2"})).to_string() == "1 - 2*t^2 + t^4");
  CHECK_THROWS_AS(hilbert_series(ideal(R, {"x + 1"})), DomainError);

  auto G = gf_ring(101, {"x", "y", "z"});
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    const int n = rng.uniform(1, 3);
    for (int k = 0; k < n; ++k) gens.push_back(random_homogeneous(G, rng, rng.uniform(1, 3), 3));
    auto h = hilbert_series(Ideal(G, gens)).hilbert_function(3, 6);
    CHECK(h == graded_hilbert_function(gens, G, 6));
  }
}

TEST_CASE("membership agrees with graded linear algebra") {
  auto R = gf_ring(101, {"x", "y", "z"});
  Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    const int n = rng.uniform(1, 3);
    for (int k = 0; k < n; ++k) gens.push_back(random_homogeneous(R, rng, rng.uniform(1, 3), 3));
    Ideal a(R, gens);
    CHECK(gb::is_groebner(a.groebner_basis()));
    for (const auto& g : gens) CHECK(a.contains(g));
    for (int k = 0; k < 4; ++k) {
      const int d = rng.uniform(1, 5);
      Polynomial f = random_homogeneous(R, rng, d, 3);
      if (rng.coin()) {
        const auto& g = rng.pick(gens);
        if (g.total_degree() <= d) f = random_homogeneous(R, rng, d - g.total_degree(), 2) * g;
      }
      CHECK(a.contains(f) == graded_member(f, gens));
    }
  }
}

TEST_CASE("quotient rings absorb the modulus") {
  auto R = gf_ring(101, {"x", "y"});
  auto Q = PolyRing::with_modulus(R, Ps(R, {"x*y"}));
  Ideal a(Q, Ps(Q, {"x + y"}));
  CHECK(a.contains(P(Q, "x^2")));
  CHECK(!Ideal(R, Ps(R, {"x + y"})).contains(P(R, "x^2")));
  CHECK(gb::is_groebner(a.groebner_basis()));
}

TEST_CASE("syzygies") {
  auto R = qq_ring({"x", "y"});
  auto s = syzygies(R, std::vector<Polynomial>{P(R, "x"), P(R, "y")});
  REQUIRE(s.size() == 1);
  CHECK((s[0].components[0] == P(R, "y") && s[0].components[1] == P(R, "-x") ||
         s[0].components[0] == P(R, "-y") && s[0].components[1] == P(R, "x")));

  std::vector<FreeVector> units{FreeVector::unit(R, 2, 0), FreeVector::unit(R, 2, 1)};
  CHECK(syzygies(R, 2, units).empty());

  // columns of the second Koszul differential of (x^2, y^2, xy), basis
  // e12, e13, e23 -> e1, e2, e3
  auto G = gf_ring(101, {"x", "y"});
  std::vector<FreeVector> cols{
      {{P(G, "-y^2"), P(G, "x^2"), P(G, "0")}},
      {{P(G, "-x*y"), P(G, "0"), P(G, "x^2")}},
      {{P(G, "0"), P(G, "-x*y"), P(G, "y^2")}},
  };
  auto z = syzygies(G, 3, cols);
  for (const auto& v : z) {
    FreeVector sum = FreeVector::zero(G, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 3; ++k) sum.components[k] += v.components[i] * cols[i].components[k];
    }
    CHECK(sum.is_zero());
  }

  // first Koszul differential; y*e1 - x*e3 is a cycle
  std::vector<Polynomial> f = Ps(G, {"x^2", "y^2", "x*y"});
  auto z1 = syzygies(G, f);
  Submodule span(G, 3, z1);
  CHECK(module_member(FreeVector{Ps(G, {"y", "0", "-x"})}, span));
  CHECK(!module_member(FreeVector{Ps(G, {"1", "0", "0"})}, span));
  CHECK_THROWS_AS(module_member(FreeVector{Ps(G, {"1"})}, span), DomainError);
}

TEST_CASE("syzygies over a quotient") {
  auto R = gf_ring(101, {"x", "y"});
  auto Q = PolyRing::with_modulus(R, Ps(R, {"x*y"}));
  // over R/(xy), x has annihilator (y)
  auto s = syzygies(Q, std::vector<Polynomial>{P(Q, "x")});
  Submodule span(Q, 1, s);
  CHECK(module_member(FreeVector{Ps(Q, {"y"})}, span));
  CHECK(!module_member(FreeVector{Ps(Q, {"1"})}, span));
}

TEST_CASE("syzygy completeness against linear algebra") {
  auto R = gf_ring(101, {"x", "y", "z"});
  Rng rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> f;
    for (int k = 0; k < 3; ++k) f.push_back(random_homogeneous(R, rng, 2, 2));
    auto syz = syzygies(R, f);
    Submodule span(R, 3, syz);
    for (const auto& v : syz) {
      Polynomial s(R);
      for (std::size_t i = 0; i < 3; ++i) s += v.components[i] * f[i];
      CHECK(s.is_zero());
    }
    // the kernel in degree 4 (coefficients of degree 2) by linear algebra
    const auto lin = exponents_of_degree(3, 2);
    const auto cubic = exponents_of_degree(3, 4);
    // columns: coefficient c_(i,m) of m*e_i; rows: cubic monomials
    std::vector<std::vector<std::uint64_t>> cols;
    for (std::size_t i = 0; i < 3; ++i) {
      for (const auto& m : lin) cols.push_back(coordinates(f[i].times_term(R->field().one(), mono_of(m)), cubic));
    }
    auto kernel = kernel_mod_p(cols, 101);
    CHECK(!kernel.empty());
    for (const auto& coeff : kernel) {
      FreeVector v = FreeVector::zero(R, 3);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t m = 0; m < lin.size(); ++m) {
          v.components[i] += Polynomial::term(R, R->field().from_int(static_cast<long long>(coeff[i * lin.size() + m])),
                                              mono_of(lin[m]));
        }
      }
      CHECK(module_member(v, span));
    }
  }
}

TEST_CASE("cached basis is computed once under concurrency") {
  auto R = gf_ring(101, {"x", "y", "z"});
  Ideal a(R, Ps(R, {"x^3 - y*z", "y^3 - x*z", "z^3 - x*y"}));
  std::vector<const std::vector<Polynomial>*> seen(8);
  std::vector<std::thread> threads;
  for (std::size_t k = 0; k < seen.size(); ++k) {
    threads.emplace_back([&, k] { seen[k] = &a.groebner_basis(); });
  }
  for (auto& t : threads) t.join();
  for (auto* p : seen) CHECK(p == seen.front());
  Ideal copy = a;
  CHECK(&copy.groebner_basis() == seen.front());
}
