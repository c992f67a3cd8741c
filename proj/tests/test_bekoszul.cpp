#include "doctest.h"

#include "kitt/bekoszul.hpp"
#include "kitt/error.hpp"
#include "kitt/ideal.hpp"
#include "support.hpp"

using namespace kitt;
using namespace testing_support;

namespace {

Polynomial random_linear_form(const RingPtr& R, Rng& rng) {
  Polynomial p(R);
  for (std::size_t v = 0; v < R->nvars(); ++v) {
    if (rng.coin(0.6)) p += Polynomial::variable(R, v).scaled(R->field().from_int(rng.uniform(1, 100)));
  }
  return p;
}

LinearMap random_map(const RingPtr& R, Rng& rng, std::size_t g, std::size_t f) {
  PolyMatrix m(R, g, f);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < f; ++j) m(i, j) = random_linear_form(R, rng);
  }
  return LinearMap(m);
}

ExtElement random_ext(const RingPtr& R, Rng& rng, std::size_t rank, std::size_t degree) {
  ExtElement out(R, rank, degree);
  for (IndexSet l : index_subsets(rank, degree)) {
    if (rng.coin(0.6)) out.add_term(l, random_poly(R, rng, 0, 1, 2));
  }
  return out;
}

LinearMap generic_2x3(const RingPtr& R) { return LinearMap(PolyMatrix(R, 2, 3, Ps(R, {"x", "y", "z", "y", "z", "w"}))); }

Polynomial scalar_part(const ExtElement& e) { return e.coeff(0); }

}  // namespace

TEST_CASE("contraction") {
  auto R = qq_ring({"x", "y", "z"});
  LinearMap row(PolyMatrix(R, 1, 3, Ps(R, {"x", "y", "z"})));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(scalar_part(contract(row, ExtElement::basis(R, 3, IndexSet{1} << i), 1)) == Ps(R, {"x", "y", "z"})[i]);
  }
  CHECK_THROWS_AS(contract(row, ExtElement::basis(R, 3, 1), 2), DomainError);
  CHECK_THROWS_AS(contract(row, ExtElement::basis(R, 3, 1), 0), DomainError);
  CHECK_THROWS_AS(LinearMap(PolyMatrix(R, 2, 1)), DomainError);

  auto G = gf_ring(101, {"x", "y", "z"});
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = static_cast<std::size_t>(rng.uniform(2, 5));
    const auto g = static_cast<std::size_t>(rng.uniform(2, static_cast<int>(std::min<std::size_t>(f, 3))));
    LinearMap phi = random_map(G, rng, g, f);
    const auto deg = static_cast<std::size_t>(rng.uniform(2, static_cast<int>(f)));
    ExtElement w = random_ext(G, rng, f, deg);
    CHECK(contract(phi, contract(phi, w, 1), 1).is_zero());
    CHECK(contract(phi, contract(phi, w, 1), 2) == -contract(phi, contract(phi, w, 2), 1));
  }
}

TEST_CASE("connecting map and signed minors") {
  auto R = qq_ring({"x", "y", "z", "w"});
  LinearMap row(PolyMatrix(R, 1, 3, Ps(R, {"x", "y", "z"})));
  CHECK(scalar_part(connecting_map(row, 0, ExtElement::basis(R, 3, 0b010))) == P(R, "y"));
  CHECK_THROWS_AS(connecting_map(row, 0, ExtElement::basis(R, 3, 0b011)), DomainError);

  LinearMap square(PolyMatrix(R, 2, 2, Ps(R, {"x", "y", "z", "w"})));
  CHECK(scalar_part(connecting_map(square, 0, ExtElement::basis(R, 2, 0b11))) == P(R, "x*w - y*z"));

  // M = (Φ | id_r): ε_0 on e'_{L1} ∧ e_{L2} is det of the chosen columns,
  // and ± the minor of Φ on rows outside L2 and columns L1
  auto G = gf_ring(101, {"x", "y", "z"});
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto s = static_cast<std::size_t>(rng.uniform(1, 3));
    PolyMatrix phi(G, r, s);
    for (auto& e : const_cast<std::vector<Polynomial>&>(phi.entries())) e = random_poly(G, rng, 0, 1, 2);
    PolyMatrix m = PolyMatrix::hconcat(phi, PolyMatrix::identity(G, r));
    LinearMap lm(m);
    for (IndexSet cols : index_subsets(r + s, r)) {
      const auto idx = index_set_elements(cols);
      std::vector<std::size_t> all_rows(r);
      for (std::size_t i = 0; i < r; ++i) all_rows[i] = i;
      const Polynomial full_det = determinant(m.submatrix(all_rows, idx));
      const Polynomial eps = scalar_part(connecting_map(lm, 0, ExtElement::basis(G, r + s, cols)));
      CHECK(eps == full_det);

      std::vector<std::size_t> l1, rows;
      IndexSet l2 = 0;
      for (auto c : idx) {
        if (c < s) l1.push_back(c);
        else l2 |= IndexSet{1} << (c - s);
      }
      for (std::size_t i = 0; i < r; ++i) {
        if (!(l2 & (IndexSet{1} << i))) rows.push_back(i);
      }
      const Polynomial minor = l1.empty() ? Polynomial::from_int(G, 1) : determinant(phi.submatrix(rows, l1));
      CHECK((eps == minor || eps == -minor));
    }
  }

  LinearMap repeated(PolyMatrix(R, 2, 3, Ps(R, {"x", "y", "z", "x", "y", "z"})));
  for (IndexSet l : index_subsets(3, 2)) CHECK(connecting_map(repeated, 0, ExtElement::basis(R, 3, l)).is_zero());
}

TEST_CASE("Buchsbaum-Eisenbud shapes") {
  auto R = qq_ring({"x", "y", "z", "w"});
  LinearMap square(PolyMatrix(R, 2, 2, Ps(R, {"x", "y", "z", "w"})));
  BEComplex sq = be_complex(square, 0);
  CHECK(sq.ranks() == std::vector<std::size_t>{1, 1});
  CHECK(sq.diffs[0](0, 0) == determinant(square.matrix()));
  CHECK(complex_homology(sq) == std::vector<bool>{true});

  LinearMap en = generic_2x3(R);
  BEComplex c0 = be_complex(en, 0);
  CHECK(c0.ranks() == std::vector<std::size_t>{1, 3, 2});
  CHECK(c0.joining_index == 0);
  CHECK(c0.modules[2].label == "∧^3F⊗S_1*");
  // image of ε_0 is the ideal of maximal minors
  CHECK(ideal_equal(Ideal(R, c0.diffs[0].row(0)), Ideal(R, minors(en.matrix(), 2))));
  CHECK(complex_homology(c0) == std::vector<bool>{true, true});

  BEComplex c1 = be_complex(en, 1);
  CHECK(c1.ranks() == std::vector<std::size_t>{2, 3, 1});
  CHECK(c1.joining_index == 1);
  CHECK(c1.diffs[0] == en.matrix());
  CHECK_THROWS_AS(be_complex(en, 2), DomainError);

  LinearMap deficient(PolyMatrix(R, 2, 3, Ps(R, {"x", "x", "z", "y", "y", "w"})));
  auto h = complex_homology(be_complex(deficient, 0));
  CHECK(std::find(h.begin(), h.end(), false) != h.end());
}

TEST_CASE("random Buchsbaum-Eisenbud complexes are complexes") {
  auto G = gf_ring(101, {"x", "y", "z"});
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const auto f = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto g = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(std::min<std::size_t>(f, 3))));
    LinearMap phi = random_map(G, rng, g, f);
    for (std::size_t d = 0; d <= f - g; ++d) {
      BEComplex c = be_complex(phi, d);
      for (std::size_t p = 1; p < c.diffs.size(); ++p) CHECK((c.diffs[p - 1] * c.diffs[p]).is_zero());
      CHECK(c.modules.size() == f - g + 2);
    }
  }
}

TEST_CASE("Cech model") {
  auto R = qq_ring({"x", "y"});
  CechFraction c(R, 2, 2);
  CHECK_THROWS_AS(c.add(0b01, {0, -1}, ExtElement::basis(R, 2, 1)), DomainError);
  c.add(0b00, {1, 0}, ExtElement::basis(R, 2, 1));
  c.add(0b01, {-2, 1}, P(R, "x") * ExtElement::basis(R, 2, 3));
  CHECK(c.vertical().vertical().is_zero());
  LinearMap phi(PolyMatrix(R, 2, 2, Ps(R, {"x", "y", "1", "x"})));
  CHECK(c.horizontal(phi).horizontal(phi).is_zero());
  CHECK((c.vertical().horizontal(phi) == c.horizontal(phi).vertical()));
}

TEST_CASE("lift formula") {
  auto R = qq_ring({"x", "y", "z", "w"});
  LinearMap row(PolyMatrix(R, 1, 2, Ps(R, {"x", "y"})));
  ExtElement e1 = ExtElement::basis(R, 2, 1);
  CHECK(verify_lift(row, 0, e1));
  // d_h(e1 ⊗ 1/T1) = x ⊗ T1/T1, which is d_v(x ⊗ 1)
  CechFraction m0 = lift_term(row, e1, 0);
  CechFraction m1 = lift_term(row, e1, 1);
  CHECK(m0.horizontal(row) == m1.vertical());
  CHECK(m1.terms().begin()->second == ExtElement::scalar(P(R, "x"), 2));

  LinearMap en = generic_2x3(R);
  ExtElement w = ExtElement::basis(R, 3, 0b011);
  LiftReport rep = lift_report(en, 0, w);
  CHECK(rep.ok);
  CHECK(rep.step_signs == std::vector<int>{1, -1});
  CHECK(rep.terminal_sign == -1);
  const std::vector<std::size_t> rows{0, 1}, cols{0, 1};
  CHECK(scalar_part(connecting_map(en, 0, w)) == determinant(en.matrix().submatrix(rows, cols)));
  CHECK_THROWS_AS(verify_lift(en, 0, ExtElement::basis(R, 3, 0b001)), DomainError);

  auto G = gf_ring(101, {"x", "y", "z"});
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto g = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(std::min<std::size_t>(f, 3))));
    LinearMap phi = random_map(G, rng, g, f);
    const auto d = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(std::min<std::size_t>(f - g, 2))));
    CHECK(verify_lift(phi, d, random_ext(G, rng, f, g + d)));
  }
}
