#include "kitt/groebner.hpp"

#include "kitt/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace kitt::gb {

namespace {

// h[from..] - c * m * g, where the leading term of c*m*g cancels h[from].
std::vector<Term> subtract_multiple(const PolyRing& ring, const std::vector<Term>& h, std::size_t from,
                                    const Coeff& c, const Monomial& m, const Polynomial& g) {
  const auto& order = ring.order();
  const auto& field = ring.field();
  const auto& gt = g.terms();
  std::vector<Term> out;
  out.reserve(h.size() - from + gt.size());
  std::size_t i = from + 1, j = 1;
  while (i < h.size() && j < gt.size()) {
    Monomial gm = gt[j].mono * m;
    int cmp = order.compare(h[i].mono, gm);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back({field.neg(field.mul(c, gt[j].coeff)), gm});
      ++j;
    } else {
      Coeff s = field.sub(h[i].coeff, field.mul(c, gt[j].coeff));
      if (!field.is_zero(s)) out.push_back({std::move(s), gm});
      ++i;
      ++j;
    }
  }
  for (; i < h.size(); ++i) out.push_back(h[i]);
  for (; j < gt.size(); ++j) out.push_back({field.neg(field.mul(c, gt[j].coeff)), gt[j].mono * m});
  return out;
}

const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> basis) {
  for (const auto& g : basis) {
    if (divides(g.lead_monomial(), m)) return &g;
  }
  return nullptr;
}

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis) {
  const RingPtr& ring = f.ring();
  const auto& field = ring->field();
  std::vector<Term> h = f.terms();
  std::vector<Term> rem;
  std::size_t pos = 0;
  while (pos < h.size()) {
    const Polynomial* g = find_reducer(h[pos].mono, basis);
    if (!g) {
      rem.push_back(h[pos++]);
      continue;
    }
    Coeff c = field.is_one(g->lead_coeff()) ? h[pos].coeff : field.div(h[pos].coeff, g->lead_coeff());
    Monomial m = h[pos].mono / g->lead_monomial();
    h = subtract_multiple(*ring, h, pos, c, m, *g);
    pos = 0;
  }
  return Polynomial::from_sorted(ring, std::move(rem));
}

Polynomial reduce_with_quotients(const Polynomial& f, std::span<const Polynomial> basis,
                                 std::vector<Polynomial>& quotients) {
  const RingPtr& ring = f.ring();
  const auto& field = ring->field();
  quotients.assign(basis.size(), Polynomial(ring));
  std::vector<std::vector<Term>> qterms(basis.size());
  std::vector<Term> h = f.terms();
  std::vector<Term> rem;
  std::size_t pos = 0;
  while (pos < h.size()) {
    std::size_t k = 0;
    while (k < basis.size() && !divides(basis[k].lead_monomial(), h[pos].mono)) ++k;
    if (k == basis.size()) {
      rem.push_back(h[pos++]);
      continue;
    }
    Coeff c = field.div(h[pos].coeff, basis[k].lead_coeff());
    Monomial m = h[pos].mono / basis[k].lead_monomial();
    qterms[k].push_back({c, m});
    h = subtract_multiple(*ring, h, pos, c, m, basis[k]);
    pos = 0;
  }
  for (std::size_t k = 0; k < basis.size(); ++k) {
    quotients[k] = Polynomial::from_terms(ring, std::move(qterms[k]));
  }
  return Polynomial::from_sorted(ring, std::move(rem));
}

Polynomial spoly(const Polynomial& a, const Polynomial& b) {
  const auto& field = a.field();
  Monomial l = lcm(a.lead_monomial(), b.lead_monomial());
  Polynomial sa = a.times_term(field.inv(a.lead_coeff()), l / a.lead_monomial());
  Polynomial sb = b.times_term(field.inv(b.lead_coeff()), l / b.lead_monomial());
  return sa - sb;
}

namespace {

struct Pair {
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

class Buchberger {
 public:
  Buchberger(const RingPtr& ring, bool ideal_mode, Stats* stats)
      : ring_(ring), ideal_mode_(ideal_mode), stats_(stats),
        pairs_([this](const Pair& a, const Pair& b) { return before(a, b); }) {}

  std::vector<Polynomial> run(std::vector<Polynomial> gens) {
    // smallest inputs first keeps the intermediate basis small
    std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
      if (a.is_zero() || b.is_zero()) return !a.is_zero() && b.is_zero();
      return ring_->order().compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      Polynomial r = reduce(g, basis_);
      if (!r.is_zero()) add(r.monic());
    }
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      pending_[p.j][p.i] = false;
      if (stats_) ++stats_->pairs_considered;
      if (chain_criterion(p)) {
        if (stats_) ++stats_->chain_skips;
        continue;
      }
      Polynomial r = reduce(spoly(basis_[p.i], basis_[p.j]), basis_);
      if (r.is_zero()) {
        if (stats_) ++stats_->reductions_to_zero;
        continue;
      }
      add(r.monic());
    }
    return finish();
  }

 private:
  bool before(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = ring_->order().compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  void add(Polynomial h) {
    const std::size_t idx = basis_.size();
    basis_.push_back(std::move(h));
    pending_.emplace_back(idx + 1, false);
    const Monomial& lm = basis_[idx].lead_monomial();
    for (std::size_t i = 0; i < idx; ++i) {
      const Monomial& li = basis_[i].lead_monomial();
      if (li.component() != lm.component()) continue;
      if (ideal_mode_ && coprime(li, lm)) {
        if (stats_) ++stats_->product_skips;
        continue;
      }
      pairs_.insert(Pair{lcm(li, lm), i, idx});
      pending_[idx][i] = true;
    }
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    return a < b ? pending_[b][a] : pending_[a][b];
  }

  // Buchberger's second criterion: some k with lm_k | lcm(i, j) whose pairs
  // with i and j were already treated.
  bool chain_criterion(const Pair& p) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!divides(basis_[k].lead_monomial(), p.lcm)) continue;
      if (!is_pending(p.i, k) && !is_pending(p.j, k)) return true;
    }
    return false;
  }

  std::vector<Polynomial> finish() {
    std::vector<Polynomial> sorted = basis_;
    std::stable_sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->order().compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    std::vector<Polynomial> minimal;
    for (auto& g : sorted) {
      bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& k) {
        return divides(k.lead_monomial(), g.lead_monomial());
      });
      if (!redundant) minimal.push_back(std::move(g));
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t k = 0; k < minimal.size(); ++k) {
        if (k != i) others.push_back(minimal[k]);
      }
      reduced.push_back(reduce(minimal[i], others).monic());
    }
    return reduced;
  }

  RingPtr ring_;
  bool ideal_mode_;
  Stats* stats_;
  std::vector<Polynomial> basis_;
  std::vector<std::vector<bool>> pending_;
  std::set<Pair, std::function<bool(const Pair&, const Pair&)>> pairs_;
};

}  // namespace

std::vector<Polynomial> reduced_basis(std::vector<Polynomial> gens, const RingPtr& ring, Stats* stats) {
  bool ideal_mode = true;
  for (auto& g : gens) {
    require_compatible(*g.ring(), *ring);
    g = g.in_ring(ring);
    for (const auto& t : g.terms()) {
      if (t.mono.component() != 0) ideal_mode = false;
    }
  }
  return Buchberger(ring, ideal_mode, stats).run(std::move(gens));
}

bool is_groebner(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].lead_monomial().component() != basis[j].lead_monomial().component()) continue;
      if (!reduce(spoly(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace kitt::gb
