#include "fullness/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fullness/errors.hpp"

namespace fullness {

namespace {

void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b && !(a->compatible(*b) && a->order() == b->order())) {
    throw std::invalid_argument("ring or order mismatch");
  }
}

// Full reduction of f by the monic-or-not polynomials in `reducers`.
Polynomial reduce_fully(const RingPtr& ring, const Polynomial& f,
                        const std::vector<const Polynomial*>& reducers) {
  const Field& field = ring->field();
  std::vector<Term> remainder;
  std::vector<Term> p(f.terms().begin(), f.terms().end());
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Term& lt = p[pos];
    const Polynomial* g = nullptr;
    for (const Polynomial* r : reducers) {
      if (r->leading_monomial().divides(lt.monomial)) {
        g = r;
        break;
      }
    }
    if (!g) {
      remainder.push_back(lt);
      ++pos;
      continue;
    }
    Coefficient c = field.is_one(g->leading_coefficient())
                        ? lt.coefficient
                        : field.mul(lt.coefficient, field.inv(g->leading_coefficient()));
    Monomial shift = lt.monomial / g->leading_monomial();
    std::span<const Term> rest(p.data() + pos, p.size() - pos);
    p = subtract_scaled(*ring, rest, shift, c, g->terms());
    pos = 0;
  }
  return Polynomial::from_sorted(ring, std::move(remainder));
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Gebauer–Möller bookkeeping around a growing list of monic polynomials.
class BuchbergerRun {
 public:
  BuchbergerRun(RingPtr ring, const GroebnerOptions& options)
      : ring_(std::move(ring)), options_(options) {}

  void add(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial& lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(true);

    // New pairs (h, g), filtered by the chain criterion among themselves.
    std::vector<CriticalPair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g]) candidates.push_back({g, hi, lh.lcm(polys_[g].leading_monomial())});
    }
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& p = candidates[a];
      bool coprime = lh.coprime(polys_[p.i].leading_monomial());
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b) {
          dominated = candidates[b].lcm.divides(p.lcm);
        }
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b) {
          dominated = kept[b].lcm.divides(p.lcm);
        }
      }
      if (!dominated) kept.push_back(p);
    }
    std::vector<CriticalPair> fresh;
    for (auto& p : kept) {
      if (!lh.coprime(polys_[p.i].leading_monomial())) fresh.push_back(std::move(p));
    }

    // Old pairs made redundant by h.
    std::vector<CriticalPair> survivors;
    survivors.reserve(pairs_.size() + fresh.size());
    for (auto& p : pairs_) {
      bool redundant = lh.divides(p.lcm) &&
                       !(polys_[p.i].leading_monomial().lcm(lh) == p.lcm) &&
                       !(polys_[p.j].leading_monomial().lcm(lh) == p.lcm);
      if (!redundant) survivors.push_back(std::move(p));
    }
    for (auto& p : fresh) survivors.push_back(std::move(p));
    pairs_ = std::move(survivors);

    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    }
  }

  std::optional<CriticalPair> next_pair() {
    if (pairs_.empty()) return std::nullopt;
    auto best = pairs_.begin();
    for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
      if (selects_before(*it, *best)) best = it;
    }
    CriticalPair p = *best;
    *best = std::move(pairs_.back());
    pairs_.pop_back();
    return p;
  }

  std::vector<Polynomial> active_elements() const {
    std::vector<Polynomial> basis;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) basis.push_back(polys_[i]);
    }
    return basis;
  }

  Polynomial reduce(const Polynomial& f) const {
    std::vector<const Polynomial*> reducers;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) reducers.push_back(&polys_[i]);
    }
    return reduce_fully(ring_, f, reducers);
  }

  const Polynomial& poly(std::size_t i) const { return polys_[i]; }

  void check_limits(const CriticalPair& p) const {
    if (p.lcm.degree() > options_.degree_cap) {
      throw DegreeCapExceeded("Groebner basis computation exceeded degree cap " +
                              std::to_string(options_.degree_cap));
    }
    if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline) {
      throw TimeBudgetExceeded("time budget exhausted during Groebner basis computation");
    }
  }

 private:
  // Normal strategy: smallest lcm first; ties broken deterministically.
  bool selects_before(const CriticalPair& a, const CriticalPair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    Ordering c = ring_->compare(a.lcm, b.lcm);
    if (c != Ordering::kEQ) return c == Ordering::kLT;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }

  RingPtr ring_;
  GroebnerOptions options_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
};

GroebnerBasis reduce_basis(const RingPtr& ring, std::vector<Polynomial> basis) {
  std::sort(basis.begin(), basis.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) == Ordering::kLT;
  });
  std::vector<Polynomial> minimal;
  for (auto& g : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&g](const Polynomial& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Polynomial*> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(j < i ? &reduced[j] : &minimal[j]);
    }
    reduced.push_back(reduce_fully(ring, minimal[i], others).monic());
  }
  return GroebnerBasis(ring, std::move(reduced), true);
}

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool reduced)
    : ring_(std::move(ring)), elements_(std::move(elements)), reduced_(reduced) {
  for (const auto& e : elements_) {
    check_same_ring(ring_, e.ring());
    if (e.is_zero()) throw std::invalid_argument("zero element in a Groebner basis");
  }
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [](const Polynomial& g) { return g.leading_monomial().is_one(); });
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  check_same_ring(ring_, f.ring());
  std::vector<const Polynomial*> reducers;
  reducers.reserve(elements_.size());
  for (const auto& g : elements_) reducers.push_back(&g);
  return reduce_fully(ring_, f, reducers);
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.elements_.size() != b.elements_.size()) return false;
  for (std::size_t i = 0; i < a.elements_.size(); ++i) {
    if (!(a.elements_[i] == b.elements_[i])) return false;
  }
  return true;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return basis.normal_form(f);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Field& field = f.field();
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.times_term(l / f.leading_monomial(), field.inv(f.leading_coefficient()));
  return a.minus_term_times(l / g.leading_monomial(), field.inv(g.leading_coefficient()), g);
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators,
                         const GroebnerOptions& options) {
  BuchbergerRun run(ring, options);
  std::vector<Polynomial> inputs;
  for (const auto& f : generators) {
    check_same_ring(ring, f.ring());
    if (f.is_zero()) continue;
    if (f.is_constant()) {
      return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, true);
    }
    inputs.push_back(f.monic());
  }
  // Feed low-degree generators first; they tend to reduce the later ones.
  std::stable_sort(inputs.begin(), inputs.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) == Ordering::kLT;
  });
  for (auto& f : inputs) {
    Polynomial h = run.reduce(f);
    if (h.is_zero()) continue;
    if (h.is_constant()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, true);
    run.add(h.monic());
  }
  while (auto pair = run.next_pair()) {
    run.check_limits(*pair);
    Polynomial s = s_polynomial(run.poly(pair->i), run.poly(pair->j));
    Polynomial h = run.reduce(s);
    if (h.is_zero()) continue;
    if (h.is_constant()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, true);
    run.add(h.monic());
  }
  std::vector<Polynomial> basis = run.active_elements();
  return reduce_basis(ring, std::move(basis));
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const GroebnerOptions& options) {
  if (generators.empty()) throw std::invalid_argument("empty generator list");
  return buchberger(generators.front().ring(), generators, options);
}

std::vector<Polynomial> eliminate(std::span<const Polynomial> generators,
                                  std::span<const std::size_t> drop,
                                  const GroebnerOptions& options) {
  if (generators.empty()) return {};
  const RingPtr& ring = generators.front().ring();
  const std::size_t n = ring->num_variables();
  std::set<std::size_t> dropped(drop.begin(), drop.end());
  for (std::size_t d : dropped) {
    if (d >= n) throw InputError("elimination variable index out of range");
  }
  if (dropped.empty()) {
    return buchberger(ring, generators, options).elements();
  }
  // Put the dropped variables first, keep the relative order of the rest.
  std::vector<std::size_t> forward(n);
  std::vector<std::string> names;
  std::size_t slot = 0;
  for (std::size_t d : dropped) {
    forward[d] = slot++;
    names.push_back(ring->variables()[d]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!dropped.count(i)) {
      forward[i] = slot++;
      names.push_back(ring->variables()[i]);
    }
  }
  std::vector<std::size_t> backward(n);
  for (std::size_t i = 0; i < n; ++i) backward[forward[i]] = i;

  RingPtr elim = make_ring(names, ring->field(), MonomialOrder::block(dropped.size()));
  std::vector<Polynomial> moved;
  moved.reserve(generators.size());
  for (const auto& g : generators) moved.push_back(g.mapped(elim, forward));
  GroebnerBasis gb = buchberger(elim, moved, options);

  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t k = 0; k < dropped.size(); ++k) {
        if (t.monomial[k] != 0) return false;
      }
      return true;
    });
    if (free) out.push_back(g.mapped(ring, backward));
  }
  return out;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  const Field& field = f.field();
  Coefficient lc_inv = field.inv(g.leading_coefficient());
  std::vector<Term> quotient;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    if (!g.leading_monomial().divides(lt.monomial)) {
      throw MathError("polynomial division is not exact");
    }
    Monomial m = lt.monomial / g.leading_monomial();
    Coefficient c = field.mul(lt.coefficient, lc_inv);
    quotient.push_back(Term{m, c});
    p = p.minus_term_times(m, c, g);
  }
  return Polynomial(f.ring(), std::move(quotient));
}

}  // namespace fullness
