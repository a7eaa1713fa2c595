#pragma once

// Seeded random inputs for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "fullness/ideal.hpp"
#include "monomial_oracle.hpp"

namespace testgen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  oracle::Exponents exponents(std::size_t nvars, int max_degree) {
    oracle::Exponents e(nvars, 0);
    int total = range(0, max_degree);
    for (int k = 0; k < total; ++k) ++e[range(0, static_cast<int>(nvars) - 1)];
    return e;
  }

  // A monomial of degree 1..max_degree.
  oracle::Exponents proper_exponents(std::size_t nvars, int max_degree) {
    for (;;) {
      auto e = exponents(nvars, max_degree);
      for (auto v : e) {
        if (v) return e;
      }
    }
  }

  std::vector<oracle::Exponents> monomial_gens(std::size_t nvars, int max_gens, int max_degree) {
    std::vector<oracle::Exponents> gens;
    int count = range(1, max_gens);
    for (int i = 0; i < count; ++i) gens.push_back(proper_exponents(nvars, max_degree));
    return gens;
  }

  fullness::Polynomial polynomial(const fullness::RingPtr& ring, int max_terms, int max_degree,
                                  int coefficient_bound = 9) {
    std::vector<fullness::Term> terms;
    int count = range(0, max_terms);
    for (int i = 0; i < count; ++i) {
      auto e = exponents(ring->num_variables(), max_degree);
      terms.push_back(fullness::Term{fullness::Monomial(std::span<const std::uint32_t>(e.data(), e.size())),
                                     ring->field().from_int(range(-coefficient_bound,
                                                                  coefficient_bound))});
    }
    return fullness::Polynomial(ring, std::move(terms));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline fullness::Monomial to_monomial(const oracle::Exponents& e) {
  return fullness::Monomial(std::span<const std::uint32_t>(e.data(), e.size()));
}

inline fullness::Polynomial monomial(const fullness::RingPtr& ring, const oracle::Exponents& e) {
  return fullness::Polynomial::term(ring, to_monomial(e),
                                    ring->field().one());
}

inline fullness::Ideal to_ideal(const fullness::QuotientRingPtr& ring,
                                const std::vector<oracle::Exponents>& gens) {
  std::vector<fullness::Polynomial> polys;
  for (const auto& g : gens) polys.push_back(monomial(ring->ambient(), g));
  return fullness::Ideal(ring, std::move(polys));
}

inline oracle::MonomialIdeal to_oracle(const fullness::Ideal& ideal) {
  std::vector<oracle::Exponents> gens;
  for (const auto& g : ideal.reduced_generators()) {
    const auto& m = g.leading_monomial();
    oracle::Exponents e(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i];
    gens.push_back(e);
  }
  return oracle::MonomialIdeal(ideal.ring()->num_variables(), std::move(gens));
}

// Ideal whose generators are monomials or binomials m1 - c*m2 with m1, m2 of
// positive degree, so it stays inside the maximal ideal.
inline fullness::Ideal random_monomial_or_binomial(Gen& gen, const fullness::QuotientRingPtr& ring,
                                                  int max_gens, int max_degree) {
  const auto& amb = ring->ambient();
  std::size_t n = amb->num_variables();
  std::vector<fullness::Polynomial> gens;
  int count = gen.range(1, max_gens);
  for (int i = 0; i < count; ++i) {
    auto a = monomial(amb, gen.proper_exponents(n, max_degree));
    if (gen.coin(0.4)) {
      auto b = monomial(amb, gen.proper_exponents(n, max_degree));
      a = a - b.scaled(amb->field().from_int(gen.range(1, 5)));
      if (a.is_zero()) a = b;
    }
    gens.push_back(a);
  }
  return fullness::Ideal(ring, std::move(gens));
}

}  // namespace testgen
