#include "fullness/fullness.hpp"

#include "fullness/errors.hpp"

namespace fullness {

namespace {

// splitmix64; fixed so reports are reproducible across standard libraries.
std::uint64_t next_random(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void require_proper_nonzero(const Ideal& ideal) {
  if (!ideal.inside_maximal()) throw InputError("the unit ideal is not a valid argument");
  if (ideal.is_zero()) throw InputError("the zero ideal is not a valid argument");
}

}  // namespace

LinearFormSampler::LinearFormSampler(const RingPtr& ring, std::uint64_t seed)
    : ring_(ring), state_(seed) {}

Polynomial LinearFormSampler::next() {
  const Field& field = ring_->field();
  for (;;) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < ring_->num_variables(); ++i) {
      std::uint64_t r = next_random(state_);
      Coefficient c = field.is_rational()
                          ? field.from_int(static_cast<long long>(r % 65537) - 32768)
                          : field.from_int(static_cast<long long>(r % field.characteristic()));
      terms.push_back(Term{Monomial::variable(ring_->num_variables(), i), c});
    }
    Polynomial form(ring_, std::move(terms));
    if (!form.is_zero()) return form;
  }
}

bool m_full_with(const Ideal& ideal, const Polynomial& x) {
  Ideal im = product(ideal, Ideal::maximal(ideal.ring()));
  return equal_local(colon(im, x), ideal);
}

bool full_with(const Ideal& ideal, const Polynomial& x) {
  Ideal by_m = colon(ideal, Ideal::maximal(ideal.ring()));
  return equal_local(colon(ideal, x), by_m);
}

PredicateResult is_weakly_m_full(const Ideal& ideal) {
  require_proper_nonzero(ideal);
  Ideal m = Ideal::maximal(ideal.ring());
  Ideal im = product(ideal, m);
  PredicateResult result;
  // I ⊆ Im : m always holds, so only the reverse inclusion needs testing.
  result.value = contained_local(colon(im, m), ideal);
  result.certified = true;
  return result;
}

PredicateResult is_m_full(const Ideal& ideal, const GenericElementPolicy& policy) {
  require_proper_nonzero(ideal);
  Ideal im = product(ideal, Ideal::maximal(ideal.ring()));
  LinearFormSampler sampler(ideal.ring()->ambient(), policy.seed);
  PredicateResult result;
  for (unsigned t = 0; t < policy.trials; ++t) {
    Polynomial x = sampler.next();
    ++result.trials_used;
    if (contained_local(colon(im, x), ideal)) {
      result.value = true;
      result.witness = x;
      result.certified = true;
      return result;
    }
  }
  return result;
}

PredicateResult is_full(const Ideal& ideal, const GenericElementPolicy& policy) {
  require_proper_nonzero(ideal);
  Ideal by_m = colon(ideal, Ideal::maximal(ideal.ring()));
  LinearFormSampler sampler(ideal.ring()->ambient(), policy.seed);
  PredicateResult result;
  for (unsigned t = 0; t < policy.trials; ++t) {
    Polynomial x = sampler.next();
    ++result.trials_used;
    // I : m ⊆ I : x for every x ∈ m.
    if (contained_local(colon(ideal, x), by_m)) {
      result.value = true;
      result.witness = x;
      result.certified = true;
      return result;
    }
  }
  return result;
}

std::optional<Polynomial> find_regular_linear_form(const QuotientRingPtr& ring,
                                                   const GenericElementPolicy& policy) {
  LinearFormSampler sampler(ring->ambient(), policy.seed);
  for (unsigned t = 0; t < policy.trials; ++t) {
    Polynomial x = sampler.next();
    if (ring->reduce(x).is_zero()) continue;
    if (is_nonzerodivisor(x, ring)) return x;
  }
  return std::nullopt;
}

}  // namespace fullness
