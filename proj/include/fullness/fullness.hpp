#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fullness/ideal.hpp"

namespace fullness {

/// How "a general element x ∈ m \ m²" is modeled: random linear forms
/// c_1 x_1 + ... + c_k x_k with the c_i uniform in the field, not all zero.
/// The same policy always produces the same sequence of forms.
struct GenericElementPolicy {
  unsigned trials = 5;
  std::uint64_t seed = 0x5eed;
};

/// Draws linear forms deterministically from a policy.
class LinearFormSampler {
 public:
  LinearFormSampler(const RingPtr& ring, std::uint64_t seed);
  Polynomial next();

 private:
  RingPtr ring_;
  std::uint64_t state_;
};

struct PredicateResult {
  bool value = false;
  /// The element x that made an existential predicate true.
  std::optional<Polynomial> witness;
  /// True answers are exact; false answers of the sampled predicates are not.
  bool certified = false;
  unsigned trials_used = 0;
};

/// I m : m = I locally. Deterministic and always certified.
PredicateResult is_weakly_m_full(const Ideal& ideal);

/// I m : x = I locally for a sampled x.
PredicateResult is_m_full(const Ideal& ideal, const GenericElementPolicy& policy);

/// I : x = I : m locally for a sampled x.
PredicateResult is_full(const Ideal& ideal, const GenericElementPolicy& policy);

/// Exact re-check of a witness for the two sampled predicates.
bool m_full_with(const Ideal& ideal, const Polynomial& x);
bool full_with(const Ideal& ideal, const Polynomial& x);

/// First sampled linear form that is a nonzerodivisor, if any within the
/// policy's trials. Models the positive-depth hypothesis.
std::optional<Polynomial> find_regular_linear_form(const QuotientRingPtr& ring,
                                                   const GenericElementPolicy& policy);

}  // namespace fullness
