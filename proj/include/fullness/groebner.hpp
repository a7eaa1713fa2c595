#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "fullness/polynomial.hpp"

namespace fullness {

struct GroebnerOptions {
  /// Abort with DegreeCapExceeded once an S-pair of larger lcm degree is met.
  unsigned degree_cap = 60;
  /// Abort with TimeBudgetExceeded after this instant.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// A Gröbner basis under the order of its ring. Elements are monic.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool reduced);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& elements() const { return elements_; }
  bool reduced() const { return reduced_; }

  bool is_zero() const { return elements_.empty(); }
  bool is_unit() const;

  /// Full reduction: no term of the result is divisible by a leading monomial.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Reduced bases of the same ideal compare equal.
  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  bool reduced_;
};

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Gröbner basis of the ideal generated by `generators` in `ring`,
/// under the ring's order. Zero generators are ignored; an empty list gives
/// the zero ideal.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators,
                         const GroebnerOptions& options = {});

/// Convenience overload; the generator list must be nonempty.
GroebnerBasis buchberger(std::span<const Polynomial> generators,
                         const GroebnerOptions& options = {});

/// Generators of (generators) ∩ K[remaining variables], returned in the
/// original ring. Computed with a block order that puts `drop` first.
std::vector<Polynomial> eliminate(std::span<const Polynomial> generators,
                                  std::span<const std::size_t> drop,
                                  const GroebnerOptions& options = {});

/// Exact quotient f / g. Throws MathError if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

}  // namespace fullness
