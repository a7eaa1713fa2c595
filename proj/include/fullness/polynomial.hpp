#pragma once

#include <span>
#include <string>
#include <vector>

#include "fullness/coefficient.hpp"
#include "fullness/monomial.hpp"
#include "fullness/poly_ring.hpp"

namespace fullness {

struct Term {
  Monomial monomial;
  Coefficient coefficient;
};

/// Multivariate polynomial over a PolyRing. Terms are kept strictly
/// descending in the ring's order with no zero coefficients; the zero
/// polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts, merges like terms and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  /// Trusts that `terms` is already normalized.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, long long value);
  static Polynomial constant(RingPtr ring, const Coefficient& value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, const Monomial& m, const Coefficient& c);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for zero.
  long degree() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Coefficient& leading_coefficient() const { return terms_.front().coefficient; }
  Coefficient constant_term() const;
  /// Sum of the degree-one terms.
  Polynomial linear_part() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scaled(const Coefficient& c) const;
  Polynomial times_term(const Monomial& m, const Coefficient& c) const;
  /// this - c*m*other, computed in a single merge.
  Polynomial minus_term_times(const Monomial& m, const Coefficient& c,
                              const Polynomial& other) const;
  Polynomial pow(unsigned exponent) const;
  /// Leading coefficient 1; zero stays zero.
  Polynomial monic() const;

  /// Rewrites into `target`, sending variable i to variable var_map[i].
  /// Re-sorts under the target order.
  Polynomial mapped(const RingPtr& target, std::span<const std::size_t> var_map) const;

  /// Same ring (by compatibility) and identical normalized terms.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Descending term lists: returns a - c*shift*b.
std::vector<Term> subtract_scaled(const PolyRing& ring, std::span<const Term> a,
                                  const Monomial& shift, const Coefficient& c,
                                  std::span<const Term> b);

}  // namespace fullness
