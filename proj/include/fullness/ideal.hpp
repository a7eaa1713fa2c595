#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fullness/groebner.hpp"
#include "fullness/polynomial.hpp"

namespace fullness {

class QuotientRing;
using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

/// P/J for P = K[x_1..x_k], to be localized at m = (x_1..x_k). Every relation
/// has zero constant term, so m is a maximal ideal containing J.
class QuotientRing {
 public:
  /// Throws InputError if a relation has a nonzero constant term or J = (1).
  static QuotientRingPtr create(RingPtr ambient, std::vector<Polynomial> relations,
                                GroebnerOptions options = {});

  const RingPtr& ambient() const { return ambient_; }
  std::size_t num_variables() const { return ambient_->num_variables(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const GroebnerBasis& relations_basis() const { return relations_basis_; }
  const GroebnerOptions& options() const { return options_; }

  /// Normal form modulo J.
  Polynomial reduce(const Polynomial& f) const { return relations_basis_.normal_form(f); }
  Polynomial parse(std::string_view src) const;

  std::string to_string() const;

  QuotientRing(RingPtr ambient, std::vector<Polynomial> relations, GroebnerBasis basis,
               GroebnerOptions options);

 private:
  RingPtr ambient_;
  std::vector<Polynomial> relations_;
  GroebnerBasis relations_basis_;
  GroebnerOptions options_;
};

/// An ideal of the local ring, held as lifted generators in P together with
/// the reduced Gröbner basis of (generators + J). Immutable; copies share.
class Ideal {
 public:
  Ideal(QuotientRingPtr ring, std::vector<Polynomial> generators);

  static Ideal maximal(const QuotientRingPtr& ring);
  static Ideal unit(const QuotientRingPtr& ring);
  static Ideal zero(const QuotientRingPtr& ring);
  static Ideal parse(const QuotientRingPtr& ring, const std::vector<std::string>& generators);

  const QuotientRingPtr& ring() const { return state_->ring; }
  const std::vector<Polynomial>& generators() const { return state_->generators; }
  const GroebnerBasis& basis() const { return state_->basis; }

  /// Elements of the reduced basis that are not in J: generators of the
  /// ideal as an ideal of P/J.
  const std::vector<Polynomial>& reduced_generators() const { return state_->reduced; }

  bool is_unit() const { return basis().is_unit(); }
  /// Zero in P/J (not merely locally).
  bool is_zero() const { return state_->reduced.empty(); }
  /// Membership of f in (generators + J), before localization.
  bool contains(const Polynomial& f) const { return basis().contains(f); }
  /// True iff the ideal lies in m, i.e. it is not the unit ideal locally.
  bool inside_maximal() const;

  /// Same lifted ideal, i.e. identical reduced bases.
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.basis() == b.basis(); }

  std::string to_string() const;

 private:
  struct State {
    QuotientRingPtr ring;
    std::vector<Polynomial> generators;
    GroebnerBasis basis;
    std::vector<Polynomial> reduced;
  };
  std::shared_ptr<const State> state_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
/// power(a, 0) is the unit ideal.
Ideal power(const Ideal& a, unsigned n);
/// (A + J) ∩ (B + J) via the t·A + (1 - t)·B elimination.
Ideal intersection(const Ideal& a, const Ideal& b);
/// (A + J) :_P f, from ((A + J) ∩ (f)) / f.
Ideal colon(const Ideal& a, const Polynomial& f);
/// A :_R B, the intersection of the colons by the generators of B. B ≠ 0.
Ideal colon(const Ideal& a, const Ideal& b);

/// f ∈ B after localizing at m: tested as (B : f) ⊄ m.
bool contains_local(const Ideal& b, const Polynomial& f);
/// A ⊆ B after localizing at m.
bool contained_local(const Ideal& a, const Ideal& b);
bool equal_local(const Ideal& a, const Ideal& b);

/// f is a nonzerodivisor of the local ring: (0 : f) = 0 locally.
/// Throws MathError if f is zero in P/J.
bool is_nonzerodivisor(const Polynomial& f, const QuotientRingPtr& ring);

}  // namespace fullness
