#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fullness/fullness.hpp"
#include "fullness/ideal.hpp"

namespace fullness {

/// Lazily computed powers J^0 = (1), J^1, J^2, ... of a fixed ideal.
class IdealPowers {
 public:
  explicit IdealPowers(Ideal base);

  Ideal base() const { return powers_[1]; }
  Ideal operator()(unsigned n);

 private:
  std::vector<Ideal> powers_;
};

struct ReductionCertificate {
  Ideal ideal;
  /// Always m here.
  Ideal reduced;
  /// Least r with I m^r = m^(r+1) locally.
  unsigned r = 0;
  /// Equality was also verified at r + 1 .. checked_up_to.
  unsigned checked_up_to = 0;
};

/// Least r with I m^r = m^(r+1) locally. Throws InputError if I ⊄ m and
/// MathError if no such r ≤ max_iter exists.
ReductionCertificate reduction_number(const Ideal& ideal, IdealPowers& m_powers,
                                      unsigned max_iter = 50);
ReductionCertificate reduction_number(const Ideal& ideal, unsigned max_iter = 50);

struct RatliffRushOptions {
  /// Consecutive locally equal chain terms needed to call the chain stable.
  unsigned window = 3;
  /// Largest j tried in J^(n+j) : J^j.
  unsigned j_cap = 25;
};

struct RRChainRecord {
  unsigned n = 0;
  /// chain[j-1] = J^(n+j) : J^j for j = 1, 2, ...
  std::vector<Ideal> chain;
  Ideal stable_value;
  unsigned window = 0;
  /// Stabilization over a finite window is evidence, not proof.
  bool certified = false;
};

/// Candidate for the Ratliff-Rush closure of J^n: the colon chain
/// J^(n+j) : J^j run until `window` consecutive terms agree locally.
/// Requires J to contain a nonzerodivisor. Throws MathError if the chain is
/// not ascending or does not settle within j_cap.
RRChainRecord ratliff_rush_chain(IdealPowers& powers, unsigned n,
                                 const RatliffRushOptions& options = {});

/// Ratliff-Rush candidate for m^n.
RRChainRecord ratliff_rush_power(const QuotientRingPtr& ring, unsigned n,
                                 const RatliffRushOptions& options = {});

struct SIndexResult {
  unsigned s = 1;
  /// ~m^i = m^i was only examined for i ≤ certified_up_to.
  unsigned certified_up_to = 0;
  std::vector<RRChainRecord> records;  // records[i-1] is for m^i
};

/// s(m) = 1 + the largest i ≤ bound with ~m^i ≠ m^i, or 1 if there is none.
SIndexResult s_index(IdealPowers& m_powers, unsigned bound,
                     const RatliffRushOptions& options = {});
SIndexResult s_index(const QuotientRingPtr& ring, unsigned bound,
                     const RatliffRushOptions& options = {});

struct DaoOptions {
  RatliffRushOptions rr;
  /// 0 selects max(r_I + safety, 8).
  unsigned s_bound = 0;
  unsigned safety = 4;
  unsigned max_iter = 50;
  std::optional<unsigned> known_reg;
};

struct PredicateRow {
  unsigned n = 0;
  PredicateResult m_full;
  PredicateResult full;
  PredicateResult weakly_m_full;
};

struct DaoReport {
  unsigned r_I = 0;
  unsigned s = 1;
  unsigned s_certified_up_to = 0;
  unsigned alpha = 0;
  unsigned n1 = 0;
  unsigned n2 = 0;
  unsigned n3 = 0;
  /// n2 = 0 is exact; a positive n2 rests on a sampled "not full".
  bool n2_certified = false;
  std::vector<PredicateRow> table;  // n = 0 .. alpha + 1
  std::vector<RRChainRecord> ratliff_rush;
  Polynomial depth_witness;
  std::optional<unsigned> known_reg;
  std::optional<bool> within_reg_bound;
  /// Every exact cross-check agreed with alpha.
  bool consistent = true;
  std::vector<std::string> diagnostics;
  std::string presentation = "algebraic-local";
};

/// n1, n2, n3 of a reduction I of m. n1 = n3 = alpha = max(r_I, s - 1) holds
/// whenever the local ring has positive depth, so only n2 needs scanning, and
/// only over 0..alpha: past alpha, I m^(n-1) is m-full, which forces I m^n
/// to be full.
DaoReport dao_numbers(const Ideal& ideal, const GenericElementPolicy& policy,
                      const DaoOptions& options = {});

enum class StatementStatus {
  kHolds,
  kViolated,
  /// A sampled predicate said false where the statement needs true.
  kUncertifiedDiscrepancy,
  kConsistent,
  kViolationCandidate,
  kNotApplicable,
};

std::string to_string(StatementStatus status);

struct StatementCheck {
  std::string statement;
  std::string instance;
  StatementStatus status = StatementStatus::kHolds;
  std::string detail;
};

struct VerifyOptions {
  DaoOptions dao;
  /// Krull dimension, as asserted by the user; never computed.
  std::optional<unsigned> assert_dim;
  /// The user asserts that I is a minimal reduction of m.
  bool assert_minimal = false;
};

struct VerificationReport {
  DaoReport dao;
  std::vector<StatementCheck> checks;
  bool any_violation() const;
};

VerificationReport verify_statements(const Ideal& ideal, const GenericElementPolicy& policy,
                                     const VerifyOptions& options = {});

}  // namespace fullness
