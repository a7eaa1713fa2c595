#include "fullness/invariants.hpp"

#include <algorithm>

#include "fullness/errors.hpp"

namespace fullness {

namespace {

// J^(n+j) : J^j. Colon by J^j directly when it has few generators, otherwise
// as j successive colons by J.
Ideal chain_term(IdealPowers& powers, unsigned n, unsigned j) {
  Ideal base = powers.base();
  Ideal numerator = powers(n + j);
  Ideal denominator = powers(j);
  if (denominator.reduced_generators().size() <= j * base.reduced_generators().size()) {
    return colon(numerator, denominator);
  }
  Ideal c = numerator;
  for (unsigned i = 0; i < j; ++i) c = colon(c, base);
  return c;
}

std::string describe(const PredicateResult& r) {
  if (r.value) return "true";
  return r.certified ? "false" : "false(sampled)";
}

}  // namespace

IdealPowers::IdealPowers(Ideal base) : powers_{Ideal::unit(base.ring()), base} {}

Ideal IdealPowers::operator()(unsigned n) {
  while (powers_.size() <= n) powers_.push_back(product(powers_.back(), powers_[1]));
  return powers_[n];
}

ReductionCertificate reduction_number(const Ideal& ideal, IdealPowers& m_powers,
                                      unsigned max_iter) {
  if (!ideal.inside_maximal()) {
    throw InputError("the ideal is not contained in the maximal ideal");
  }
  for (unsigned k = 0; k <= max_iter; ++k) {
    // I m^k ⊆ m^(k+1) always; equality needs only the reverse inclusion.
    Ideal lhs = k == 0 ? ideal : product(ideal, m_powers(k));
    if (!contained_local(m_powers(k + 1), lhs)) continue;
    Ideal next = product(ideal, m_powers(k + 1));
    if (!contained_local(m_powers(k + 2), next)) {
      throw MathError("reduction equality at " + std::to_string(k) + " did not persist to " +
                      std::to_string(k + 1));
    }
    return ReductionCertificate{ideal, m_powers.base(), k, k + 1};
  }
  throw MathError("not detected as a reduction of the maximal ideal within " +
                  std::to_string(max_iter) + " steps");
}

ReductionCertificate reduction_number(const Ideal& ideal, unsigned max_iter) {
  IdealPowers powers(Ideal::maximal(ideal.ring()));
  return reduction_number(ideal, powers, max_iter);
}

RRChainRecord ratliff_rush_chain(IdealPowers& powers, unsigned n,
                                 const RatliffRushOptions& options) {
  if (n == 0) throw InputError("Ratliff-Rush chains start at n = 1");
  if (options.window < 2) throw InputError("the stabilization window must be at least 2");
  RRChainRecord record{n, {}, powers(n), options.window, false};
  unsigned run = 0;
  for (unsigned j = 1; j <= options.j_cap; ++j) {
    Ideal term = chain_term(powers, n, j);
    if (record.chain.empty()) {
      run = 1;
    } else {
      const Ideal& previous = record.chain.back();
      if (!contained_local(previous, term)) {
        throw MathError("colon chain for power " + std::to_string(n) +
                        " is not ascending at j = " + std::to_string(j));
      }
      run = contained_local(term, previous) ? run + 1 : 1;
    }
    record.chain.push_back(std::move(term));
    if (run >= options.window) {
      record.stable_value = record.chain.back();
      return record;
    }
  }
  throw MathError("colon chain for power " + std::to_string(n) + " did not stabilize within j = " +
                  std::to_string(options.j_cap));
}

RRChainRecord ratliff_rush_power(const QuotientRingPtr& ring, unsigned n,
                                 const RatliffRushOptions& options) {
  IdealPowers powers(Ideal::maximal(ring));
  return ratliff_rush_chain(powers, n, options);
}

SIndexResult s_index(IdealPowers& m_powers, unsigned bound, const RatliffRushOptions& options) {
  if (bound == 0) throw InputError("the s-index bound must be at least 1");
  SIndexResult result;
  unsigned last_open = 0;
  for (unsigned i = 1; i <= bound; ++i) {
    RRChainRecord record = ratliff_rush_chain(m_powers, i, options);
    if (!contained_local(record.stable_value, m_powers(i))) last_open = i;
    result.records.push_back(std::move(record));
  }
  result.s = last_open + 1;
  result.certified_up_to = bound;
  return result;
}

SIndexResult s_index(const QuotientRingPtr& ring, unsigned bound,
                     const RatliffRushOptions& options) {
  IdealPowers powers(Ideal::maximal(ring));
  return s_index(powers, bound, options);
}

DaoReport dao_numbers(const Ideal& ideal, const GenericElementPolicy& policy,
                      const DaoOptions& options) {
  const QuotientRingPtr& ring = ideal.ring();
  if (ideal.is_zero()) throw InputError("the zero ideal is not a reduction");
  auto regular = find_regular_linear_form(ring, policy);
  if (!regular) {
    throw MathError("depth probe failed: no sampled linear form is a nonzerodivisor");
  }

  IdealPowers m_powers(Ideal::maximal(ring));
  ReductionCertificate reduction = [&] {
    try {
      return reduction_number(ideal, m_powers, options.max_iter);
    } catch (const MathError& e) {
      throw MathError(std::string("I not a reduction of m: ") + e.what());
    }
  }();

  DaoReport report;
  report.depth_witness = *regular;
  report.r_I = reduction.r;
  unsigned bound = options.s_bound ? options.s_bound
                                   : std::max(reduction.r + options.safety, 8U);
  SIndexResult s = s_index(m_powers, bound, options.rr);
  report.s = s.s;
  report.s_certified_up_to = s.certified_up_to;
  report.ratliff_rush = std::move(s.records);
  report.alpha = std::max(report.r_I, report.s - 1);
  report.n1 = report.n3 = report.alpha;

  for (unsigned n = 0; n <= report.alpha + 1; ++n) {
    Ideal power_n = n == 0 ? ideal : product(ideal, m_powers(n));
    PredicateRow row;
    row.n = n;
    row.m_full = is_m_full(power_n, policy);
    row.full = is_full(power_n, policy);
    row.weakly_m_full = is_weakly_m_full(power_n);
    report.table.push_back(std::move(row));
  }

  report.n2 = 0;
  for (unsigned n = 0; n <= report.alpha; ++n) {
    if (!report.table[n].full.value) report.n2 = n + 1;
  }
  report.n2_certified = report.n2 == 0;

  const unsigned a = report.alpha;
  auto inconsistent = [&report](const std::string& why) {
    report.consistent = false;
    report.diagnostics.push_back(why);
  };
  if (!report.table[a].weakly_m_full.value) {
    inconsistent("I m^" + std::to_string(a) + " is not weakly m-full although n3 = alpha");
  }
  if (!report.table[a + 1].weakly_m_full.value) {
    inconsistent("I m^" + std::to_string(a + 1) + " is not weakly m-full although n3 = alpha");
  }
  if (a >= 1 && report.table[a - 1].weakly_m_full.value) {
    inconsistent("I m^" + std::to_string(a - 1) + " is weakly m-full although n3 = alpha");
  }
  if (!report.consistent) {
    report.diagnostics.push_back("RR window too small - increase window/bound");
  }
  for (unsigned n = a; n <= a + 1; ++n) {
    const auto& row = report.table[n];
    if (!row.m_full.value || !row.full.value) {
      report.diagnostics.push_back("sampling missed a witness at n = " + std::to_string(n) +
                                   " (m-full " + describe(row.m_full) + ", full " +
                                   describe(row.full) + "); increase trials");
    }
  }

  report.known_reg = options.known_reg;
  if (options.known_reg) report.within_reg_bound = report.n1 <= *options.known_reg;
  return report;
}

std::string to_string(StatementStatus status) {
  switch (status) {
    case StatementStatus::kHolds:
      return "HOLDS";
    case StatementStatus::kViolated:
      return "VIOLATED";
    case StatementStatus::kUncertifiedDiscrepancy:
      return "UNCERTIFIED-DISCREPANCY";
    case StatementStatus::kConsistent:
      return "CONSISTENT";
    case StatementStatus::kViolationCandidate:
      return "VIOLATION-CANDIDATE";
    case StatementStatus::kNotApplicable:
      return "NOT-APPLICABLE";
  }
  return "?";
}

bool VerificationReport::any_violation() const {
  return std::any_of(checks.begin(), checks.end(), [](const StatementCheck& c) {
    return c.status == StatementStatus::kViolated;
  });
}

VerificationReport verify_statements(const Ideal& ideal, const GenericElementPolicy& policy,
                                     const VerifyOptions& options) {
  VerificationReport out;
  out.dao = dao_numbers(ideal, policy, options.dao);
  const DaoReport& dao = out.dao;
  const QuotientRingPtr& ring = ideal.ring();
  IdealPowers m_powers(Ideal::maximal(ring));
  Ideal m = m_powers.base();
  const unsigned top = dao.alpha + 2;

  // Rows 0..top+1; the first alpha+2 come from the report.
  std::vector<PredicateRow> rows = dao.table;
  for (unsigned n = static_cast<unsigned>(rows.size()); n <= top + 1; ++n) {
    Ideal power_n = product(ideal, m_powers(n));
    PredicateRow row;
    row.n = n;
    row.full = is_full(power_n, policy);
    if (n <= top) {
      row.m_full = is_m_full(power_n, policy);
      row.weakly_m_full = is_weakly_m_full(power_n);
    }
    rows.push_back(std::move(row));
  }

  auto add = [&out](std::string statement, std::string instance, StatementStatus status,
                    std::string detail = {}) {
    out.checks.push_back({std::move(statement), std::move(instance), status, std::move(detail)});
  };

  for (unsigned n = 0; n <= top; ++n) {
    const auto& row = rows[n];
    const auto& next = rows[n + 1];
    std::string instance = "n=" + std::to_string(n);

    add("m-full implies weakly m-full", instance,
        row.m_full.value && !row.weakly_m_full.value ? StatementStatus::kViolated
                                                     : StatementStatus::kHolds);

    bool lhs = row.m_full.value;
    bool rhs = next.full.value && row.weakly_m_full.value;
    std::string detail = "m-full(I m^n)=" + describe(row.m_full) + ", full(I m^(n+1))=" +
                         describe(next.full) + ", weakly(I m^n)=" + describe(row.weakly_m_full);
    StatementStatus status = StatementStatus::kHolds;
    if (lhs && !rhs) {
      status = row.weakly_m_full.value ? StatementStatus::kUncertifiedDiscrepancy
                                       : StatementStatus::kViolated;
    } else if (!lhs && rhs) {
      status = StatementStatus::kUncertifiedDiscrepancy;
    }
    add("m-full iff next power full and weakly m-full", instance, status, detail);
  }

  auto observed = [&rows, top](auto pick) {
    unsigned t = 0;
    for (unsigned n = 0; n <= top; ++n) {
      if (!pick(rows[n]).value) t = n + 1;
    }
    return t;
  };
  unsigned n1_seen = observed([](const PredicateRow& r) -> const PredicateResult& { return r.m_full; });
  unsigned n2_seen = observed([](const PredicateRow& r) -> const PredicateResult& { return r.full; });
  unsigned n3_seen =
      observed([](const PredicateRow& r) -> const PredicateResult& { return r.weakly_m_full; });
  std::string seen = "observed on n=0.." + std::to_string(top) + ": n1=" + std::to_string(n1_seen) +
                     ", n2=" + std::to_string(n2_seen) + ", n3=" + std::to_string(n3_seen);

  {
    StatementStatus status = StatementStatus::kHolds;
    if (!(dao.n2 <= dao.n3 && dao.n3 == dao.n1)) {
      status = StatementStatus::kViolated;
    } else if (n1_seen < n3_seen) {
      status = StatementStatus::kViolated;
    } else if (n2_seen > n3_seen || n1_seen != n3_seen) {
      status = StatementStatus::kUncertifiedDiscrepancy;
    }
    add("n2 <= n3 = n1", "I", status, seen);
  }
  add("n3 = n1 = max(r_I(m), s(m) - 1)", "I",
      n3_seen == dao.alpha ? StatementStatus::kHolds : StatementStatus::kViolated,
      "alpha=" + std::to_string(dao.alpha) + ", " + seen);

  for (std::size_t i = 0; i + 1 < dao.ratliff_rush.size(); ++i) {
    const Ideal& upper = dao.ratliff_rush[i + 1].stable_value;
    const Ideal& lower = dao.ratliff_rush[i].stable_value;
    bool holds = equal_local(colon(upper, m), lower);
    add("RR(m^(n+1)) : m = RR(m^n)", "n=" + std::to_string(i + 1),
        holds ? StatementStatus::kHolds : StatementStatus::kViolated);
  }

  if (equal_local(ideal, m)) {
    bool holds = dao.r_I == 0 && dao.n1 == dao.s - 1;
    add("I = m: n1 = s(m) - 1", "I", holds ? StatementStatus::kHolds : StatementStatus::kViolated,
        "s=" + std::to_string(dao.s) + ", n1=" + std::to_string(dao.n1));
  } else {
    add("I = m: n1 = s(m) - 1", "I", StatementStatus::kNotApplicable, "I differs from m");
  }

  if (options.assert_dim == 1u) {
    if (options.assert_minimal) {
      bool holds = dao.n3 == dao.n1 && dao.n1 == dao.r_I;
      add("dimension one, minimal reduction: n3 = n1 = r(m)", "I",
          holds ? StatementStatus::kHolds : StatementStatus::kViolated,
          "r_I=" + std::to_string(dao.r_I) + ", n1=" + std::to_string(dao.n1));
    } else {
      add("dimension one, minimal reduction: n3 = n1 = r(m)", "I", StatementStatus::kNotApplicable,
          "only asserted for minimal reductions");
    }
  }

  if (options.assert_minimal && options.assert_dim && *options.assert_dim >= 2) {
    add("minimal reduction: n3 = r_I(m)", "I",
        dao.n3 == dao.r_I ? StatementStatus::kConsistent : StatementStatus::kViolationCandidate,
        "r_I=" + std::to_string(dao.r_I) + ", n3=" + std::to_string(dao.n3));
  } else {
    add("minimal reduction: n3 = r_I(m)", "I", StatementStatus::kNotApplicable,
        "needs asserted minimality and dimension >= 2");
  }

  if (dao.known_reg) {
    add("n1 <= reg R(m)", "I",
        dao.n1 <= *dao.known_reg ? StatementStatus::kHolds : StatementStatus::kViolated,
        "reg=" + std::to_string(*dao.known_reg) + ", n1=" + std::to_string(dao.n1));
  }
  return out;
}

}  // namespace fullness
