#include <gtest/gtest.h>

#include "fullness/errors.hpp"
#include "fullness/invariants.hpp"
#include "support/generators.hpp"
#include "support/rings.hpp"

using namespace fullness;
using testrings::ideal;

namespace {

GenericElementPolicy harness_policy() {
  GenericElementPolicy p;
  p.trials = 8;
  return p;
}

void expect_triple(const DaoReport& r, unsigned n1, unsigned n2, unsigned n3) {
  EXPECT_EQ(r.n1, n1);
  EXPECT_EQ(r.n2, n2);
  EXPECT_EQ(r.n3, n3);
}

TEST(ReductionNumber, TriplePointReductionIsOne) {
  for (auto [a, b, c] : {std::tuple{2, 2, 2}, std::tuple{2, 3, 4}}) {
    auto ring = testrings::triple_point(a, b, c);
    EXPECT_EQ(reduction_number(ideal(ring, {"x + y + z", "t"})).r, 1u);
  }
}

TEST(ReductionNumber, SemigroupRingPrincipalReductionIsThree) {
  auto ring = testrings::semigroup_4_5_11();
  auto cert = reduction_number(ideal(ring, {"x"}));
  EXPECT_EQ(cert.r, 3u);
  EXPECT_EQ(cert.checked_up_to, 4u);
  EXPECT_EQ(cert.reduced, Ideal::maximal(ring));
}

TEST(ReductionNumber, NonMinimalReductionIsOne) {
  EXPECT_EQ(reduction_number(ideal(testrings::semigroup_4_5_11(), {"x", "y"})).r, 1u);
}

TEST(ReductionNumber, MaximalIdealReducesItselfWithZero) {
  for (auto ring : {testrings::regular({"x", "y"}), testrings::semigroup_4_5_11(),
                    testrings::triple_point(2, 2, 2)}) {
    EXPECT_EQ(reduction_number(Ideal::maximal(ring)).r, 0u);
  }
}

TEST(ReductionNumber, NonReductionIsReported) {
  auto ring = testrings::regular({"x", "y"});
  EXPECT_THROW(reduction_number(ideal(ring, {"x"}), 6), MathError);
  EXPECT_THROW(reduction_number(ideal(ring, {"x", "1 + y"})), InputError);
}

TEST(ReductionNumber, EqualityPersistsOneStepFurther) {
  auto ring = testrings::semigroup_4_5_11();
  auto m = Ideal::maximal(ring);
  for (const auto& gens : std::vector<std::vector<std::string>>{{"x"}, {"x", "y"}, {"x + z"}}) {
    auto i = ideal(ring, gens);
    auto cert = reduction_number(i);
    unsigned r = cert.r;
    EXPECT_TRUE(equal_local(product(i, power(m, r + 1)), power(m, r + 2)));
    if (r >= 1) EXPECT_FALSE(equal_local(product(i, power(m, r - 1)), power(m, r)));
  }
}

TEST(RatliffRush, SemigroupRingSquareGainsZ) {
  auto ring = testrings::semigroup_4_5_11();
  auto rec = ratliff_rush_power(ring, 2);
  auto m = Ideal::maximal(ring);
  EXPECT_TRUE(equal_local(rec.stable_value, ideal(ring, {"x^2", "x*y", "y^2", "z"})));
  EXPECT_FALSE(equal_local(rec.stable_value, power(m, 2)));
  EXPECT_FALSE(rec.certified);
  EXPECT_EQ(rec.window, 3u);
  EXPECT_GE(rec.chain.size(), 3u);
}

TEST(RatliffRush, RegularPowersAreClosed) {
  auto ring = testrings::regular({"x", "y"});
  auto m = Ideal::maximal(ring);
  for (unsigned n = 1; n <= 4; ++n) {
    EXPECT_TRUE(equal_local(ratliff_rush_power(ring, n).stable_value, power(m, n))) << n;
  }
}

TEST(RatliffRush, ParameterIdealPowersMatchMonomialChain) {
  auto ring = testrings::regular({"x", "y"});
  auto j = ideal(ring, {"x^2", "y^2"});
  IdealPowers powers(j);
  oracle::MonomialIdeal oj(2, {{2, 0}, {0, 2}});
  auto opow = [&](unsigned k) {
    oracle::MonomialIdeal out(2, {{0, 0}});
    for (unsigned i = 0; i < k; ++i) out = product(out, oj);
    return out;
  };
  for (unsigned n = 1; n <= 3; ++n) {
    // Oracle chain: J^(n+j) : J^j for j <= 6, all equal to J^n.
    for (unsigned k = 1; k <= 6; ++k) ASSERT_EQ(colon(opow(n + k), opow(k)), opow(n));
    auto rec = ratliff_rush_chain(powers, n);
    EXPECT_EQ(testgen::to_oracle(rec.stable_value), opow(n));
    for (const auto& term : rec.chain) EXPECT_EQ(testgen::to_oracle(term), opow(n));
  }
}

TEST(RatliffRush, BadArguments) {
  auto ring = testrings::regular({"x", "y"});
  EXPECT_THROW(ratliff_rush_power(ring, 0), InputError);
  EXPECT_THROW(ratliff_rush_power(ring, 1, {1, 25}), InputError);
}

TEST(RatliffRush, ChainCapIsAnError) {
  auto ring = testrings::semigroup_4_5_11();
  // The square needs a few steps before three terms agree.
  EXPECT_THROW(ratliff_rush_power(ring, 2, {3, 1}), MathError);
}

TEST(SIndex, SemigroupAndTriplePointRings) {
  EXPECT_EQ(s_index(testrings::triple_point(2, 2, 2), 6).s, 1u);
  auto semi = s_index(testrings::semigroup_4_5_11(), 8);
  EXPECT_EQ(semi.s, 3u);
  EXPECT_EQ(semi.certified_up_to, 8u);
  EXPECT_EQ(semi.records.size(), 8u);
  EXPECT_EQ(s_index(testrings::regular({"x", "y", "z"}), 5).s, 1u);
  EXPECT_THROW(s_index(testrings::regular({"x"}), 0), InputError);
}

TEST(SIndex, ClosuresContainPowersAndAgreeFromS) {
  auto ring = testrings::semigroup_4_5_11();
  IdealPowers powers(Ideal::maximal(ring));
  auto s = s_index(powers, 8);
  for (const auto& rec : s.records) {
    EXPECT_TRUE(contained_local(powers(rec.n), rec.stable_value));
    if (rec.n >= s.s) EXPECT_TRUE(equal_local(powers(rec.n), rec.stable_value));
    for (std::size_t k = 1; k < rec.chain.size(); ++k) {
      EXPECT_TRUE(contained_local(rec.chain[k - 1], rec.chain[k]));
    }
  }
  // Colon of consecutive closures by m steps down one power.
  auto m = Ideal::maximal(ring);
  for (std::size_t i = 0; i + 1 < s.records.size(); ++i) {
    EXPECT_TRUE(equal_local(colon(s.records[i + 1].stable_value, m), s.records[i].stable_value));
  }
}

TEST(DaoNumbers, TriplePoint) {
  for (auto [a, b, c] : {std::tuple{2, 2, 2}, std::tuple{2, 3, 4}}) {
    auto ring = testrings::triple_point(a, b, c);
    auto r = dao_numbers(ideal(ring, {"x + y + z", "t"}), harness_policy());
    EXPECT_EQ(r.r_I, 1u);
    EXPECT_EQ(r.s, 1u);
    EXPECT_EQ(r.alpha, 1u);
    expect_triple(r, 1, 0, 1);
    EXPECT_TRUE(r.consistent);
    EXPECT_TRUE(r.n2_certified);
    EXPECT_EQ(r.presentation, "algebraic-local");
  }
}

TEST(DaoNumbers, SemigroupRingPrincipalReduction) {
  auto r = dao_numbers(ideal(testrings::semigroup_4_5_11(), {"x"}), harness_policy());
  EXPECT_EQ(r.r_I, 3u);
  EXPECT_EQ(r.s, 3u);
  expect_triple(r, 3, 3, 3);
  EXPECT_TRUE(r.consistent);
  EXPECT_FALSE(r.n2_certified);
}

TEST(DaoNumbers, SemigroupRingNonMinimalReduction) {
  auto r = dao_numbers(ideal(testrings::semigroup_4_5_11(), {"x", "y"}), harness_policy());
  EXPECT_EQ(r.r_I, 1u);
  EXPECT_EQ(r.s, 3u);
  EXPECT_EQ(r.n1, 2u);
  EXPECT_EQ(r.n3, 2u);
  EXPECT_LE(r.n2, 2u);
}

TEST(DaoNumbers, RegularRingsVanish) {
  for (auto ring : {testrings::regular({"x", "y"}), testrings::regular({"x", "y", "z"})}) {
    auto r = dao_numbers(Ideal::maximal(ring), harness_policy());
    EXPECT_EQ(r.r_I, 0u);
    EXPECT_EQ(r.s, 1u);
    expect_triple(r, 0, 0, 0);
  }
}

TEST(DaoNumbers, RegularParameterReductionVanishes) {
  auto ring = testrings::regular({"x", "y", "z"});
  auto r = dao_numbers(ideal(ring, {"x + 2*y", "y - z", "z + 3*x"}), harness_policy());
  expect_triple(r, 0, 0, 0);
}

TEST(DaoNumbers, MaximalIdealGivesSMinusOne) {
  for (auto ring : {testrings::semigroup_4_5_11(), testrings::triple_point(2, 2, 2),
                    testrings::regular({"x", "y"})}) {
    auto r = dao_numbers(Ideal::maximal(ring), harness_policy());
    EXPECT_EQ(r.r_I, 0u);
    EXPECT_EQ(r.n1, r.s - 1);
  }
}

TEST(DaoNumbers, TableIsInternallyConsistent) {
  auto ring = testrings::semigroup_4_5_11();
  for (const auto& gens : std::vector<std::vector<std::string>>{{"x"}, {"x", "y"}, {"x", "y", "z"}}) {
    auto r = dao_numbers(ideal(ring, gens), harness_policy());
    ASSERT_EQ(r.table.size(), r.alpha + 2);
    EXPECT_LE(r.n2, r.n3);
    EXPECT_EQ(r.n1, r.alpha);
    EXPECT_EQ(r.n3, r.alpha);
    for (unsigned n = r.alpha; n <= r.alpha + 1; ++n) {
      EXPECT_TRUE(r.table[n].m_full.value);
      EXPECT_TRUE(r.table[n].full.value);
      EXPECT_TRUE(r.table[n].weakly_m_full.value);
    }
    if (r.alpha >= 1) EXPECT_FALSE(r.table[r.alpha - 1].weakly_m_full.value);
    for (const auto& row : r.table) {
      if (row.m_full.value) EXPECT_TRUE(row.weakly_m_full.value);
    }
  }
}

TEST(DaoNumbers, KnownRegularityIsRecorded) {
  DaoOptions opts;
  opts.known_reg = 2;
  auto r = dao_numbers(ideal(testrings::semigroup_4_5_11(), {"x"}), harness_policy(), opts);
  ASSERT_TRUE(r.within_reg_bound);
  EXPECT_FALSE(*r.within_reg_bound);
}

TEST(DaoNumbers, PreconditionFailures) {
  auto ring = testrings::regular({"x", "y"});
  EXPECT_THROW(dao_numbers(ideal(ring, {"x"}), {}, {{}, 0, 4, 5, {}}), MathError);
  EXPECT_THROW(dao_numbers(Ideal::zero(ring), {}), InputError);
  auto no_depth = testrings::quotient({"x", "y"}, {"x^2", "x*y"});
  try {
    dao_numbers(Ideal::maximal(no_depth), {});
    FAIL();
  } catch (const MathError& e) {
    EXPECT_NE(std::string(e.what()).find("depth probe failed"), std::string::npos);
  }
}

TEST(DaoNumbers, TooSmallSBoundIsFlagged) {
  DaoOptions opts;
  opts.s_bound = 1;
  auto r = dao_numbers(ideal(testrings::semigroup_4_5_11(), {"x", "y"}), harness_policy(), opts);
  EXPECT_FALSE(r.consistent);
  bool flagged = false;
  for (const auto& d : r.diagnostics) flagged |= d.find("RR window too small") != std::string::npos;
  EXPECT_TRUE(flagged);
}

const StatementCheck* find_check(const VerificationReport& v, const std::string& prefix) {
  for (const auto& c : v.checks) {
    if (c.statement.rfind(prefix, 0) == 0) return &c;
  }
  return nullptr;
}

TEST(Verify, TriplePointIsConsistentWithConjecture) {
  auto ring = testrings::triple_point(2, 2, 2);
  VerifyOptions opts;
  opts.assert_dim = 2;
  opts.assert_minimal = true;
  auto v = verify_statements(ideal(ring, {"x + y + z", "t"}), harness_policy(), opts);
  EXPECT_FALSE(v.any_violation());
  auto c = find_check(v, "minimal reduction: n3 = r_I(m)");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->status, StatementStatus::kConsistent);
}

TEST(Verify, SemigroupPrincipalReductionSatisfiesDimensionOneStatement) {
  VerifyOptions opts;
  opts.assert_dim = 1;
  opts.assert_minimal = true;
  auto v = verify_statements(ideal(testrings::semigroup_4_5_11(), {"x"}), harness_policy(), opts);
  EXPECT_FALSE(v.any_violation());
  auto c = find_check(v, "dimension one, minimal reduction");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->status, StatementStatus::kHolds);
}

TEST(Verify, NonMinimalReductionSkipsDimensionOneStatement) {
  VerifyOptions opts;
  opts.assert_dim = 1;
  auto v = verify_statements(ideal(testrings::semigroup_4_5_11(), {"x", "y"}), harness_policy(), opts);
  EXPECT_FALSE(v.any_violation());
  auto order = find_check(v, "n2 <= n3 = n1");
  ASSERT_TRUE(order);
  EXPECT_EQ(order->status, StatementStatus::kHolds);
  auto c = find_check(v, "dimension one, minimal reduction");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->status, StatementStatus::kNotApplicable);
}

TEST(Verify, MaximalIdealCase) {
  auto v = verify_statements(Ideal::maximal(testrings::semigroup_4_5_11()), harness_policy());
  auto c = find_check(v, "I = m: n1 = s(m) - 1");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->status, StatementStatus::kHolds);
  EXPECT_FALSE(v.any_violation());
}

// In a two-dimensional regular ring the three indices agree for every ideal.
TEST(TwoDimensionalRegular, ObservedIndicesAgreeOnRandomIdeals) {
  testgen::Gen gen(314);
  auto ring = testrings::regular({"x", "y"});
  auto m = Ideal::maximal(ring);
  const unsigned top = 6;
  int checked = 0;
  for (int i = 0; i < 12; ++i) {
    auto id = testgen::random_monomial_or_binomial(gen, ring, 3, 3);
    unsigned observed[3] = {0, 0, 0};
    Ideal in = id;
    for (unsigned n = 0; n <= top; ++n) {
      if (!is_m_full(in, harness_policy()).value) observed[0] = n + 1;
      if (!is_full(in, harness_policy()).value) observed[1] = n + 1;
      if (!is_weakly_m_full(in).value) observed[2] = n + 1;
      in = product(in, m);
    }
    if (observed[2] > top) continue;  // not yet stable inside the window
    EXPECT_EQ(observed[0], observed[1]) << id.to_string();
    EXPECT_EQ(observed[1], observed[2]) << id.to_string();
    ++checked;
  }
  EXPECT_GE(checked, 8);
}

}  // namespace
