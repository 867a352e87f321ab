#include <gtest/gtest.h>

#include "lambdadelta/lambdadelta.hpp"

using namespace lambdadelta;

namespace {

Term T(const char* s) { return parse_term(s); }
Env E(const char* s) { return parse_env(s); }

const Params kP{};

const std::vector<Closure>& universe() {
  static const auto u = enumerate_closures(3, 2, 1);
  return u;
}

}  // namespace

TEST(Validity, DecomposedComputation) {
  EXPECT_TRUE(scpds_check(kP, Env{}, T("*0"), T("*1"), 1));
  EXPECT_FALSE(scpds_check(kP, Env{}, T("*3"), T("*4"), 1));
  EXPECT_TRUE(scpds_check(kP, Env{}, T("*0"), T("*0"), 0));
  EXPECT_TRUE(scpds_check(kP, E("[def *0]"), T("(cast *1 #0)"), T("*1"), 1));
}

TEST(Validity, DecomposedConversion) {
  EXPECT_TRUE(scpes_check(kP, Env{}, T("*0"), 1, T("*1"), 0));
  EXPECT_FALSE(scpes_check(kP, Env{}, T("*0"), 0, T("*1"), 0));
  for (const auto& c : enumerate_closures(3, 1, 1)) {
    if (!da(kP, c.env, c.term) || !aaa(c.env, c.term)) continue;
    ASSERT_TRUE(scpes_check(kP, c.env, c.term, 0, c.term, 0)) << print_closure(c);
  }
}

TEST(Validity, Checker) {
  EXPECT_TRUE(snv_valid(kP, Env{}, T("*7")));
  EXPECT_TRUE(snv_valid(kP, Env{}, T("(appl *0 (abst *1 #0))")));
  EXPECT_FALSE(snv_valid(kP, Env{}, T("(appl *0 (abst *0 #0))")));
  EXPECT_TRUE(snv_valid(kP, Env{}, T("(cast *1 *0)")));
  EXPECT_FALSE(snv_valid(kP, Env{}, T("(cast *0 *0)")));
  EXPECT_FALSE(snv_valid(kP, Env{}, T("#0")));
  EXPECT_TRUE(snv_valid(kP, E("[dec *0]"), T("(abst #0 #0)")));
}

TEST(Validity, FailureDiagnostics) {
  const auto a = snv_check(kP, Env{}, T("(appl *0 (abst *0 #0))"));
  ASSERT_TRUE(a.failure.has_value());
  EXPECT_EQ(a.failure->rule, "appl");
  EXPECT_EQ(a.failure->position, "root");
  EXPECT_EQ(a.failure->exhausted, Exhaustion::None);
  const auto b = snv_check(kP, Env{}, T("(abst *0 (cast *1 #0))"));
  ASSERT_TRUE(b.failure.has_value());
  EXPECT_EQ(b.failure->rule, "cast");
  EXPECT_EQ(b.failure->position, "root.2");
  const auto c = snv_check(kP, Env{}, T("(appl *0 *1)"));
  ASSERT_TRUE(c.failure.has_value());
  EXPECT_EQ(c.failure->rule, "arity");
  EXPECT_TRUE(snv_check(kP, Env{}, T("*0")).valid);
  EXPECT_FALSE(snv_check(kP, Env{}, T("*0")).failure.has_value());
}

TEST(Validity, Oracle) {
  EXPECT_TRUE(snv_oracle(kP, Env{}, T("*0"), 4));
  EXPECT_FALSE(snv_oracle(kP, Env{}, T("#0"), 4));
  EXPECT_TRUE(snv_oracle(kP, Env{}, T("(cast *1 *0)"), 4));
  EXPECT_TRUE(snv_oracle(kP, Env{}, T("(appl *0 (abst *1 #0))"), 4));
  EXPECT_FALSE(snv_oracle(kP, Env{}, T("(appl *0 (abst *0 #0))"), 4));
}

TEST(Validity, HigherValidity) {
  EXPECT_TRUE(shnv_check(kP, Env{}, T("*1"), T("*0"), 0));
  EXPECT_TRUE(shnv_check(kP, Env{}, T("*1"), T("*0"), 1));
  EXPECT_FALSE(shnv_check(kP, Env{}, T("*0"), T("*0"), 0));
}

TEST(Validity, Refinement) {
  EXPECT_TRUE(lsubsv_holds(kP, Env{}, Env{}));
  EXPECT_TRUE(lsubsv_holds(kP, E("[dec *0]"), E("[dec *0]")));
  EXPECT_TRUE(lsubsv_holds(kP, E("[def (cast *1 *0)]"), E("[dec *1]")));
  EXPECT_FALSE(lsubsv_holds(kP, E("[def (cast *0 *0)]"), E("[dec *0]")));
}

TEST(Validity, PreservationReport) {
  for (const char* s : {"*0", "(appl *0 (abst *1 #0))", "(cast *1 *0)"}) {
    const auto r = preservation_report(kP, Env{}, T(s));
    EXPECT_TRUE(r.pd.holds) << s << " " << r.pd.witness;
    EXPECT_TRUE(r.pvr.holds) << s << " " << r.pvr.witness;
    EXPECT_TRUE(r.pvt.holds) << s << " " << r.pvt.witness;
    EXPECT_TRUE(r.pt.holds) << s << " " << r.pt.witness;
    EXPECT_TRUE(r.all_hold());
  }
  const Term redex = T("(appl *0 (abst *1 #0))");
  ASSERT_TRUE(cpr_holds(Env{}, redex, T("(abbr (cast *1 *0) #0)")));
  EXPECT_TRUE(snv_valid(kP, Env{}, T("(abbr (cast *1 *0) #0)")));
}

TEST(Validity, ValidTermsHaveArityAndNormalize) {
  for (const auto& c : enumerate_closures(3, 1, 1)) {
    if (!snv_valid(kP, c.env, c.term)) continue;
    ASSERT_TRUE(aaa(c.env, c.term).has_value()) << print_closure(c);
    ASSERT_TRUE(fsb_certify(kP, c.env, c.term).ok()) << print_closure(c);
  }
}

TEST(Validity, PreservedByComputation) {
  for (const auto& c : universe()) {
    if (!snv_valid(kP, c.env, c.term)) continue;
    for (const auto& t2 : cprs_within(c.env, c.term, 2)) {
      ASSERT_TRUE(snv_valid(kP, c.env, t2)) << print_closure(c) << " -> " << print_term(t2);
    }
  }
}

TEST(Validity, StaticTypePreservesConversion) {
  for (const auto& c : enumerate_closures(3, 1, 1)) {
    if (!snv_valid(kP, c.env, c.term)) continue;
    const auto d1 = da(kP, c.env, c.term);
    for (const auto& t2 : cprs_within(c.env, c.term, 2)) {
      if (!conv(c.env, c.term, t2)) continue;
      const auto d2 = da(kP, c.env, t2);
      ASSERT_TRUE(d2.has_value());
      for (std::size_t n = 0; n <= std::min(*d1, *d2); ++n) {
        const auto u1 = lstas(kP, c.env, c.term, n);
        const auto u2 = lstas(kP, c.env, t2, n);
        ASSERT_TRUE(u1 && u2 && conv(c.env, *u1, *u2)) << print_closure(c) << " ~ " << print_term(t2);
      }
    }
  }
}

TEST(Validity, CheckerAgreesWithOracle) {
  for (const auto& c : enumerate_closures(3, 1, 1)) {
    ASSERT_EQ(snv_valid(kP, c.env, c.term), snv_oracle(kP, c.env, c.term, 4)) << print_closure(c);
  }
}

TEST(Validity, RefinementImpliesOtherRefinements) {
  const auto envs = enumerate_envs(1, enumerate_terms(3, enumerate_atoms(2, 1)));
  for (const auto& l1 : envs) {
    for (const auto& l2 : envs) {
      if (!lsubsv_holds(kP, l1, l2)) continue;
      ASSERT_TRUE(lsubd_holds(kP, l1, l2)) << print_env(l1) << " " << print_env(l2);
      ASSERT_TRUE(lsuba_holds(l1, l2)) << print_env(l1) << " " << print_env(l2);
    }
  }
}

TEST(Validity, FuelExhaustionIsReported) {
  const Term t = T("(cast (abbr *0 *1) *0)");
  EXPECT_TRUE(snv_valid(kP, Env{}, t));
  Params p;
  p.fuel = 1;
  const auto r = snv_check(p, Env{}, t);
  EXPECT_FALSE(r.valid);
  ASSERT_TRUE(r.failure.has_value());
  EXPECT_EQ(r.failure->exhausted, Exhaustion::Fuel);
}
