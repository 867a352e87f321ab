#include <gtest/gtest.h>

#include <vector>

#include "lambdadelta/lambdadelta.hpp"
#include "oracles.hpp"

using namespace lambdadelta;

namespace {

Term T(const char* s) { return parse_term(s); }
Env E(const char* s) { return parse_env(s); }

std::vector<Term> small_terms() { return enumerate_terms(3, enumerate_atoms(1, 4)); }

}  // namespace

TEST(Relocation, Lift) {
  EXPECT_EQ(lift(0, 1, T("#0")), T("#1"));
  EXPECT_EQ(lift(1, 5, T("#0")), T("#0"));
  EXPECT_EQ(lift(0, 2, T("(appl #0 #1)")), T("(appl #2 #3)"));
  EXPECT_EQ(lift(0, 1, T("(abst #0 #0)")), T("(abst #1 #0)"));
  EXPECT_EQ(lift(0, 3, T("*4")), T("*4"));
}

TEST(Relocation, Delift) {
  EXPECT_EQ(delift(0, 1, T("#1")), T("#0"));
  EXPECT_EQ(delift(0, 1, T("#0")), std::nullopt);
  EXPECT_EQ(delift(3, 0, T("(abst #7 #0)")), T("(abst #7 #0)"));
  EXPECT_EQ(delift(0, 1, T("(abst *0 #0)")), T("(abst *0 #0)"));
  EXPECT_EQ(delift(0, 1, T("(abst *0 #1)")), std::nullopt);
}

TEST(Relocation, DeliftAgreesWithPreimageSearch) {
  for (const auto& t : small_terms()) {
    for (std::size_t l = 0; l <= 2; ++l) {
      for (std::size_t m = 0; m <= 2; ++m) {
        ASSERT_EQ(delift(l, m, t), oracle::lift_preimage(l, m, t)) << print_term(t) << " " << l << " " << m;
      }
    }
  }
}

TEST(Relocation, LiftLaws) {
  for (const auto& t : small_terms()) {
    for (std::size_t l = 0; l <= 2; ++l) {
      ASSERT_EQ(lift(l, 0, t), t);
      for (std::size_t m = 0; m <= 2; ++m) ASSERT_EQ(delift(l, m, lift(l, m, t)), t);
      ASSERT_EQ(occurs_free(l, t), !delift(l, 1, t).has_value());
    }
  }
}

TEST(Relocation, Liftv) {
  EXPECT_TRUE(liftv(3, 4, std::vector<Term>{}).empty());
  EXPECT_EQ(liftv(0, 1, std::vector<Term>{T("#0")}), std::vector<Term>{T("#1")});
  EXPECT_EQ(liftv(0, 1, std::vector<Term>{T("#0"), T("*2")}), (std::vector<Term>{T("#1"), T("*2")}));
}

TEST(Relocation, Lifts) {
  const Term t = T("(appl #0 (abst #1 #1))");
  EXPECT_EQ(lifts({}, t), t);
  const std::vector<RelocPair> one{{0, 1}};
  EXPECT_EQ(lifts(one, T("#0")), T("#1"));
  const std::vector<RelocPair> two{{0, 1}, {0, 1}};
  EXPECT_EQ(lifts(two, T("#0")), T("#2"));
  const std::vector<RelocPair> cs{{1, 2}, {0, 1}, {2, 3}};
  for (const auto& u : small_terms()) {
    ASSERT_EQ(lifts(cs, u), lifts(std::span(cs).subspan(1), lift(1, 2, u)));
  }
}

TEST(Relocation, Drop) {
  EXPECT_EQ(*drop(0, 1, E("[dec *0]")), Env{});
  EXPECT_FALSE(drop(1, 1, E("[dec *0; dec #0]")).has_value());
  const Env l = E("[dec *0; def #0; dec (abst #1 #0)]");
  EXPECT_EQ(*drop(0, 0, l), l);
  EXPECT_EQ(*drop(1, 1, E("[dec *0; dec *1; def #1]")), E("[dec *0; def #0]"));
}

TEST(Relocation, DropFailureReportsDepth) {
  const auto r = drop(2, 1, E("[dec *0; dec #0; dec *1]"));
  ASSERT_FALSE(r.has_value());
  EXPECT_EQ(r.error().depth, 1u);
}

TEST(Relocation, DropLaws) {
  for (const auto& env : enumerate_envs(2, enumerate_atoms(1, 3))) {
    for (std::size_t l = 0; l <= 3; ++l) {
      const auto d = drop(l, 0, env);
      if (d) ASSERT_EQ(*d, env);
    }
    for (std::size_t m = 0; m <= 3; ++m) {
      const auto d = drop(0, m, env);
      ASSERT_EQ(d.has_value(), m <= env.length());
      if (d) ASSERT_EQ(d->length(), env.length() - m);
      if (d && m < env.length()) ASSERT_EQ(d->head(), env.lookup(m)->first);
    }
  }
}

TEST(Relocation, Drops) {
  const Env l = E("[dec *0]");
  EXPECT_EQ(*drops({}, l), l);
  const std::vector<RelocPair> one{{0, 1}};
  EXPECT_EQ(*drops(one, l), Env{});
  const std::vector<RelocPair> two{{0, 1}, {0, 1}};
  EXPECT_FALSE(drops(two, l).has_value());
}

TEST(Relocation, Lreq) {
  const Env l = E("[dec *0; def #0]");
  for (std::size_t m = 0; m <= 3; ++m) EXPECT_TRUE(lreq(0, m, l, l));
  EXPECT_TRUE(lreq(0, 0, E("[dec *0]"), E("[def *1]")));
  EXPECT_FALSE(lreq(0, 1, E("[dec *0]"), E("[dec *1]")));
  EXPECT_TRUE(lreq(1, 1, E("[dec *0; dec *0]"), E("[dec *0; dec *1]")));
  EXPECT_FALSE(lreq(0, 0, E("[dec *0]"), E("[]")));
}

TEST(Relocation, LreqLaws) {
  const auto envs = enumerate_envs(2, enumerate_atoms(0, 1));
  for (const auto& a : envs) {
    for (const auto& b : envs) {
      if (a.length() != b.length()) continue;
      ASSERT_EQ(lreq(0, a.length(), a, b), a == b);
      for (std::size_t l = 0; l <= 2; ++l) {
        ASSERT_EQ(lreq(l, 1, a, b), lreq(l, 1, b, a));
        for (const auto& c : envs) {
          if (c.length() == a.length() && lreq(l, 1, a, b) && lreq(l, 1, b, c)) ASSERT_TRUE(lreq(l, 1, a, c));
        }
      }
    }
  }
}
