#include <gtest/gtest.h>

#include "clc/verify.hpp"
#include "fixtures.hpp"

using clc::Rational;
namespace verify = clc::verify;

TEST(Oracle, AgreesOnBlackpoolAndSmallCases) {
  auto v = fixtures::blackpool();
  EXPECT_EQ(verify::oracle_indirect_scores(v), clc::indirect_scores(v));
  EXPECT_EQ(verify::max_min_power(v, 5), clc::indirect_scores(v));
  auto two = fixtures::from_rows({"A", "B"}, {{0, Rational(1, 3)}, {Rational(2, 3), 0}});
  auto s = verify::oracle_indirect_scores(two);
  EXPECT_EQ(s(0, 1), Rational(1, 3));
  EXPECT_EQ(s(1, 0), Rational(2, 3));
}

TEST(Generators, StayInGammaAndAreSeeded) {
  verify::Rng a(5), b(5);
  for (int i = 0; i < 20; ++i) {
    auto x = verify::random_gamma(a, 6);
    EXPECT_EQ(x, verify::random_gamma(b, 6));
    EXPECT_TRUE(clc::validate_gamma({x.candidates(), x.values()}).ok());
  }
  auto p = verify::random_profile(a, 5);
  EXPECT_TRUE(p.has_integer_weights());
}

TEST(Decomposition, PlantedDominanceSatisfiesAllFour) {
  verify::Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    auto planted = verify::planted_dominance(rng, 5, 1 + i % 3);
    auto r = verify::check_decomposition(planted.profile, planted.group);
    EXPECT_TRUE(r.all());
  }
}

TEST(Decomposition, CyclicSingletonSatisfiesNone) {
  auto r = verify::check_decomposition(fixtures::cyclic(), {0});
  EXPECT_TRUE(r.none());
}

TEST(Decomposition, EveryoneAboveAUnanimousLoser) {
  auto p = clc::parse_profile("candidates: A B C D\n1: A > B > C > D\n1: C > A = B > D\n2: B > C > A > D\n");
  EXPECT_TRUE(verify::check_decomposition(p, {0, 1, 2}).all());
}

TEST(CondorcetSmith, PlantedMajorityAndCondorcetWinner) {
  verify::Rng rng(37);
  for (int i = 0; i < 30; ++i) EXPECT_TRUE(verify::check_condorcet_smith(verify::planted_majority(rng, 5, 2)));
  auto winner = clc::aggregate(clc::parse_profile("candidates: A B C\n2: B > A > C\n1: C > B > A\n"));
  EXPECT_TRUE(verify::check_condorcet_smith(winner, {1}));
  EXPECT_THROW(verify::check_condorcet_smith(fixtures::cyclic(), {0}), clc::DomainError);
}

TEST(Clones, PlantedAndDegenerate) {
  verify::Rng rng(41);
  for (int i = 0; i < 30; ++i) {
    auto planted = verify::planted_clones(rng, 5, 2);
    auto r = verify::check_clones(planted);
    EXPECT_TRUE(r) << r.detail;
  }
  auto p = verify::random_profile(rng, 4);
  EXPECT_TRUE(verify::check_clones(p, {2}));
  auto whole = verify::check_clones(p, {0, 1, 2, 3});
  EXPECT_TRUE(whole);
  EXPECT_NE(whole.detail.find("skipped"), std::string::npos);
}

TEST(Monotonicity, LiftsAndZeroLift) {
  verify::Rng rng(43);
  for (int i = 0; i < 40; ++i) {
    auto planted = verify::planted_raise(rng, 5);
    auto r = verify::check_monotonicity(*planted.before, planted.profile, planted.group[0]);
    EXPECT_TRUE(r) << r.detail;
  }
  auto v = fixtures::blackpool();
  EXPECT_TRUE(verify::check_monotonicity(v, v, 2));
  EXPECT_EQ(clc::rate(v), clc::rate(v));
  auto other = fixtures::cyclic();
  EXPECT_THROW(verify::require_lift(fixtures::blackpool(), verify::random_gamma(rng, 6), 0), clc::DomainError);
  (void)other;
}

TEST(OrderIndependence, RandomMatrices) {
  verify::Rng rng(47);
  for (int i = 0; i < 30; ++i) EXPECT_TRUE(verify::check_order_independence(verify::random_gamma(rng, 2 + i % 4, 2)));
}

TEST(Continuity, ZeroAndSmallPerturbations) {
  verify::Rng rng(53);
  auto v = fixtures::blackpool();
  EXPECT_EQ(verify::continuity_probe(rng, v, 0, 10), 0);
  const Rational eps(1, 4400);
  auto change = verify::continuity_probe(rng, v, eps, 100);
  EXPECT_LE(change, 2 * 5 * eps);
}

TEST(Continuity, PooledModulusIsMonotone) {
  verify::Rng rng(59);
  auto v = verify::random_gamma(rng, 6);
  std::vector<Rational> radii;
  for (int k = 3; k <= 12; ++k) radii.push_back(Rational(1, 1 << k));
  auto modulus = verify::continuity_modulus(rng, v, radii, 20);
  ASSERT_EQ(modulus.size(), radii.size());
  for (std::size_t i = 1; i < modulus.size(); ++i) EXPECT_LE(modulus[i], modulus[i - 1]);
}

TEST(StageChecks, AllPassOnBlackpoolAndRandomInputs) {
  for (const auto& c : verify::stage_checks(clc::tally(fixtures::blackpool()))) EXPECT_TRUE(c.result) << c.name;
  verify::Rng rng(61);
  for (int i = 0; i < 30; ++i)
    for (const auto& c : verify::stage_checks(clc::tally(verify::random_gamma(rng, 2 + i % 7))))
      EXPECT_TRUE(c.result) << c.name << ": " << c.result.detail;
}
