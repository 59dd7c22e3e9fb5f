#include <gtest/gtest.h>

#include "clc/closure.hpp"
#include "clc/verify.hpp"
#include "fixtures.hpp"

using clc::Rational;

TEST(IndirectScores, BlackpoolTable) {
  auto s = clc::indirect_scores(fixtures::blackpool());
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y)
      if (x != y) EXPECT_EQ(s(x, y), Rational(fixtures::kBlackpoolIndirectCounts[x][y], 44)) << x << "," << y;
  EXPECT_EQ(s(2, 4), Rational(25, 44));
  EXPECT_EQ(s(4, 2), Rational(19, 44));
}

TEST(IndirectScores, TwoCandidatesKeepDirectScores) {
  auto v = fixtures::from_rows({"A", "B"}, {{0, Rational(3, 7)}, {Rational(4, 7), 0}});
  auto s = clc::indirect_scores(v);
  EXPECT_EQ(s(0, 1), Rational(3, 7));
  EXPECT_EQ(s(1, 0), Rational(4, 7));
}

TEST(IndirectScores, CyclicProfileIsFlat) {
  // Each pair has the direct link and one two-step path through the third candidate.
  auto v = fixtures::cyclic();
  auto s = clc::indirect_scores(v);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      if (x == y) continue;
      std::size_t z = 3 - x - y;
      Rational best = std::max(v(x, y), std::min(v(x, z), v(z, y)));
      EXPECT_EQ(s(x, y), best);
      EXPECT_EQ(s(x, y), Rational(2, 3));
    }
}

TEST(IndirectScores, MatchesPathEnumeration) {
  clc::verify::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto v = clc::verify::random_gamma(rng, 3 + trial % 4);
    EXPECT_EQ(clc::indirect_scores(v), clc::verify::oracle_indirect_scores(v));
  }
}

TEST(Margins, BlackpoolAndBoundaries) {
  auto m = clc::margins(clc::indirect_scores(fixtures::blackpool()));
  EXPECT_EQ(m(1, 4), Rational(11, 44));
  EXPECT_EQ(m(4, 1), Rational(-11, 44));

  auto tied = clc::margins(fixtures::from_rows({"A", "B"}, {{0, Rational(1, 2)}, {Rational(1, 2), 0}}));
  EXPECT_EQ(tied(0, 1), 0);
  EXPECT_EQ(tied(1, 0), 0);

  auto edge = clc::margins(fixtures::from_rows({"A", "B"}, {{0, 1}, {0, 0}}));
  EXPECT_EQ(edge(0, 1), 1);
}

TEST(ComparisonRelation, BlackpoolWinnerBeatsEveryone) {
  auto nu = clc::comparison_relation(clc::indirect_scores(fixtures::blackpool()));
  for (std::size_t y : {0, 1, 2, 4, 5}) EXPECT_TRUE(nu.contains(3, y));
  EXPECT_TRUE(clc::is_partial_order(nu));
}

TEST(ComparisonRelation, AllTiedIsEmpty) {
  auto half = Rational(1, 2);
  auto v = fixtures::from_rows({"A", "B", "C"}, {{0, half, half}, {half, 0, half}, {half, half, 0}});
  EXPECT_EQ(clc::comparison_relation(clc::indirect_scores(v)).pair_count(), 0u);
}

TEST(ComparisonRelation, PlantedDominance) {
  clc::verify::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto planted = clc::verify::planted_dominance(rng, 5, 2);
    auto v = clc::aggregate(planted.profile);
    auto nu = clc::comparison_relation(clc::indirect_scores(v));
    for (auto x : planted.group)
      for (auto y : planted.rest) {
        ASSERT_EQ(v(x, y), 1);
        EXPECT_TRUE(nu.contains(x, y));
      }
  }
}

TEST(Relation, CodualAndClosure) {
  clc::CandidateSet abc({"A", "B", "C"});
  EXPECT_EQ(clc::codual(clc::Relation(abc)).pair_count(), 6u);
  clc::Relation r(abc);
  r.insert(0, 1);
  r.insert(1, 2);
  auto closed = clc::transitive_closure(r);
  EXPECT_EQ(closed.pair_count(), 3u);
  EXPECT_TRUE(closed.contains(0, 2));
  EXPECT_FALSE(closed.contains(2, 0));
  EXPECT_THROW(r.insert(1, 1), clc::DomainError);
}

TEST(Relation, Contraction) {
  clc::CandidateSet c({"A", "B", "C", "D"});
  clc::Relation r(c);
  for (std::size_t y : {1, 2, 3}) r.insert(0, y);
  r.insert(1, 3);
  r.insert(2, 3);
  EXPECT_TRUE(clc::is_autonomous(r, {1, 2}));
  EXPECT_FALSE(clc::is_autonomous(r, {0, 1}));
  auto con = clc::make_contraction(c, {1, 2});
  EXPECT_EQ(con.candidates.names(), (std::vector<std::string>{"A", "B", "D"}));
  auto small = clc::contract(r, con, {1, 2});
  EXPECT_EQ(small.pair_count(), 3u);
  EXPECT_TRUE(small.contains(1, 2));
  EXPECT_THROW(clc::contract(r, clc::make_contraction(c, {0, 1}), {0, 1}), clc::DomainError);
}
