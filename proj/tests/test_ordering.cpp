#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "clc/closure.hpp"
#include "clc/ordering.hpp"
#include "clc/verify.hpp"
#include "fixtures.hpp"

using clc::Rational;

namespace {

std::vector<std::string> names_of(const clc::AdmissibleOrder& o) {
  std::vector<std::string> out;
  for (auto x : o.sequence()) out.push_back(o.candidates().name(x));
  return out;
}

clc::Relation blackpool_nu() { return clc::comparison_relation(clc::indirect_scores(fixtures::blackpool())); }

}  // namespace

TEST(CopelandRanks, Blackpool) {
  auto nu = blackpool_nu();
  auto ranks = clc::copeland_ranks(clc::codual(nu));
  for (std::size_t x = 0; x < 6; ++x) EXPECT_EQ(ranks[x], fixtures::kBlackpoolRanks[x]) << x;
}

TEST(CopelandRanks, EmptyAndTotal) {
  clc::CandidateSet abc({"A", "B", "C"});
  auto empty = clc::copeland_ranks(clc::Relation(abc));
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(empty[x], 3);

  auto total = clc::copeland_ranks(clc::order_relation(abc, {0, 1, 2}));
  EXPECT_EQ(total[0], 1);
  EXPECT_EQ(total[1], 2);
  EXPECT_EQ(total[2], 3);
}

TEST(CopelandRanks, TiesCountHalf) {
  // Codual of the empty relation: every pair in both directions.
  clc::CandidateSet abc({"A", "B", "C"});
  auto ranks = clc::copeland_ranks(clc::codual(clc::Relation(abc)));
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(ranks[x], 2);

  clc::Relation r(abc);
  r.insert(0, 1);
  auto half = clc::copeland_ranks(clc::codual(r));
  EXPECT_EQ(half[0], Rational(3, 2));
  EXPECT_EQ(half[1], Rational(5, 2));
  EXPECT_EQ(half[2], 2);
}

TEST(AdmissibleOrder, Blackpool) {
  auto nu = blackpool_nu();
  auto order = clc::admissible_order(nu, clc::copeland_ranks(clc::codual(nu)));
  EXPECT_EQ(names_of(order), (std::vector<std::string>{"122", "4", "264", "3", "31", "238"}));
  EXPECT_TRUE(clc::extends(order, nu));
}

TEST(AdmissibleOrder, TiebreakAndForcedExtension) {
  clc::CandidateSet abc({"A", "B", "C"});
  clc::Relation empty(abc);
  EXPECT_EQ(names_of(clc::admissible_order(empty, clc::copeland_ranks(clc::codual(empty)))),
            (std::vector<std::string>{"A", "B", "C"}));

  clc::CandidateSet ab({"A", "B"});
  clc::Relation ba(ab);
  ba.insert(1, 0);
  EXPECT_EQ(names_of(clc::admissible_order(ba, clc::copeland_ranks(clc::codual(ba)))),
            (std::vector<std::string>{"B", "A"}));
}

TEST(AdmissibleOrder, RejectsNonPartialOrders) {
  clc::CandidateSet ab({"A", "B"});
  clc::Relation both(ab);
  both.insert(0, 1);
  both.insert(1, 0);
  EXPECT_THROW(clc::admissible_order(both, clc::copeland_ranks(both)), clc::DomainError);
  EXPECT_THROW(clc::AdmissibleOrder(ab, {0, 0}), clc::DomainError);
}

TEST(AllAdmissibleOrders, Enumeration) {
  clc::CandidateSet abc({"A", "B", "C"});
  EXPECT_EQ(clc::all_admissible_orders(clc::Relation(abc)).size(), 6u);

  auto total = clc::order_relation(abc, {2, 0, 1});
  auto rigid = clc::all_admissible_orders(total);
  ASSERT_EQ(rigid.size(), 1u);
  EXPECT_EQ(names_of(rigid[0]), (std::vector<std::string>{"C", "A", "B"}));

  // Oracle: filter all permutations by A before B.
  clc::Relation ab(abc);
  ab.insert(0, 1);
  std::set<std::vector<std::size_t>> expected;
  std::vector<std::size_t> perm = {0, 1, 2};
  do {
    if (std::find(perm.begin(), perm.end(), 0) < std::find(perm.begin(), perm.end(), 1)) expected.insert(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::vector<std::size_t>> got;
  for (const auto& o : clc::all_admissible_orders(ab)) got.insert(o.sequence());
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got.size(), 3u);

  EXPECT_THROW(clc::all_admissible_orders(clc::Relation(clc::letter_candidates(8))), clc::DomainError);
}

TEST(AdmissibleOrder, RankSortExtendsNuOnRandomInputs) {
  clc::verify::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto nu = clc::comparison_relation(clc::indirect_scores(clc::verify::random_gamma(rng, 2 + trial % 7, 3)));
    auto order = clc::admissible_order(nu, clc::copeland_ranks(clc::codual(nu)));
    EXPECT_TRUE(clc::extends(order, nu));
    EXPECT_TRUE(clc::is_subset(order.to_relation(), clc::codual(nu)));
  }
}
