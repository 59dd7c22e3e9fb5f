#include <gtest/gtest.h>

#include "clc/report.hpp"
#include "fixtures.hpp"

using clc::Rational;

namespace {

std::string parse_error_of(const std::string& text) {
  try {
    clc::read_matrix_tsv(text);
  } catch (const clc::ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(MatrixTsv, WhitespaceFallbackAndFractions) {
  auto raw = clc::read_matrix_tsv("# pairs\nA B\nA - 0.6\nB 2/5 *\n");
  EXPECT_EQ(raw.candidates.names(), (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(raw.values(0, 1), Rational(3, 5));
  EXPECT_EQ(raw.values(1, 0), Rational(2, 5));
}

TEST(MatrixTsv, CornerCellIsOptional) {
  auto with = clc::read_matrix_tsv("x\tA\tB\nA\t-\t1\nB\t0\t-\n");
  auto without = clc::read_matrix_tsv("\tA\tB\nA\t-\t1\nB\t0\t-\n");
  EXPECT_EQ(with.values, without.values);
  EXPECT_EQ(with.candidates, without.candidates);
}

TEST(MatrixTsv, RoundTrip) {
  auto v = fixtures::blackpool();
  auto again = clc::make_llull(clc::read_matrix_tsv(clc::write_matrix_tsv(v)));
  EXPECT_EQ(again, v);
}

TEST(MatrixTsv, Errors) {
  EXPECT_NE(parse_error_of("\tA\tB\nA\t-\tx\nB\t0\t-\n").find("line 2"), std::string::npos);
  EXPECT_NE(parse_error_of("\tA\tB\nA\t-\t1\nC\t0\t-\n").find("line 3"), std::string::npos);
  EXPECT_NE(parse_error_of("\tA\tB\nA\t-\nB\t0\t-\n").find("line 2"), std::string::npos);
  EXPECT_FALSE(parse_error_of("").empty());
  EXPECT_FALSE(parse_error_of("\tA\tB\tC\nA\t-\t1\n").empty());
  EXPECT_THROW(clc::read_matrix_tsv("\tA\tB\nA\t-\t1\nB\t0\t-\n", Rational(0)), clc::ParseError);
}

TEST(Render, PlainRatesInSocialOrder) {
  auto report = clc::tally(fixtures::blackpool());
  auto text = clc::ReportRenderer(report, {}).text();
  EXPECT_EQ(text,
            "122 3.3636\n"
            "4   3.3864\n"
            "264 3.4091\n"
            "3   3.4318\n"
            "31  3.5682\n"
            "238 3.8409\n");
}

TEST(Render, DetailedBlackpoolTables) {
  auto report = clc::tally(fixtures::blackpool());
  auto text = clc::ReportRenderer(report, {true, 4, Rational(44)}).text();
  EXPECT_NE(text.find("Rates: 3.3636 3.3864 3.4091 3.4318 3.5682 3.8409\n"), std::string::npos);
  EXPECT_NE(text.find("Admissible order: 122 4 264 3 31 238\n"), std::string::npos);
  EXPECT_NE(text.find("122    -    1    1    1    3    6\n"), std::string::npos);
  EXPECT_NE(text.find("4           -    1    1    3   11\n"), std::string::npos);
  EXPECT_NE(text.find("238  19   19   19   19     -  19\n"), std::string::npos);
  EXPECT_NE(text.find("Social order: 122 > 4 > 264 > 3 > 31 > 238\n"), std::string::npos);
}

TEST(Render, Json) {
  auto report = clc::tally(fixtures::cyclic());
  auto j = clc::ReportRenderer(report, {}).json();
  for (const auto& key : {"candidates", "llull", "indirect_scores", "indirect_margins", "ranks", "order",
                          "intermediate", "projected_margins", "projected", "rates", "preorder"})
    EXPECT_TRUE(j.contains(key)) << key;
  ASSERT_EQ(j["rates"].size(), 3u);
  for (const auto& r : j["rates"]) {
    EXPECT_EQ(r["exact"], "2/1");
    EXPECT_EQ(r["decimal"], "2.0000");
  }
  EXPECT_TRUE(j["llull"][0][0].is_null());
  EXPECT_EQ(j["llull"][0][1]["exact"], "2/3");
  EXPECT_EQ(j["preorder"].size(), 1u);
  EXPECT_EQ(j["intermediate"][0]["pair"][0], "A");
}
