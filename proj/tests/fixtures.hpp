#pragma once

// Shared inputs for unit tests and the acceptance run.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "clc/clc.hpp"

namespace fixtures {

// 2001 Blackpool ballot aggregate over 44 votes, declared order 3 4 31 122 238 264.
inline const std::vector<std::string> kBlackpoolNames = {"3", "4", "31", "122", "238", "264"};

inline constexpr std::array<std::array<int, 6>, 6> kBlackpoolCounts = {{
    {0, 23, 28, 23, 28, 20},
    {21, 0, 23, 20, 30, 24},
    {16, 21, 0, 15, 25, 18},
    {21, 24, 29, 0, 28, 23},
    {16, 14, 19, 16, 0, 19},
    {24, 20, 26, 21, 25, 0},
}};

inline constexpr std::array<std::array<int, 6>, 6> kBlackpoolIndirectCounts = {{
    {0, 23, 28, 23, 28, 23},
    {24, 0, 24, 23, 30, 24},
    {21, 21, 0, 21, 25, 21},
    {24, 24, 29, 0, 28, 24},
    {19, 19, 19, 19, 0, 19},
    {24, 23, 26, 23, 25, 0},
}};

// Upper triangle of the indirect and projected margin tables (counts), rows
// and columns in the order 122 4 264 3 31 238.
inline const std::vector<std::size_t> kBlackpoolOrder = {3, 1, 5, 0, 2, 4};
inline const std::vector<std::vector<int>> kBlackpoolIndirectMarginRows = {
    {1, 1, 1, 8, 9}, {1, 1, 3, 11}, {1, 5, 6}, {7, 9}, {6}};
inline const std::vector<std::vector<int>> kBlackpoolProjectedMarginRows = {
    {1, 1, 1, 3, 6}, {1, 1, 3, 6}, {1, 3, 6}, {3, 6}, {6}};

inline constexpr std::array<int, 6> kBlackpoolRanks = {4, 2, 5, 1, 6, 3};
// Rates in declared order.
inline const std::vector<clc::Rational> kBlackpoolRates = {
    clc::Rational(151, 44), clc::Rational(149, 44), clc::Rational(157, 44),
    clc::Rational(37, 11),  clc::Rational(169, 44), clc::Rational(75, 22)};
inline const std::vector<std::string> kBlackpoolRateStrings = {"3.3636", "3.3864", "3.4091",
                                                               "3.4318", "3.5682", "3.8409"};

inline clc::LlullMatrix blackpool() {
  clc::SquareTable<clc::Integer> num(6);
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) num(x, y) = kBlackpoolCounts[x][y];
  return clc::LlullMatrix(clc::CandidateSet(kBlackpoolNames), num, 44);
}

inline std::string blackpool_tsv() {
  std::string out;
  for (const auto& name : kBlackpoolNames) out += "\t" + name;
  out += "\n";
  for (std::size_t x = 0; x < 6; ++x) {
    out += kBlackpoolNames[x];
    for (std::size_t y = 0; y < 6; ++y) out += "\t" + (x == y ? std::string("-") : std::to_string(kBlackpoolCounts[x][y]));
    out += "\n";
  }
  return out;
}

inline const char* const kCyclicBallots =
    "candidates: A B C\n"
    "1: A > B > C\n"
    "1: B > C > A\n"
    "1: C > A > B\n";

inline clc::LlullMatrix cyclic() { return clc::aggregate(clc::parse_profile(kCyclicBallots)); }

inline clc::LlullMatrix from_rows(const std::vector<std::string>& names, const std::vector<std::vector<clc::Rational>>& rows) {
  clc::SquareTable<clc::Rational> t(names.size());
  for (std::size_t x = 0; x < names.size(); ++x)
    for (std::size_t y = 0; y < names.size(); ++y) t(x, y) = rows[x][y];
  return clc::LlullMatrix::from_values(clc::CandidateSet(names), t);
}

}  // namespace fixtures
