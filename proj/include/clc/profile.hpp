#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "clc/candidates.hpp"
#include "clc/errors.hpp"
#include "clc/matrix.hpp"
#include "clc/rational.hpp"

namespace clc {

/// A ranked ballot with ties: earlier tiers are preferred, members of one tier
/// are tied. In the complete case the tiers partition the candidate set.
struct Ballot {
  std::vector<std::vector<std::size_t>> tiers;
  Rational weight = 1;

  friend bool operator==(const Ballot&, const Ballot&) = default;
};

inline bool is_complete(const Ballot& ballot, std::size_t n) {
  std::vector<char> seen(n, 0);
  std::size_t count = 0;
  for (const auto& tier : ballot.tiers) {
    if (tier.empty()) return false;
    for (auto c : tier) {
      if (c >= n || seen[c]) return false;
      seen[c] = 1;
      ++count;
    }
  }
  return count == n;
}

/// Weighted multiset of complete ballots over a candidate set.
class Profile {
 public:
  Profile() = default;
  Profile(CandidateSet candidates, std::vector<Ballot> ballots)
      : candidates_(std::move(candidates)), ballots_(std::move(ballots)) {
    for (const auto& b : ballots_) {
      if (b.weight < 0) throw DomainError("ballot weight must be non-negative");
      if (!is_complete(b, candidates_.size()))
        throw DomainError("ballot tiers must partition the candidate set");
    }
  }

  const CandidateSet& candidates() const noexcept { return candidates_; }
  const std::vector<Ballot>& ballots() const noexcept { return ballots_; }

  Rational total_weight() const {
    Rational total = 0;
    for (const auto& b : ballots_) total += b.weight;
    return total;
  }

  /// True when every weight is an integer, so scores can be shown as counts.
  bool has_integer_weights() const {
    for (const auto& b : ballots_)
      if (boost::multiprecision::denominator(b.weight) != 1) return false;
    return true;
  }

 private:
  CandidateSet candidates_;
  std::vector<Ballot> ballots_;
};

enum class UnlistedPolicy { Error, TiedLast };

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

}  // namespace detail

/// Parses the ballot file format:
///
///     # comment
///     candidates: A B C D
///     3: A > B = C > D
///     1/2: D > C > B > A
///
/// Weights are non-negative decimals or p/q rationals; `>` separates tiers and
/// `=` ties candidates inside a tier.
inline Profile parse_profile(std::string_view text, UnlistedPolicy policy = UnlistedPolicy::Error) {
  std::optional<CandidateSet> candidates;
  std::vector<Ballot> ballots;

  auto lines = detail::split(text, '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    auto line = detail::trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(lineno, "expected 'WEIGHT: ballot'");
    auto head = detail::trim(line.substr(0, colon));
    auto body = line.substr(colon + 1);

    if (!candidates) {
      if (head != "candidates") throw ParseError(lineno, "first line must be 'candidates: NAME ...'");
      try {
        candidates = CandidateSet(detail::split_words(body));
      } catch (const DomainError& e) {
        throw ParseError(lineno, e.what());
      }
      continue;
    }

    auto weight = parse_rational(head);
    if (!weight) throw ParseError(lineno, "invalid weight '" + std::string(head) + "'");
    if (*weight < 0) throw ParseError(lineno, "negative weight '" + std::string(head) + "'");

    const std::size_t n = candidates->size();
    Ballot ballot;
    ballot.weight = *weight;
    std::vector<char> seen(n, 0);
    for (auto tier_text : detail::split(body, '>')) {
      std::vector<std::size_t> tier;
      for (auto name_text : detail::split(tier_text, '=')) {
        auto name = detail::trim(name_text);
        if (name.empty()) throw ParseError(lineno, "empty candidate name in ballot");
        auto index = candidates->find(name);
        if (!index) throw ParseError(lineno, "unknown candidate '" + std::string(name) + "'");
        if (seen[*index]) throw ParseError(lineno, "duplicate candidate '" + std::string(name) + "' in ballot");
        seen[*index] = 1;
        tier.push_back(*index);
      }
      ballot.tiers.push_back(std::move(tier));
    }

    std::vector<std::size_t> missing;
    for (std::size_t c = 0; c < n; ++c)
      if (!seen[c]) missing.push_back(c);
    if (!missing.empty()) {
      if (policy == UnlistedPolicy::Error) {
        std::string names;
        for (auto c : missing) names += (names.empty() ? "" : " ") + candidates->name(c);
        throw ParseError(lineno, "incomplete ballot (unlisted: " + names + ")");
      }
      ballot.tiers.push_back(std::move(missing));
    }
    ballots.push_back(std::move(ballot));
  }

  if (!candidates) throw ParseError(0, "missing 'candidates:' line");
  return Profile(std::move(*candidates), std::move(ballots));
}

/// Doubled pairwise score of one ballot: 2 if x is in an earlier tier than y,
/// 1 if tied, 0 otherwise.
inline SquareTable<Integer> ballot_counts(const Ballot& ballot, std::size_t n) {
  std::vector<std::size_t> tier_of(n, 0);
  for (std::size_t t = 0; t < ballot.tiers.size(); ++t)
    for (auto c : ballot.tiers[t]) tier_of[c] = t;
  SquareTable<Integer> counts(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) counts(x, y) = tier_of[x] < tier_of[y] ? 2 : tier_of[x] == tier_of[y] ? 1 : 0;
  return counts;
}

/// Llull matrix of a single ballot: 1 preferred, 1/2 tied, 0 otherwise.
inline LlullMatrix ballot_to_scores(const Ballot& ballot, const CandidateSet& candidates) {
  if (!is_complete(ballot, candidates.size())) throw DomainError("ballot is not complete");
  return LlullMatrix(candidates, ballot_counts(ballot, candidates.size()), 2);
}

/// Weighted average of the ballot matrices, computed exactly.
inline LlullMatrix aggregate(const Profile& profile) {
  const std::size_t n = profile.candidates().size();
  Integer scale = 1;  // lcm of weight denominators
  for (const auto& b : profile.ballots())
    scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(b.weight));

  SquareTable<Integer> sum(n);
  Integer total = 0;
  for (const auto& b : profile.ballots()) {
    if (b.weight == 0) continue;
    Integer w = boost::multiprecision::numerator(b.weight) * (scale / boost::multiprecision::denominator(b.weight));
    total += w;
    auto counts = ballot_counts(b, n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y && counts(x, y) != 0) sum(x, y) += w * counts(x, y);
  }
  if (total == 0) throw DomainError("total ballot weight is zero");
  return LlullMatrix(profile.candidates(), std::move(sum), 2 * total);
}

struct GammaViolation {
  std::size_t x = 0;
  std::size_t y = 0;
  Rational residual;  ///< v_xy + v_yx - 1
  bool out_of_range = false;
};

struct GammaReport {
  std::vector<GammaViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks range and completeness on every unordered pair {x, y}, x < y.
inline GammaReport validate_gamma(const RawMatrix& m) {
  GammaReport report;
  const std::size_t n = m.values.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const Rational& a = m.values(x, y);
      const Rational& b = m.values(y, x);
      Rational residual = a + b - 1;
      bool out_of_range = a < 0 || a > 1 || b < 0 || b > 1;
      if (out_of_range || residual != 0) report.violations.push_back({x, y, residual, out_of_range});
    }
  return report;
}

inline std::string describe(const GammaViolation& v, const CandidateSet& candidates) {
  std::string what = "pair (" + candidates.name(v.x) + ", " + candidates.name(v.y) + "): ";
  if (v.out_of_range) what += "entry outside [0,1]; ";
  return what + "v_xy + v_yx - 1 = " + to_exact_string(v.residual);
}

/// Validated conversion from raw values; throws DomainError naming the first bad pair.
inline LlullMatrix make_llull(const RawMatrix& m) {
  auto report = validate_gamma(m);
  if (!report.ok()) throw DomainError("not a complete Llull matrix: " + describe(report.violations.front(), m.candidates));
  return LlullMatrix::from_values(m.candidates, m.values);
}

}  // namespace clc
