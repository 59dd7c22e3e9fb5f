#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "clc/matrix.hpp"
#include "clc/rational.hpp"
#include "clc/relation.hpp"

namespace clc {

/// One exact value per candidate, in declared order. Used for rank-like
/// rates (1 best, N worst), Borda mean ranks, and maximin scores.
struct RateVector {
  CandidateSet candidates;
  std::vector<Rational> values;

  std::size_t size() const noexcept { return values.size(); }
  const Rational& operator[](std::size_t x) const { return values.at(x); }
  friend bool operator==(const RateVector&, const RateVector&) = default;
};

namespace detail {

// N - sum_y s_xy for a Gamma-valued matrix.
template <MatrixKind K>
RateVector rank_like(const ScoreMatrix<K>& s) {
  const std::size_t n = s.size();
  RateVector out{s.candidates(), std::vector<Rational>(n)};
  for (std::size_t x = 0; x < n; ++x) {
    Integer row = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (y != x) row += s.numerator(x, y);
    out.values[x] = Rational(static_cast<long long>(n) * s.denominator() - row, s.denominator());
  }
  return out;
}

}  // namespace detail

/// R_x = N - sum_{y != x} p_xy.
inline RateVector rank_like_rates(const ProjectedScores& p) { return detail::rank_like(p); }

/// Borda mean ranks, a_x = N - sum_{y != x} v_xy.
inline RateVector borda_mean_ranks(const LlullMatrix& v) { return detail::rank_like(v); }

/// Maximin scores sigma_x = min_{y != x} v_xy (higher is better). A comparison
/// baseline only: it does not honour the Condorcet-Smith principle for
/// dominant sets of more than one candidate.
inline RateVector maximin_scores(const LlullMatrix& v) {
  const std::size_t n = v.size();
  RateVector out{v.candidates(), std::vector<Rational>(n, Rational(1))};
  for (std::size_t x = 0; x < n; ++x) {
    bool first = true;
    Integer low = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      if (first || v.numerator(x, y) < low) low = v.numerator(x, y);
      first = false;
    }
    if (!first) out.values[x] = Rational(low, v.denominator());
  }
  return out;
}

/// Total preorder {xy : R_x <= R_y} with its strict part and tie classes.
/// Classes are listed best first; members keep declared order.
struct SocialPreorder {
  Relation weak;
  Relation strict;
  std::vector<std::vector<std::size_t>> classes;
};

inline SocialPreorder social_preorder(const RateVector& rates) {
  const std::size_t n = rates.size();
  SocialPreorder out{Relation(rates.candidates), Relation(rates.candidates), {}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      if (rates[x] <= rates[y]) out.weak.insert(x, y);
      if (rates[x] < rates[y]) out.strict.insert(x, y);
    }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return rates[a] < rates[b]; });
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || rates[order[i]] != rates[order[i - 1]]) out.classes.emplace_back();
    out.classes.back().push_back(order[i]);
  }
  return out;
}

}  // namespace clc
