#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "clc/closure.hpp"
#include "clc/errors.hpp"
#include "clc/matrix.hpp"
#include "clc/ordering.hpp"

namespace clc {

/// Superdiagonal intermediate margins along an admissible order xi: entry i
/// belongs to the consecutive pair (xi[i], xi[i+1]) and is the minimum indirect
/// margin over the upper-right rectangle {(p, q) : p <= xi[i], xi[i+1] <= q}.
struct IntermediateMargins {
  AdmissibleOrder xi;
  std::vector<Integer> numerators;  ///< N - 1 entries over `denominator`
  Integer denominator = 1;

  std::size_t size() const noexcept { return numerators.size(); }
  Rational operator[](std::size_t i) const { return Rational(numerators.at(i), denominator); }
};

/// Projected margins together with the order they were built along.
struct ProjectedMargins {
  AdmissibleOrder xi;
  MarginMatrix margins;
};

/// Throws DomainError unless every indirect margin along xi is non-negative.
inline void require_admissible(const MarginMatrix& indirect, const AdmissibleOrder& xi) {
  const std::size_t n = xi.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (indirect.numerator(xi[i], xi[j]) < 0)
        throw DomainError("order is not admissible: " + xi.candidates().name(xi[j]) +
                          " beats " + xi.candidates().name(xi[i]) + " indirectly");
}

/// Rectangle minima in O(N^2) via per-row suffix minima.
inline IntermediateMargins intermediate_margins(const MarginMatrix& indirect, const AdmissibleOrder& xi) {
  if (!(indirect.candidates() == xi.candidates()))
    throw DomainError("intermediate_margins: order and margins use different candidates");
  require_admissible(indirect, xi);

  const std::size_t n = xi.size();
  IntermediateMargins out{xi, {}, indirect.denominator()};
  if (n < 2) return out;

  // suffix(p, j) = min over q >= j of M*(xi[p], xi[q]), for j > p
  SquareTable<Integer> suffix(n);
  for (std::size_t p = 0; p + 1 < n; ++p) {
    suffix(p, n - 1) = indirect.numerator(xi[p], xi[n - 1]);
    for (std::size_t j = n - 1; j-- > p + 1;)
      suffix(p, j) = std::min(suffix(p, j + 1), Integer(indirect.numerator(xi[p], xi[j])));
  }
  out.numerators.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Integer low = suffix(0, i + 1);
    for (std::size_t p = 1; p <= i; ++p) low = std::min(low, suffix(p, i + 1));
    out.numerators[i] = std::move(low);
  }
  return out;
}

/// For x before y in xi: the largest intermediate margin between them;
/// the lower triangle is filled by antisymmetry.
inline ProjectedMargins projected_margins(const IntermediateMargins& sigma) {
  const auto& xi = sigma.xi;
  const std::size_t n = xi.size();
  SquareTable<Integer> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer high = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      high = std::max(high, sigma.numerators[j - 1]);
      m(xi[i], xi[j]) = high;
      m(xi[j], xi[i]) = -high;
    }
  }
  return {xi, MarginMatrix(xi.candidates(), std::move(m), sigma.denominator)};
}

/// p_xy = (1 + m_xy) / 2.
inline ProjectedScores projected_scores(const ProjectedMargins& pm) {
  const auto& m = pm.margins;
  const std::size_t n = m.size();
  SquareTable<Integer> p(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) p(x, y) = m.denominator() + m.numerator(x, y);
  return ProjectedScores(m.candidates(), std::move(p), 2 * m.denominator());
}

/// Canonical admissible order for a matrix of indirect scores: sort by the
/// tie-splitting Copeland rank (wins count 1, indirect ties 1/2), then by
/// declared order.
inline AdmissibleOrder canonical_order(const IndirectScores& s) {
  Relation nu = comparison_relation(s);
  return admissible_order(nu, copeland_ranks(codual(nu)));
}

/// The projection along a caller-chosen admissible order. Exists so that
/// independence from the order can be exercised; use `project` otherwise.
inline ProjectedScores project_along(const LlullMatrix& v, const AdmissibleOrder& xi) {
  auto indirect = margins(indirect_scores(v));
  return projected_scores(projected_margins(intermediate_margins(indirect, xi)));
}

/// The idempotent projection P of Gamma onto the order-monotone,
/// max-decomposable Llull matrices.
inline ProjectedScores project(const LlullMatrix& v) {
  auto s = indirect_scores(v);
  auto xi = canonical_order(s);
  return projected_scores(projected_margins(intermediate_margins(margins(s), xi)));
}

/// Reinterprets projected scores as a Llull matrix (same invariants), e.g. to
/// apply the projection again.
inline LlullMatrix as_llull(const ProjectedScores& p) {
  return LlullMatrix(p.candidates(), p.numerators(), p.denominator());
}

}  // namespace clc
