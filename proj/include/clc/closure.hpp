#pragma once

#include <cstddef>

#include "clc/errors.hpp"
#include "clc/matrix.hpp"
#include "clc/relation.hpp"

namespace clc {

/// Widest-path closure: out_xy = max over paths x -> y of the smallest link.
/// Floyd-Warshall order over intermediates, O(N^3). Works for any totally
/// ordered value type; the diagonal is left untouched.
template <class T>
SquareTable<T> max_min_closure(SquareTable<T> s) {
  const std::size_t n = s.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x == k) continue;
      const T& via = s(x, k);
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || y == k) continue;
        const T& link = s(k, y) < via ? s(k, y) : via;
        if (s(x, y) < link) s(x, y) = link;
      }
    }
  }
  return s;
}

/// s_xz >= min(s_xy, s_yz) for all distinct x, y, z.
template <class T>
bool satisfies_min_inequality(const SquareTable<T>& s) {
  const std::size_t n = s.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const T& low = s(x, y) < s(y, z) ? s(x, y) : s(y, z);
        if (s(x, z) < low) return false;
      }
    }
  return true;
}

/// Indirect scores: the score of the strongest path, a path being as strong
/// as its weakest link.
inline IndirectScores indirect_scores(const LlullMatrix& v) {
  return IndirectScores(v.candidates(), max_min_closure(v.numerators()), v.denominator());
}

/// m_xy = s_xy - s_yx. For Llull inputs, v_xy = (1 + m_xy) / 2.
template <MatrixKind K>
  requires(K != MatrixKind::Margin)
MarginMatrix margins(const ScoreMatrix<K>& s) {
  const std::size_t n = s.size();
  SquareTable<Integer> m(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) m(x, y) = s.numerator(x, y) - s.numerator(y, x);
  return MarginMatrix(s.candidates(), std::move(m), s.denominator());
}

/// {xy : s_xy > s_yx} for any score matrix, with no further guarantees.
template <MatrixKind K>
Relation strict_relation(const ScoreMatrix<K>& s) {
  Relation r(s.candidates());
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (x != y && s.numerator(x, y) > s.numerator(y, x)) r.insert(x, y);
  return r;
}

/// The indirect comparison relation {xy : s_xy > s_yx}. Refuses inputs that
/// fail the min-inequality, since only then is the result a partial order.
inline Relation comparison_relation(const IndirectScores& s) {
  if (!satisfies_min_inequality(s.numerators()))
    throw DomainError("comparison_relation: scores do not satisfy the min-inequality");
  return strict_relation(s);
}

/// {xy : m_xy > 0} on a margin matrix.
inline Relation positive_relation(const MarginMatrix& m) {
  Relation r(m.candidates());
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y)
      if (x != y && m.numerator(x, y) > 0) r.insert(x, y);
  return r;
}

}  // namespace clc
