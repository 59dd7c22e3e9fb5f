#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "clc/candidates.hpp"
#include "clc/errors.hpp"
#include "clc/rational.hpp"

namespace clc {

/// Dense N x N storage indexed by ordered pairs. The diagonal is carried but
/// never read by the algorithms (only proper pairs matter).
template <class T>
class SquareTable {
 public:
  SquareTable() = default;
  explicit SquareTable(std::size_t n, const T& fill = T{}) : n_(n), cells_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t x, std::size_t y) { return cells_[x * n_ + y]; }
  const T& operator()(std::size_t x, std::size_t y) const { return cells_[x * n_ + y]; }

  friend bool operator==(const SquareTable&, const SquareTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> cells_;
};

/// Arbitrary rational pair values with names attached; what input files
/// produce before anything is validated.
struct RawMatrix {
  CandidateSet candidates;
  SquareTable<Rational> values;
};

enum class MatrixKind {
  Llull,      ///< v in Gamma: entries in [0,1], v_xy + v_yx = 1
  Indirect,   ///< max-min closure of a Llull matrix: entries in [0,1]
  Margin,     ///< antisymmetric, entries in [-1,1]
  Projected,  ///< image of the projection: in Gamma
};

inline const char* kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Llull: return "Llull matrix";
    case MatrixKind::Indirect: return "indirect scores";
    case MatrixKind::Margin: return "margin matrix";
    case MatrixKind::Projected: return "projected scores";
  }
  return "matrix";
}

/// Exact pair matrix stored as integer numerators over one common positive
/// denominator, kept in lowest terms so structural equality is value equality.
/// Every instance satisfies the invariants of its kind; construction checks them.
template <MatrixKind K>
class ScoreMatrix {
 public:
  static constexpr MatrixKind kind = K;

  ScoreMatrix() = default;

  ScoreMatrix(CandidateSet candidates, SquareTable<Integer> numerators, Integer denominator)
      : candidates_(std::move(candidates)),
        num_(std::move(numerators)),
        den_(std::move(denominator)) {
    if (num_.size() != candidates_.size())
      throw DomainError(std::string(kind_name(K)) + ": size does not match candidate count");
    if (den_ <= 0) throw DomainError(std::string(kind_name(K)) + ": denominator must be positive");
    canonicalize();
    validate();
  }

  /// Brings arbitrary rationals onto their least common denominator.
  static ScoreMatrix from_values(CandidateSet candidates, const SquareTable<Rational>& values) {
    const std::size_t n = values.size();
    Integer den = 1;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(values(x, y)));
    SquareTable<Integer> num(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y)
          num(x, y) = boost::multiprecision::numerator(values(x, y)) *
                      (den / boost::multiprecision::denominator(values(x, y)));
    return ScoreMatrix(std::move(candidates), std::move(num), std::move(den));
  }

  std::size_t size() const noexcept { return candidates_.size(); }
  const CandidateSet& candidates() const noexcept { return candidates_; }

  Rational operator()(std::size_t x, std::size_t y) const { return Rational(num_(x, y), den_); }
  const Integer& numerator(std::size_t x, std::size_t y) const { return num_(x, y); }
  const Integer& denominator() const noexcept { return den_; }
  const SquareTable<Integer>& numerators() const noexcept { return num_; }

  SquareTable<Rational> values() const {
    SquareTable<Rational> out(size());
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = 0; y < size(); ++y)
        if (x != y) out(x, y) = (*this)(x, y);
    return out;
  }

  friend bool operator==(const ScoreMatrix&, const ScoreMatrix&) = default;

 private:
  void canonicalize() {
    const std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x) num_(x, x) = 0;
    Integer g = den_;
    for (std::size_t x = 0; x < n && g != 1; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y && num_(x, y) != 0) g = boost::multiprecision::gcd(g, num_(x, y));
    if (g > 1) {
      den_ /= g;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) num_(x, y) /= g;
    }
  }

  void validate() const {
    const std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        const Integer& a = num_(x, y);
        const Integer& b = num_(y, x);
        bool ok = true;
        if constexpr (K == MatrixKind::Margin) {
          ok = a >= -den_ && a <= den_ && a == -b;
        } else if constexpr (K == MatrixKind::Indirect) {
          ok = a >= 0 && a <= den_;
        } else {
          ok = a >= 0 && a <= den_ && a + b == den_;
        }
        if (!ok)
          throw DomainError(std::string(kind_name(K)) + ": invalid entry for pair (" +
                            candidates_.name(x) + ", " + candidates_.name(y) + ")");
      }
    }
  }

  CandidateSet candidates_;
  SquareTable<Integer> num_;
  Integer den_ = 1;
};

using LlullMatrix = ScoreMatrix<MatrixKind::Llull>;
using IndirectScores = ScoreMatrix<MatrixKind::Indirect>;
using MarginMatrix = ScoreMatrix<MatrixKind::Margin>;
using ProjectedScores = ScoreMatrix<MatrixKind::Projected>;

/// Submatrix on the given candidate indices (in the order given).
template <MatrixKind K>
ScoreMatrix<K> restrict_to(const ScoreMatrix<K>& m, const std::vector<std::size_t>& indices) {
  SquareTable<Integer> num(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j)
      if (i != j) num(i, j) = m.numerator(indices[i], indices[j]);
  return ScoreMatrix<K>(m.candidates().subset(indices), std::move(num), m.denominator());
}

}  // namespace clc
