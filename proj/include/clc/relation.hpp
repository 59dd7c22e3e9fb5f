#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "clc/candidates.hpp"
#include "clc/errors.hpp"
#include "clc/matrix.hpp"

namespace clc {

/// Binary relation on a candidate set, restricted to proper pairs (x != y).
/// Stored explicitly so that set identities (codual, closure, contraction)
/// can be compared directly.
class Relation {
 public:
  Relation() = default;
  explicit Relation(CandidateSet candidates)
      : candidates_(std::move(candidates)), pairs_(candidates_.size(), 0) {}

  std::size_t size() const noexcept { return candidates_.size(); }
  const CandidateSet& candidates() const noexcept { return candidates_; }

  bool contains(std::size_t x, std::size_t y) const { return x != y && pairs_(x, y) != 0; }

  void insert(std::size_t x, std::size_t y) {
    if (x == y) throw DomainError("relations only hold proper pairs");
    pairs_(x, y) = 1;
  }
  void erase(std::size_t x, std::size_t y) { pairs_(x, y) = 0; }

  std::size_t pair_count() const {
    std::size_t count = 0;
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = 0; y < size(); ++y) count += contains(x, y) ? 1 : 0;
    return count;
  }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  CandidateSet candidates_;
  SquareTable<char> pairs_;
};

/// All proper pairs.
inline Relation full_relation(const CandidateSet& candidates) {
  Relation r(candidates);
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (x != y) r.insert(x, y);
  return r;
}

/// {xy : yx not in r}.
inline Relation codual(const Relation& r) {
  Relation out(r.candidates());
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (x != y && !r.contains(y, x)) out.insert(x, y);
  return out;
}

/// Path reachability (Warshall). Pairs xx are dropped even when a cycle exists.
inline Relation transitive_closure(const Relation& r) {
  const std::size_t n = r.size();
  SquareTable<char> reach(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) reach(x, y) = r.contains(x, y) ? 1 : 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (reach(x, k))
        for (std::size_t y = 0; y < n; ++y)
          if (reach(k, y)) reach(x, y) = 1;
  Relation out(r.candidates());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && reach(x, y)) out.insert(x, y);
  return out;
}

inline bool is_asymmetric(const Relation& r) {
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = x + 1; y < r.size(); ++y)
      if (r.contains(x, y) && r.contains(y, x)) return false;
  return true;
}

inline bool is_total(const Relation& r) {
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = x + 1; y < r.size(); ++y)
      if (!r.contains(x, y) && !r.contains(y, x)) return false;
  return true;
}

inline bool is_transitive(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!r.contains(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (z != x && r.contains(y, z) && !r.contains(x, z)) return false;
    }
  return true;
}

inline bool is_partial_order(const Relation& r) { return is_asymmetric(r) && is_transitive(r); }
inline bool is_total_order(const Relation& r) { return is_partial_order(r) && is_total(r); }

inline bool is_subset(const Relation& a, const Relation& b) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.contains(x, y) && !b.contains(x, y)) return false;
  return true;
}

/// Membership mask for an index list; throws on out-of-range indices.
inline std::vector<char> membership(std::size_t n, const std::vector<std::size_t>& subset) {
  std::vector<char> in(n, 0);
  for (auto i : subset) {
    if (i >= n) throw DomainError("subset index out of range");
    in[i] = 1;
  }
  return in;
}

/// Every outsider relates to all members of `subset` in the same way.
inline bool is_autonomous(const Relation& r, const std::vector<std::size_t>& subset) {
  auto in = membership(r.size(), subset);
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (in[x]) continue;
    for (std::size_t i = 1; i < subset.size(); ++i) {
      auto a = subset.front(), b = subset[i];
      if (r.contains(a, x) != r.contains(b, x) || r.contains(x, a) != r.contains(x, b))
        return false;
    }
  }
  return true;
}

/// Valued version: v_ax = v_bx and v_xa = v_xb for members a, b and outsiders x.
template <MatrixKind K>
bool is_autonomous(const ScoreMatrix<K>& m, const std::vector<std::size_t>& subset) {
  auto in = membership(m.size(), subset);
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (in[x]) continue;
    for (std::size_t i = 1; i < subset.size(); ++i) {
      auto a = subset.front(), b = subset[i];
      if (m.numerator(a, x) != m.numerator(b, x) || m.numerator(x, a) != m.numerator(x, b))
        return false;
    }
  }
  return true;
}

/// Collapsing a proper subset C into one element. The merged element takes the
/// name and declared position of the first member of C (in declared order).
struct Contraction {
  CandidateSet candidates;
  std::vector<std::size_t> image;  ///< original index -> contracted index
};

inline Contraction make_contraction(const CandidateSet& candidates, std::vector<std::size_t> subset) {
  const std::size_t n = candidates.size();
  auto in = membership(n, subset);
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty() || subset.size() >= n)
    throw DomainError("contraction needs a non-empty proper subset");

  Contraction c;
  c.image.assign(n, 0);
  std::vector<std::string> names;
  std::size_t merged = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (in[x] && x != subset.front()) continue;
    if (x == subset.front()) merged = names.size();
    c.image[x] = names.size();
    names.push_back(candidates.name(x));
  }
  for (auto x : subset) c.image[x] = merged;
  c.candidates = CandidateSet(std::move(names));
  return c;
}

inline Relation contract(const Relation& r, const Contraction& c, const std::vector<std::size_t>& subset) {
  if (!is_autonomous(r, subset)) throw DomainError("subset is not autonomous for the relation");
  Relation out(c.candidates);
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (c.image[x] != c.image[y] && r.contains(x, y)) out.insert(c.image[x], c.image[y]);
  return out;
}

/// Relation of a total order given as a sequence (earlier = preferred).
inline Relation order_relation(const CandidateSet& candidates, const std::vector<std::size_t>& sequence) {
  Relation r(candidates);
  for (std::size_t i = 0; i < sequence.size(); ++i)
    for (std::size_t j = i + 1; j < sequence.size(); ++j) r.insert(sequence[i], sequence[j]);
  return r;
}

}  // namespace clc
