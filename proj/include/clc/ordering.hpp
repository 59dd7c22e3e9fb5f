#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "clc/errors.hpp"
#include "clc/rational.hpp"
#include "clc/relation.hpp"

namespace clc {

/// Tie-splitting Copeland ranks: r_x = N - wins - ties / 2, where wins counts
/// y with xy in rel and yx not in rel, and ties counts y with both.
struct CopelandRanks {
  CandidateSet candidates;
  std::vector<Rational> values;

  const Rational& operator[](std::size_t x) const { return values.at(x); }
};

inline CopelandRanks copeland_ranks(const Relation& rel) {
  const std::size_t n = rel.size();
  CopelandRanks ranks{rel.candidates(), std::vector<Rational>(n)};
  for (std::size_t x = 0; x < n; ++x) {
    Integer twice = 2 * static_cast<long long>(n);
    for (std::size_t y = 0; y < n; ++y) {
      if (!rel.contains(x, y)) continue;
      twice -= rel.contains(y, x) ? 1 : 2;
    }
    ranks.values[x] = Rational(twice, 2);
  }
  return ranks;
}

/// A total order of the candidates; position 0 is the most preferred.
class AdmissibleOrder {
 public:
  AdmissibleOrder() = default;
  AdmissibleOrder(CandidateSet candidates, std::vector<std::size_t> sequence)
      : candidates_(std::move(candidates)), sequence_(std::move(sequence)) {
    const std::size_t n = candidates_.size();
    if (sequence_.size() != n) throw DomainError("order must list every candidate exactly once");
    position_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto c = sequence_[i];
      if (c >= n || position_[c] != n) throw DomainError("order must list every candidate exactly once");
      position_[c] = i;
    }
  }

  std::size_t size() const noexcept { return sequence_.size(); }
  const CandidateSet& candidates() const noexcept { return candidates_; }
  const std::vector<std::size_t>& sequence() const noexcept { return sequence_; }
  std::size_t operator[](std::size_t position) const { return sequence_.at(position); }
  std::size_t position(std::size_t candidate) const { return position_.at(candidate); }
  bool precedes(std::size_t x, std::size_t y) const { return position(x) < position(y); }

  Relation to_relation() const { return order_relation(candidates_, sequence_); }

  friend bool operator==(const AdmissibleOrder& a, const AdmissibleOrder& b) {
    return a.candidates_ == b.candidates_ && a.sequence_ == b.sequence_;
  }

 private:
  CandidateSet candidates_;
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> position_;
};

/// Every pair of `rel` is respected by `order`.
inline bool extends(const AdmissibleOrder& order, const Relation& rel) {
  for (std::size_t x = 0; x < rel.size(); ++x)
    for (std::size_t y = 0; y < rel.size(); ++y)
      if (rel.contains(x, y) && !order.precedes(x, y)) return false;
  return true;
}

/// Sorts by (rank, declared index). With ranks taken from a partial order, or
/// from its codual, the result extends that partial order; this is re-checked.
inline AdmissibleOrder admissible_order(const Relation& nu, const CopelandRanks& ranks) {
  if (!is_partial_order(nu)) throw DomainError("admissible_order: relation is not a partial order");
  std::vector<std::size_t> sequence(nu.size());
  std::iota(sequence.begin(), sequence.end(), std::size_t{0});
  std::stable_sort(sequence.begin(), sequence.end(),
                   [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; });
  AdmissibleOrder order(nu.candidates(), std::move(sequence));
  if (!extends(order, nu)) throw InvariantError("rank order does not extend the partial order");
  return order;
}

/// All linear extensions of a partial order, by backtracking over candidates
/// whose predecessors are already placed. Output is in lexicographic order of
/// declared indices, so it is deterministic.
inline std::vector<AdmissibleOrder> all_admissible_orders(const Relation& nu, std::size_t max_size = 7) {
  const std::size_t n = nu.size();
  if (n > max_size)
    throw DomainError("all_admissible_orders: " + std::to_string(n) + " candidates exceeds bound " +
                      std::to_string(max_size));
  if (!is_partial_order(nu)) throw DomainError("all_admissible_orders: relation is not a partial order");

  std::vector<std::size_t> pending(n, 0);  // unplaced predecessors
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (nu.contains(x, y)) ++pending[y];

  std::vector<AdmissibleOrder> out;
  std::vector<std::size_t> prefix;
  std::vector<char> placed(n, 0);
  auto recurse = [&](auto&& self) -> void {
    if (prefix.size() == n) {
      out.emplace_back(nu.candidates(), prefix);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (placed[c] || pending[c] != 0) continue;
      placed[c] = 1;
      prefix.push_back(c);
      for (std::size_t y = 0; y < n; ++y)
        if (nu.contains(c, y)) --pending[y];
      self(self);
      for (std::size_t y = 0; y < n; ++y)
        if (nu.contains(c, y)) ++pending[y];
      prefix.pop_back();
      placed[c] = 0;
    }
  };
  recurse(recurse);
  return out;
}

}  // namespace clc
