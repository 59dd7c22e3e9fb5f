#pragma once

// Independent oracles, structured random generators, and executable checks
// for the properties of the CLC rating. Everything here is deterministic
// given the generator state, so any failure can be replayed from its seed.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clc/closure.hpp"
#include "clc/errors.hpp"
#include "clc/matrix.hpp"
#include "clc/ordering.hpp"
#include "clc/profile.hpp"
#include "clc/projection.hpp"
#include "clc/rating.hpp"
#include "clc/relation.hpp"
#include "clc/tally.hpp"

namespace clc::verify {

using Rng = std::mt19937_64;

struct CheckResult {
  bool passed = true;
  std::string detail;
  explicit operator bool() const noexcept { return passed; }
};

inline CheckResult pass(std::string detail = {}) { return {true, std::move(detail)}; }
inline CheckResult fail(std::string detail) { return {false, std::move(detail)}; }

struct NamedCheck {
  std::string name;
  CheckResult result;
};

// ---------------------------------------------------------------------------
// Oracles

/// Indirect scores straight from the definition: exhaustive enumeration of
/// simple paths, on rational values (no shared code with the closure).
inline IndirectScores oracle_indirect_scores(const LlullMatrix& v, std::size_t max_size = 8) {
  const std::size_t n = v.size();
  if (n > max_size) throw DomainError("path enumeration oracle limited to " + std::to_string(max_size) + " candidates");
  const auto val = v.values();
  SquareTable<Rational> best(n, Rational(0));
  std::vector<char> visited(n, 0);

  auto walk = [&](auto&& self, std::size_t source, std::size_t at, const Rational& bottleneck) -> void {
    for (std::size_t next = 0; next < n; ++next) {
      if (visited[next]) continue;
      Rational b = std::min(bottleneck, val(at, next));
      if (best(source, next) < b) best(source, next) = b;
      visited[next] = 1;
      self(self, source, next, b);
      visited[next] = 0;
    }
  };
  for (std::size_t x = 0; x < n; ++x) {
    visited.assign(n, 0);
    visited[x] = 1;
    walk(walk, x, x, Rational(1));
  }
  return IndirectScores::from_values(v.candidates(), best);
}

/// (a*b)_xz = max_y min(a_xy, b_yz), with unit diagonal.
inline SquareTable<Rational> max_min_product(const SquareTable<Rational>& a, const SquareTable<Rational>& b) {
  const std::size_t n = a.size();
  SquareTable<Rational> out(n, Rational(0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t y = 0; y < n; ++y) {
        Rational link = std::min(a(x, y), b(y, z));
        if (out(x, z) < link) out(x, z) = link;
      }
  return out;
}

/// v (with v_xx = 1) raised to `exponent` under the max-min product. Equals the
/// indirect scores for any exponent >= N - 1.
inline IndirectScores max_min_power(const LlullMatrix& v, std::size_t exponent) {
  const std::size_t n = v.size();
  auto base = v.values();
  for (std::size_t x = 0; x < n; ++x) base(x, x) = 1;
  auto acc = base;
  for (std::size_t e = 1; e < exponent; ++e) acc = max_min_product(acc, base);
  if (exponent == 0)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) acc(x, y) = x == y ? 1 : 0;
  return IndirectScores::from_values(v.candidates(), acc);
}

// ---------------------------------------------------------------------------
// Generators

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random member of Gamma with entries k/q, q <= max_denominator; small
/// denominators make exact ties frequent.
inline LlullMatrix random_gamma(Rng& rng, std::size_t n, int max_denominator = 10) {
  SquareTable<Rational> values(n);
  std::uniform_int_distribution<int> den_dist(1, max_denominator);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      int q = den_dist(rng);
      int k = std::uniform_int_distribution<int>(0, q)(rng);
      values(x, y) = Rational(k, q);
      values(y, x) = 1 - values(x, y);
    }
  return LlullMatrix::from_values(letter_candidates(n), values);
}

/// Random tiered ballot over the given members (indices into the full set).
inline std::vector<std::vector<std::size_t>> random_tiers(Rng& rng, std::vector<std::size_t> members,
                                                          double tie_probability) {
  std::shuffle(members.begin(), members.end(), rng);
  std::bernoulli_distribution tie(tie_probability);
  std::vector<std::vector<std::size_t>> tiers;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i == 0 || !tie(rng)) tiers.emplace_back();
    tiers.back().push_back(members[i]);
  }
  return tiers;
}

inline std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

inline Ballot random_ballot(Rng& rng, std::size_t n, double tie_probability = 0.25, int max_weight = 3) {
  Ballot b;
  b.tiers = random_tiers(rng, all_indices(n), tie_probability);
  b.weight = std::uniform_int_distribution<int>(1, max_weight)(rng);
  return b;
}

inline Profile random_profile(Rng& rng, std::size_t n, std::size_t max_ballots = 12,
                              double tie_probability = 0.25, int max_weight = 3) {
  std::vector<Ballot> ballots(uniform_index(rng, 1, max_ballots));
  for (auto& b : ballots) b = random_ballot(rng, n, tie_probability, max_weight);
  return Profile(letter_candidates(n), std::move(ballots));
}

/// Profile of strict total orders (no ties), integer weights.
inline Profile random_linear_profile(Rng& rng, std::size_t n, std::size_t max_ballots = 12) {
  return random_profile(rng, n, max_ballots, 0.0, 3);
}

/// Random subset of size k, sorted.
inline std::vector<std::size_t> random_subset(Rng& rng, std::size_t n, std::size_t k) {
  auto all = all_indices(n);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

inline std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& subset) {
  auto in = membership(n, subset);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n; ++x)
    if (!in[x]) out.push_back(x);
  return out;
}

struct PlantedProfile {
  enum class Structure { Dominance, Majority, Clones, Raised };

  Profile profile;
  Structure structure;
  std::vector<size_t> group;     ///< X (dominance, majority), C (clones), {a} (raised)
  std::vector<size_t> rest;      ///< complement of `group`
  std::optional<Profile> before; ///< raised: the profile before the lift
};

namespace detail {

inline Ballot ordered_blocks(Rng& rng, const std::vector<std::size_t>& first, const std::vector<std::size_t>& second,
                             double tie_probability) {
  Ballot b;
  b.tiers = random_tiers(rng, first, tie_probability);
  for (auto& t : random_tiers(rng, second, tie_probability)) b.tiers.push_back(std::move(t));
  return b;
}

inline void require_split(std::size_t n, std::size_t x_size) {
  if (x_size == 0 || x_size >= n) throw DomainError("planted split needs 0 < |X| < N");
}

}  // namespace detail

/// Every ballot ranks all of X strictly above all of Y (v_xy = 1 on X x Y).
inline PlantedProfile planted_dominance(Rng& rng, std::size_t n, std::size_t x_size) {
  detail::require_split(n, x_size);
  auto X = random_subset(rng, n, x_size);
  auto Y = complement(n, X);
  std::vector<Ballot> ballots(uniform_index(rng, 1, 8));
  for (auto& b : ballots) {
    b = detail::ordered_blocks(rng, X, Y, 0.25);
    b.weight = std::uniform_int_distribution<int>(1, 3)(rng);
  }
  PlantedProfile planted{Profile(letter_candidates(n), std::move(ballots)),
                         PlantedProfile::Structure::Dominance, X, Y, std::nullopt};
  auto v = aggregate(planted.profile);
  for (auto x : X)
    for (auto y : Y)
      if (v.numerator(x, y) != v.denominator()) throw InvariantError("planted dominance not realized");
  return planted;
}

/// k ballots put X above Y, k - 1 are unconstrained, all of weight 1, so
/// v_xy >= k / (2k - 1) > 1/2 on X x Y.
inline PlantedProfile planted_majority(Rng& rng, std::size_t n, std::size_t x_size) {
  detail::require_split(n, x_size);
  auto X = random_subset(rng, n, x_size);
  auto Y = complement(n, X);
  const std::size_t k = uniform_index(rng, 1, 5);
  std::vector<Ballot> ballots;
  for (std::size_t i = 0; i < k; ++i) ballots.push_back(detail::ordered_blocks(rng, X, Y, 0.25));
  for (std::size_t i = 0; i + 1 < k; ++i) ballots.push_back(random_ballot(rng, n, 0.25, 1));
  std::shuffle(ballots.begin(), ballots.end(), rng);
  PlantedProfile planted{Profile(letter_candidates(n), std::move(ballots)),
                         PlantedProfile::Structure::Majority, X, Y, std::nullopt};
  auto v = aggregate(planted.profile);
  for (auto x : X)
    for (auto y : Y)
      if (2 * v.numerator(x, y) <= v.denominator()) throw InvariantError("planted majority not realized");
  return planted;
}

/// Ballots are drawn on the contracted set and the clone representative is
/// expanded: into its own sub-ranking when alone in its tier, otherwise all
/// clones join that tier. C is thus autonomous in every ballot.
inline PlantedProfile planted_clones(Rng& rng, std::size_t n, std::size_t c_size, std::size_t max_ballots = 10) {
  if (c_size == 0 || c_size > n) throw DomainError("planted clones need 0 < |C| <= N");
  auto C = random_subset(rng, n, c_size);
  auto outside = complement(n, C);
  auto contracted_members = outside;
  contracted_members.push_back(C.front());

  std::vector<Ballot> ballots(uniform_index(rng, 1, max_ballots));
  for (auto& b : ballots) {
    auto coarse = random_tiers(rng, contracted_members, 0.25);
    for (auto& tier : coarse) {
      auto it = std::find(tier.begin(), tier.end(), C.front());
      if (it == tier.end()) {
        b.tiers.push_back(std::move(tier));
      } else if (tier.size() == 1) {
        for (auto& t : random_tiers(rng, C, 0.3)) b.tiers.push_back(std::move(t));
      } else {
        tier.erase(it);
        tier.insert(tier.end(), C.begin(), C.end());
        b.tiers.push_back(std::move(tier));
      }
    }
    b.weight = std::uniform_int_distribution<int>(1, 3)(rng);
  }
  PlantedProfile planted{Profile(letter_candidates(n), std::move(ballots)),
                         PlantedProfile::Structure::Clones, C, outside, std::nullopt};
  for (const auto& b : planted.profile.ballots())
    if (!is_autonomous(ballot_to_scores(b, planted.profile.candidates()), C))
      throw InvariantError("planted clone set is not autonomous in a ballot");
  return planted;
}

/// Moves `a` up in a random subset of ballots, leaving the relative order of
/// everyone else intact, so that v'_ay >= v_ay, v'_xa <= v_xa, v'_xy = v_xy.
inline Profile raise_candidate(Rng& rng, const Profile& profile, std::size_t a, double probability = 0.5) {
  std::bernoulli_distribution touch(probability);
  std::vector<Ballot> ballots = profile.ballots();
  for (auto& b : ballots) {
    if (!touch(rng)) continue;
    std::size_t t = 0;
    while (std::find(b.tiers[t].begin(), b.tiers[t].end(), a) == b.tiers[t].end()) ++t;
    const bool shared = b.tiers[t].size() > 1;
    // options: join tier j < t, or a new singleton tier before tier j <= t
    // (j == t only if a currently shares its tier)
    const std::size_t options = t + t + (shared ? 1 : 0);
    if (options == 0) continue;
    std::size_t pick = uniform_index(rng, 0, options - 1);
    auto& tier = b.tiers[t];
    tier.erase(std::find(tier.begin(), tier.end(), a));
    if (tier.empty()) b.tiers.erase(b.tiers.begin() + static_cast<std::ptrdiff_t>(t));
    if (pick < t) {
      b.tiers[pick].push_back(a);
    } else {
      b.tiers.insert(b.tiers.begin() + static_cast<std::ptrdiff_t>(pick - t), std::vector<std::size_t>{a});
    }
  }
  return Profile(profile.candidates(), std::move(ballots));
}

inline PlantedProfile planted_raise(Rng& rng, std::size_t n) {
  auto before = random_profile(rng, n);
  std::size_t a = uniform_index(rng, 0, n - 1);
  auto after = raise_candidate(rng, before, a);
  return {std::move(after), PlantedProfile::Structure::Raised, {a}, complement(n, {a}), std::move(before)};
}

/// Replaces the members of an autonomous set by one element in every ballot.
inline Profile contract_profile(const Profile& profile, const Contraction& c) {
  std::vector<Ballot> ballots;
  for (const auto& b : profile.ballots()) {
    Ballot out;
    out.weight = b.weight;
    std::vector<char> placed(c.candidates.size(), 0);
    for (const auto& tier : b.tiers) {
      std::vector<std::size_t> t;
      for (auto x : tier) {
        auto img = c.image[x];
        if (!placed[img]) {
          placed[img] = 1;
          t.push_back(img);
        }
      }
      if (!t.empty()) out.tiers.push_back(std::move(t));
    }
    ballots.push_back(std::move(out));
  }
  return Profile(c.candidates, std::move(ballots));
}

// ---------------------------------------------------------------------------
// Checks

/// Four conditions for a split into X and Y, each evaluated exactly:
/// unanimity of X over Y; rates on X equal the rates of the X-submatrix;
/// rates on Y equal the Y-submatrix rates shifted by |X|; rates on X sum to
/// |X|(|X|+1)/2. They are equivalent, so `consistent()` must always hold.
struct DecompositionReport {
  bool unanimity = false;
  bool restriction_x = false;
  bool restriction_y = false;
  bool sum_x = false;

  bool all() const { return unanimity && restriction_x && restriction_y && sum_x; }
  bool none() const { return !unanimity && !restriction_x && !restriction_y && !sum_x; }
  bool consistent() const { return all() || none(); }
};

inline DecompositionReport check_decomposition(const LlullMatrix& v, const std::vector<std::size_t>& X) {
  const std::size_t n = v.size();
  auto in = membership(n, X);
  std::vector<std::size_t> xs, ys;
  for (std::size_t c = 0; c < n; ++c) (in[c] ? xs : ys).push_back(c);
  if (xs.empty() || ys.empty()) throw DomainError("decomposition needs X and Y both non-empty");

  DecompositionReport r;
  r.unanimity = true;
  for (auto x : xs)
    for (auto y : ys)
      if (v.numerator(x, y) != v.denominator()) r.unanimity = false;

  auto rates = rate(v);
  auto rx = rate(restrict_to(v, xs));
  auto ry = rate(restrict_to(v, ys));
  r.restriction_x = true;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (rates[xs[i]] != rx[i]) r.restriction_x = false;
  r.restriction_y = true;
  for (std::size_t i = 0; i < ys.size(); ++i)
    if (rates[ys[i]] != ry[i] + static_cast<long long>(xs.size())) r.restriction_y = false;
  Rational sum = 0;
  for (auto x : xs) sum += rates[x];
  const auto k = static_cast<long long>(xs.size());
  r.sum_x = sum == Rational(k * (k + 1), 2);
  return r;
}

inline DecompositionReport check_decomposition(const Profile& p, const std::vector<std::size_t>& X) {
  return check_decomposition(aggregate(p), X);
}

/// Requires v_xy > 1/2 on X x Y; checks xy in nu and R_x < R_y there.
inline CheckResult check_condorcet_smith(const LlullMatrix& v, const std::vector<std::size_t>& X) {
  auto Y = complement(v.size(), X);
  for (auto x : X)
    for (auto y : Y)
      if (2 * v.numerator(x, y) <= v.denominator())
        throw DomainError("check_condorcet_smith: no majority of X over Y");
  auto report = tally(v);
  const auto& names = v.candidates();
  for (auto x : X)
    for (auto y : Y) {
      if (!report.nu.contains(x, y))
        return fail(names.name(x) + " does not beat " + names.name(y) + " indirectly");
      if (!(report.rates[x] < report.rates[y]))
        return fail("rate of " + names.name(x) + " not below rate of " + names.name(y));
    }
  return pass();
}

inline CheckResult check_condorcet_smith(const PlantedProfile& p) {
  if (p.structure != PlantedProfile::Structure::Majority) throw DomainError("expected a planted majority");
  return check_condorcet_smith(aggregate(p.profile), p.group);
}

/// Whether maximin scores place every member of X strictly above every member of Y.
inline bool maximin_separates(const LlullMatrix& v, const std::vector<std::size_t>& X) {
  auto sigma = maximin_scores(v);
  for (auto x : X)
    for (auto y : complement(v.size(), X))
      if (!(sigma[x] > sigma[y])) return false;
  return true;
}

/// Autonomy of C for v, v*, p, nu and the rate preorder, and agreement of the
/// contracted tally with the contraction of nu and of the rate preorder.
inline CheckResult check_clones(const Profile& profile, const std::vector<std::size_t>& C) {
  const std::size_t n = profile.candidates().size();
  if (C.size() <= 1) return pass("singleton set is trivially autonomous");
  if (C.size() >= n) return pass("skipped: clone set is the whole candidate set");

  auto v = aggregate(profile);
  if (!is_autonomous(v, C)) throw DomainError("check_clones: set is not autonomous for the Llull matrix");
  auto r = tally(v);
  if (!is_autonomous(r.indirect, C)) return fail("not autonomous for the indirect scores");
  if (!is_autonomous(r.projected, C)) return fail("not autonomous for the projected scores");
  if (!is_autonomous(r.nu, C)) return fail("not autonomous for the indirect comparison relation");
  if (!is_autonomous(r.preorder.weak, C)) return fail("not autonomous for the rate preorder");

  auto c = make_contraction(profile.candidates(), C);
  auto small = tally(aggregate(contract_profile(profile, c)));
  if (!(small.nu == contract(r.nu, c, C))) return fail("contracted nu differs from the contraction of nu");
  if (!(small.preorder.weak == contract(r.preorder.weak, c, C)))
    return fail("contracted rate preorder differs from the contraction of the rate preorder");
  return pass();
}

inline CheckResult check_clones(const PlantedProfile& p) {
  if (p.structure != PlantedProfile::Structure::Clones) throw DomainError("expected planted clones");
  return check_clones(p.profile, p.group);
}

/// Throws DomainError unless `after` raises `a` over `before` and leaves all
/// other pairs alone.
inline void require_lift(const LlullMatrix& before, const LlullMatrix& after, std::size_t a) {
  if (!(before.candidates() == after.candidates())) throw DomainError("lift changes the candidate set");
  const std::size_t n = before.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      Rational b = before(x, y), c = after(x, y);
      bool ok = x == a ? c >= b : y == a ? c <= b : c == b;
      if (!ok) throw DomainError("perturbation is not a lift of " + before.candidates().name(a));
    }
}

/// Indirect scores of a rise toward the lifted candidate and fall toward it;
/// R_a < R_y implies R'_a <= R'_y; a unique winner stays the unique winner.
inline CheckResult check_monotonicity(const LlullMatrix& before, const LlullMatrix& after, std::size_t a) {
  require_lift(before, after, a);
  const auto& names = before.candidates();
  auto s0 = indirect_scores(before), s1 = indirect_scores(after);
  auto r0 = rate(before), r1 = rate(after);
  const std::size_t n = before.size();
  bool unique_winner = true;
  for (std::size_t y = 0; y < n; ++y) {
    if (y == a) continue;
    if (s1(a, y) < s0(a, y)) return fail("indirect score of " + names.name(a) + " over " + names.name(y) + " fell");
    if (s1(y, a) > s0(y, a)) return fail("indirect score of " + names.name(y) + " over " + names.name(a) + " rose");
    if (r0[a] < r0[y] && !(r1[a] <= r1[y]))
      return fail(names.name(a) + " lost its lead over " + names.name(y));
    if (!(r0[a] < r0[y])) unique_winner = false;
  }
  if (unique_winner)
    for (std::size_t y = 0; y < n; ++y)
      if (y != a && !(r1[a] < r1[y])) return fail(names.name(a) + " is no longer the unique winner");
  return pass();
}

inline CheckResult check_monotonicity(const Profile& before, const Profile& after, std::size_t a) {
  return check_monotonicity(aggregate(before), aggregate(after), a);
}

/// The stronger monotonicity the method is known not to have: R'_a <= R_a,
/// and both strict and weak leads of `a` preserved.
inline bool violates_strict_monotonicity(const LlullMatrix& before, const LlullMatrix& after, std::size_t a) {
  auto r0 = rate(before), r1 = rate(after);
  if (r1[a] > r0[a]) return true;
  for (std::size_t y = 0; y < before.size(); ++y) {
    if (y == a) continue;
    if (r0[a] < r0[y] && !(r1[a] < r1[y])) return true;
    if (r0[a] <= r0[y] && !(r1[a] <= r1[y])) return true;
  }
  return false;
}

/// Projects along every admissible order; all must give one matrix, both
/// indexed by candidate pair and indexed by position in the order.
inline CheckResult check_order_independence(const LlullMatrix& v, std::size_t max_size = 7) {
  auto s = indirect_scores(v);
  auto orders = all_admissible_orders(comparison_relation(s), max_size);
  if (orders.empty()) return fail("no admissible order found");
  const std::size_t n = v.size();
  auto reference = project_along(v, orders.front());
  auto positional = [&](const ProjectedScores& p, const AdmissibleOrder& xi) {
    SquareTable<Integer> t(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) t(i, j) = p.numerator(xi[i], xi[j]);
    return std::pair{t, p.denominator()};
  };
  auto reference_positional = positional(reference, orders.front());
  for (std::size_t k = 1; k < orders.size(); ++k) {
    auto p = project_along(v, orders[k]);
    if (!(p == reference)) return fail("projected scores differ between admissible orders");
    if (positional(p, orders[k]) != reference_positional)
      return fail("position-indexed projected scores differ between admissible orders");
  }
  return pass(std::to_string(orders.size()) + " admissible orders");
}

// ---------------------------------------------------------------------------
// Continuity

/// Perturbs every margin by at most eps (in steps of eps/1000), clamps to
/// [-1, 1] and maps back with v = (1 + m) / 2, so the result stays in Gamma.
inline LlullMatrix perturb(Rng& rng, const LlullMatrix& v, const Rational& eps) {
  const std::size_t n = v.size();
  auto values = v.values();
  std::uniform_int_distribution<int> step(-1000, 1000);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      Rational m = values(x, y) - values(y, x) + eps * Rational(step(rng), 1000);
      m = std::clamp(m, Rational(-1), Rational(1));
      values(x, y) = (1 + m) / 2;
      values(y, x) = 1 - values(x, y);
    }
  return LlullMatrix::from_values(v.candidates(), values);
}

inline Rational max_rate_change(const RateVector& a, const RateVector& b) {
  Rational worst = 0;
  for (std::size_t x = 0; x < a.size(); ++x) worst = std::max(worst, clc::abs(a[x] - b[x]));
  return worst;
}

/// Largest sup-norm rate change seen over `trials` random perturbations of size <= eps.
inline Rational continuity_probe(Rng& rng, const LlullMatrix& v, const Rational& eps, std::size_t trials) {
  if (eps < 0) throw DomainError("continuity_probe: eps must be non-negative");
  auto base = rate(v);
  Rational worst = 0;
  for (std::size_t t = 0; t < trials; ++t) worst = std::max(worst, max_rate_change(base, rate(perturb(rng, v, eps))));
  return worst;
}

/// Empirical modulus of continuity at each radius of a decreasing sequence.
/// A perturbation drawn at a smaller radius also lies in every larger ball,
/// so it counts toward those radii too; the estimate is therefore monotone
/// in the radius, as the true modulus is.
inline std::vector<Rational> continuity_modulus(Rng& rng, const LlullMatrix& v, const std::vector<Rational>& radii,
                                                std::size_t trials) {
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (radii[i] > radii[i - 1]) throw DomainError("continuity_modulus: radii must be non-increasing");
  std::vector<Rational> own(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) own[i] = continuity_probe(rng, v, radii[i], trials);
  std::vector<Rational> modulus(radii.size());
  Rational running = 0;
  for (std::size_t i = radii.size(); i-- > 0;) {
    running = std::max(running, own[i]);
    modulus[i] = running;
  }
  return modulus;
}

// ---------------------------------------------------------------------------
// Stage invariants of a full tally

inline std::vector<NamedCheck> stage_checks(const TallyReport& r) {
  std::vector<NamedCheck> out;
  const std::size_t n = r.llull.size();
  const auto& names = r.llull.candidates();
  auto add = [&](std::string name, CheckResult result) { out.push_back({std::move(name), std::move(result)}); };

  {
    CheckResult c;
    for (std::size_t x = 0; x < n && c; ++x)
      for (std::size_t y = 0; y < n && c; ++y)
        if (x != y && r.indirect(x, y) < r.llull(x, y))
          c = fail("indirect score below direct score at (" + names.name(x) + ", " + names.name(y) + ")");
    add("indirect scores dominate direct scores", c);
  }
  add("indirect scores satisfy the min-inequality",
      satisfies_min_inequality(r.indirect.numerators()) ? pass() : fail("violated"));
  add("indirect scores are closed (idempotent closure)",
      max_min_closure(r.indirect.numerators()) == r.indirect.numerators() ? pass() : fail("closure changed them"));
  add("indirect comparison relation is a partial order", is_partial_order(r.nu) ? pass() : fail("not a partial order"));
  {
    CheckResult c;
    for (std::size_t x = 0; x < n && c; ++x)
      for (std::size_t y = 0; y < n && c; ++y)
        if (r.nu.contains(x, y) && !(r.ranks[x] < r.ranks[y])) c = fail("rank order contradicts nu");
    add("Copeland ranks respect the partial order", c);
  }
  add("order extends nu and lies in its codual",
      extends(r.order, r.nu) && is_subset(r.order.to_relation(), codual(r.nu)) ? pass() : fail("order not admissible"));
  {
    CheckResult c;
    for (std::size_t i = 0; i < r.intermediate.size(); ++i)
      if (r.intermediate[i] < 0 || r.intermediate[i] > 1) c = fail("intermediate margin outside [0,1]");
    add("intermediate margins lie in [0,1]", c);
  }
  const auto& pm = r.projected_margins.margins;
  const auto& xi = r.order;
  {
    CheckResult interval, maxdec;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto m = pm(xi[i], xi[j]);
        if (m < 0 || m > 1) interval = fail("projected margin outside [0,1] along the order");
        for (std::size_t k = j + 1; k < n; ++k)
          if (pm(xi[i], xi[k]) != std::max(m, pm(xi[j], xi[k])))
            maxdec = fail("m_xz != max(m_xy, m_yz) for " + names.name(xi[i]) + ", " + names.name(xi[j]) + ", " +
                          names.name(xi[k]));
      }
    add("projected margins lie in [0,1] along the order", interval);
    add("projected margins are max-decomposable along the order", maxdec);
  }
  {
    CheckResult c;
    for (std::size_t x = 0; x < n && c; ++x)
      for (std::size_t y = 0; y < n && c; ++y)
        for (std::size_t z = 0; z < n && c; ++z)
          if (x != y && y != z && x != z &&
              clc::abs(pm(x, z)) > std::max(clc::abs(pm(x, y)), clc::abs(pm(y, z))))
            c = fail("ultrametric inequality fails");
    add("absolute projected margins are ultrametric", c);
  }
  {
    CheckResult c;
    const auto& p = r.projected;
    for (std::size_t i = 0; i < n && c; ++i)
      for (std::size_t j = i + 1; j < n && c; ++j) {
        auto x = xi[i], y = xi[j];
        if (p(x, y) < p(y, x)) c = fail("p_xy < p_yx along the order");
        for (std::size_t z = 0; z < n && c; ++z) {
          if (z == x || z == y) continue;
          if (p(x, z) < p(y, z) || p(z, x) > p(z, y)) c = fail("projected scores not monotone along the order");
          if (p(x, y) == p(y, x) && (p(x, z) != p(y, z) || p(z, x) != p(z, y)))
            c = fail("tied pair not interchangeable in projected scores");
        }
      }
    add("projected scores are monotone along the order", c);
  }
  add("projection is idempotent", project(as_llull(r.projected)) == r.projected ? pass() : fail("P(P(v)) != P(v)"));
  {
    CheckResult c;
    Rational sum = 0;
    for (std::size_t x = 0; x < n; ++x) {
      sum += r.rates[x];
      if (r.rates[x] < 1 || r.rates[x] > static_cast<long long>(n)) c = fail("rate outside [1, N]");
    }
    const auto nn = static_cast<long long>(n);
    if (c && sum != Rational(nn * (nn + 1), 2)) c = fail("rates do not average (N+1)/2");
    add("rates lie in [1,N] with mean (N+1)/2", c);
  }
  {
    CheckResult c;
    auto closure = transitive_closure(codual(r.nu));
    for (std::size_t x = 0; x < n && c; ++x)
      for (std::size_t y = 0; y < n && c; ++y)
        if (x != y && (r.rates[x] <= r.rates[y]) != closure.contains(x, y))
          c = fail("R_x <= R_y disagrees with the closure of the codual of nu");
    add("rate preorder equals the transitive closure of the codual of nu", c);
  }
  {
    CheckResult c;
    for (std::size_t i = 0; i + 1 < n && c; ++i)
      if (r.rates[xi[i]] > r.rates[xi[i + 1]]) c = fail("rates decrease along the order");
    add("rates are non-decreasing along the order", c);
  }
  return out;
}

}  // namespace clc::verify
