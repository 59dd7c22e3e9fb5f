#pragma once

#include "clc/closure.hpp"
#include "clc/matrix.hpp"
#include "clc/ordering.hpp"
#include "clc/projection.hpp"
#include "clc/rating.hpp"

namespace clc {

/// Every intermediate stage of one CLC tally, each derived from the previous.
struct TallyReport {
  LlullMatrix llull;
  IndirectScores indirect;
  MarginMatrix indirect_margins;
  Relation nu;             ///< indirect comparison relation
  CopelandRanks ranks;     ///< tie-splitting ranks used to pick the order
  AdmissibleOrder order;
  IntermediateMargins intermediate;
  ProjectedMargins projected_margins;
  ProjectedScores projected;
  RateVector rates;
  SocialPreorder preorder;
};

inline TallyReport tally(const LlullMatrix& v) {
  TallyReport r;
  r.llull = v;
  r.indirect = indirect_scores(v);
  r.indirect_margins = margins(r.indirect);
  r.nu = comparison_relation(r.indirect);
  r.ranks = copeland_ranks(codual(r.nu));
  r.order = admissible_order(r.nu, r.ranks);
  r.intermediate = intermediate_margins(r.indirect_margins, r.order);
  r.projected_margins = projected_margins(r.intermediate);
  r.projected = projected_scores(r.projected_margins);
  r.rates = rank_like_rates(r.projected);
  r.preorder = social_preorder(r.rates);
  return r;
}

/// Rates only.
inline RateVector rate(const LlullMatrix& v) { return rank_like_rates(project(v)); }

}  // namespace clc
