#pragma once

#include <optional>

#include "upareto/rational.hpp"
#include "upareto/types.hpp"
#include "upareto/uncertainty.hpp"

namespace upareto {

// Both problems solved here are NP-hard, so the solvers are exact
// backtracking searches with hard caps on the instance size.
inline constexpr int kDefaultCertainSearchMaxAgents = 10;
inline constexpr int kDefaultBestSearchMaxAgents = 8;

// Lexicographically smallest assignment whose PO probability is exactly 1,
// if any. Depth-first construction agent by agent; a partial assignment is
// abandoned as soon as the already-assigned agents can trade in a cycle in
// some realization.
std::optional<Assignment> exists_certainly_po(const LotteryModel& model,
                                              int max_agents = kDefaultCertainSearchMaxAgents);
std::optional<Assignment> exists_certainly_po(const JointModel& model,
                                              int max_agents = kDefaultCertainSearchMaxAgents);

struct BestAssignment {
  Assignment assignment;
  Rational probability;
};

// Assignment maximizing the PO probability, with the probability itself.
// Ties break toward the lexicographically smallest allocation. Candidates
// come from the per-profile PO sets when the expansion is small enough
// (a maximizer with nonzero probability is PO in some support profile),
// otherwise from all n! assignments.
BestAssignment best_assignment(const LotteryModel& model,
                               int max_agents = kDefaultBestSearchMaxAgents);
BestAssignment best_assignment(const JointModel& model,
                               int max_agents = kDefaultBestSearchMaxAgents);

}  // namespace upareto
