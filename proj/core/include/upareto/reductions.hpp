#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "upareto/types.hpp"
#include "upareto/uncertainty.hpp"

namespace upareto {

inline constexpr int kDefaultSdfMaxAgents = 8;
inline constexpr int kDefaultSatMaxVariables = 20;

// Does some picking order make serial dictatorship hand `item` to `agent`?
struct SdfInstance {
  Profile profile;
  AgentId agent = 0;
  ItemId item = 0;
};

// Negation-free 2CNF. Variables are 0-based here; the text format is 1-based.
struct Monotone2Sat {
  int variable_count = 0;
  std::vector<std::pair<int, int>> clauses;
};

// Clauses must be nonempty, in range, free of self-pairs, pairwise distinct
// (regardless of literal order), and cover every variable.
void require_valid(const Monotone2Sat& formula);

// Permutation enumeration; engaged result is the first picking order (in
// lexicographic order) under which serial dictatorship gives item to agent.
std::optional<Permutation> brute_sdf(const SdfInstance& instance,
                                     int max_agents = kDefaultSdfMaxAgents);

// Truth-table count of satisfying assignments.
std::int64_t brute_sat_count(const Monotone2Sat& formula,
                             int max_variables = kDefaultSatMaxVariables);

// Both gadgets pair the instance profile with a twin in which the target item
// moves to the top of the target agent's order and to the bottom of everyone
// else's. A certainly-PO assignment then exists iff the instance is feasible.
// When the twin collapses onto the original, the duplicate entry is merged
// into a single one of probability 1.
JointModel reduce_sdf_to_joint(const SdfInstance& instance);
LotteryModel reduce_sdf_to_lottery(const SdfInstance& instance);

// Clause gadget: agent i either keeps its own item on top or lifts its clause
// partners above it, each with probability 1/2. The identity assignment
// trades in a cycle exactly when both ends of some clause lift, so its PO
// probability is the number of satisfying assignments divided by 2^n.
std::pair<LotteryModel, Assignment> reduce_m2sat_to_lottery(const Monotone2Sat& formula);

}  // namespace upareto
