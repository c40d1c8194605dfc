#pragma once

#include <optional>
#include <vector>

#include "upareto/types.hpp"

namespace upareto {

inline constexpr int kDefaultEnumerationMaxAgents = 10;

/// Searches for a trading cycle of the assignment under the given profile.
///
/// The search runs on the envy graph (agent i points to the holder of every
/// item it strictly prefers to its own) by depth-first search from the
/// lowest-indexed agent, visiting neighbours in ascending agent index, so the
/// returned cycle is deterministic. Returns std::nullopt iff the assignment
/// is Pareto optimal.
std::optional<TradingCycle> find_trading_cycle(const Profile& profile,
                                               const Assignment& assignment);

/// True iff the assignment admits no trading cycle under the profile.
bool is_pareto_optimal(const Profile& profile, const Assignment& assignment);

/// Runs serial dictatorship: agents pick their most preferred remaining item
/// in permutation order.
Assignment serial_dictatorship(const Profile& profile, const Permutation& permutation);

/// All Pareto optimal assignments of the profile, obtained as the deduplicated
/// serial-dictatorship outcomes over all n! permutations, in canonical
/// (lexicographic allocation) order. Guarded: throws GuardError when
/// agent_count exceeds max_agents.
std::vector<Assignment> enumerate_po_assignments(const Profile& profile,
                                                 int max_agents = kDefaultEnumerationMaxAgents);

/// Applies the trade described by the cycle to the assignment: every agent in
/// the cycle receives the item it points to.
Assignment apply_trading_cycle(const Assignment& assignment, const TradingCycle& cycle);

}  // namespace upareto
