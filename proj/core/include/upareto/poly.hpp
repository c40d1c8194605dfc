#pragma once

#include <cstdint>
#include <optional>

#include "upareto/model.hpp"
#include "upareto/uncertainty.hpp"

namespace upareto {

/// True iff some other assignment Pareto dominates this one with probability
/// one, i.e. the certain envy graph (agent i points to items certainly
/// preferred to its own) has a directed cycle.
bool certainly_dominated(const LotteryModel& model, const Assignment& assignment);

/// True iff the assignment is Pareto optimal with probability one: the
/// possible envy graph (agent i points to every other item it is NOT certain
/// to rank below its own) is acyclic.
bool is_po_probability_one(const LotteryModel& model, const Assignment& assignment);

/// Certificate that an assignment is Pareto optimal with nonzero probability:
/// a pick order and one support order per agent such that serial dictatorship
/// on the chosen profile reproduces the assignment.
struct SdWitness {
  Permutation pick_order;
  std::vector<int> chosen_order;  // per agent, index into its support

  Profile realized_profile(const LotteryModel& model) const;
};

/// Greedy construction of a serial-dictatorship-consistent permutation:
/// repeatedly commit an agent whose assigned item is the top remaining item
/// in at least one of its support orders. Succeeds iff the PO probability is
/// nonzero. The canonical run picks the lowest-indexed eligible agent and its
/// lowest-indexed eligible order.
std::optional<SdWitness> po_nonzero_witness(const LotteryModel& model,
                                            const Assignment& assignment);

/// Same greedy with uniformly random tie-breaking among eligible
/// (agent, order) pairs; the boolean outcome is tie-break-insensitive.
std::optional<SdWitness> po_nonzero_witness_randomized(const LotteryModel& model,
                                                       const Assignment& assignment,
                                                       std::uint64_t seed);

bool is_po_probability_nonzero(const LotteryModel& model, const Assignment& assignment);

/// Joint-model zero/one checks by direct support iteration (the joint model
/// is not independent, so the graph procedures above do not apply).
bool joint_is_po_probability_nonzero(const JointModel& model, const Assignment& assignment);
bool joint_is_po_probability_one(const JointModel& model, const Assignment& assignment);

}  // namespace upareto
