#include "upareto/poly.hpp"

#include <random>
#include <string>
#include <utility>

namespace upareto {

namespace {

void require_same_instance(int model_agents, const Assignment& assignment, const char* what) {
  if (model_agents != assignment.agent_count()) {
    throw ValidationError(std::string(what) + ": model has " + std::to_string(model_agents) +
                          " agents but assignment has " +
                          std::to_string(assignment.agent_count()));
  }
}

// Cycle test on an item-level pointing graph. adjacency(held) lists the items
// the holder of `held` points to.
template <typename Adjacency>
bool item_graph_has_cycle(int n, const Adjacency& adjacency) {
  enum class Mark : char { White, OnPath, Done };
  std::vector<Mark> mark(static_cast<size_t>(n), Mark::White);
  std::vector<std::pair<ItemId, size_t>> stack;
  for (ItemId root = 0; root < n; ++root) {
    if (mark[static_cast<size_t>(root)] != Mark::White) continue;
    stack.emplace_back(root, 0);
    mark[static_cast<size_t>(root)] = Mark::OnPath;
    while (!stack.empty()) {
      auto& [item, next] = stack.back();
      const auto& targets = adjacency[static_cast<size_t>(item)];
      if (next < targets.size()) {
        const ItemId to = targets[next++];
        if (mark[static_cast<size_t>(to)] == Mark::OnPath) return true;
        if (mark[static_cast<size_t>(to)] == Mark::White) {
          mark[static_cast<size_t>(to)] = Mark::OnPath;
          stack.emplace_back(to, 0);
        }
      } else {
        mark[static_cast<size_t>(item)] = Mark::Done;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

bool certainly_dominated(const LotteryModel& model, const Assignment& assignment) {
  require_same_instance(model.agent_count(), assignment, "certainly_dominated");
  const int n = model.agent_count();
  const auto certain = CertainlyPreferredRelation::from_lottery(model);

  // Edge own -> o iff o is certainly preferred to own by the holder.
  std::vector<std::vector<ItemId>> adjacency(static_cast<size_t>(n));
  for (AgentId agent = 0; agent < n; ++agent) {
    const ItemId own = assignment.item_of(agent);
    for (ItemId item = 0; item < n; ++item) {
      if (item != own && certain.prefers(agent, item, own)) {
        adjacency[static_cast<size_t>(own)].push_back(item);
      }
    }
  }
  return item_graph_has_cycle(n, adjacency);
}

bool is_po_probability_one(const LotteryModel& model, const Assignment& assignment) {
  require_same_instance(model.agent_count(), assignment, "is_po_probability_one");
  const int n = model.agent_count();
  const auto certain = CertainlyPreferredRelation::from_lottery(model);

  // Edge own -> o iff the holder is NOT certain to prefer own over o; such an
  // edge means the holder envies o's holder with nonzero probability.
  std::vector<std::vector<ItemId>> adjacency(static_cast<size_t>(n));
  for (AgentId agent = 0; agent < n; ++agent) {
    const ItemId own = assignment.item_of(agent);
    for (ItemId item = 0; item < n; ++item) {
      if (item != own && !certain.prefers(agent, own, item)) {
        adjacency[static_cast<size_t>(own)].push_back(item);
      }
    }
  }
  return !item_graph_has_cycle(n, adjacency);
}

Profile SdWitness::realized_profile(const LotteryModel& model) const {
  std::vector<PreferenceOrder> orders;
  orders.reserve(chosen_order.size());
  for (AgentId agent = 0; agent < static_cast<AgentId>(chosen_order.size()); ++agent) {
    orders.push_back(
        model.support_of(agent)[static_cast<size_t>(chosen_order[static_cast<size_t>(agent)])]
            .order);
  }
  return Profile(std::move(orders));
}

namespace {

// Greedy loop shared by the canonical and randomized runs. `select` picks one
// entry from the nonempty list of eligible (agent, order index) pairs.
template <typename Select>
std::optional<SdWitness> nonzero_greedy(const LotteryModel& model, const Assignment& assignment,
                                        const Select& select) {
  const int n = model.agent_count();
  std::vector<char> item_remaining(static_cast<size_t>(n), 1);
  std::vector<char> agent_remaining(static_cast<size_t>(n), 1);

  SdWitness witness;
  witness.chosen_order.assign(static_cast<size_t>(n), -1);
  std::vector<AgentId> pick_sequence;
  pick_sequence.reserve(static_cast<size_t>(n));

  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<AgentId, int>> eligible;
    for (AgentId agent = 0; agent < n; ++agent) {
      if (!agent_remaining[static_cast<size_t>(agent)]) continue;
      const ItemId target = assignment.item_of(agent);
      const auto& support = model.support_of(agent);
      for (size_t j = 0; j < support.size(); ++j) {
        // top remaining item of this order
        for (ItemId item : support[j].order.ranking()) {
          if (!item_remaining[static_cast<size_t>(item)]) continue;
          if (item == target) eligible.emplace_back(agent, static_cast<int>(j));
          break;
        }
      }
    }
    if (eligible.empty()) return std::nullopt;
    const auto [agent, order_index] = eligible[select(eligible.size())];
    witness.chosen_order[static_cast<size_t>(agent)] = order_index;
    pick_sequence.push_back(agent);
    agent_remaining[static_cast<size_t>(agent)] = 0;
    item_remaining[static_cast<size_t>(assignment.item_of(agent))] = 0;
  }

  witness.pick_order = Permutation(std::move(pick_sequence));
  return witness;
}

}  // namespace

std::optional<SdWitness> po_nonzero_witness(const LotteryModel& model,
                                            const Assignment& assignment) {
  require_same_instance(model.agent_count(), assignment, "po_nonzero_witness");
  return nonzero_greedy(model, assignment, [](size_t) { return size_t{0}; });
}

std::optional<SdWitness> po_nonzero_witness_randomized(const LotteryModel& model,
                                                       const Assignment& assignment,
                                                       std::uint64_t seed) {
  require_same_instance(model.agent_count(), assignment, "po_nonzero_witness");
  std::mt19937_64 rng(seed);
  return nonzero_greedy(model, assignment, [&rng](size_t count) {
    return std::uniform_int_distribution<size_t>(0, count - 1)(rng);
  });
}

bool is_po_probability_nonzero(const LotteryModel& model, const Assignment& assignment) {
  return po_nonzero_witness(model, assignment).has_value();
}

bool joint_is_po_probability_nonzero(const JointModel& model, const Assignment& assignment) {
  require_same_instance(model.agent_count(), assignment, "joint_is_po_probability_nonzero");
  for (const auto& entry : model.support) {
    if (is_pareto_optimal(entry.profile, assignment)) return true;
  }
  return false;
}

bool joint_is_po_probability_one(const JointModel& model, const Assignment& assignment) {
  require_same_instance(model.agent_count(), assignment, "joint_is_po_probability_one");
  for (const auto& entry : model.support) {
    if (!is_pareto_optimal(entry.profile, assignment)) return false;
  }
  return true;
}

}  // namespace upareto
