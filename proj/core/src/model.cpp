#include "upareto/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace upareto {

namespace detail {

std::vector<int> checked_inverse(const std::vector<int>& values, const char* what) {
  const int n = static_cast<int>(values.size());
  std::vector<int> inverse(values.size(), -1);
  for (int pos = 0; pos < n; ++pos) {
    const int v = values[static_cast<size_t>(pos)];
    if (v < 0 || v >= n) {
      throw ValidationError(std::string(what) + ": index " + std::to_string(v) +
                            " out of range [0, " + std::to_string(n) + ")");
    }
    if (inverse[static_cast<size_t>(v)] != -1) {
      throw ValidationError(std::string(what) + ": duplicate index " + std::to_string(v));
    }
    inverse[static_cast<size_t>(v)] = pos;
  }
  return inverse;
}

}  // namespace detail

PreferenceOrder::PreferenceOrder(std::vector<ItemId> ranking)
    : ranking_(std::move(ranking)), rank_(detail::checked_inverse(ranking_, "preference order")) {}

Profile::Profile(std::vector<PreferenceOrder> orders) : orders_(std::move(orders)) {
  const int n = agent_count();
  for (const auto& order : orders_) {
    if (order.item_count() != n) {
      throw ValidationError("profile: agent order over " + std::to_string(order.item_count()) +
                            " items in an instance with " + std::to_string(n) + " agents");
    }
  }
}

Assignment::Assignment(std::vector<ItemId> allocation)
    : allocation_(std::move(allocation)),
      holder_(detail::checked_inverse(allocation_, "assignment")) {}

Assignment Assignment::identity(int n) {
  std::vector<ItemId> alloc(static_cast<size_t>(n));
  std::iota(alloc.begin(), alloc.end(), 0);
  return Assignment(std::move(alloc));
}

Permutation::Permutation(std::vector<AgentId> order) : order_(std::move(order)) {
  detail::checked_inverse(order_, "permutation");
}

Permutation Permutation::identity(int n) {
  std::vector<AgentId> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return Permutation(std::move(order));
}

namespace {

void require_same_instance(const Profile& profile, const Assignment& assignment) {
  if (profile.agent_count() != assignment.agent_count()) {
    throw ValidationError("profile has " + std::to_string(profile.agent_count()) +
                          " agents but assignment has " +
                          std::to_string(assignment.agent_count()));
  }
}

// Envy graph: agent i -> holder of every item i strictly prefers to its own,
// neighbours in ascending agent index.
std::vector<std::vector<AgentId>> envy_graph(const Profile& profile,
                                             const Assignment& assignment) {
  const int n = profile.agent_count();
  std::vector<std::vector<AgentId>> adj(static_cast<size_t>(n));
  for (AgentId i = 0; i < n; ++i) {
    const ItemId own = assignment.item_of(i);
    const auto& ranking = profile.order(i).ranking();
    for (ItemId item : ranking) {
      if (item == own) break;  // everything after is less preferred
      adj[static_cast<size_t>(i)].push_back(assignment.holder_of(item));
    }
    std::sort(adj[static_cast<size_t>(i)].begin(), adj[static_cast<size_t>(i)].end());
  }
  return adj;
}

}  // namespace

std::optional<TradingCycle> find_trading_cycle(const Profile& profile,
                                               const Assignment& assignment) {
  require_same_instance(profile, assignment);
  const int n = profile.agent_count();
  const auto adj = envy_graph(profile, assignment);

  enum class Mark : char { White, OnPath, Done };
  std::vector<Mark> mark(static_cast<size_t>(n), Mark::White);
  std::vector<int> position_on_path(static_cast<size_t>(n), -1);
  std::vector<AgentId> path;

  for (AgentId root = 0; root < n; ++root) {
    if (mark[static_cast<size_t>(root)] != Mark::White) continue;

    // frame: (agent, index of next neighbour to try)
    std::vector<std::pair<AgentId, size_t>> stack;
    stack.emplace_back(root, 0);
    mark[static_cast<size_t>(root)] = Mark::OnPath;
    position_on_path[static_cast<size_t>(root)] = 0;
    path.assign(1, root);

    while (!stack.empty()) {
      auto& [agent, next] = stack.back();
      const auto& neighbours = adj[static_cast<size_t>(agent)];
      if (next < neighbours.size()) {
        const AgentId to = neighbours[next++];
        if (mark[static_cast<size_t>(to)] == Mark::OnPath) {
          // Cycle: path segment from `to` up to `agent`.
          TradingCycle cycle;
          const size_t start = static_cast<size_t>(position_on_path[static_cast<size_t>(to)]);
          for (size_t p = start; p < path.size(); ++p) {
            const AgentId a = path[p];
            const AgentId succ = (p + 1 < path.size()) ? path[p + 1] : to;
            cycle.entries.push_back(
                {a, assignment.item_of(a), assignment.item_of(succ)});
          }
          return cycle;
        }
        if (mark[static_cast<size_t>(to)] == Mark::White) {
          mark[static_cast<size_t>(to)] = Mark::OnPath;
          position_on_path[static_cast<size_t>(to)] = static_cast<int>(path.size());
          path.push_back(to);
          stack.emplace_back(to, 0);
        }
      } else {
        mark[static_cast<size_t>(agent)] = Mark::Done;
        position_on_path[static_cast<size_t>(agent)] = -1;
        path.pop_back();
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

bool is_pareto_optimal(const Profile& profile, const Assignment& assignment) {
  return !find_trading_cycle(profile, assignment).has_value();
}

Assignment serial_dictatorship(const Profile& profile, const Permutation& permutation) {
  if (profile.agent_count() != permutation.agent_count()) {
    throw ValidationError("profile has " + std::to_string(profile.agent_count()) +
                          " agents but permutation has " +
                          std::to_string(permutation.agent_count()));
  }
  const int n = profile.agent_count();
  std::vector<char> taken(static_cast<size_t>(n), 0);
  std::vector<ItemId> alloc(static_cast<size_t>(n), -1);
  for (int pos = 0; pos < n; ++pos) {
    const AgentId agent = permutation.at(pos);
    for (ItemId item : profile.order(agent).ranking()) {
      if (!taken[static_cast<size_t>(item)]) {
        taken[static_cast<size_t>(item)] = 1;
        alloc[static_cast<size_t>(agent)] = item;
        break;
      }
    }
  }
  return Assignment(std::move(alloc));
}

std::vector<Assignment> enumerate_po_assignments(const Profile& profile, int max_agents) {
  const int n = profile.agent_count();
  if (n > max_agents) {
    throw GuardError("enumerate_po_assignments: " + std::to_string(n) +
                     " agents exceeds the guard of " + std::to_string(max_agents));
  }
  std::vector<AgentId> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::set<std::vector<ItemId>> seen;
  do {
    seen.insert(serial_dictatorship(profile, Permutation(order)).allocation());
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<Assignment> result;
  result.reserve(seen.size());
  for (const auto& alloc : seen) result.emplace_back(alloc);
  return result;
}

Assignment apply_trading_cycle(const Assignment& assignment, const TradingCycle& cycle) {
  if (cycle.entries.empty()) {
    throw ValidationError("apply_trading_cycle: empty cycle");
  }
  std::vector<ItemId> alloc = assignment.allocation();
  for (size_t j = 0; j < cycle.entries.size(); ++j) {
    const auto& entry = cycle.entries[j];
    const auto& next = cycle.entries[(j + 1) % cycle.entries.size()];
    if (entry.wants_item != next.held_item ||
        assignment.item_of(entry.agent) != entry.held_item) {
      throw ValidationError("apply_trading_cycle: inconsistent cycle");
    }
    alloc[static_cast<size_t>(entry.agent)] = entry.wants_item;
  }
  return Assignment(std::move(alloc));
}

}  // namespace upareto
