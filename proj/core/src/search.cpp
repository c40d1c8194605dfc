#include "upareto/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "upareto/model.hpp"
#include "upareto/poly.hpp"
#include "upareto/prob.hpp"

namespace upareto {

namespace {

void require_small(int agents, int max_agents, const char* what) {
  if (agents > max_agents) {
    throw GuardError(std::string(what) + ": " + std::to_string(agents) +
                     " agents exceeds the limit of " + std::to_string(max_agents));
  }
}

// Cycle test among the first `count` agents under an envy oracle.
// envies(a, b) says whether agent a would trade its current item for b's.
template <typename Envies>
bool partial_trading_cycle(int count, const Envies& envies) {
  enum class Mark : char { White, OnPath, Done };
  std::vector<Mark> mark(static_cast<size_t>(count), Mark::White);
  std::vector<std::pair<int, int>> stack;
  for (int root = 0; root < count; ++root) {
    if (mark[static_cast<size_t>(root)] != Mark::White) continue;
    stack.emplace_back(root, 0);
    mark[static_cast<size_t>(root)] = Mark::OnPath;
    while (!stack.empty()) {
      auto& [agent, next] = stack.back();
      if (next < count) {
        const int other = next++;
        if (other == agent || !envies(agent, other)) continue;
        if (mark[static_cast<size_t>(other)] == Mark::OnPath) return true;
        if (mark[static_cast<size_t>(other)] == Mark::White) {
          mark[static_cast<size_t>(other)] = Mark::OnPath;
          stack.emplace_back(other, 0);
        }
      } else {
        mark[static_cast<size_t>(agent)] = Mark::Done;
        stack.pop_back();
      }
    }
  }
  return false;
}

// Assigns items to agents 0..n-1 in ascending item order, so the first
// accepted assignment is the lexicographically smallest one. doomed() vetoes
// partial assignments that no completion can rescue.
template <typename Doomed>
bool assign_first(int depth, int n, std::vector<ItemId>& alloc, std::vector<char>& used,
                  const Doomed& doomed) {
  if (depth == n) return true;
  for (ItemId item = 0; item < n; ++item) {
    if (used[static_cast<size_t>(item)]) continue;
    alloc[static_cast<size_t>(depth)] = item;
    used[static_cast<size_t>(item)] = 1;
    if (!doomed(alloc, depth + 1) && assign_first(depth + 1, n, alloc, used, doomed)) {
      return true;
    }
    used[static_cast<size_t>(item)] = 0;
  }
  return false;
}

std::int64_t factorial(int n) {
  std::int64_t result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

std::set<std::vector<ItemId>> all_allocations(int n) {
  std::set<std::vector<ItemId>> out;
  std::vector<ItemId> alloc(static_cast<size_t>(n));
  std::iota(alloc.begin(), alloc.end(), 0);
  do {
    out.insert(alloc);
  } while (std::next_permutation(alloc.begin(), alloc.end()));
  return out;
}

// Smallest-allocation maximizer: candidates iterate in ascending order, so
// only strict improvements replace the incumbent.
template <typename Evaluate>
BestAssignment pick_best(int n, std::set<std::vector<ItemId>> candidates,
                         const Evaluate& evaluate) {
  if (candidates.empty()) candidates = all_allocations(n);
  BestAssignment best{Assignment(*candidates.begin()), evaluate(*candidates.begin())};
  for (auto it = std::next(candidates.begin()); it != candidates.end(); ++it) {
    Rational value = evaluate(*it);
    if (value > best.probability) {
      best = BestAssignment{Assignment(*it), std::move(value)};
    }
  }
  return best;
}

}  // namespace

std::optional<Assignment> exists_certainly_po(const LotteryModel& model, int max_agents) {
  const int n = model.agent_count();
  require_small(n, max_agents, "exists_certainly_po");
  const CertainlyPreferredRelation certain = CertainlyPreferredRelation::from_lottery(model);

  // A completion keeps every cycle of the partial possible-envy graph, so a
  // cyclic prefix can never reach probability one.
  const auto doomed = [&](const std::vector<ItemId>& alloc, int count) {
    return partial_trading_cycle(count, [&](int a, int b) {
      return !certain.prefers(a, alloc[static_cast<size_t>(a)], alloc[static_cast<size_t>(b)]);
    });
  };

  std::vector<ItemId> alloc(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  if (!assign_first(0, n, alloc, used, doomed)) return std::nullopt;
  Assignment result(std::move(alloc));
  if (!is_po_probability_one(model, result)) {
    throw std::logic_error("exists_certainly_po: search accepted a non-certain assignment");
  }
  return result;
}

std::optional<Assignment> exists_certainly_po(const JointModel& model, int max_agents) {
  const int n = model.agent_count();
  require_small(n, max_agents, "exists_certainly_po");

  const auto doomed = [&](const std::vector<ItemId>& alloc, int count) {
    for (const WeightedProfile& entry : model.support) {
      const bool cyclic = partial_trading_cycle(count, [&](int a, int b) {
        return entry.profile.order(a).prefers(alloc[static_cast<size_t>(b)],
                                              alloc[static_cast<size_t>(a)]);
      });
      if (cyclic) return true;
    }
    return false;
  };

  std::vector<ItemId> alloc(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  if (!assign_first(0, n, alloc, used, doomed)) return std::nullopt;
  Assignment result(std::move(alloc));
  if (!joint_is_po_probability_one(model, result)) {
    throw std::logic_error("exists_certainly_po: search accepted a non-certain assignment");
  }
  return result;
}

BestAssignment best_assignment(const LotteryModel& model, int max_agents) {
  const int n = model.agent_count();
  require_small(n, max_agents, "best_assignment");

  const std::int64_t profiles = model.realizable_profile_count();
  std::set<std::vector<ItemId>> candidates;
  if (profiles <= kDefaultExpansionGuard / factorial(n)) {
    for (const WeightedProfile& entry : expand_lottery_to_joint(model).support) {
      for (const Assignment& assignment : enumerate_po_assignments(entry.profile, max_agents)) {
        candidates.insert(assignment.allocation());
      }
    }
  } else {
    candidates = all_allocations(n);
  }
  return pick_best(n, std::move(candidates), [&](const std::vector<ItemId>& alloc) {
    return po_probability_enum(model, Assignment(alloc));
  });
}

BestAssignment best_assignment(const JointModel& model, int max_agents) {
  const int n = model.agent_count();
  require_small(n, max_agents, "best_assignment");

  std::set<std::vector<ItemId>> candidates;
  const auto support_size = static_cast<std::int64_t>(model.support.size());
  if (support_size <= kDefaultExpansionGuard / factorial(n)) {
    for (const WeightedProfile& entry : model.support) {
      for (const Assignment& assignment : enumerate_po_assignments(entry.profile, max_agents)) {
        candidates.insert(assignment.allocation());
      }
    }
  } else {
    candidates = all_allocations(n);
  }
  return pick_best(n, std::move(candidates), [&](const std::vector<ItemId>& alloc) {
    return po_probability_joint(model, Assignment(alloc));
  });
}

}  // namespace upareto
