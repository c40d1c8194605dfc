#include "upareto/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "upareto/model.hpp"

namespace upareto {

namespace {

void check_sdf(const SdfInstance& instance, const char* what) {
  const int n = instance.profile.agent_count();
  if (instance.agent < 0 || instance.agent >= n) {
    throw ValidationError(std::string(what) + ": target agent out of range");
  }
  if (instance.item < 0 || instance.item >= n) {
    throw ValidationError(std::string(what) + ": target item out of range");
  }
}

// The target item moves to the top or to the bottom; everything else keeps
// its relative order.
PreferenceOrder twisted_order(const PreferenceOrder& order, ItemId item, bool to_top) {
  std::vector<ItemId> ranking;
  ranking.reserve(order.ranking().size());
  if (to_top) ranking.push_back(item);
  for (ItemId other : order.ranking()) {
    if (other != item) ranking.push_back(other);
  }
  if (!to_top) ranking.push_back(item);
  return PreferenceOrder(std::move(ranking));
}

}  // namespace

void require_valid(const Monotone2Sat& formula) {
  if (formula.variable_count <= 0) {
    throw ValidationError("formula: needs at least one variable");
  }
  if (formula.clauses.empty()) {
    throw ValidationError("formula: needs at least one clause");
  }
  std::vector<char> covered(static_cast<size_t>(formula.variable_count), 0);
  std::set<std::pair<int, int>> seen;
  for (size_t c = 0; c < formula.clauses.size(); ++c) {
    const std::string where = "formula, clause " + std::to_string(c + 1);
    const auto [i, j] = formula.clauses[c];
    if (i < 0 || i >= formula.variable_count || j < 0 || j >= formula.variable_count) {
      throw ValidationError(where + ": variable index out of range");
    }
    if (i == j) {
      throw ValidationError(where + ": clause pairs a variable with itself");
    }
    if (!seen.insert(std::minmax(i, j)).second) {
      throw ValidationError(where + ": duplicate clause");
    }
    covered[static_cast<size_t>(i)] = 1;
    covered[static_cast<size_t>(j)] = 1;
  }
  for (int v = 0; v < formula.variable_count; ++v) {
    if (!covered[static_cast<size_t>(v)]) {
      throw ValidationError("formula: variable " + std::to_string(v + 1) +
                            " occurs in no clause");
    }
  }
}

std::optional<Permutation> brute_sdf(const SdfInstance& instance, int max_agents) {
  check_sdf(instance, "brute_sdf");
  const int n = instance.profile.agent_count();
  if (n > max_agents) {
    throw GuardError("brute_sdf: " + std::to_string(n) + " agents exceeds the limit of " +
                     std::to_string(max_agents));
  }
  std::vector<AgentId> pick(static_cast<size_t>(n));
  std::iota(pick.begin(), pick.end(), 0);
  do {
    Permutation order(pick);
    if (serial_dictatorship(instance.profile, order).item_of(instance.agent) == instance.item) {
      return order;
    }
  } while (std::next_permutation(pick.begin(), pick.end()));
  return std::nullopt;
}

std::int64_t brute_sat_count(const Monotone2Sat& formula, int max_variables) {
  require_valid(formula);
  if (formula.variable_count > max_variables) {
    throw GuardError("brute_sat_count: " + std::to_string(formula.variable_count) +
                     " variables exceeds the limit of " + std::to_string(max_variables));
  }
  std::int64_t count = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << formula.variable_count); ++mask) {
    bool satisfied = true;
    for (const auto& [i, j] : formula.clauses) {
      if (((mask >> i) & 1u) == 0 && ((mask >> j) & 1u) == 0) {
        satisfied = false;
        break;
      }
    }
    if (satisfied) ++count;
  }
  return count;
}

JointModel reduce_sdf_to_joint(const SdfInstance& instance) {
  check_sdf(instance, "reduce_sdf_to_joint");
  const int n = instance.profile.agent_count();
  std::vector<PreferenceOrder> twisted;
  twisted.reserve(static_cast<size_t>(n));
  for (AgentId j = 0; j < n; ++j) {
    twisted.push_back(
        twisted_order(instance.profile.order(j), instance.item, j == instance.agent));
  }
  Profile twin(std::move(twisted));

  JointModel model;
  if (twin == instance.profile) {
    model.support.push_back({instance.profile, Rational(1)});
  } else {
    model.support.push_back({instance.profile, Rational(1, 2)});
    model.support.push_back({std::move(twin), Rational(1, 2)});
  }
  return model;
}

LotteryModel reduce_sdf_to_lottery(const SdfInstance& instance) {
  check_sdf(instance, "reduce_sdf_to_lottery");
  const int n = instance.profile.agent_count();
  std::vector<std::vector<WeightedOrder>> preferences(static_cast<size_t>(n));
  for (AgentId j = 0; j < n; ++j) {
    const PreferenceOrder& original = instance.profile.order(j);
    PreferenceOrder twin = twisted_order(original, instance.item, j == instance.agent);
    auto& support = preferences[static_cast<size_t>(j)];
    if (twin == original) {
      support.push_back({original, Rational(1)});
    } else {
      support.push_back({original, Rational(1, 2)});
      support.push_back({std::move(twin), Rational(1, 2)});
    }
  }
  return LotteryModel{std::move(preferences)};
}

std::pair<LotteryModel, Assignment> reduce_m2sat_to_lottery(const Monotone2Sat& formula) {
  require_valid(formula);
  const int n = formula.variable_count;
  std::vector<std::set<int>> partners(static_cast<size_t>(n));
  for (const auto& [i, j] : formula.clauses) {
    partners[static_cast<size_t>(i)].insert(j);
    partners[static_cast<size_t>(j)].insert(i);
  }

  std::vector<std::vector<WeightedOrder>> preferences(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<ItemId> keep;
    keep.reserve(static_cast<size_t>(n));
    keep.push_back(v);
    for (int other = 0; other < n; ++other) {
      if (other != v) keep.push_back(other);
    }

    const std::set<int>& mates = partners[static_cast<size_t>(v)];
    std::vector<ItemId> lift(mates.begin(), mates.end());
    lift.reserve(static_cast<size_t>(n));
    lift.push_back(v);
    for (int other = 0; other < n; ++other) {
      if (other != v && !mates.contains(other)) lift.push_back(other);
    }

    preferences[static_cast<size_t>(v)] = {
        {PreferenceOrder(std::move(keep)), Rational(1, 2)},
        {PreferenceOrder(std::move(lift)), Rational(1, 2)}};
  }
  return {LotteryModel{std::move(preferences)}, Assignment::identity(n)};
}

}  // namespace upareto
