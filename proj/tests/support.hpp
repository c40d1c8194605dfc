#pragma once

// Shared instance builders and definition-level oracles. The oracles here
// reimplement the math from scratch (permutation scans, direct support
// checks) so that library bugs cannot vouch for themselves.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "upareto/generator.hpp"
#include "upareto/uncertainty.hpp"

namespace testsupport {

inline upareto::PreferenceOrder order_of(std::vector<upareto::ItemId> ranking) {
  return upareto::PreferenceOrder(std::move(ranking));
}

// Running example used across suites: agent 0 uncertain between (0 1 2) at
// 3/5 and (1 0 2) at 2/5, agents 1 and 2 certain on (1 0 2) and (2 1 0).
inline upareto::LotteryModel example_lottery() {
  upareto::LotteryModel model;
  model.preferences = {
      {{order_of({0, 1, 2}), upareto::Rational(3, 5)},
       {order_of({1, 0, 2}), upareto::Rational(2, 5)}},
      {{order_of({1, 0, 2}), upareto::Rational(1)}},
      {{order_of({2, 1, 0}), upareto::Rational(1)}},
  };
  return model;
}

inline upareto::LotteryModel random_lottery(std::uint64_t seed, int n, int k, int support) {
  upareto::GeneratorConfig config;
  config.agent_count = n;
  config.uncertain_count = k;
  config.support_size = support;
  config.seed = seed;
  return upareto::generate_instance(config).lottery();
}

inline upareto::JointModel random_joint(std::uint64_t seed, int n, int profiles) {
  upareto::GeneratorConfig config;
  config.agent_count = n;
  config.joint = true;
  config.joint_support = profiles;
  config.seed = seed;
  return upareto::generate_instance(config).joint();
}

inline upareto::Assignment random_assignment(upareto::SeededRng& rng, int n) {
  std::vector<upareto::ItemId> allocation(static_cast<size_t>(n));
  std::iota(allocation.begin(), allocation.end(), 0);
  rng.shuffle(allocation);
  return upareto::Assignment(std::move(allocation));
}

inline upareto::PreferenceOrder random_order(upareto::SeededRng& rng, int n) {
  std::vector<upareto::ItemId> ranking(static_cast<size_t>(n));
  std::iota(ranking.begin(), ranking.end(), 0);
  rng.shuffle(ranking);
  return upareto::PreferenceOrder(std::move(ranking));
}

inline upareto::Profile random_profile(upareto::SeededRng& rng, int n) {
  std::vector<upareto::PreferenceOrder> orders;
  orders.reserve(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    orders.push_back(random_order(rng, n));
  }
  return upareto::Profile(std::move(orders));
}

inline std::vector<upareto::Assignment> all_assignments(int n) {
  std::vector<upareto::ItemId> allocation(static_cast<size_t>(n));
  std::iota(allocation.begin(), allocation.end(), 0);
  std::vector<upareto::Assignment> out;
  do {
    out.push_back(upareto::Assignment(allocation));
  } while (std::next_permutation(allocation.begin(), allocation.end()));
  return out;
}

// Pareto domination straight from the definition: weakly better for every
// agent, strictly better for at least one.
inline bool dominates(const upareto::Profile& profile, const upareto::Assignment& q,
                      const upareto::Assignment& p) {
  bool strict = false;
  for (upareto::AgentId a = 0; a < profile.agent_count(); ++a) {
    const auto& order = profile.order(a);
    if (order.prefers(p.item_of(a), q.item_of(a))) {
      return false;
    }
    if (order.prefers(q.item_of(a), p.item_of(a))) {
      strict = true;
    }
  }
  return strict;
}

inline bool brute_pareto_optimal(const upareto::Profile& profile,
                                 const upareto::Assignment& p) {
  for (const auto& q : all_assignments(profile.agent_count())) {
    if (dominates(profile, q, p)) {
      return false;
    }
  }
  return true;
}

// Certain strict preference by scanning the support directly.
inline bool scan_certainly_prefers(const upareto::LotteryModel& model, upareto::AgentId agent,
                                   upareto::ItemId b, upareto::ItemId c) {
  for (const auto& entry : model.support_of(agent)) {
    if (!entry.order.prefers(b, c)) {
      return false;
    }
  }
  return true;
}

// Some q improves on p in every realization. Item-wise that means q keeps or
// certainly improves every agent's item and differs somewhere; realization by
// realization the difference is then a strict improvement.
inline bool brute_certainly_dominated(const upareto::LotteryModel& model,
                                      const upareto::Assignment& p) {
  for (const auto& q : all_assignments(model.agent_count())) {
    if (q == p) {
      continue;
    }
    bool improves_everywhere = true;
    for (upareto::AgentId a = 0; a < model.agent_count() && improves_everywhere; ++a) {
      if (q.item_of(a) == p.item_of(a)) {
        continue;
      }
      improves_everywhere = scan_certainly_prefers(model, a, q.item_of(a), p.item_of(a));
    }
    if (improves_everywhere) {
      return true;
    }
  }
  return false;
}

}  // namespace testsupport
