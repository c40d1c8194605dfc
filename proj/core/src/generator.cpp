#include "upareto/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace upareto {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return draw % bound;
}

int SeededRng::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

constexpr int kDrawAttempts = 10000;

void check_config(const GeneratorConfig& config) {
  if (config.agent_count < 1) {
    throw ValidationError("generator: agent count must be at least 1");
  }
  if (config.uncertain_count < 0 || config.uncertain_count > config.agent_count) {
    throw ValidationError("generator: uncertain agent count must be between 0 and n");
  }
  if (config.support_size < 1) {
    throw ValidationError("generator: support size must be at least 1");
  }
  if (config.uncertain_count > 0 && config.support_size < 2) {
    throw ValidationError("generator: uncertain agents need a support size of at least 2");
  }
  if (config.uncertain_count > 0 && config.agent_count < 2) {
    throw ValidationError("generator: uncertain agents need at least 2 items");
  }
  if (config.joint && config.joint_support < 1) {
    throw ValidationError("generator: joint support must be at least 1");
  }
}

// Distinct strict orders over n items, clipped at cap.
int distinct_order_capacity(int n, int cap) {
  std::int64_t available = 1;
  for (int i = 2; i <= n && available < cap; ++i) available *= i;
  return static_cast<int>(std::min<std::int64_t>(available, cap));
}

// Distinct profiles over n agents, clipped at cap.
int distinct_profile_capacity(int n, int cap) {
  const std::int64_t orders = distinct_order_capacity(n, cap);
  std::int64_t total = 1;
  for (int a = 0; a < n && total < cap; ++a) total *= orders;
  return static_cast<int>(std::min<std::int64_t>(total, cap));
}

PreferenceOrder random_order(SeededRng& rng, int n) {
  std::vector<ItemId> ranking(static_cast<size_t>(n));
  std::iota(ranking.begin(), ranking.end(), 0);
  rng.shuffle(ranking);
  return PreferenceOrder(std::move(ranking));
}

// `count` random positive rationals summing to one.
std::vector<Rational> random_weights(SeededRng& rng, int count) {
  std::vector<int> raw(static_cast<size_t>(count));
  for (int& w : raw) w = rng.range(1, 9);
  const int total = std::accumulate(raw.begin(), raw.end(), 0);
  std::vector<Rational> weights;
  weights.reserve(raw.size());
  for (int w : raw) weights.emplace_back(w, total);
  return weights;
}

}  // namespace

InstanceDocument generate_instance(const GeneratorConfig& config) {
  check_config(config);
  SeededRng rng(config.seed);
  const int n = config.agent_count;

  InstanceDocument document;
  for (int i = 1; i <= n; ++i) {
    document.agent_names.push_back(std::to_string(i));
    document.item_names.push_back("o" + std::to_string(i));
  }

  if (config.joint) {
    const int want = distinct_profile_capacity(n, config.joint_support);
    std::set<std::vector<PreferenceOrder>> seen;
    JointModel model;
    int attempts = 0;
    while (static_cast<int>(model.support.size()) < want) {
      if (++attempts > kDrawAttempts) {
        throw ValidationError("generator: cannot draw that many distinct profiles");
      }
      std::vector<PreferenceOrder> orders;
      orders.reserve(static_cast<size_t>(n));
      for (int agent = 0; agent < n; ++agent) orders.push_back(random_order(rng, n));
      if (!seen.insert(orders).second) continue;
      model.support.push_back({Profile(std::move(orders)), Rational(0)});
    }
    const std::vector<Rational> weights = random_weights(rng, want);
    for (size_t p = 0; p < model.support.size(); ++p) model.support[p].prob = weights[p];
    document.model = std::move(model);
    return document;
  }

  std::vector<AgentId> agents(static_cast<size_t>(n));
  std::iota(agents.begin(), agents.end(), 0);
  rng.shuffle(agents);
  std::vector<char> uncertain(static_cast<size_t>(n), 0);
  for (int u = 0; u < config.uncertain_count; ++u) {
    uncertain[static_cast<size_t>(agents[static_cast<size_t>(u)])] = 1;
  }

  const int largest = distinct_order_capacity(n, config.support_size);
  std::vector<std::vector<WeightedOrder>> preferences(static_cast<size_t>(n));
  for (int agent = 0; agent < n; ++agent) {
    const int count = uncertain[static_cast<size_t>(agent)] ? rng.range(2, largest) : 1;
    std::set<PreferenceOrder> seen;
    int attempts = 0;
    while (static_cast<int>(seen.size()) < count) {
      if (++attempts > kDrawAttempts) {
        throw ValidationError("generator: cannot draw that many distinct orders");
      }
      seen.insert(random_order(rng, n));
    }
    // Set order is deterministic but draw order is not recoverable from it;
    // the support is stored sorted.
    const std::vector<Rational> weights = random_weights(rng, count);
    auto& support = preferences[static_cast<size_t>(agent)];
    size_t next = 0;
    for (const PreferenceOrder& order : seen) support.push_back({order, weights[next++]});
  }
  document.model = LotteryModel{std::move(preferences)};
  return document;
}

}  // namespace upareto
