#include "upareto/uncertainty.hpp"

#include <algorithm>
#include <set>

namespace upareto {

std::vector<AgentId> LotteryModel::uncertain_agents() const {
  std::vector<AgentId> result;
  for (AgentId i = 0; i < agent_count(); ++i) {
    if (!is_certain(i)) result.push_back(i);
  }
  return result;
}

std::int64_t LotteryModel::realizable_profile_count(std::int64_t cap) const {
  std::int64_t product = 1;
  for (const auto& support : preferences) {
    const auto size = static_cast<std::int64_t>(support.size());
    if (product > cap / std::max<std::int64_t>(size, 1)) return cap + 1;
    product *= size;
  }
  return product;
}

namespace {

bool is_item_permutation(const PreferenceOrder& order, int n) {
  return order.item_count() == n;  // permutation enforced at construction
}

void check_distribution(const std::vector<Rational>& probs, const std::string& where,
                        std::vector<ModelViolation>& out) {
  Rational sum = 0;
  for (size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0) {
      out.push_back({where, "probability #" + std::to_string(i + 1) + " is not positive (" +
                                fraction_string(probs[i]) + ")"});
    }
    sum += probs[i];
  }
  if (sum != 1) {
    out.push_back({where, "probabilities sum to " + fraction_string(sum) + ", expected 1"});
  }
}

}  // namespace

std::vector<ModelViolation> validate_model(const LotteryModel& model) {
  std::vector<ModelViolation> violations;
  const int n = model.agent_count();
  if (n == 0) {
    violations.push_back({"model", "no agents"});
    return violations;
  }
  for (AgentId agent = 0; agent < n; ++agent) {
    const auto& support = model.support_of(agent);
    const std::string where = "agent " + std::to_string(agent);
    if (support.empty()) {
      violations.push_back({where, "empty support"});
      continue;
    }
    std::vector<Rational> probs;
    std::set<std::vector<ItemId>> seen;
    for (const auto& entry : support) {
      probs.push_back(entry.prob);
      if (!is_item_permutation(entry.order, n)) {
        violations.push_back({where, "order over " + std::to_string(entry.order.item_count()) +
                                         " items, expected " + std::to_string(n)});
      }
      if (!seen.insert(entry.order.ranking()).second) {
        violations.push_back({where, "duplicate preference order"});
      }
    }
    check_distribution(probs, where, violations);
  }
  return violations;
}

std::vector<ModelViolation> validate_model(const JointModel& model) {
  std::vector<ModelViolation> violations;
  if (model.support.empty()) {
    violations.push_back({"model", "empty support"});
    return violations;
  }
  const int n = model.agent_count();
  std::vector<Rational> probs;
  std::set<Profile> seen;
  for (size_t p = 0; p < model.support.size(); ++p) {
    const auto& entry = model.support[p];
    const std::string where = "profile #" + std::to_string(p + 1);
    probs.push_back(entry.prob);
    if (entry.profile.agent_count() != n) {
      violations.push_back({where, "profile over " + std::to_string(entry.profile.agent_count()) +
                                       " agents, expected " + std::to_string(n)});
    }
    if (!seen.insert(entry.profile).second) {
      violations.push_back({where, "duplicate profile"});
    }
  }
  check_distribution(probs, "model", violations);
  return violations;
}

namespace {

template <typename Model>
void require_valid_impl(const Model& model) {
  const auto violations = validate_model(model);
  if (violations.empty()) return;
  std::string message = "invalid model:";
  for (const auto& v : violations) {
    message += "\n  " + v.location + ": " + v.message;
  }
  throw ValidationError(message);
}

}  // namespace

void require_valid(const LotteryModel& model) { require_valid_impl(model); }
void require_valid(const JointModel& model) { require_valid_impl(model); }

bool certainly_prefers(const LotteryModel& model, AgentId agent, ItemId b, ItemId c) {
  if (b == c) {
    throw ValidationError("certainly_prefers: items must differ");
  }
  for (const auto& entry : model.support_of(agent)) {
    if (!entry.order.prefers(b, c)) return false;
  }
  return true;
}

CertainlyPreferredRelation CertainlyPreferredRelation::from_lottery(const LotteryModel& model) {
  CertainlyPreferredRelation relation;
  const int n = model.agent_count();
  relation.n_ = n;
  relation.table_.resize(static_cast<size_t>(n));
  for (AgentId agent = 0; agent < n; ++agent) {
    auto& table = relation.table_[static_cast<size_t>(agent)];
    table.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 1);
    for (ItemId b = 0; b < n; ++b) table[static_cast<size_t>(b) * n + b] = 0;
    for (const auto& entry : model.support_of(agent)) {
      for (ItemId b = 0; b < n; ++b) {
        for (ItemId c = 0; c < n; ++c) {
          if (b != c && !entry.order.prefers(b, c)) {
            table[static_cast<size_t>(b) * n + c] = 0;
          }
        }
      }
    }
  }
  return relation;
}

JointModel expand_lottery_to_joint(const LotteryModel& model, std::int64_t max_profiles) {
  const std::int64_t count = model.realizable_profile_count(max_profiles);
  if (count > max_profiles) {
    throw GuardError("expand_lottery_to_joint: product of support sizes exceeds " +
                     std::to_string(max_profiles));
  }
  const int n = model.agent_count();
  JointModel joint;
  joint.support.reserve(static_cast<size_t>(count));

  std::vector<size_t> choice(static_cast<size_t>(n), 0);
  while (true) {
    std::vector<PreferenceOrder> orders;
    orders.reserve(static_cast<size_t>(n));
    Rational prob = 1;
    for (AgentId agent = 0; agent < n; ++agent) {
      const auto& entry = model.support_of(agent)[choice[static_cast<size_t>(agent)]];
      orders.push_back(entry.order);
      prob *= entry.prob;
    }
    joint.support.push_back({Profile(std::move(orders)), std::move(prob)});

    // odometer over per-agent choices
    int agent = n - 1;
    while (agent >= 0) {
      auto& c = choice[static_cast<size_t>(agent)];
      if (++c < model.support_of(agent).size()) break;
      c = 0;
      --agent;
    }
    if (agent < 0) break;
  }

  std::sort(joint.support.begin(), joint.support.end(),
            [](const WeightedProfile& a, const WeightedProfile& b) {
              return a.profile < b.profile;
            });
  return joint;
}

std::vector<WeightedProfile> support_profiles(const JointModel& model) {
  std::vector<WeightedProfile> result = model.support;
  std::sort(result.begin(), result.end(),
            [](const WeightedProfile& a, const WeightedProfile& b) {
              return a.profile < b.profile;
            });
  return result;
}

}  // namespace upareto
