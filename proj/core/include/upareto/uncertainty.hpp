#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "upareto/rational.hpp"
#include "upareto/types.hpp"

namespace upareto {

inline constexpr std::int64_t kDefaultExpansionGuard = 1'000'000;

struct WeightedOrder {
  PreferenceOrder order;
  Rational prob;

  bool operator==(const WeightedOrder&) const = default;
};

/// Lottery model: each agent draws its order independently from a private
/// distribution. An agent with a single support order is "certain".
struct LotteryModel {
  /// preferences[agent] = that agent's support, probabilities summing to 1.
  std::vector<std::vector<WeightedOrder>> preferences;

  int agent_count() const { return static_cast<int>(preferences.size()); }

  bool is_certain(AgentId agent) const {
    return preferences[static_cast<size_t>(agent)].size() == 1;
  }

  const std::vector<WeightedOrder>& support_of(AgentId agent) const {
    return preferences[static_cast<size_t>(agent)];
  }

  std::vector<AgentId> uncertain_agents() const;

  /// Product of the uncertain agents' support sizes, saturating at the cap.
  std::int64_t realizable_profile_count(std::int64_t cap = kDefaultExpansionGuard) const;

  bool operator==(const LotteryModel&) const = default;
};

struct WeightedProfile {
  Profile profile;
  Rational prob;

  bool operator==(const WeightedProfile&) const = default;
};

/// Joint probability model: an explicit distribution over whole preference
/// profiles. Not independent in general.
struct JointModel {
  std::vector<WeightedProfile> support;

  int agent_count() const {
    return support.empty() ? 0 : support.front().profile.agent_count();
  }

  bool operator==(const JointModel&) const = default;
};

/// One reported problem with a model, with a human-readable location.
struct ModelViolation {
  std::string location;
  std::string message;

  bool operator==(const ModelViolation&) const = default;
};

/// Checks probability sums, positivity, duplicate orders/profiles, and
/// dimension consistency. Returns all violations found; empty means valid.
std::vector<ModelViolation> validate_model(const LotteryModel& model);
std::vector<ModelViolation> validate_model(const JointModel& model);

/// Throws ValidationError listing every violation, if any.
void require_valid(const LotteryModel& model);
void require_valid(const JointModel& model);

/// True iff b precedes c in every support order of the agent
/// (b preferred to c with probability one). Rejects b == c.
bool certainly_prefers(const LotteryModel& model, AgentId agent, ItemId b, ItemId c);

/// Per-agent certainly-preferred relation, materialised as boolean matrices
/// (the intersection of each agent's support orders).
class CertainlyPreferredRelation {
 public:
  static CertainlyPreferredRelation from_lottery(const LotteryModel& model);

  bool prefers(AgentId agent, ItemId b, ItemId c) const {
    return table_[static_cast<size_t>(agent)]
                 [static_cast<size_t>(b) * static_cast<size_t>(n_) + static_cast<size_t>(c)];
  }

  int agent_count() const { return static_cast<int>(table_.size()); }
  int item_count() const { return n_; }

 private:
  int n_ = 0;
  std::vector<std::vector<char>> table_;  // [agent][b*n + c]
};

/// Expands the per-agent product into an explicit joint model, one profile per
/// combination of support orders, probabilities multiplied. The output support
/// is sorted canonically and passes validate_model. Guarded by the product of
/// support sizes.
JointModel expand_lottery_to_joint(const LotteryModel& model,
                                   std::int64_t max_profiles = kDefaultExpansionGuard);

/// The support in canonical order (lexicographic by profile serialization).
std::vector<WeightedProfile> support_profiles(const JointModel& model);

}  // namespace upareto
