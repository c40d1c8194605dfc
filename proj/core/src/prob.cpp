#include "upareto/prob.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "upareto/model.hpp"

namespace upareto {

namespace {

void require_same_instance(int model_agents, const Assignment& assignment, const char* what) {
  if (model_agents != assignment.agent_count()) {
    throw ValidationError(std::string(what) + ": model has " + std::to_string(model_agents) +
                          " agents but assignment has " +
                          std::to_string(assignment.agent_count()));
  }
}

void require_small(int agents, int max_agents, const char* what) {
  if (agents > max_agents) {
    throw GuardError(std::string(what) + ": " + std::to_string(agents) +
                     " agents exceeds the limit of " + std::to_string(max_agents));
  }
}

}  // namespace

Rational po_probability_joint(const JointModel& model, const Assignment& assignment) {
  require_same_instance(model.agent_count(), assignment, "po_probability_joint");
  Rational total = 0;
  for (const WeightedProfile& entry : model.support) {
    if (is_pareto_optimal(entry.profile, assignment)) total += entry.prob;
  }
  return total;
}

Rational po_probability_enum(const LotteryModel& model, const Assignment& assignment,
                             std::int64_t max_profiles) {
  require_same_instance(model.agent_count(), assignment, "po_probability_enum");
  if (model.realizable_profile_count(max_profiles) > max_profiles) {
    throw GuardError("po_probability_enum: realizable profile count exceeds " +
                     std::to_string(max_profiles));
  }

  const std::vector<AgentId> uncertain = model.uncertain_agents();
  std::vector<PreferenceOrder> orders;
  orders.reserve(static_cast<size_t>(model.agent_count()));
  for (AgentId agent = 0; agent < model.agent_count(); ++agent) {
    orders.push_back(model.support_of(agent).front().order);
  }

  Rational total = 0;
  std::vector<size_t> index(uncertain.size(), 0);
  while (true) {
    Rational weight = 1;
    for (size_t u = 0; u < uncertain.size(); ++u) {
      const WeightedOrder& choice = model.support_of(uncertain[u])[index[u]];
      orders[static_cast<size_t>(uncertain[u])] = choice.order;
      weight *= choice.prob;
    }
    if (is_pareto_optimal(Profile(orders), assignment)) total += weight;

    size_t pos = 0;
    while (pos < index.size()) {
      if (++index[pos] < model.support_of(uncertain[pos]).size()) break;
      index[pos] = 0;
      ++pos;
    }
    if (pos == index.size()) break;
  }
  return total;
}

namespace {

// Pareto optimality straight from the definition: scan every assignment for
// one that every agent weakly prefers and some agent strictly prefers.
bool oracle_is_pareto_optimal(const Profile& profile, const Assignment& assignment) {
  const int n = profile.agent_count();
  std::vector<int> own_rank(static_cast<size_t>(n));
  for (AgentId agent = 0; agent < n; ++agent) {
    own_rank[static_cast<size_t>(agent)] =
        profile.order(agent).rank_of(assignment.item_of(agent));
  }
  std::vector<ItemId> items(static_cast<size_t>(n));
  std::iota(items.begin(), items.end(), 0);
  do {
    bool weakly_better = true;
    bool strictly_better = false;
    for (AgentId agent = 0; agent < n; ++agent) {
      const int rank = profile.order(agent).rank_of(items[static_cast<size_t>(agent)]);
      if (rank > own_rank[static_cast<size_t>(agent)]) {
        weakly_better = false;
        break;
      }
      if (rank < own_rank[static_cast<size_t>(agent)]) strictly_better = true;
    }
    if (weakly_better && strictly_better) return false;
  } while (std::next_permutation(items.begin(), items.end()));
  return true;
}

}  // namespace

Rational oracle_po_probability(const LotteryModel& model, const Assignment& assignment,
                               int max_agents) {
  require_same_instance(model.agent_count(), assignment, "oracle_po_probability");
  require_small(model.agent_count(), max_agents, "oracle_po_probability");

  const int n = model.agent_count();
  std::vector<PreferenceOrder> orders;
  orders.reserve(static_cast<size_t>(n));
  for (AgentId agent = 0; agent < n; ++agent) {
    orders.push_back(model.support_of(agent).front().order);
  }

  Rational total = 0;
  std::vector<size_t> index(static_cast<size_t>(n), 0);
  while (true) {
    Rational weight = 1;
    for (AgentId agent = 0; agent < n; ++agent) {
      const WeightedOrder& choice = model.support_of(agent)[index[static_cast<size_t>(agent)]];
      orders[static_cast<size_t>(agent)] = choice.order;
      weight *= choice.prob;
    }
    if (oracle_is_pareto_optimal(Profile(orders), assignment)) total += weight;

    size_t pos = 0;
    while (pos < index.size()) {
      if (++index[pos] < model.support_of(static_cast<AgentId>(pos)).size()) break;
      index[pos] = 0;
      ++pos;
    }
    if (pos == index.size()) break;
  }
  return total;
}

Rational oracle_po_probability(const JointModel& model, const Assignment& assignment,
                               int max_agents) {
  require_same_instance(model.agent_count(), assignment, "oracle_po_probability");
  require_small(model.agent_count(), max_agents, "oracle_po_probability");
  Rational total = 0;
  for (const WeightedProfile& entry : model.support) {
    if (oracle_is_pareto_optimal(entry.profile, assignment)) total += entry.prob;
  }
  return total;
}

CommonDenominatorForm common_denominator_form(const LotteryModel& model) {
  CommonDenominatorForm form;
  form.denominator = 1;
  for (AgentId agent = 0; agent < model.agent_count(); ++agent) {
    for (const WeightedOrder& entry : model.support_of(agent)) {
      form.denominator = boost::multiprecision::lcm(form.denominator,
                                                    rational_denominator(entry.prob));
    }
  }
  form.numerators.resize(static_cast<size_t>(model.agent_count()));
  for (AgentId agent = 0; agent < model.agent_count(); ++agent) {
    auto& row = form.numerators[static_cast<size_t>(agent)];
    row.reserve(model.support_of(agent).size());
    for (const WeightedOrder& entry : model.support_of(agent)) {
      row.push_back(rational_numerator(entry.prob) *
                    (form.denominator / rational_denominator(entry.prob)));
    }
  }
  return form;
}

}  // namespace upareto
