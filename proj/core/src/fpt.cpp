#include "upareto/fpt.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "upareto/model.hpp"
#include "upareto/prob.hpp"

namespace upareto {

bool ReachabilitySet::has_diagonal() const {
  for (int i = 0; i < k; ++i) {
    if (contains(i, i)) return true;
  }
  return false;
}

std::int64_t FptGraph::vertex_count() const {
  std::int64_t count = 2;
  for (const auto& states : layer_states) count += static_cast<std::int64_t>(states.size());
  for (const auto& layer : transitions) {
    for (const auto& outgoing : layer) count += static_cast<std::int64_t>(outgoing.size());
  }
  return count;
}

namespace {

void require_same_instance(int model_agents, const Assignment& assignment, const char* what) {
  if (model_agents != assignment.agent_count()) {
    throw ValidationError(std::string(what) + ": model has " + std::to_string(model_agents) +
                          " agents but assignment has " +
                          std::to_string(assignment.agent_count()));
  }
}

// Items ranked above `held`, i.e. everything the holder would trade up to.
std::vector<ItemId> preferred_prefix(const PreferenceOrder& order, ItemId held) {
  std::vector<ItemId> out;
  for (ItemId item : order.ranking()) {
    if (item == held) break;
    out.push_back(item);
  }
  return out;
}

// A trading cycle among the certain agents alone survives every realization.
// Their sub-instance lives on items k..n-1, shifted down to 0..n-k-1.
bool certain_agents_have_cycle(const LotteryModel& relabeled, int k) {
  const int certain = relabeled.agent_count() - k;
  if (certain == 0) return false;
  std::vector<PreferenceOrder> orders;
  orders.reserve(static_cast<size_t>(certain));
  for (AgentId agent = k; agent < relabeled.agent_count(); ++agent) {
    std::vector<ItemId> ranking;
    for (ItemId item : relabeled.support_of(agent).front().order.ranking()) {
      if (item >= k) ranking.push_back(item - k);
    }
    orders.push_back(PreferenceOrder(std::move(ranking)));
  }
  return find_trading_cycle(Profile(std::move(orders)), Assignment::identity(certain)).has_value();
}

// Reachability pairs after agent `committing` adds the trading edges of
// `order` on top of the static edges and the pairs recorded so far. Earlier
// agents' edges need no replay: any hop out of their items is already a
// recorded pair, and the stretch between two uncertain items runs through
// static edges only.
ReachabilitySet close_over(const ReachabilitySet& state, const PreferenceOrder& order,
                           int committing, int k,
                           const std::vector<std::vector<ItemId>>& static_edges) {
  const size_t n = static_edges.size();
  const std::vector<ItemId> committed_edges = preferred_prefix(order, committing);

  ReachabilitySet closed{k, 0};
  std::vector<char> reached(n);
  std::vector<ItemId> queue;
  for (int source = 0; source < k; ++source) {
    std::fill(reached.begin(), reached.end(), 0);
    queue.clear();
    auto expand = [&](ItemId from) {
      auto push = [&](ItemId to) {
        if (!reached[static_cast<size_t>(to)]) {
          reached[static_cast<size_t>(to)] = 1;
          queue.push_back(to);
        }
      };
      if (from >= k) {
        for (ItemId to : static_edges[static_cast<size_t>(from)]) push(to);
        return;
      }
      for (int b = 0; b < k; ++b) {
        if (state.contains(from, b)) push(b);
      }
      if (from == committing) {
        for (ItemId to : committed_edges) push(to);
      }
    };
    expand(source);
    for (size_t head = 0; head < queue.size(); ++head) expand(queue[head]);
    for (int b = 0; b < k; ++b) {
      if (reached[static_cast<size_t>(b)]) closed.insert(source, b);
    }
  }
  return closed;
}

}  // namespace

FptRelabeling relabel_for_fpt(const LotteryModel& model, const Assignment& assignment) {
  require_same_instance(model.agent_count(), assignment, "relabel_for_fpt");
  const int n = model.agent_count();

  FptRelabeling relabeling;
  relabeling.to_original_agent = model.uncertain_agents();
  relabeling.to_original_agent.reserve(static_cast<size_t>(n));
  for (AgentId agent = 0; agent < n; ++agent) {
    if (model.is_certain(agent)) relabeling.to_original_agent.push_back(agent);
  }

  relabeling.to_original_item.resize(static_cast<size_t>(n));
  std::vector<ItemId> new_item(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const ItemId original = assignment.item_of(relabeling.to_original_agent[static_cast<size_t>(i)]);
    relabeling.to_original_item[static_cast<size_t>(i)] = original;
    new_item[static_cast<size_t>(original)] = i;
  }

  std::vector<std::vector<WeightedOrder>> preferences(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const AgentId original = relabeling.to_original_agent[static_cast<size_t>(i)];
    for (const WeightedOrder& entry : model.support_of(original)) {
      std::vector<ItemId> ranking;
      ranking.reserve(static_cast<size_t>(n));
      for (ItemId item : entry.order.ranking()) {
        ranking.push_back(new_item[static_cast<size_t>(item)]);
      }
      preferences[static_cast<size_t>(i)].push_back(
          {PreferenceOrder(std::move(ranking)), entry.prob});
    }
  }
  relabeling.model = LotteryModel{std::move(preferences)};
  return relabeling;
}

FptGraph build_fpt_graph(const LotteryModel& model, const Assignment& assignment) {
  require_same_instance(model.agent_count(), assignment, "build_fpt_graph");
  const int n = model.agent_count();
  for (AgentId agent = 0; agent < n; ++agent) {
    if (assignment.item_of(agent) != agent) {
      throw ValidationError("build_fpt_graph: assignment must be the identity");
    }
  }
  int k = 0;
  while (k < n && !model.is_certain(k)) ++k;
  for (AgentId agent = k; agent < n; ++agent) {
    if (!model.is_certain(agent)) {
      throw ValidationError("build_fpt_graph: uncertain agents must come first");
    }
  }
  if (k > ReachabilitySet::kMaxUncertain) {
    throw GuardError("build_fpt_graph: " + std::to_string(k) +
                     " uncertain agents exceeds the limit of " +
                     std::to_string(ReachabilitySet::kMaxUncertain));
  }
  if (certain_agents_have_cycle(model, k)) {
    throw ValidationError("build_fpt_graph: certain agents alone trade in a cycle");
  }

  const CommonDenominatorForm form = common_denominator_form(model);

  std::vector<std::vector<ItemId>> static_edges(static_cast<size_t>(n));
  for (ItemId item = k; item < n; ++item) {
    static_edges[static_cast<size_t>(item)] =
        preferred_prefix(model.support_of(item).front().order, item);
  }

  FptGraph graph;
  graph.uncertain_count = k;
  graph.denominator = form.denominator;
  graph.layer_states.resize(static_cast<size_t>(k) + 1);
  graph.transitions.resize(static_cast<size_t>(k));
  graph.layer_states.front().push_back(ReachabilitySet{k, 0});

  for (int layer = 0; layer < k; ++layer) {
    const std::vector<WeightedOrder>& support = model.support_of(layer);
    auto& states = graph.layer_states[static_cast<size_t>(layer)];
    auto& next_states = graph.layer_states[static_cast<size_t>(layer) + 1];
    auto& hops = graph.transitions[static_cast<size_t>(layer)];
    hops.resize(states.size());
    std::map<std::uint64_t, size_t> interned;
    for (size_t s = 0; s < states.size(); ++s) {
      for (size_t j = 0; j < support.size(); ++j) {
        const ReachabilitySet next =
            close_over(states[s], support[j].order, layer, k, static_edges);
        auto [slot, fresh] = interned.try_emplace(next.bits, next_states.size());
        if (fresh) next_states.push_back(next);
        hops[s].push_back({static_cast<int>(j),
                           form.numerators[static_cast<size_t>(layer)][j], slot->second});
      }
    }
  }

  graph.accepting.reserve(graph.layer_states.back().size());
  for (const ReachabilitySet& state : graph.layer_states.back()) {
    graph.accepting.push_back(state.has_diagonal() ? 0 : 1);
  }
  return graph;
}

BigInt fpt_walk_sum(const FptGraph& graph) {
  std::vector<BigInt> acc(graph.layer_states.front().size(), BigInt(0));
  acc.front() = 1;
  for (size_t layer = 0; layer < graph.transitions.size(); ++layer) {
    std::vector<BigInt> next(graph.layer_states[layer + 1].size(), BigInt(0));
    for (size_t s = 0; s < graph.transitions[layer].size(); ++s) {
      if (acc[s] == 0) continue;
      for (const FptTransition& hop : graph.transitions[layer][s]) {
        next[hop.next_state] += acc[s] * hop.weight;
      }
    }
    acc = std::move(next);
  }
  BigInt total = 0;
  for (size_t s = 0; s < acc.size(); ++s) {
    if (graph.accepting[s]) total += acc[s];
  }
  return total;
}

Rational po_probability_fpt(const LotteryModel& model, const Assignment& assignment) {
  require_same_instance(model.agent_count(), assignment, "po_probability_fpt");
  const int k = static_cast<int>(model.uncertain_agents().size());
  if (k > ReachabilitySet::kMaxUncertain) {
    throw GuardError("po_probability_fpt: " + std::to_string(k) +
                     " uncertain agents exceeds the limit of " +
                     std::to_string(ReachabilitySet::kMaxUncertain));
  }

  if (k == 0) {
    std::vector<PreferenceOrder> orders;
    orders.reserve(static_cast<size_t>(model.agent_count()));
    for (AgentId agent = 0; agent < model.agent_count(); ++agent) {
      orders.push_back(model.support_of(agent).front().order);
    }
    return is_pareto_optimal(Profile(std::move(orders)), assignment) ? Rational(1) : Rational(0);
  }

  const FptRelabeling relabeled = relabel_for_fpt(model, assignment);
  if (certain_agents_have_cycle(relabeled.model, k)) return 0;

  const FptGraph graph =
      build_fpt_graph(relabeled.model, Assignment::identity(model.agent_count()));
  return Rational(fpt_walk_sum(graph), bigint_pow(graph.denominator, k));
}

}  // namespace upareto
