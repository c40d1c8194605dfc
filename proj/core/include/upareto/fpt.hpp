#pragma once

#include <cstdint>
#include <vector>

#include "upareto/rational.hpp"
#include "upareto/types.hpp"
#include "upareto/uncertainty.hpp"

namespace upareto {

// Ordered pairs over the uncertain agents' items, packed as a k*k bit matrix.
// Pair (a, b) records a nonempty trading path from item a to item b. k is
// capped so the matrix fits one 64-bit word.
struct ReachabilitySet {
  static constexpr int kMaxUncertain = 8;

  int k = 0;
  std::uint64_t bits = 0;

  bool contains(int a, int b) const { return ((bits >> (a * k + b)) & 1u) != 0; }
  void insert(int a, int b) { bits |= std::uint64_t{1} << (a * k + b); }
  bool has_diagonal() const;
  bool subset_of(const ReachabilitySet& other) const { return (bits & ~other.bits) == 0; }

  bool operator==(const ReachabilitySet&) const = default;
};

// Renumbering that puts the uncertain agents first and turns the assignment
// under scrutiny into the identity, so relabeled agent i holds item i.
struct FptRelabeling {
  std::vector<AgentId> to_original_agent;
  std::vector<ItemId> to_original_item;
  LotteryModel model;
};

FptRelabeling relabel_for_fpt(const LotteryModel& model, const Assignment& assignment);

// One hop of the layered walk graph: agent i commits its order_index-th
// support order (probability weight/d) and the reachability set closes over
// the new trading edges, landing on state next_state of layer i+1.
struct FptTransition {
  int order_index;
  BigInt weight;
  std::size_t next_state;
};

// Layered walk graph. layer_states[i] holds the reachability sets realizable
// once agents 0..i-1 committed an order; an implicit source feeds the empty
// set at layer 0 and an implicit sink collects the accepting final states
// (those without a diagonal pair, i.e. without a realized trading cycle).
struct FptGraph {
  int uncertain_count = 0;
  BigInt denominator = 1;
  std::vector<std::vector<ReachabilitySet>> layer_states;
  std::vector<std::vector<std::vector<FptTransition>>> transitions;
  std::vector<char> accepting;

  // Source, sink, layer states, and one implicit vertex per transition for
  // the committed-order stopover it passes through.
  std::int64_t vertex_count() const;
};

// `model` must already be relabeled (uncertain agents first) and `assignment`
// must be the identity. Throws ValidationError when that does not hold or
// when the certain agents alone admit a trading cycle.
FptGraph build_fpt_graph(const LotteryModel& model, const Assignment& assignment);

// Weighted sum over all source-to-sink walks: weights multiply along a walk,
// walks add. Equals po_probability * denominator^uncertain_count.
BigInt fpt_walk_sum(const FptGraph& graph);

// PO probability in time exponential only in the number of uncertain agents:
// relabel, filter out assignments already beaten by the certain agents alone,
// then run the layered-graph walk sum. Requires at most
// ReachabilitySet::kMaxUncertain uncertain agents.
Rational po_probability_fpt(const LotteryModel& model, const Assignment& assignment);

}  // namespace upareto
