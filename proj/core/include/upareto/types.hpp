#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace upareto {

/// Domain error: malformed or inconsistent inputs (dimension mismatches,
/// invalid orders, model violations surfaced as exceptions).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration guard was exceeded (instance too large for the requested
/// exhaustive computation).
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Agents and items are dense indices in [0, n). n agents always face exactly
// n items; names live only at the I/O layer.
using AgentId = int;
using ItemId = int;

/// A strict total order over all n items, most preferred first.
class PreferenceOrder {
 public:
  PreferenceOrder() = default;

  /// ranking must be a permutation of 0..n-1.
  explicit PreferenceOrder(std::vector<ItemId> ranking);

  int item_count() const { return static_cast<int>(ranking_.size()); }
  const std::vector<ItemId>& ranking() const { return ranking_; }

  /// Position of an item, 0 = most preferred.
  int rank_of(ItemId item) const { return rank_[static_cast<size_t>(item)]; }

  /// True iff a is strictly preferred to b.
  bool prefers(ItemId a, ItemId b) const { return rank_of(a) < rank_of(b); }

  ItemId top() const { return ranking_.front(); }

  bool operator==(const PreferenceOrder& other) const { return ranking_ == other.ranking_; }
  std::strong_ordering operator<=>(const PreferenceOrder& other) const {
    return ranking_ <=> other.ranking_;
  }

 private:
  std::vector<ItemId> ranking_;
  std::vector<int> rank_;  // item -> position in ranking_
};

/// One preference order per agent, all over the same item set.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<PreferenceOrder> orders);

  int agent_count() const { return static_cast<int>(orders_.size()); }
  const PreferenceOrder& order(AgentId agent) const { return orders_[static_cast<size_t>(agent)]; }
  const std::vector<PreferenceOrder>& orders() const { return orders_; }

  bool operator==(const Profile& other) const { return orders_ == other.orders_; }
  std::strong_ordering operator<=>(const Profile& other) const {
    return orders_ <=> other.orders_;
  }

 private:
  std::vector<PreferenceOrder> orders_;
};

/// A discrete assignment: a bijection agents -> items.
class Assignment {
 public:
  Assignment() = default;

  /// allocation[agent] = item; must be a bijection.
  explicit Assignment(std::vector<ItemId> allocation);

  static Assignment identity(int n);

  int agent_count() const { return static_cast<int>(allocation_.size()); }
  ItemId item_of(AgentId agent) const { return allocation_[static_cast<size_t>(agent)]; }
  AgentId holder_of(ItemId item) const { return holder_[static_cast<size_t>(item)]; }
  const std::vector<ItemId>& allocation() const { return allocation_; }

  bool operator==(const Assignment& other) const { return allocation_ == other.allocation_; }
  std::strong_ordering operator<=>(const Assignment& other) const {
    return allocation_ <=> other.allocation_;
  }

 private:
  std::vector<ItemId> allocation_;
  std::vector<AgentId> holder_;  // inverse map
};

/// A pick order over all agents (for serial dictatorship).
class Permutation {
 public:
  Permutation() = default;

  /// order must be a permutation of 0..n-1.
  explicit Permutation(std::vector<AgentId> order);

  static Permutation identity(int n);

  int agent_count() const { return static_cast<int>(order_.size()); }
  AgentId at(int position) const { return order_[static_cast<size_t>(position)]; }
  const std::vector<AgentId>& order() const { return order_; }

  bool operator==(const Permutation& other) const { return order_ == other.order_; }

 private:
  std::vector<AgentId> order_;
};

/// One step of a trading cycle: the agent, the item it holds, and the
/// strictly preferred item it points to (held by the next entry's agent).
struct TradingCycleEntry {
  AgentId agent;
  ItemId held_item;
  ItemId wants_item;

  bool operator==(const TradingCycleEntry&) const = default;
};

/// A cyclic sequence of envious agents; implementing the trade yields a
/// Pareto improvement.
struct TradingCycle {
  std::vector<TradingCycleEntry> entries;

  bool operator==(const TradingCycle&) const = default;
};

namespace detail {
// Shared by the constructors above: verifies values is a permutation of
// 0..n-1 and returns the inverse map.
std::vector<int> checked_inverse(const std::vector<int>& values, const char* what);
}  // namespace detail

}  // namespace upareto
