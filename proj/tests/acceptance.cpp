// Release gate. Each criterion prints exactly one verdict line; the process
// exits nonzero when any of them fails. Reference values come from the
// definition-level oracles in support.hpp, never from the engines themselves.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "support.hpp"
#include "upareto/fpt.hpp"
#include "upareto/model.hpp"
#include "upareto/poly.hpp"
#include "upareto/prob.hpp"
#include "upareto/reductions.hpp"
#include "upareto/search.hpp"

using namespace upareto;
namespace ts = testsupport;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string seconds_text(double value) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << value << " s";
  return out.str();
}

struct Gate {
  int failures = 0;

  void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
    if (!detail.empty()) {
      std::cout << " (" << detail << ")";
    }
    std::cout << "\n";
    if (!pass) {
      ++failures;
    }
  }
};

// Random negation-free 2CNF with every variable covered.
Monotone2Sat random_m2sat(SeededRng& rng, int variable_count) {
  std::vector<std::pair<int, int>> pool;
  for (int i = 0; i < variable_count; ++i) {
    for (int j = i + 1; j < variable_count; ++j) {
      pool.emplace_back(i, j);
    }
  }
  rng.shuffle(pool);

  Monotone2Sat formula;
  formula.variable_count = variable_count;
  std::vector<char> covered(static_cast<size_t>(variable_count), 0);
  int missing = variable_count;
  for (const auto& clause : pool) {
    if (missing == 0 && rng.range(0, 2) != 0) {
      continue;
    }
    formula.clauses.push_back(clause);
    for (int v : {clause.first, clause.second}) {
      if (!covered[static_cast<size_t>(v)]) {
        covered[static_cast<size_t>(v)] = 1;
        --missing;
      }
    }
    if (missing == 0 && formula.clauses.size() >= 2) {
      break;
    }
  }
  return formula;
}

void criterion_1_golden_example(Gate& gate) {
  const auto start = Clock::now();
  const LotteryModel model = ts::example_lottery();
  const JointModel joint = expand_lottery_to_joint(model);
  bool pass = true;
  for (const auto& [assignment, expected] :
       {std::pair{Assignment::identity(3), Rational(1)},
        std::pair{Assignment({1, 0, 2}), Rational(2, 5)}}) {
    pass = pass && po_probability_joint(joint, assignment) == expected;
    pass = pass && po_probability_enum(model, assignment) == expected;
    pass = pass && po_probability_fpt(model, assignment) == expected;
    pass = pass && oracle_po_probability(model, assignment) == expected;
  }
  const double elapsed = seconds_since(start);
  gate.report(1, "golden example: 1/1 and 2/5 on all four engines", pass && elapsed < 1.0,
              seconds_text(elapsed));
}

// Criteria 2, 3, and 4 share one pass over the same 1000-instance suite.
void criteria_2_3_4_engine_suite(Gate& gate) {
  const auto start = Clock::now();
  const int instances = 1000;
  int agreement_failures = 0;
  int zero_one_failures = 0;
  int witness_failures = 0;
  std::int64_t witnesses = 0;

  for (std::uint64_t seed = 0; seed < static_cast<std::uint64_t>(instances); ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const int k = std::min(n, static_cast<int>(seed % 4));
    const int support = 2 + static_cast<int>(seed % 2);
    const LotteryModel model = ts::random_lottery(seed, n, k, support);
    SeededRng rng(seed ^ 0xa11ce);
    const Assignment p = ts::random_assignment(rng, n);

    const Rational expected = oracle_po_probability(model, p);
    const JointModel expanded = expand_lottery_to_joint(model);
    if (po_probability_enum(model, p) != expected || po_probability_fpt(model, p) != expected ||
        po_probability_joint(expanded, p) != expected) {
      ++agreement_failures;
    }

    const bool nonzero = is_po_probability_nonzero(model, p);
    const bool one = is_po_probability_one(model, p);
    if (nonzero != (expected > 0) || one != (expected == Rational(1))) {
      ++zero_one_failures;
    }
    if (joint_is_po_probability_nonzero(expanded, p) != (expected > 0) ||
        joint_is_po_probability_one(expanded, p) != (expected == Rational(1))) {
      ++zero_one_failures;
    }

    const auto canonical = po_nonzero_witness(model, p);
    const auto randomized = po_nonzero_witness_randomized(model, p, seed * 31 + 7);
    if (canonical.has_value() != nonzero || randomized.has_value() != nonzero) {
      ++witness_failures;
    }
    for (const auto& witness : {canonical, randomized}) {
      if (!witness.has_value()) {
        continue;
      }
      ++witnesses;
      if (serial_dictatorship(witness->realized_profile(model), witness->pick_order) != p) {
        ++witness_failures;
      }
    }
  }

  const double elapsed = seconds_since(start);
  gate.report(2, "four engines agree on 1000 seeded instances",
              agreement_failures == 0 && elapsed < 60.0,
              std::to_string(instances - agreement_failures) + "/" + std::to_string(instances) +
                  ", " + seconds_text(elapsed));
  gate.report(3, "zero/one decisions match the exact probability, joint variants included",
              zero_one_failures == 0, std::to_string(zero_one_failures) + " mismatches");
  gate.report(4, "every engaged witness replays the assignment", witness_failures == 0,
              std::to_string(witnesses) + " witnesses replayed");
}

void criterion_5_certain_domination(Gate& gate) {
  int failures = 0;
  const int instances = 240;
  for (std::uint64_t seed = 0; seed < static_cast<std::uint64_t>(instances); ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const int k = std::min(n, static_cast<int>(seed % 3));
    const LotteryModel model = ts::random_lottery(seed ^ 0xd0, n, k, 3);
    SeededRng rng(seed);
    const Assignment p = ts::random_assignment(rng, n);
    const bool dominated = certainly_dominated(model, p);
    if (dominated != ts::brute_certainly_dominated(model, p)) {
      ++failures;
    }
    if (dominated && oracle_po_probability(model, p) != Rational(0)) {
      ++failures;
    }
  }
  gate.report(5, "certain domination matches the assignment scan and forces probability zero",
              failures == 0, std::to_string(instances) + " instances");
}

void criterion_6_sdf_gadgets(Gate& gate) {
  int failures = 0;
  const int instances = 120;
  for (std::uint64_t seed = 0; seed < static_cast<std::uint64_t>(instances); ++seed) {
    SeededRng rng(seed ^ 0x5dF5);
    const int n = 2 + static_cast<int>(seed % 4);
    const Profile profile = ts::random_profile(rng, n);
    const SdfInstance instance{profile, rng.range(0, n - 1), rng.range(0, n - 1)};
    const bool feasible = brute_sdf(instance).has_value();

    const auto via_joint = exists_certainly_po(reduce_sdf_to_joint(instance));
    const auto via_lottery = exists_certainly_po(reduce_sdf_to_lottery(instance));
    if (via_joint.has_value() != feasible || via_lottery.has_value() != feasible) {
      ++failures;
      continue;
    }
    if (feasible && (via_joint->item_of(instance.agent) != instance.item ||
                     via_lottery->item_of(instance.agent) != instance.item)) {
      ++failures;
    }
  }
  gate.report(6, "both dictatorship gadgets decide feasibility and pass the item",
              failures == 0, std::to_string(instances) + " instances");
}

void criterion_7_counting_bridge(Gate& gate) {
  int failures = 0;
  const auto scaled_count = [](const Monotone2Sat& formula) {
    const auto [gadget, assignment] = reduce_m2sat_to_lottery(formula);
    return po_probability_enum(gadget, assignment) *
           Rational(bigint_pow(BigInt(2), formula.variable_count));
  };

  if (scaled_count(Monotone2Sat{2, {{0, 1}}}) != Rational(3)) {
    ++failures;
  }

  const int formulas = 60;
  for (std::uint64_t seed = 0; seed < static_cast<std::uint64_t>(formulas); ++seed) {
    SeededRng rng(seed ^ 0x2547);
    const Monotone2Sat formula = random_m2sat(rng, rng.range(2, 6));
    if (scaled_count(formula) != Rational(brute_sat_count(formula))) {
      ++failures;
    }
  }
  gate.report(7, "2^n times the gadget probability counts the satisfying assignments",
              failures == 0, std::to_string(formulas) + " formulas plus the hand case");
}

void criterion_8_search_optimality(Gate& gate) {
  int failures = 0;
  const int instances = 120;
  for (std::uint64_t seed = 0; seed < static_cast<std::uint64_t>(instances); ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);

    Rational max(0);
    bool exists = false;
    Rational best_probability;
    if (seed % 2 == 0) {
      const LotteryModel model =
          ts::random_lottery(seed ^ 0xbe57, n, std::min(n, static_cast<int>(seed % 3)), 3);
      for (const auto& q : ts::all_assignments(n)) {
        max = std::max(max, oracle_po_probability(model, q));
      }
      best_probability = best_assignment(model).probability;
      exists = exists_certainly_po(model).has_value();
    } else {
      const JointModel model = ts::random_joint(seed ^ 0xbe57, n, 1 + static_cast<int>(seed % 4));
      for (const auto& q : ts::all_assignments(n)) {
        max = std::max(max, oracle_po_probability(model, q));
      }
      best_probability = best_assignment(model).probability;
      exists = exists_certainly_po(model).has_value();
    }

    if (best_probability != max || exists != (max == Rational(1))) {
      ++failures;
    }
  }
  gate.report(8, "best assignment attains the exhaustive maximum; certain search agrees",
              failures == 0, std::to_string(instances) + " instances, lottery and joint");
}

// Listed items first, every remaining item ascending after them.
PreferenceOrder padded_order(const std::vector<ItemId>& head, int n) {
  std::vector<ItemId> ranking = head;
  std::vector<char> used(static_cast<size_t>(n), 0);
  for (ItemId item : head) {
    used[static_cast<size_t>(item)] = 1;
  }
  for (ItemId item = 0; item < n; ++item) {
    if (!used[static_cast<size_t>(item)]) {
      ranking.push_back(item);
    }
  }
  return PreferenceOrder(std::move(ranking));
}

void criterion_9_fpt_scaling(Gate& gate) {
  // 3 uncertain agents in front of 37 certain ones. Certain agent i wants the
  // certain items 3..i-1 above its own, so trades wander deep into the padding
  // but never return to the uncertain block; the only possible cycle is
  // 0 -> 1 -> 2 -> 0, realized when all three agents draw their second order:
  // the probability is 1 - (2/3)(1/2)(3/4) = 3/4 regardless of the padding.
  const int n = 40;
  const int k = 3;
  LotteryModel model;
  model.preferences.resize(static_cast<size_t>(n));

  model.preferences[0] = {{padded_order({0, 1, 2}, n), Rational(1, 3)},
                          {padded_order({1, 17, 0, 2}, n), Rational(2, 3)}};
  model.preferences[1] = {{padded_order({1, 0, 2}, n), Rational(1, 2)},
                          {padded_order({2, 25, 1, 0}, n), Rational(1, 2)}};
  model.preferences[2] = {{padded_order({2, 0, 1}, n), Rational(1, 4)},
                          {padded_order({0, 30, 2, 1}, n), Rational(3, 4)}};
  for (AgentId a = k; a < n; ++a) {
    std::vector<ItemId> head;
    for (ItemId item = 3; item <= a; ++item) {
      head.push_back(item);
    }
    model.preferences[static_cast<size_t>(a)] = {{padded_order(head, n), Rational(1)}};
  }
  require_valid(model);

  const auto start = Clock::now();
  const Rational via_fpt = po_probability_fpt(model, Assignment::identity(n));
  const double elapsed = seconds_since(start);

  // the certain agents contribute no branching: 8 realizations total
  const Rational via_enum = po_probability_enum(model, Assignment::identity(n));
  gate.report(9, "40 agents with 3 uncertain stay fast on the walk-sum engine",
              via_fpt == via_enum && via_fpt == Rational(3, 4) && elapsed < 5.0,
              seconds_text(elapsed) + ", probability " + fraction_string(via_fpt));
}

void criterion_10_po_characterization(Gate& gate) {
  int failures = 0;
  const int profiles = 120;
  for (std::uint64_t seed = 0; seed < static_cast<std::uint64_t>(profiles); ++seed) {
    SeededRng rng(seed ^ 0xfac7);
    const int n = 2 + static_cast<int>(seed % 4);
    const Profile profile = ts::random_profile(rng, n);

    std::set<Assignment> filtered;
    for (const auto& p : ts::all_assignments(n)) {
      if (is_pareto_optimal(profile, p)) {
        filtered.insert(p);
      }
    }
    const auto outcomes = enumerate_po_assignments(profile);
    if (std::set<Assignment>(outcomes.begin(), outcomes.end()) != filtered) {
      ++failures;
    }
  }
  gate.report(10, "cycle-free filter equals the deduplicated dictatorship outcomes",
              failures == 0, std::to_string(profiles) + " profiles");
}

}  // namespace

int main() {
  Gate gate;
  criterion_1_golden_example(gate);
  criteria_2_3_4_engine_suite(gate);
  criterion_5_certain_domination(gate);
  criterion_6_sdf_gadgets(gate);
  criterion_7_counting_bridge(gate);
  criterion_8_search_optimality(gate);
  criterion_9_fpt_scaling(gate);
  criterion_10_po_characterization(gate);

  if (gate.failures != 0) {
    std::cout << gate.failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
