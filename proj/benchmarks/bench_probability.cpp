#include <benchmark/benchmark.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "upareto/fpt.hpp"
#include "upareto/generator.hpp"
#include "upareto/model.hpp"
#include "upareto/prob.hpp"
#include "upareto/search.hpp"

namespace {

using namespace upareto;

Profile random_profile(SeededRng& rng, int n) {
  std::vector<PreferenceOrder> orders;
  orders.reserve(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::vector<ItemId> ranking(static_cast<size_t>(n));
    std::iota(ranking.begin(), ranking.end(), 0);
    rng.shuffle(ranking);
    orders.push_back(PreferenceOrder(std::move(ranking)));
  }
  return Profile(std::move(orders));
}

Assignment random_assignment(SeededRng& rng, int n) {
  std::vector<ItemId> allocation(static_cast<size_t>(n));
  std::iota(allocation.begin(), allocation.end(), 0);
  rng.shuffle(allocation);
  return Assignment(std::move(allocation));
}

LotteryModel lottery_instance(int n, int k, std::uint64_t seed) {
  GeneratorConfig config;
  config.agent_count = n;
  config.uncertain_count = k;
  config.support_size = 2;
  config.seed = seed;
  return generate_instance(config).lottery();
}

void BM_FindTradingCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SeededRng rng(7);
  const Profile profile = random_profile(rng, n);
  const Assignment assignment = random_assignment(rng, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_trading_cycle(profile, assignment));
  }
}
BENCHMARK(BM_FindTradingCycle)->Arg(8)->Arg(32)->Arg(128)->Arg(512);

void BM_SerialDictatorship(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SeededRng rng(11);
  const Profile profile = random_profile(rng, n);
  std::vector<AgentId> pick(static_cast<size_t>(n));
  std::iota(pick.begin(), pick.end(), 0);
  rng.shuffle(pick);
  const Permutation order(pick);
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial_dictatorship(profile, order));
  }
}
BENCHMARK(BM_SerialDictatorship)->Arg(8)->Arg(32)->Arg(128)->Arg(512);

// The two exact engines over a growing uncertain block: enumeration doubles
// per extra agent, the walk sum only grows with the state space.
void BM_ProbabilityEnum(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const LotteryModel model = lottery_instance(16, k, 1234);
  SeededRng rng(99);
  const Assignment assignment = random_assignment(rng, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(po_probability_enum(model, assignment));
  }
}
BENCHMARK(BM_ProbabilityEnum)->DenseRange(1, 6);

void BM_ProbabilityFpt(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const LotteryModel model = lottery_instance(16, k, 1234);
  SeededRng rng(99);
  const Assignment assignment = random_assignment(rng, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(po_probability_fpt(model, assignment));
  }
}
BENCHMARK(BM_ProbabilityFpt)->DenseRange(1, 6);

void BM_ExpandLottery(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const LotteryModel model = lottery_instance(10, k, 77);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand_lottery_to_joint(model));
  }
}
BENCHMARK(BM_ExpandLottery)->DenseRange(1, 6);

void BM_BestAssignment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LotteryModel model = lottery_instance(n, 2, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_assignment(model));
  }
}
BENCHMARK(BM_BestAssignment)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();
