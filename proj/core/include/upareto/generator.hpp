#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "upareto/io.hpp"

namespace upareto {

// Deterministic across platforms: the engine's output is pinned by the
// standard, and the draws below avoid the implementation-defined standard
// distributions on purpose.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi], inclusive.
  int range(int lo, int hi);

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct GeneratorConfig {
  int agent_count = 4;
  int uncertain_count = 1;
  int support_size = 2;       // most orders an uncertain agent may get
  std::uint64_t seed = 0;
  bool joint = false;
  int joint_support = 2;      // most profiles for the joint kind
};

// Deterministic function of the config; the result always validates.
// Agents are named "1".."n", items "o1".."on"; the uncertain agents are a
// random subset, their support sizes random in [2, support_size], and all
// probabilities random positive rationals summing to one. Support and
// profile counts are clipped to the distinct orders n items allow.
InstanceDocument generate_instance(const GeneratorConfig& config);

}  // namespace upareto
