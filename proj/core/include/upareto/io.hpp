#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "upareto/poly.hpp"
#include "upareto/rational.hpp"
#include "upareto/reductions.hpp"
#include "upareto/types.hpp"
#include "upareto/uncertainty.hpp"

namespace upareto {

// A validated model together with the agent and item names of its serialized
// form. Indices into the model are positions in the name lists.
struct InstanceDocument {
  std::vector<std::string> agent_names;
  std::vector<std::string> item_names;
  std::variant<LotteryModel, JointModel> model;

  bool is_lottery() const { return std::holds_alternative<LotteryModel>(model); }
  const LotteryModel& lottery() const { return std::get<LotteryModel>(model); }
  const JointModel& joint() const { return std::get<JointModel>(model); }
  int agent_count() const { return static_cast<int>(agent_names.size()); }
};

// JSON with top-level keys model ("lottery" | "joint"), agents, items, and
// either preferences (agent name -> list of {order, prob}) or profiles
// (list of {prob, orders}). Probabilities read as fractions or exact
// decimals. Throws ValidationError with a location on any defect.
InstanceDocument parse_instance(const std::string& text);

// Canonical form: fixed key order, probabilities as reduced fractions,
// two-space indent. With `assignment` set, a top-level agent name -> item
// name map is appended (parse_instance accepts and ignores it).
std::string serialize_instance(const InstanceDocument& document,
                               const std::optional<Assignment>& assignment = std::nullopt);

// Serial-dictatorship feasibility question: a certain profile plus the
// target agent/item pair, JSON keys agents, items, profile, agent, item.
struct SdfDocument {
  std::vector<std::string> agent_names;
  std::vector<std::string> item_names;
  SdfInstance instance;
};

SdfDocument parse_sdf(const std::string& text);

// Text format: optional "c ..." comment lines, a header "p m2sat <n> <m>",
// then m lines "i j" with 1-based variable indices.
Monotone2Sat parse_m2sat(const std::string& text);

// Either inline "1=a,2=b,3=c" or a JSON object {"1": "a", ...}; names are
// resolved against the document. A full instance document works too when it
// carries an "assignment" object, so serialized results round-trip directly.
Assignment parse_assignment(const std::string& text, const InstanceDocument& document);

// Result documents, one JSON object per answer.
std::string serialize_probability_result(const Rational& probability);
std::string serialize_check_result(const std::string& question, bool answer);
std::string serialize_nonzero_result(bool answer, const std::optional<SdWitness>& witness,
                                     const LotteryModel& model,
                                     const InstanceDocument& document);
std::string serialize_solve_certain_result(const std::optional<Assignment>& assignment,
                                           const InstanceDocument& document);
std::string serialize_solve_best_result(const Assignment& assignment,
                                        const Rational& probability,
                                        const InstanceDocument& document);

}  // namespace upareto
