#pragma once

#include <vector>

#include "upareto/model.hpp"
#include "upareto/rational.hpp"
#include "upareto/types.hpp"
#include "upareto/uncertainty.hpp"

namespace upareto {

// Probability that `assignment` is Pareto optimal under the joint model:
// the sum of probabilities of support profiles in which it is.
Rational po_probability_joint(const JointModel& model, const Assignment& assignment);

// Probability that `assignment` is Pareto optimal under the lottery model,
// computed by enumerating order combinations of the uncertain agents only.
// The number of realizable profiles must not exceed `max_profiles`.
Rational po_probability_enum(const LotteryModel& model, const Assignment& assignment,
                             std::int64_t max_profiles = kDefaultExpansionGuard);

// Reference implementations used to cross-check the engines above.  They
// decide Pareto optimality straight from the definition (search for a
// dominating assignment) instead of via trading cycles, and enumerate the
// probability space on their own.  Limited to small instances.
Rational oracle_po_probability(const LotteryModel& model, const Assignment& assignment,
                               int max_agents = kDefaultEnumerationMaxAgents);
Rational oracle_po_probability(const JointModel& model, const Assignment& assignment,
                               int max_agents = kDefaultEnumerationMaxAgents);

// A lottery model with every probability rewritten over one denominator.
// `denominator` is the lcm of the reduced denominators appearing at the
// uncertain agents; certain agents keep a single numerator equal to it.
struct CommonDenominatorForm {
  BigInt denominator;
  std::vector<std::vector<BigInt>> numerators;
};

CommonDenominatorForm common_denominator_form(const LotteryModel& model);

}  // namespace upareto
