#include <cstdint>
#include <string>

#include "doctest.h"
#include "support.hpp"
#include "upareto/generator.hpp"
#include "upareto/io.hpp"

using namespace upareto;
namespace ts = testsupport;

namespace {

const char* kLotteryText = R"({
  "model": "lottery",
  "agents": ["1", "2", "3"],
  "items": ["a", "b", "c"],
  "preferences": {
    "1": [
      {"order": ["a", "b", "c"], "prob": "0.6"},
      {"order": ["b", "a", "c"], "prob": "2/5"}
    ],
    "2": [{"order": ["b", "a", "c"], "prob": "1"}],
    "3": [{"order": ["c", "b", "a"], "prob": "1"}]
  }
})";

const char* kJointText = R"({
  "model": "joint",
  "agents": ["x", "y"],
  "items": ["p", "q"],
  "profiles": [
    {"prob": "1/2", "orders": {"x": ["p", "q"], "y": ["p", "q"]}},
    {"prob": "1/2", "orders": {"x": ["q", "p"], "y": ["p", "q"]}}
  ]
})";

}  // namespace

TEST_SUITE("io") {

TEST_CASE("lottery instances parse with decimal and fraction probabilities") {
  const InstanceDocument document = parse_instance(kLotteryText);
  REQUIRE(document.is_lottery());
  CHECK(document.agent_names == std::vector<std::string>{"1", "2", "3"});
  CHECK(document.item_names == std::vector<std::string>{"a", "b", "c"});
  CHECK(document.lottery() == ts::example_lottery());
}

TEST_CASE("joint instances parse") {
  const InstanceDocument document = parse_instance(kJointText);
  REQUIRE_FALSE(document.is_lottery());
  REQUIRE(document.joint().support.size() == 2);
  CHECK(document.joint().support[0].profile.order(0) == ts::order_of({0, 1}));
  CHECK(document.joint().support[1].profile.order(0) == ts::order_of({1, 0}));
  CHECK(document.joint().support[0].prob == Rational(1, 2));
}

TEST_CASE("serialization round trips and is canonical") {
  const InstanceDocument document = parse_instance(kLotteryText);
  const std::string canonical = serialize_instance(document);
  CHECK(canonical.find("\"prob\": \"3/5\"") != std::string::npos);  // decimals normalize
  const InstanceDocument reparsed = parse_instance(canonical);
  CHECK(reparsed.lottery() == document.lottery());
  CHECK(reparsed.agent_names == document.agent_names);
  CHECK(serialize_instance(reparsed) == canonical);

  const InstanceDocument joint = parse_instance(kJointText);
  CHECK(parse_instance(serialize_instance(joint)).joint() == joint.joint());
}

TEST_CASE("generated instances survive the round trip") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GeneratorConfig config;
    config.agent_count = 5;
    config.uncertain_count = 2;
    config.support_size = 3;
    config.seed = seed;
    config.joint = seed % 2 == 1;
    const InstanceDocument document = generate_instance(config);
    const std::string text = serialize_instance(document);
    CAPTURE(seed);
    CHECK(serialize_instance(parse_instance(text)) == text);
  }
}

TEST_CASE("instance defects carry a location") {
  auto message_of = [](const std::string& text) {
    try {
      parse_instance(text);
      return std::string();
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
  };

  CHECK(message_of("{") .find("malformed JSON") != std::string::npos);
  CHECK(message_of(R"([1, 2])").find("top level") != std::string::npos);
  CHECK(message_of(R"({"model": "market"})").find("'lottery' or 'joint'") != std::string::npos);
  CHECK(message_of(R"({"model": "lottery", "agents": ["1"], "items": ["a"], "woops": 1,
                      "preferences": {}})")
            .find("unknown key 'woops'") != std::string::npos);
  CHECK(message_of(R"({"model": "lottery", "agents": ["1", "1"], "items": ["a", "b"],
                      "preferences": {}})")
            .find("duplicate name '1'") != std::string::npos);
  CHECK(message_of(R"({"model": "lottery", "agents": ["1", "2"], "items": ["a"],
                      "preferences": {}})")
            .find("same count") != std::string::npos);

  // non-permutation order
  CHECK(message_of(R"({"model": "lottery", "agents": ["1"], "items": ["a"],
                      "preferences": {"1": [{"order": ["a", "a"], "prob": "1"}]}})")
            .find("preferences, agent '1'") != std::string::npos);
  // unknown item name
  CHECK(message_of(R"({"model": "lottery", "agents": ["1"], "items": ["a"],
                      "preferences": {"1": [{"order": ["zz"], "prob": "1"}]}})")
            .find("unknown item 'zz'") != std::string::npos);
  // numeric probability literal
  CHECK(message_of(R"({"model": "lottery", "agents": ["1"], "items": ["a"],
                      "preferences": {"1": [{"order": ["a"], "prob": 0.5}]}})")
            .find("prob must be a string") != std::string::npos);
  // probabilities that do not sum to one
  CHECK(message_of(R"({"model": "lottery", "agents": ["1"], "items": ["a"],
                      "preferences": {"1": [{"order": ["a"], "prob": "1/3"}]}})")
            .find("sum") != std::string::npos);
  // agent listed twice in a joint profile
  CHECK(message_of(R"({"model": "joint", "agents": ["1"], "items": ["a"],
                      "profiles": [{"prob": "1", "orders": {"1": ["a"], "2": ["a"]}}]})")
            .find("unknown agent '2'") != std::string::npos);
  CHECK(message_of(R"({"model": "joint", "agents": ["1"], "items": ["a"], "profiles": []})")
            .find("empty") != std::string::npos);
}

TEST_CASE("assignments parse from json and from compact text") {
  const InstanceDocument document = parse_instance(kLotteryText);
  const Assignment expected({1, 0, 2});
  CHECK(parse_assignment(R"({"1": "b", "2": "a", "3": "c"})", document) == expected);
  CHECK(parse_assignment("1=b,2=a,3=c", document) == expected);
  CHECK(parse_assignment(" 1 = b , 2 = a , 3 = c ", document) == expected);

  CHECK_THROWS_AS(parse_assignment("1=b,2=a", document), ValidationError);
  CHECK_THROWS_AS(parse_assignment("1=b,1=a,3=c", document), ValidationError);
  CHECK_THROWS_AS(parse_assignment("1=b,2=b,3=c", document), ValidationError);
  CHECK_THROWS_AS(parse_assignment("1=zz,2=a,3=c", document), ValidationError);
  CHECK_THROWS_AS(parse_assignment("garbage", document), ValidationError);
}

TEST_CASE("serialized assignments ride along and parse back") {
  const InstanceDocument document = parse_instance(kLotteryText);
  const std::string with_assignment = serialize_instance(document, Assignment({1, 0, 2}));
  CHECK(with_assignment.find("\"assignment\"") != std::string::npos);
  const InstanceDocument reparsed = parse_instance(with_assignment);
  CHECK(reparsed.lottery() == document.lottery());

  // The whole document doubles as assignment input, so results round-trip
  // without extracting the key by hand.
  CHECK(parse_assignment(with_assignment, document) == Assignment({1, 0, 2}));
}

TEST_CASE("dictatorship feasibility documents parse") {
  const char* text = R"({
    "agents": ["1", "2"],
    "items": ["a", "b"],
    "profile": {"1": ["a", "b"], "2": ["a", "b"]},
    "agent": "2",
    "item": "a"
  })";
  const SdfDocument document = parse_sdf(text);
  CHECK(document.instance.agent == 1);
  CHECK(document.instance.item == 0);
  CHECK(document.instance.profile.order(0) == ts::order_of({0, 1}));

  CHECK_THROWS_AS(parse_sdf(R"({"agents": ["1"], "items": ["a"]})"), ValidationError);
  CHECK_THROWS_AS(parse_sdf(R"({"agents": ["1"], "items": ["a"], "profile": {"1": ["a"]},
                               "agent": "1", "item": "a", "extra": 0})"),
                  ValidationError);
}

TEST_CASE("formula text parses with comments and validates counts") {
  const char* text =
      "c cover both variables\n"
      "p m2sat 3 2\n"
      "1 2\n"
      "\n"
      "2 3\n";
  const Monotone2Sat formula = parse_m2sat(text);
  CHECK(formula.variable_count == 3);
  REQUIRE(formula.clauses.size() == 2);
  CHECK(formula.clauses[0] == std::pair{0, 1});  // stored 0-based
  CHECK(formula.clauses[1] == std::pair{1, 2});

  CHECK_THROWS_AS(parse_m2sat("1 2\n"), ValidationError);                 // clause before header
  CHECK_THROWS_AS(parse_m2sat("p m2sat 2\n1 2\n"), ValidationError);      // short header
  CHECK_THROWS_AS(parse_m2sat("p m2sat 2 1 9\n1 2\n"), ValidationError);  // trailing token
  CHECK_THROWS_AS(parse_m2sat("p m2sat 2 2\n1 2\n"), ValidationError);    // count mismatch
  CHECK_THROWS_AS(parse_m2sat("p m2sat 2 1\n0 1\n"), ValidationError);    // 1-based indices
  CHECK_THROWS_AS(parse_m2sat("p m2sat 2 1\n1 1\n"), ValidationError);    // self pair
  CHECK_THROWS_AS(parse_m2sat("p m2sat 3 1\n1 2\n"), ValidationError);    // variable 3 uncovered
}

TEST_CASE("result documents") {
  const InstanceDocument document = parse_instance(kLotteryText);

  CHECK(serialize_probability_result(Rational(2, 5)) == "{\n  \"probability\": \"2/5\"\n}\n");
  CHECK(serialize_check_result("one", true).find("\"answer\": true") != std::string::npos);

  const auto witness = po_nonzero_witness(document.lottery(), Assignment({1, 0, 2}));
  REQUIRE(witness.has_value());
  const std::string nonzero = serialize_nonzero_result(true, witness, document.lottery(), document);
  CHECK(nonzero.find("\"witness\"") != std::string::npos);
  CHECK(nonzero.find("\"permutation\"") != std::string::npos);
  CHECK(nonzero.find("\"orders\"") != std::string::npos);

  const std::string missing = serialize_solve_certain_result(std::nullopt, document);
  CHECK(missing.find("\"assignment\": null") != std::string::npos);
  CHECK(missing.find("no certainly-PO assignment") != std::string::npos);

  const std::string found =
      serialize_solve_certain_result(Assignment::identity(3), document);
  CHECK(found.find("\"a\"") != std::string::npos);

  const std::string best = serialize_solve_best_result(Assignment({1, 0, 2}), Rational(2, 5), document);
  CHECK(best.find("\"probability\": \"2/5\"") != std::string::npos);
}

}  // TEST_SUITE
