#include "upareto/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "upareto/fpt.hpp"
#include "upareto/generator.hpp"
#include "upareto/io.hpp"
#include "upareto/model.hpp"
#include "upareto/poly.hpp"
#include "upareto/prob.hpp"
#include "upareto/reductions.hpp"
#include "upareto/search.hpp"

namespace upareto {

namespace {

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool starts_inline_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

std::string load_instance_text(const std::string& arg) {
  return starts_inline_json(arg) ? arg : slurp(arg);
}

std::string load_m2sat_text(const std::string& arg) {
  if (arg.rfind("p ", 0) == 0 || arg.rfind("c ", 0) == 0 ||
      arg.find('\n') != std::string::npos) {
    return arg;
  }
  return slurp(arg);
}

std::string load_assignment_text(const std::string& arg) {
  if (starts_inline_json(arg) || arg.find('=') != std::string::npos) return arg;
  return slurp(arg);
}

std::int64_t enumeration_guard() {
  const char* raw = std::getenv("PO_GUARD_MAX");
  if (raw == nullptr) return kDefaultExpansionGuard;
  const std::string text(raw);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("PO_GUARD_MAX must be a positive integer, got '" + text + "'");
  }
  std::int64_t value = 0;
  try {
    value = std::stoll(text);
  } catch (const std::exception&) {
    throw UsageError("PO_GUARD_MAX out of range: '" + text + "'");
  }
  if (value < 1) throw UsageError("PO_GUARD_MAX must be positive");
  return value;
}

Profile certain_profile(const LotteryModel& model) {
  std::vector<PreferenceOrder> orders;
  orders.reserve(static_cast<size_t>(model.agent_count()));
  for (AgentId agent = 0; agent < model.agent_count(); ++agent) {
    orders.push_back(model.support_of(agent).front().order);
  }
  return Profile(std::move(orders));
}

void run_check(const InstanceDocument& document, const Assignment& assignment,
               const std::string& question, std::ostream& out) {
  if (question == "nonzero") {
    if (document.is_lottery()) {
      const auto witness = po_nonzero_witness(document.lottery(), assignment);
      out << serialize_nonzero_result(witness.has_value(), witness, document.lottery(),
                                      document);
    } else {
      out << serialize_check_result("nonzero",
                                    joint_is_po_probability_nonzero(document.joint(), assignment));
    }
    return;
  }
  if (question == "one") {
    const bool answer = document.is_lottery()
                            ? is_po_probability_one(document.lottery(), assignment)
                            : joint_is_po_probability_one(document.joint(), assignment);
    out << serialize_check_result("one", answer);
    return;
  }
  if (question == "dominated") {
    if (!document.is_lottery()) {
      throw ValidationError("question 'dominated' needs a lottery instance");
    }
    out << serialize_check_result("dominated",
                                  certainly_dominated(document.lottery(), assignment));
    return;
  }
  // question == "po"
  Profile profile = [&] {
    if (document.is_lottery()) {
      if (document.lottery().realizable_profile_count() != 1) {
        throw ValidationError("question 'po' needs a fully certain instance");
      }
      return certain_profile(document.lottery());
    }
    if (document.joint().support.size() != 1) {
      throw ValidationError("question 'po' needs a fully certain instance");
    }
    return document.joint().support.front().profile;
  }();
  out << serialize_check_result("po", is_pareto_optimal(profile, assignment));
}

void run_prob(const InstanceDocument& document, const Assignment& assignment,
              std::string engine, std::ostream& out) {
  const std::int64_t guard = enumeration_guard();
  Rational probability;
  if (document.is_lottery()) {
    const LotteryModel& model = document.lottery();
    if (engine == "auto") {
      if (model.uncertain_agents().size() <= 4) {
        engine = "fpt";
      } else if (model.realizable_profile_count(guard) <= guard) {
        engine = "enum";
      } else {
        throw ValidationError(
            "instance too large for exact enumeration; raise PO_GUARD_MAX or reduce the "
            "support");
      }
    }
    if (engine == "joint") {
      probability = po_probability_joint(expand_lottery_to_joint(model, guard), assignment);
    } else if (engine == "enum") {
      probability = po_probability_enum(model, assignment, guard);
    } else if (engine == "fpt") {
      probability = po_probability_fpt(model, assignment);
    } else {
      probability = oracle_po_probability(model, assignment);
    }
  } else {
    if (engine == "enum" || engine == "fpt") {
      throw ValidationError("engine '" + engine + "' needs a lottery instance");
    }
    probability = engine == "oracle" ? oracle_po_probability(document.joint(), assignment)
                                     : po_probability_joint(document.joint(), assignment);
  }
  out << serialize_probability_result(probability);
}

void run_solve(const InstanceDocument& document, const std::string& goal, std::ostream& out) {
  if (goal == "certain") {
    const auto assignment = document.is_lottery() ? exists_certainly_po(document.lottery())
                                                  : exists_certainly_po(document.joint());
    out << serialize_solve_certain_result(assignment, document);
    return;
  }
  const BestAssignment best = document.is_lottery() ? best_assignment(document.lottery())
                                                    : best_assignment(document.joint());
  out << serialize_solve_best_result(best.assignment, best.probability, document);
}

void run_reduce(const std::string& instance_arg, const std::string& from, const std::string& to,
                std::ostream& out) {
  if (from == "sdf") {
    const SdfDocument sdf = parse_sdf(load_instance_text(instance_arg));
    InstanceDocument document;
    document.agent_names = sdf.agent_names;
    document.item_names = sdf.item_names;
    if (to == "joint") {
      document.model = reduce_sdf_to_joint(sdf.instance);
    } else {
      document.model = reduce_sdf_to_lottery(sdf.instance);
    }
    out << serialize_instance(document);
    return;
  }
  // from == "m2sat": the gadget pins the identity assignment, echoed back so
  // the output pipes straight into `prob`.
  if (to == "joint") {
    throw UsageError("--from m2sat only produces a lottery instance");
  }
  const Monotone2Sat formula = parse_m2sat(load_m2sat_text(instance_arg));
  auto [model, assignment] = reduce_m2sat_to_lottery(formula);
  InstanceDocument document;
  for (int i = 1; i <= formula.variable_count; ++i) {
    document.agent_names.push_back(std::to_string(i));
    document.item_names.push_back("o" + std::to_string(i));
  }
  document.model = std::move(model);
  out << serialize_instance(document, assignment);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pareto optimality of assignments under uncertain preferences"};
  app.require_subcommand(1);

  std::string instance_arg;
  std::string assignment_arg;
  std::string question = "nonzero";
  std::string engine = "auto";
  std::string goal = "certain";
  std::string from;
  std::string to = "lottery";
  GeneratorConfig config;
  std::string kind = "lottery";

  CLI::App* check = app.add_subcommand("check", "Decide a yes/no property of an assignment");
  check->add_option("--instance", instance_arg, "Instance file or inline JSON")->required();
  check->add_option("--assignment", assignment_arg, "Assignment file, JSON, or inline a=x,b=y")
      ->required();
  check->add_option("--question", question, "One of nonzero, one, dominated, po")
      ->check(CLI::IsMember({"nonzero", "one", "dominated", "po"}));

  CLI::App* prob = app.add_subcommand("prob", "Compute the exact PO probability");
  prob->add_option("--instance", instance_arg, "Instance file or inline JSON")->required();
  prob->add_option("--assignment", assignment_arg, "Assignment file, JSON, or inline a=x,b=y")
      ->required();
  prob->add_option("--engine", engine, "One of auto, joint, enum, fpt, oracle")
      ->check(CLI::IsMember({"auto", "joint", "enum", "fpt", "oracle"}));

  CLI::App* solve = app.add_subcommand("solve", "Search for a distinguished assignment");
  solve->add_option("--instance", instance_arg, "Instance file or inline JSON")->required();
  solve->add_option("--goal", goal, "certain: certainly-PO assignment; best: maximize PO probability")
      ->check(CLI::IsMember({"certain", "best"}));

  CLI::App* reduce = app.add_subcommand("reduce", "Turn a source problem into an instance");
  reduce->add_option("--instance", instance_arg, "Source problem file or inline text")->required();
  reduce->add_option("--from", from, "Source problem: sdf or m2sat")
      ->required()
      ->check(CLI::IsMember({"sdf", "m2sat"}));
  reduce->add_option("--to", to, "Target model for sdf: lottery or joint")
      ->check(CLI::IsMember({"lottery", "joint"}));

  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", config.agent_count, "Agent count");
  gen->add_option("--k", config.uncertain_count, "Uncertain agent count");
  gen->add_option("--support", config.support_size, "Largest support of an uncertain agent");
  gen->add_option("--seed", config.seed, "Generator seed");
  gen->add_option("--kind", kind, "lottery or joint")
      ->check(CLI::IsMember({"lottery", "joint"}));
  gen->add_option("--joint-support", config.joint_support, "Profile count for the joint kind");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("upareto");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed() || prob->parsed()) {
      const InstanceDocument document = parse_instance(load_instance_text(instance_arg));
      const Assignment assignment =
          parse_assignment(load_assignment_text(assignment_arg), document);
      if (check->parsed()) {
        run_check(document, assignment, question, out);
      } else {
        run_prob(document, assignment, engine, out);
      }
    } else if (solve->parsed()) {
      run_solve(parse_instance(load_instance_text(instance_arg)), goal, out);
    } else if (reduce->parsed()) {
      run_reduce(instance_arg, from, to, out);
    } else if (gen->parsed()) {
      config.joint = kind == "joint";
      out << serialize_instance(generate_instance(config));
    }
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace upareto
