#include "upareto/io.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <string_view>
#include <utility>

#include "json.hpp"

namespace upareto {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& where, const std::string& message) {
  throw ValidationError(where + ": " + message);
}

ordered_json parse_json(const std::string& text, const char* what) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    bad(what, std::string("malformed JSON: ") + e.what());
  }
}

std::map<std::string, int> index_names(const ordered_json& array, const std::string& where) {
  if (!array.is_array() || array.empty()) bad(where, "must be a nonempty array of strings");
  std::map<std::string, int> index;
  for (size_t i = 0; i < array.size(); ++i) {
    if (!array[i].is_string()) bad(where, "must contain only strings");
    std::string name = array[i].get<std::string>();
    if (name.empty()) bad(where, "names must be nonempty");
    if (!index.emplace(std::move(name), static_cast<int>(i)).second) {
      bad(where, "duplicate name '" + array[i].get<std::string>() + "'");
    }
  }
  return index;
}

std::vector<std::string> name_list(const ordered_json& array) {
  std::vector<std::string> names;
  names.reserve(array.size());
  for (const auto& entry : array) names.push_back(entry.get<std::string>());
  return names;
}

int lookup(const std::map<std::string, int>& index, const std::string& name,
           const std::string& where, const char* what) {
  const auto it = index.find(name);
  if (it == index.end()) bad(where, std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

PreferenceOrder parse_order(const ordered_json& array, const std::map<std::string, int>& items,
                            const std::string& where) {
  if (!array.is_array()) bad(where, "order must be an array of item names");
  std::vector<ItemId> ranking;
  ranking.reserve(array.size());
  for (const auto& entry : array) {
    if (!entry.is_string()) bad(where, "order entries must be item names");
    ranking.push_back(lookup(items, entry.get<std::string>(), where, "item"));
  }
  try {
    return PreferenceOrder(std::move(ranking));
  } catch (const ValidationError& e) {
    bad(where, e.what());
  }
}

Rational parse_prob(const ordered_json& value, const std::string& where) {
  if (!value.is_string()) bad(where, "prob must be a string like \"3/5\" or \"0.6\"");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const ValidationError& e) {
    bad(where, e.what());
  }
}

// Orders object: every agent exactly once, each mapped to an order array.
Profile parse_profile_object(const ordered_json& object,
                             const std::map<std::string, int>& agents,
                             const std::map<std::string, int>& items,
                             const std::string& where) {
  if (!object.is_object()) bad(where, "must be an object mapping agents to orders");
  const int n = static_cast<int>(agents.size());
  std::vector<std::optional<PreferenceOrder>> slots(static_cast<size_t>(n));
  for (const auto& [agent_name, order] : object.items()) {
    const int agent = lookup(agents, agent_name, where, "agent");
    if (slots[static_cast<size_t>(agent)]) {
      bad(where, "agent '" + agent_name + "' listed twice");
    }
    slots[static_cast<size_t>(agent)] =
        parse_order(order, items, where + ", agent '" + agent_name + "'");
  }
  std::vector<PreferenceOrder> orders;
  orders.reserve(static_cast<size_t>(n));
  for (const auto& [name, agent] : agents) {
    if (!slots[static_cast<size_t>(agent)]) bad(where, "agent '" + name + "' missing");
  }
  for (auto& slot : slots) orders.push_back(std::move(*slot));
  return Profile(std::move(orders));
}

ordered_json assignment_json(const Assignment& assignment, const InstanceDocument& document) {
  ordered_json map = ordered_json::object();
  for (AgentId agent = 0; agent < assignment.agent_count(); ++agent) {
    map[document.agent_names[static_cast<size_t>(agent)]] =
        document.item_names[static_cast<size_t>(assignment.item_of(agent))];
  }
  return map;
}

ordered_json order_json(const PreferenceOrder& order, const InstanceDocument& document) {
  ordered_json array = ordered_json::array();
  for (ItemId item : order.ranking()) {
    array.push_back(document.item_names[static_cast<size_t>(item)]);
  }
  return array;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
  const ordered_json doc = parse_json(text, "instance");
  if (!doc.is_object()) bad("instance", "top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "model" && key != "agents" && key != "items" && key != "preferences" &&
        key != "profiles" && key != "assignment") {
      bad("instance", "unknown key '" + key + "'");
    }
  }
  if (!doc.contains("model") || !doc["model"].is_string()) {
    bad("instance", "missing string key 'model'");
  }
  const std::string kind = doc["model"].get<std::string>();
  if (kind != "lottery" && kind != "joint") {
    bad("instance", "model must be 'lottery' or 'joint'");
  }
  if (!doc.contains("agents")) bad("instance", "missing key 'agents'");
  if (!doc.contains("items")) bad("instance", "missing key 'items'");

  const std::map<std::string, int> agents = index_names(doc["agents"], "instance, agents");
  const std::map<std::string, int> items = index_names(doc["items"], "instance, items");
  if (agents.size() != items.size()) {
    bad("instance", "agents and items must have the same count");
  }
  const int n = static_cast<int>(agents.size());

  InstanceDocument document;
  document.agent_names = name_list(doc["agents"]);
  document.item_names = name_list(doc["items"]);

  if (kind == "lottery") {
    if (!doc.contains("preferences") || !doc["preferences"].is_object()) {
      bad("instance", "lottery model needs an object key 'preferences'");
    }
    std::vector<std::vector<WeightedOrder>> preferences(static_cast<size_t>(n));
    for (const auto& [agent_name, support] : doc["preferences"].items()) {
      const std::string where = "preferences, agent '" + agent_name + "'";
      const int agent = lookup(agents, agent_name, where, "agent");
      if (!preferences[static_cast<size_t>(agent)].empty()) bad(where, "listed twice");
      if (!support.is_array() || support.empty()) bad(where, "support must be a nonempty array");
      for (size_t s = 0; s < support.size(); ++s) {
        const std::string where_entry = where + ", order " + std::to_string(s + 1);
        const ordered_json& entry = support[s];
        if (!entry.is_object() || !entry.contains("order") || !entry.contains("prob")) {
          bad(where_entry, "entries need keys 'order' and 'prob'");
        }
        preferences[static_cast<size_t>(agent)].push_back(
            {parse_order(entry["order"], items, where_entry),
             parse_prob(entry["prob"], where_entry)});
      }
    }
    for (const auto& [name, agent] : agents) {
      if (preferences[static_cast<size_t>(agent)].empty()) {
        bad("preferences", "agent '" + name + "' missing");
      }
    }
    LotteryModel model{std::move(preferences)};
    require_valid(model);
    document.model = std::move(model);
  } else {
    if (!doc.contains("profiles") || !doc["profiles"].is_array()) {
      bad("instance", "joint model needs an array key 'profiles'");
    }
    JointModel model;
    for (size_t p = 0; p < doc["profiles"].size(); ++p) {
      const std::string where = "profiles, profile " + std::to_string(p + 1);
      const ordered_json& entry = doc["profiles"][p];
      if (!entry.is_object() || !entry.contains("prob") || !entry.contains("orders")) {
        bad(where, "profiles need keys 'prob' and 'orders'");
      }
      model.support.push_back({parse_profile_object(entry["orders"], agents, items, where),
                               parse_prob(entry["prob"], where)});
    }
    require_valid(model);
    document.model = std::move(model);
  }
  return document;
}

std::string serialize_instance(const InstanceDocument& document,
                               const std::optional<Assignment>& assignment) {
  ordered_json doc;
  doc["model"] = document.is_lottery() ? "lottery" : "joint";
  doc["agents"] = document.agent_names;
  doc["items"] = document.item_names;
  if (document.is_lottery()) {
    const LotteryModel& model = document.lottery();
    ordered_json preferences = ordered_json::object();
    for (AgentId agent = 0; agent < model.agent_count(); ++agent) {
      ordered_json support = ordered_json::array();
      for (const WeightedOrder& entry : model.support_of(agent)) {
        ordered_json weighted;
        weighted["order"] = order_json(entry.order, document);
        weighted["prob"] = fraction_string(entry.prob);
        support.push_back(std::move(weighted));
      }
      preferences[document.agent_names[static_cast<size_t>(agent)]] = std::move(support);
    }
    doc["preferences"] = std::move(preferences);
  } else {
    const JointModel& model = document.joint();
    ordered_json profiles = ordered_json::array();
    for (const WeightedProfile& entry : model.support) {
      ordered_json profile;
      profile["prob"] = fraction_string(entry.prob);
      ordered_json orders = ordered_json::object();
      for (AgentId agent = 0; agent < entry.profile.agent_count(); ++agent) {
        orders[document.agent_names[static_cast<size_t>(agent)]] =
            order_json(entry.profile.order(agent), document);
      }
      profile["orders"] = std::move(orders);
      profiles.push_back(std::move(profile));
    }
    doc["profiles"] = std::move(profiles);
  }
  if (assignment) doc["assignment"] = assignment_json(*assignment, document);
  return dump(doc);
}

SdfDocument parse_sdf(const std::string& text) {
  const ordered_json doc = parse_json(text, "sdf");
  if (!doc.is_object()) bad("sdf", "top level must be an object");
  for (const char* key : {"agents", "items", "profile", "agent", "item"}) {
    if (!doc.contains(key)) bad("sdf", std::string("missing key '") + key + "'");
  }
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "agents" && key != "items" && key != "profile" && key != "agent" &&
        key != "item") {
      bad("sdf", "unknown key '" + key + "'");
    }
  }
  const std::map<std::string, int> agents = index_names(doc["agents"], "sdf, agents");
  const std::map<std::string, int> items = index_names(doc["items"], "sdf, items");
  if (agents.size() != items.size()) bad("sdf", "agents and items must have the same count");
  if (!doc["agent"].is_string() || !doc["item"].is_string()) {
    bad("sdf", "'agent' and 'item' must be names");
  }

  SdfDocument document;
  document.agent_names = name_list(doc["agents"]);
  document.item_names = name_list(doc["items"]);
  document.instance.profile = parse_profile_object(doc["profile"], agents, items, "sdf, profile");
  document.instance.agent = lookup(agents, doc["agent"].get<std::string>(), "sdf", "agent");
  document.instance.item = lookup(items, doc["item"].get<std::string>(), "sdf", "item");
  return document;
}

Monotone2Sat parse_m2sat(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool seen_header = false;
  long declared = -1;
  Monotone2Sat formula;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = "m2sat, line " + std::to_string(lineno);
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first == "c") continue;
    if (!seen_header) {
      std::string format;
      long n = 0;
      long m = 0;
      if (first != "p" || !(tokens >> format) || format != "m2sat" || !(tokens >> n >> m)) {
        bad(where, "expected header 'p m2sat <n> <m>'");
      }
      std::string extra;
      if (tokens >> extra) bad(where, "trailing tokens after header");
      if (n < 1) bad(where, "variable count must be at least 1");
      if (m < 0) bad(where, "clause count must be nonnegative");
      formula.variable_count = static_cast<int>(n);
      declared = m;
      seen_header = true;
      continue;
    }
    long i = 0;
    long j = 0;
    std::istringstream clause(line);
    if (!(clause >> i >> j)) bad(where, "expected a clause 'i j'");
    std::string extra;
    if (clause >> extra) bad(where, "trailing tokens after clause");
    if (i < 1 || j < 1) bad(where, "variable indices are 1-based");
    formula.clauses.emplace_back(static_cast<int>(i) - 1, static_cast<int>(j) - 1);
  }
  if (!seen_header) bad("m2sat", "missing header 'p m2sat <n> <m>'");
  if (declared != static_cast<long>(formula.clauses.size())) {
    bad("m2sat", "header declares " + std::to_string(declared) + " clauses but " +
                     std::to_string(formula.clauses.size()) + " given");
  }
  try {
    require_valid(formula);
  } catch (const ValidationError& e) {
    bad("m2sat", e.what());
  }
  return formula;
}

Assignment parse_assignment(const std::string& text, const InstanceDocument& document) {
  const std::string where = "assignment";
  const std::map<std::string, int> agents = [&] {
    std::map<std::string, int> index;
    for (size_t i = 0; i < document.agent_names.size(); ++i) {
      index.emplace(document.agent_names[i], static_cast<int>(i));
    }
    return index;
  }();
  const std::map<std::string, int> items = [&] {
    std::map<std::string, int> index;
    for (size_t i = 0; i < document.item_names.size(); ++i) {
      index.emplace(document.item_names[i], static_cast<int>(i));
    }
    return index;
  }();

  std::vector<std::pair<std::string, std::string>> pairs;
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    const ordered_json doc = parse_json(std::string(body), "assignment");
    if (!doc.is_object()) bad(where, "top level must be an object");
    // Instance documents may carry their queried assignment along; a flat
    // map never holds an object value, so this dispatch is unambiguous.
    const auto carried = doc.find("assignment");
    const ordered_json& map = (carried != doc.end() && carried->is_object()) ? *carried : doc;
    for (const auto& [agent_name, item_name] : map.items()) {
      if (!item_name.is_string()) bad(where, "values must be item names");
      pairs.emplace_back(agent_name, item_name.get<std::string>());
    }
  } else {
    size_t start = 0;
    const std::string flat(body);
    while (start <= flat.size()) {
      const size_t comma = std::min(flat.find(',', start), flat.size());
      const std::string_view token = trim(std::string_view(flat).substr(start, comma - start));
      if (token.empty()) bad(where, "empty entry");
      const size_t equals = token.find('=');
      if (equals == std::string_view::npos || token.find('=', equals + 1) != std::string_view::npos) {
        bad(where, "entries must look like agent=item, got '" + std::string(token) + "'");
      }
      pairs.emplace_back(std::string(trim(token.substr(0, equals))),
                         std::string(trim(token.substr(equals + 1))));
      start = comma + 1;
    }
  }

  const int n = document.agent_count();
  std::vector<ItemId> alloc(static_cast<size_t>(n), -1);
  for (const auto& [agent_name, item_name] : pairs) {
    const int agent = lookup(agents, agent_name, where, "agent");
    if (alloc[static_cast<size_t>(agent)] != -1) {
      bad(where, "agent '" + agent_name + "' assigned twice");
    }
    alloc[static_cast<size_t>(agent)] = lookup(items, item_name, where, "item");
  }
  for (const auto& [name, agent] : agents) {
    if (alloc[static_cast<size_t>(agent)] == -1) bad(where, "agent '" + name + "' missing");
  }
  try {
    return Assignment(std::move(alloc));
  } catch (const ValidationError& e) {
    bad(where, e.what());
  }
}

std::string serialize_probability_result(const Rational& probability) {
  ordered_json doc;
  doc["probability"] = fraction_string(probability);
  return dump(doc);
}

std::string serialize_check_result(const std::string& question, bool answer) {
  ordered_json doc;
  doc["question"] = question;
  doc["answer"] = answer;
  return dump(doc);
}

std::string serialize_nonzero_result(bool answer, const std::optional<SdWitness>& witness,
                                     const LotteryModel& model,
                                     const InstanceDocument& document) {
  ordered_json doc;
  doc["question"] = "nonzero";
  doc["answer"] = answer;
  if (witness) {
    ordered_json pick = ordered_json::array();
    for (int position = 0; position < witness->pick_order.agent_count(); ++position) {
      pick.push_back(document.agent_names[static_cast<size_t>(witness->pick_order.at(position))]);
    }
    const Profile realized = witness->realized_profile(model);
    ordered_json orders = ordered_json::object();
    for (AgentId agent = 0; agent < realized.agent_count(); ++agent) {
      orders[document.agent_names[static_cast<size_t>(agent)]] =
          order_json(realized.order(agent), document);
    }
    ordered_json certificate;
    certificate["permutation"] = std::move(pick);
    certificate["orders"] = std::move(orders);
    doc["witness"] = std::move(certificate);
  }
  return dump(doc);
}

std::string serialize_solve_certain_result(const std::optional<Assignment>& assignment,
                                           const InstanceDocument& document) {
  ordered_json doc;
  if (assignment) {
    doc["assignment"] = assignment_json(*assignment, document);
  } else {
    doc["assignment"] = nullptr;
    doc["reason"] = "no certainly-PO assignment";
  }
  return dump(doc);
}

std::string serialize_solve_best_result(const Assignment& assignment,
                                        const Rational& probability,
                                        const InstanceDocument& document) {
  ordered_json doc;
  doc["assignment"] = assignment_json(assignment, document);
  doc["probability"] = fraction_string(probability);
  return dump(doc);
}

}  // namespace upareto
