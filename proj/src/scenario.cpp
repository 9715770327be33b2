/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/scenario.hpp"

#include <algorithm>
#include <fstream>

namespace govsim::sim {

std::set<gov::Pattern> ScenarioConfig::pattern_set() const {
  std::set<gov::Pattern> out;
  for (const auto &[name, params] : patterns) {
    auto p = gov::pattern_from_name(name);
    if (!p) throw Error("config.patterns", "unknown pattern \"" + name + "\"");
    out.insert(*p);
  }
  return out;
}

std::uint32_t ScenarioConfig::shard_count() const {
  auto it = patterns.find("sharded-chain");
  if (it == patterns.end()) return 1;
  return it->second.value("shards", 1u);
}

std::string ScenarioConfig::shard_chain_id(std::uint32_t shard) const {
  return chain_id + "/shard-" + std::to_string(shard);
}

Json ScenarioConfig::pattern_params(const std::string &name) const {
  auto it = patterns.find(name);
  return it == patterns.end() ? Json::object() : it->second;
}

Json ScenarioConfig::to_json() const {
  Json consensus{{"selection",
                  Json{{"mode", gov::to_string(selection)}, {"authorities", authorities}}},
                 {"finality", finality}};
  consensus["incentive"] = Json{{"enabled", incentive_enabled},
                                {"block_reward", block_reward},
                                {"validator_fee_fraction", validator_fee_fraction},
                                {"treasury", treasury}};

  Json nodes_json = Json::array();
  for (const NodeSpec &n : nodes) {
    Json j{{"id", n.id}, {"chain", n.chain}};
    if (n.stake > 0) j["stake"] = n.stake;
    if (n.role != gov::Role::Ordinary) j["role"] = gov::to_string(n.role);
    nodes_json.push_back(std::move(j));
  }
  Json accounts_json = Json::array();
  for (const AccountSpec &a : accounts) {
    Json j{{"name", a.name}, {"balance", a.balance}, {"chain", a.chain}};
    if (!a.identity.empty()) j["identity"] = a.identity;
    if (a.role != gov::Role::Ordinary) j["role"] = gov::to_string(a.role);
    accounts_json.push_back(std::move(j));
  }
  Json partitions_json = Json::array();
  for (const PartitionWindow &w : partitions) {
    Json groups = Json::array();
    for (const auto &group : w.groups) {
      groups.push_back(std::vector<std::string>(group.begin(), group.end()));
    }
    partitions_json.push_back(Json{{"from", w.from_tick}, {"to", w.to_tick}, {"groups", groups}});
  }
  Json actions_json = Json::array();
  for (const ActionSpec &a : actions) {
    Json j = a.params;
    j["tick"] = a.tick;
    j["action"] = a.kind;
    actions_json.push_back(std::move(j));
  }

  return Json{{"spec_version", spec_version},
              {"chain_id", chain_id},
              {"seed", seed},
              {"mode", gov::to_string(mode)},
              {"ticks", ticks},
              {"round_interval", round_interval},
              {"consensus", consensus},
              {"patterns", patterns},
              {"network", Json{{"default_delay", default_delay}, {"partitions", partitions_json}}},
              {"nodes", nodes_json},
              {"accounts", accounts_json},
              {"actions", actions_json}};
}

ScenarioConfig ScenarioConfig::from_json(const Json &doc) {
  ScenarioConfig c;
  try {
    c.spec_version = doc.at("spec_version").get<std::uint64_t>();
    if (c.spec_version != kScenarioSpecVersion) {
      throw Error("config.spec_version",
                  "unsupported spec_version " + std::to_string(c.spec_version));
    }
    c.chain_id = doc.at("chain_id").get<std::string>();
    c.seed = doc.at("seed").get<std::uint64_t>();
    c.mode = gov::mode_from_string(doc.at("mode").get<std::string>());
    c.ticks = doc.at("ticks").get<std::uint64_t>();
    c.round_interval = doc.value("round_interval", 1u);

    const Json &consensus = doc.at("consensus");
    const Json &selection = consensus.at("selection");
    c.selection = gov::selection_mode_from_string(selection.at("mode").get<std::string>());
    if (selection.contains("authorities")) {
      c.authorities = selection.at("authorities").get<std::vector<std::string>>();
    }
    gov::from_json(consensus.at("finality"), c.finality);
    if (consensus.contains("incentive")) {
      const Json &incentive = consensus.at("incentive");
      c.incentive_enabled = incentive.at("enabled").get<bool>();
      c.block_reward = incentive.value("block_reward", 0u);
      if (incentive.contains("validator_fee_fraction")) {
        govsim::from_json(incentive.at("validator_fee_fraction"), c.validator_fee_fraction);
      }
      c.treasury = incentive.value("treasury", std::string{});
    }

    for (auto it = doc.at("patterns").begin(); it != doc.at("patterns").end(); ++it) {
      c.patterns[it.key()] = it.value();
    }

    if (doc.contains("network")) {
      const Json &network = doc.at("network");
      c.default_delay = network.value("default_delay", 0u);
      for (const Json &w : network.value("partitions", Json::array())) {
        PartitionWindow window;
        window.from_tick = w.at("from").get<std::uint64_t>();
        window.to_tick = w.at("to").get<std::uint64_t>();
        for (const Json &group : w.at("groups")) {
          auto members = group.get<std::vector<std::string>>();
          window.groups.push_back(std::set<std::string>(members.begin(), members.end()));
        }
        c.partitions.push_back(std::move(window));
      }
    }

    for (const Json &n : doc.at("nodes")) {
      NodeSpec spec;
      spec.id = n.at("id").get<std::string>();
      spec.stake = n.value("stake", 0u);
      spec.chain = n.value("chain", std::string(kRelayChain));
      if (n.contains("role")) spec.role = gov::role_from_string(n.at("role").get<std::string>());
      c.nodes.push_back(std::move(spec));
    }
    for (const Json &a : doc.value("accounts", Json::array())) {
      AccountSpec spec;
      spec.name = a.at("name").get<std::string>();
      spec.balance = a.at("balance").get<std::uint64_t>();
      spec.identity = a.value("identity", std::string{});
      spec.chain = a.value("chain", std::string(kRelayChain));
      if (a.contains("role")) spec.role = gov::role_from_string(a.at("role").get<std::string>());
      c.accounts.push_back(std::move(spec));
    }
    for (const Json &a : doc.value("actions", Json::array())) {
      ActionSpec action;
      action.tick = a.at("tick").get<std::uint64_t>();
      action.kind = a.at("action").get<std::string>();
      action.params = a;
      action.params.erase("tick");
      action.params.erase("action");
      c.actions.push_back(std::move(action));
    }
  } catch (const Json::exception &e) {
    throw Error("config.parse", e.what());
  }
  return c;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

const char *level_name(gov::PatternLevel level) {
  switch (level) {
    case gov::PatternLevel::PermissionlessOnly: return "permissionless";
    case gov::PatternLevel::PermissionedOnly: return "permissioned";
    case gov::PatternLevel::Both: return "both";
  }
  return "both";
}

}  // namespace

void validate_config(const ScenarioConfig &config) {
  if (config.chain_id.empty()) {
    throw Error("config.chain_id", "chain_id must be non-empty");
  }
  if (config.ticks == 0) {
    throw Error("config.ticks", "ticks must be positive");
  }
  if (config.round_interval == 0) {
    throw Error("config.round_interval", "round_interval must be positive");
  }
  if (config.nodes.empty()) {
    throw Error("config.nodes", "at least one node is required");
  }

  // Decentralisation-level column: a pattern may only be declared on the
  // matching chain type.
  std::set<gov::Pattern> declared = config.pattern_set();
  for (gov::Pattern p : declared) {
    const gov::PatternInfo &info = gov::pattern_info(p);
    bool ok = info.level == gov::PatternLevel::Both ||
              (info.level == gov::PatternLevel::PermissionlessOnly &&
               config.mode == gov::Mode::Permissionless) ||
              (info.level == gov::PatternLevel::PermissionedOnly &&
               config.mode == gov::Mode::Permissioned);
    if (!ok) {
      throw Error("config.pattern-level",
                  std::string("field patterns.") + info.name + ": component \"" + info.name +
                      "\" has decentralisation level \"" + level_name(info.level) +
                      "\" and cannot be declared on a " + gov::to_string(config.mode) +
                      " chain");
    }
  }
  // Mandatory components must be declared.
  for (const gov::PatternInfo &info : gov::pattern_catalogue()) {
    if (info.mandatory && declared.count(info.id) == 0) {
      throw Error("config.patterns", std::string("field patterns: mandatory component \"") +
                                         info.name + "\" is missing");
    }
  }

  std::set<std::string> node_ids;
  std::set<std::string> known_chains{kRelayChain};
  for (std::uint32_t s = 0; s < config.shard_count(); ++s) {
    known_chains.insert("shard-" + std::to_string(s));
  }
  for (const NodeSpec &n : config.nodes) {
    if (!node_ids.insert(n.id).second) {
      throw Error("config.nodes", "duplicate node id \"" + n.id + "\"");
    }
    if (known_chains.count(n.chain) == 0) {
      throw Error("config.nodes", "node \"" + n.id + "\" references unknown chain \"" +
                                      n.chain + "\"");
    }
    if (n.stake > 0 && declared.count(gov::Pattern::TokenLocker) == 0) {
      throw Error("config.nodes", "node \"" + n.id +
                                      "\" declares stake but the token-locker component is not "
                                      "active (stakes are candidacy locks)");
    }
  }
  std::set<std::string> account_names;
  for (const AccountSpec &a : config.accounts) {
    if (!account_names.insert(a.name).second) {
      throw Error("config.accounts", "duplicate account \"" + a.name + "\"");
    }
    if (known_chains.count(a.chain) == 0) {
      throw Error("config.accounts", "account \"" + a.name + "\" references unknown chain \"" +
                                         a.chain + "\"");
    }
  }

  if (config.selection == gov::SelectionMode::ProofOfStake) {
    if (declared.count(gov::Pattern::TokenLocker) == 0) {
      throw Error("config.pattern-level",
                  "field consensus.selection: proof-of-stake draws on candidacy locks, which "
                  "require the token-locker component (decentralisation level permissionless)");
    }
    bool any_stake = std::any_of(config.nodes.begin(), config.nodes.end(),
                                 [](const NodeSpec &n) { return n.stake > 0; });
    if (!any_stake) {
      throw Error("config.nodes", "proof-of-stake needs at least one staked node");
    }
  } else {
    for (const std::string &authority : config.authorities) {
      if (node_ids.count(authority) == 0) {
        throw Error("config.consensus",
                    "field consensus.selection.authorities: unknown node \"" + authority + "\"");
      }
    }
  }

  if (config.incentive_enabled) {
    if (declared.count(gov::Pattern::IncentiveDistributor) == 0) {
      throw Error("config.consensus",
                  "field consensus.incentive: enabled incentives require the "
                  "incentive-distributor component");
    }
    if (config.treasury.empty() || account_names.count(config.treasury) == 0) {
      throw Error("config.consensus",
                  "field consensus.incentive.treasury: unknown account \"" + config.treasury +
                      "\"");
    }
  }

  // Filter rules must reference declared support patterns.
  for (const Json &rule : config.pattern_params("transaction-filter").value("rules", Json::array())) {
    std::string kind = rule.at("rule").get<std::string>();
    if (kind == "scam-list-check" && declared.count(gov::Pattern::ScamList) == 0) {
      throw Error("config.patterns",
                  "field patterns.transaction-filter: scam-list-check requires the scam-list "
                  "component");
    }
    if (kind == "permissioned-sender-check" && config.mode != gov::Mode::Permissioned) {
      throw Error("config.patterns",
                  "field patterns.transaction-filter: permissioned-sender-check only applies to "
                  "permissioned chains");
    }
  }

  if (config.shard_count() > 1 && declared.count(gov::Pattern::ShardedChain) == 0) {
    throw Error("config.patterns", "shards declared without the sharded-chain component");
  }

  // The coordinator submits relay-include and result-import transactions
  // from a dedicated account.
  if (declared.count(gov::Pattern::ShardedChain) > 0 ||
      declared.count(gov::Pattern::CrossChainTokenVoting) > 0) {
    if (account_names.count("bridge") == 0) {
      throw Error("config.accounts",
                  "sharded-chain and cross-chain-token-voting need a relay account named "
                  "\"bridge\"");
    }
  }

  // Shard-hosted accounts must actually route to their shard.
  if (config.shard_count() > 1) {
    for (const AccountSpec &a : config.accounts) {
      if (a.chain.rfind("shard-", 0) != 0) continue;
      std::uint32_t declared_shard =
          static_cast<std::uint32_t>(std::stoul(a.chain.substr(6)));
      crypto::KeyPair keys = crypto::KeyPair::derive(config.seed, a.name);
      std::uint32_t routed = static_cast<std::uint32_t>(
          chain::Address::from_public_key(keys.public_key).mod(config.shard_count()));
      if (routed != declared_shard) {
        throw Error("config.shard-route",
                    "account \"" + a.name + "\" routes to shard " + std::to_string(routed) +
                        ", not the declared shard " + std::to_string(declared_shard));
      }
    }
  }

  for (const ActionSpec &action : config.actions) {
    if (action.tick == 0 || action.tick > config.ticks) {
      throw Error("config.actions", "action \"" + action.kind + "\" scheduled at tick " +
                                        std::to_string(action.tick) +
                                        " outside 1.." + std::to_string(config.ticks));
    }
  }
}

ScenarioConfig read_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("config.io", "cannot open " + path);
  Json doc = Json::parse(in);
  ScenarioConfig config = ScenarioConfig::from_json(doc);
  validate_config(config);
  return config;
}

void write_config(const ScenarioConfig &config, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error("config.io", "cannot write " + path);
  out << config.to_json().dump(2) << "\n";
}

}  // namespace govsim::sim
