/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/scenario.hpp"

namespace govsim::sim {

namespace {

Json rational_json(std::uint64_t num, std::uint64_t den) {
  return Json{{"num", num}, {"den", den}};
}

/// Finds a deterministic wallet label whose address routes to `shard`.
std::string grind_shard_account(std::uint64_t seed, const std::string &base,
                                std::uint32_t shard, std::uint32_t shard_count) {
  std::string name = base;
  for (int attempt = 0; attempt < 4096; ++attempt) {
    crypto::KeyPair keys = crypto::KeyPair::derive(seed, name);
    if (chain::Address::from_public_key(keys.public_key).mod(shard_count) == shard) {
      return name;
    }
    name = base + "-g" + std::to_string(attempt);
  }
  throw Error("preset.grind", "no wallet label routes to shard " + std::to_string(shard));
}

ActionSpec action(std::uint64_t tick, const std::string &kind, Json params) {
  return ActionSpec{tick, kind, std::move(params)};
}

ScenarioConfig polkadot_like() {
  ScenarioConfig c;
  c.chain_id = "polkadot";
  c.seed = 42;
  c.mode = gov::Mode::Permissionless;
  c.ticks = 36;
  c.selection = gov::SelectionMode::ProofOfStake;
  c.finality = {gov::FinalityMode::SupermajorityVote, 6, {2, 3}};
  c.incentive_enabled = true;
  c.block_reward = 5;
  c.validator_fee_fraction = {1, 2};
  c.treasury = "treasury";

  c.patterns["network-freezer"] = Json{{"quorum", rational_json(2, 3)}};
  c.patterns["sharded-chain"] = Json{{"shards", 2}};
  c.patterns["incentive-distributor"] = Json::object();
  c.patterns["protocol-upgrade"] = Json::object();
  c.patterns["data-migrator"] = Json::object();
  c.patterns["accountability-tracer"] = Json::object();
  c.patterns["benevolent-dictator"] = Json{{"fast_track_window", 10}};
  c.patterns["transaction-filter"] =
      Json{{"rules", Json::array({Json{{"rule", "max-payload-size"}, {"max_bytes", 600}}})}};
  c.patterns["validator-selection"] = Json::object();
  c.patterns["block-finality-decider"] = Json::object();
  c.patterns["token-locker"] = Json{{"proposal_deposit", 10}};
  c.patterns["carbonvote"] =
      Json{{"lock_weight_factor", rational_json(1, 2)}, {"max_lock_period", 50}};

  c.nodes = {{"n0", 40, kRelayChain, gov::Role::Ordinary},
             {"n1", 30, kRelayChain, gov::Role::Ordinary},
             {"n2", 20, kRelayChain, gov::Role::Ordinary},
             {"n3", 10, kRelayChain, gov::Role::Ordinary},
             {"c0", 0, "shard-0", gov::Role::Ordinary},
             {"c1", 0, "shard-1", gov::Role::Ordinary}};

  c.accounts = {{"alice", 120, "", gov::Role::Ordinary, kRelayChain},
                {"bob", 80, "", gov::Role::Ordinary, kRelayChain},
                {"charlie", 100, "", gov::Role::Ordinary, kRelayChain},
                {"mallory", 30, "", gov::Role::Ordinary, kRelayChain},
                {"council", 50, "", gov::Role::CouncilMember, kRelayChain},
                {"treasury", 0, "", gov::Role::Ordinary, kRelayChain},
                {"bridge", 0, "", gov::Role::Ordinary, kRelayChain}};
  std::string u0a = grind_shard_account(c.seed, "u0a", 0, 2);
  std::string u0b = grind_shard_account(c.seed, "u0b", 0, 2);
  std::string u1a = grind_shard_account(c.seed, "u1a", 1, 2);
  std::string u1b = grind_shard_account(c.seed, "u1b", 1, 2);
  c.accounts.push_back({u0a, 30, "", gov::Role::Ordinary, "shard-0"});
  c.accounts.push_back({u0b, 20, "", gov::Role::Ordinary, "shard-0"});
  c.accounts.push_back({u1a, 30, "", gov::Role::Ordinary, "shard-1"});
  c.accounts.push_back({u1b, 20, "", gov::Role::Ordinary, "shard-1"});

  std::string long_description(700, 'x');
  c.actions = {
      action(1, "transfer", {{"from", "alice"}, {"to", "bob"}, {"amount", 10}, {"fee", 2}}),
      action(2, "lock",
             {{"who", "charlie"}, {"amount", 40}, {"duration", 30}, {"purpose", "vote-weight"}}),
      // Violates the universal format rule (oversized payload).
      action(3, "submit-proposal",
             {{"proposer", "mallory"},
              {"description", long_description},
              {"proposal_action",
               {{"kind", "param-change"}, {"key", "proposal_deposit"}, {"value", 1}}},
              {"scheme", {{"kind", "carbonvote"}}},
              {"deadline", 18},
              {"threshold", {{"kind", "fixed"}, {"fraction", rational_json(1, 2)}}}}),
      action(4, "submit-proposal",
             {{"proposer", "alice"},
              {"description", "runtime upgrade v2"},
              {"proposal_action",
               {{"kind", "upgrade"},
                {"new_version", 2},
                {"compatibility", "soft-fork"},
                {"activation_height", 30}}},
              {"scheme",
               {{"kind", "carbonvote"},
                {"lock_weight_factor", rational_json(1, 2)},
                {"max_lock_period", 50}}},
              {"deadline", 20},
              {"threshold", {{"kind", "adaptive-turnout"}}}}),
      action(5, "transfer", {{"from", u0a}, {"to", u0b}, {"amount", 5}, {"fee", 0}}),
      action(6, "transfer", {{"from", u1a}, {"to", u1b}, {"amount", 5}, {"fee", 0}}),
      action(6, "vote", {{"voter", "alice"}, {"proposal", 1}, {"choice", "yes"}}),
      action(7, "vote", {{"voter", "charlie"}, {"proposal", 1}, {"choice", "yes"}}),
      action(7, "vote", {{"voter", "council"}, {"proposal", 1}, {"choice", "yes"}}),
      action(8, "vote", {{"voter", "bob"}, {"proposal", 1}, {"choice", "no"}}),
      action(9, "submit-proposal",
             {{"proposer", "bob"},
              {"description", "raise deposits"},
              {"proposal_action",
               {{"kind", "param-change"}, {"key", "proposal_deposit"}, {"value", 20}}},
              {"scheme", {{"kind", "carbonvote"}}},
              {"deadline", 25},
              {"threshold", {{"kind", "fixed"}, {"fraction", rational_json(1, 2)}}}}),
      action(10, "dictator", {{"actor", "council"}, {"proposal", 2}, {"do", "cancel"}}),
      action(11, "trace", {{"node", "n0"}, {"from", "alice"}, {"nonce", 0}}),
      action(12, "freeze", {{"voters", Json::array({"n0", "n1", "n2"})}}),
      action(15, "unfreeze", {{"voters", Json::array({"n0", "n1", "n2"})}}),
      action(24, "enact-upgrade", {{"node", "n0"}, {"proposal", 1}}),
      action(24, "enact-upgrade", {{"node", "n1"}, {"proposal", 1}}),
      action(25, "enact-upgrade", {{"node", "n2"}, {"proposal", 1}}),
      action(25, "enact-upgrade", {{"node", "n3"}, {"proposal", 1}}),
      action(26, "migrate", {{"source", "relay"}, {"target", "polkadot-archive"}}),
  };
  return c;
}

ScenarioConfig quorum_like() {
  ScenarioConfig c;
  c.chain_id = "quorum";
  c.seed = 7;
  c.mode = gov::Mode::Permissioned;
  c.ticks = 32;
  c.selection = gov::SelectionMode::ProofOfAuthority;
  c.authorities = {"q0", "q1", "q2", "q3"};
  c.finality = {gov::FinalityMode::Immediate, 0, {2, 3}};
  // Incentives are present in the profile but inactive by default.
  c.incentive_enabled = false;
  c.block_reward = 5;

  c.patterns["network-freezer"] = Json::object();
  c.patterns["incentive-distributor"] = Json::object();
  c.patterns["protocol-upgrade"] = Json::object();
  c.patterns["participation-permission"] =
      Json{{"invites", Json::array({"X7", "K2"})}};
  c.patterns["accountability-tracer"] = Json::object();
  c.patterns["benevolent-dictator"] = Json{{"fast_track_window", 10}};
  c.patterns["transaction-filter"] =
      Json{{"rules", Json::array({Json{{"rule", "allowed-payload-types"},
                                       {"types", Json::array({"transfer", "governance"})}}})}};
  c.patterns["validator-selection"] = Json::object();
  c.patterns["block-finality-decider"] = Json::object();
  c.patterns["log-extractor"] = Json::object();

  c.nodes = {{"q0", 0, kRelayChain, gov::Role::Administrator},
             {"q1", 0, kRelayChain, gov::Role::Ordinary},
             {"q2", 0, kRelayChain, gov::Role::Ordinary},
             {"q3", 0, kRelayChain, gov::Role::Ordinary}};
  c.accounts = {{"deployer", 50, "Deployer", gov::Role::Deployer, kRelayChain},
                {"consensys", 50, "Consensys", gov::Role::BenevolentDictator, kRelayChain},
                {"orga", 100, "OrgA", gov::Role::Ordinary, kRelayChain},
                {"orgb", 100, "OrgB", gov::Role::Ordinary, kRelayChain}};

  c.actions = {
      action(1, "join", {{"who", "orgc"}, {"invite", "X7"}, {"identity", "OrgC-node"}}),
      action(2, "join", {{"who", "intruder"}, {"invite", "X7"}, {"identity", "Intruder"}}),
      action(3, "transfer", {{"from", "orga"}, {"to", "orgb"}, {"amount", 10}, {"fee", 0}}),
      // Contract-type payloads are not among the permitted transaction types.
      action(4, "social-set", {{"actor", "deployer"}, {"spec", "maintainer = consensys"}}),
      action(5, "submit-proposal",
             {{"proposer", "orga"},
              {"description", "configuration upgrade v2"},
              {"proposal_action",
               {{"kind", "upgrade"},
                {"new_version", 2},
                {"compatibility", "hard-fork"},
                {"activation_height", 25}}},
              {"scheme", {{"kind", "one-address-one-vote"}}},
              {"deadline", 28},
              {"threshold", {{"kind", "fixed"}, {"fraction", rational_json(99, 100)}}}}),
      action(6, "vote", {{"voter", "orga"}, {"proposal", 1}, {"choice", "yes"}}),
      action(7, "vote", {{"voter", "orgb"}, {"proposal", 1}, {"choice", "yes"}}),
      action(8, "vote", {{"voter", "orgc"}, {"proposal", 1}, {"choice", "yes"}}),
      action(9, "vote", {{"voter", "consensys"}, {"proposal", 1}, {"choice", "yes"}}),
      action(10, "dictator", {{"actor", "consensys"}, {"proposal", 1}, {"do", "fast-track"}}),
      action(12, "freeze", {{"actor", "q0"}}),
      action(15, "unfreeze", {{"actor", "q0"}}),
      action(24, "enact-upgrade", {{"node", "q0"}, {"proposal", 1}}),
      action(24, "enact-upgrade", {{"node", "q1"}, {"proposal", 1}}),
      action(25, "enact-upgrade", {{"node", "q2"}, {"proposal", 1}}),
      action(25, "enact-upgrade", {{"node", "q3"}, {"proposal", 1}}),
      action(29, "trace", {{"node", "q0"}, {"from", "orga"}, {"nonce", 0}}),
      action(30, "extract-logs", {{"node", "q0"}, {"topic", "member.joined"}}),
  };
  return c;
}

ScenarioConfig governance_lab() {
  ScenarioConfig c;
  c.chain_id = "lab";
  c.seed = 11;
  c.mode = gov::Mode::Permissionless;
  c.ticks = 40;
  c.selection = gov::SelectionMode::RoundRobin;
  c.authorities = {"n0", "n1", "n2"};
  c.finality = {gov::FinalityMode::KDeep, 2, {2, 3}};
  c.incentive_enabled = false;

  c.patterns["protocol-upgrade"] = Json::object();
  c.patterns["accountability-tracer"] = Json::object();
  c.patterns["benevolent-dictator"] = Json{{"fast_track_window", 10}};
  c.patterns["validator-selection"] = Json::object();
  c.patterns["block-finality-decider"] = Json::object();
  c.patterns["token-locker"] = Json{{"proposal_deposit", 10}};
  c.patterns["quadratic-voting"] = Json{{"cost_account", "qv-pool"}};
  c.patterns["liquid-democracy"] = Json::object();
  c.patterns["cross-chain-token-voting"] = Json::object();
  c.patterns["scam-list"] = Json::object();
  c.patterns["social-contract"] = Json::object();
  c.patterns["contract-freezer"] = Json{{"eligible", Json::array({"prof"})}};
  c.patterns["transaction-filter"] =
      Json{{"rules", Json::array({Json{{"rule", "scam-list-check"}}})}};

  c.nodes = {{"n0", 0, kRelayChain, gov::Role::Ordinary},
             {"n1", 0, kRelayChain, gov::Role::Ordinary},
             {"n2", 0, kRelayChain, gov::Role::Ordinary}};
  c.accounts = {{"prof", 100, "", gov::Role::BenevolentDictator, kRelayChain},
                {"sam", 200, "", gov::Role::Ordinary, kRelayChain},
                {"tina", 150, "", gov::Role::Ordinary, kRelayChain},
                {"ursula", 120, "", gov::Role::Ordinary, kRelayChain},
                {"victor", 80, "", gov::Role::Ordinary, kRelayChain},
                {"scammer", 50, "", gov::Role::Ordinary, kRelayChain},
                {"qv-pool", 0, "", gov::Role::Ordinary, kRelayChain},
                {"bridge", 0, "", gov::Role::Ordinary, kRelayChain}};

  c.actions = {
      action(1, "join", {{"who", "newbie"}}),
      action(2, "scam-add", {{"actor", "prof"}, {"target", "scammer"}, {"note", "drainer"}}),
      action(3, "transfer", {{"from", "scammer"}, {"to", "sam"}, {"amount", 5}, {"fee", 0}}),
      action(4, "social-set", {{"actor", "prof"}, {"spec", "maintainer = council of n0..n2"}}),
      action(5, "freeze-contract", {{"actor", "prof"}, {"target", "scam-list"}}),
      action(6, "scam-add", {{"actor", "prof"}, {"target", "victor"}, {"note", "blocked"}}),
      action(7, "unfreeze-contract", {{"actor", "prof"}, {"target", "scam-list"}}),
      action(8, "scam-add", {{"actor", "prof"}, {"target", "rogue"}, {"note", "impostor"}}),
      action(9, "submit-proposal",
             {{"proposer", "sam"},
              {"description", "extend the fast-track window"},
              {"proposal_action",
               {{"kind", "param-change"}, {"key", "fast_track_window"}, {"value", 15}}},
              {"scheme", {{"kind", "quadratic"}, {"cost_account", "qv-pool"}}},
              {"deadline", 20},
              {"threshold", {{"kind", "fixed"}, {"fraction", rational_json(1, 2)}}}}),
      action(10, "vote", {{"voter", "sam"}, {"proposal", 1}, {"choice", "yes"}, {"votes", 5}}),
      action(11, "vote", {{"voter", "tina"}, {"proposal", 1}, {"choice", "no"}, {"votes", 3}}),
      action(11, "vote", {{"voter", "ursula"}, {"proposal", 1}, {"choice", "yes"}, {"votes", 2}}),
      action(12, "vote", {{"voter", "ursula"}, {"proposal", 1}, {"choice", "yes"}, {"votes", 3}}),
      action(13, "submit-proposal",
             {{"proposer", "tina"},
              {"description", "raise the proposal deposit"},
              {"proposal_action",
               {{"kind", "param-change"}, {"key", "proposal_deposit"}, {"value", 12}}},
              {"scheme", {{"kind", "liquid-democracy"}}},
              {"deadline", 24},
              {"threshold", {{"kind", "fixed"}, {"fraction", rational_json(1, 2)}}}}),
      action(14, "delegate", {{"voter", "victor"}, {"proposal", 2}, {"target", "sam"}}),
      action(15, "delegate", {{"voter", "ursula"}, {"proposal", 2}, {"target", "victor"}}),
      action(17, "vote", {{"voter", "sam"}, {"proposal", 2}, {"choice", "yes"}}),
      action(17, "revoke", {{"voter", "ursula"}, {"proposal", 2}}),
      action(18, "vote", {{"voter", "ursula"}, {"proposal", 2}, {"choice", "no"}}),
      action(19, "lock",
             {{"who", "sam"}, {"amount", 30}, {"duration", 15}, {"purpose", "vote-weight"}}),
      action(21, "submit-proposal",
             {{"proposer", "ursula"},
              {"description", "decide on the companion chain"},
              {"proposal_action",
               {{"kind", "param-change"}, {"key", "max_candidate_txs"}, {"value", 24}}},
              {"scheme", {{"kind", "cross-chain-token"}, {"aux_chain_id", "lab-aux"}}},
              {"deadline", 32},
              {"threshold", {{"kind", "fixed"}, {"fraction", rational_json(1, 2)}}}}),
      action(23, "slash-lock",
             {{"actor", "prof"}, {"target", "sam"}, {"purpose", "vote-weight"}}),
      action(25, "vote",
             {{"voter", "sam"}, {"proposal", 1}, {"chain", "lab-aux"}, {"choice", "yes"}}),
      action(26, "vote",
             {{"voter", "tina"}, {"proposal", 1}, {"chain", "lab-aux"}, {"choice", "yes"}}),
      action(27, "vote",
             {{"voter", "victor"}, {"proposal", 1}, {"chain", "lab-aux"}, {"choice", "no"}}),
      action(33, "trace", {{"node", "n0"}, {"from", "sam"}, {"nonce", 0}}),
  };
  return c;
}

}  // namespace

ScenarioConfig preset(const std::string &name) {
  if (name == "polkadot-like") return polkadot_like();
  if (name == "quorum-like") return quorum_like();
  if (name == "governance-lab") return governance_lab();
  throw Error("preset.unknown",
              "unknown preset \"" + name +
                  "\" (available: polkadot-like, quorum-like, governance-lab)");
}

}  // namespace govsim::sim
