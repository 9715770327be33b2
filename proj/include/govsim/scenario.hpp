/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "govsim/json_codec.hpp"
#include "govsim/network.hpp"

namespace govsim::sim {

inline constexpr std::uint64_t kScenarioSpecVersion = 1;
/// Chain keyword in configs for the main (relay) chain.
inline constexpr const char *kRelayChain = "relay";

struct NodeSpec {
  std::string id;
  std::uint64_t stake = 0;            // proof-of-stake candidacy deposit
  std::string chain = kRelayChain;    // "relay" or "shard-<i>"
  gov::Role role = gov::Role::Ordinary;
};

struct AccountSpec {
  std::string name;
  std::uint64_t balance = 0;
  std::string identity;               // permissioned chains only
  gov::Role role = gov::Role::Ordinary;
  std::string chain = kRelayChain;
};

struct ActionSpec {
  std::uint64_t tick = 0;
  std::string kind;
  Json params;
};

/// A complete, self-contained scenario: one chain (optionally sharded),
/// its governance pattern configuration, the node fleet, and a scripted
/// action timeline. Everything a run needs; two runs of the same config
/// and seed are bytewise identical.
struct ScenarioConfig {
  std::uint64_t spec_version = kScenarioSpecVersion;
  std::string chain_id = "main";
  std::uint64_t seed = 0;
  gov::Mode mode = gov::Mode::Permissionless;
  std::uint64_t ticks = 20;
  std::uint64_t round_interval = 1;

  gov::SelectionMode selection = gov::SelectionMode::RoundRobin;
  std::vector<std::string> authorities;  // node ids; empty = all relay nodes
  gov::FinalityPolicy finality;
  bool incentive_enabled = false;
  std::uint64_t block_reward = 0;
  Rational validator_fee_fraction{1, 2};
  std::string treasury;  // account name

  std::map<std::string, Json> patterns;  // pattern name -> parameters

  std::uint64_t default_delay = 0;
  std::vector<PartitionWindow> partitions;

  std::vector<NodeSpec> nodes;
  std::vector<AccountSpec> accounts;
  std::vector<ActionSpec> actions;

  std::set<gov::Pattern> pattern_set() const;
  bool has_pattern(gov::Pattern p) const { return pattern_set().count(p) > 0; }
  std::uint32_t shard_count() const;
  std::string shard_chain_id(std::uint32_t shard) const;
  Json pattern_params(const std::string &name) const;

  Json to_json() const;
  static ScenarioConfig from_json(const Json &doc);

  crypto::Digest digest() const { return crypto::hash(canonical_dump(to_json())); }
};

/// Full structural validation. Throws Error("config.<field>") naming the
/// offending field and, for pattern/mode conflicts, the decentralisation
/// level constraint that forbids it.
void validate_config(const ScenarioConfig &config);

/// Built-in scenario profiles: "polkadot-like", "quorum-like", and the
/// permissionless voting playground "governance-lab".
ScenarioConfig preset(const std::string &name);

ScenarioConfig read_config(const std::string &path);
void write_config(const ScenarioConfig &config, const std::string &path);

}  // namespace govsim::sim
