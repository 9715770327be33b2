/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <memory>

#include "govsim/node.hpp"
#include "govsim/scenario.hpp"
#include "govsim/snapshot.hpp"

namespace govsim::sim {

/// Deterministic conductor for one scenario: builds the chains and nodes,
/// advances the logical clock, dispatches scripted actions, runs the
/// production/finality loop, and bridges shard and cross-chain traffic.
class Simulation {
 public:
  explicit Simulation(ScenarioConfig config);

  void run();   // to the configured horizon
  void step();  // one tick

  std::uint64_t now() const { return tick_; }
  const ScenarioConfig &config() const { return config_; }
  const Journal &journal() const { return journal_; }
  SimNetwork &network() { return network_; }
  const SimNetwork &network() const { return network_; }

  std::size_t node_count() const { return nodes_.size(); }
  Node &node_at(std::size_t index) { return *nodes_[index]; }
  const Node &node_at(std::size_t index) const { return *nodes_[index]; }
  Node &node_by_id(const std::string &id);
  /// First (reference) node of a chain.
  Node &chain_head(const std::string &chain_id);
  const Node &chain_head(const std::string &chain_id) const;
  std::vector<std::string> chain_ids() const;

  crypto::KeyPair wallet(const std::string &name) const;
  Address address_of(const std::string &name) const;
  /// "relay" -> main chain id, "shard-<i>" -> shard chain id, else literal.
  std::string resolve_chain(const std::string &keyword) const;

  /// Structural validation + relay inclusion of one shard block; exposed so
  /// tests can feed the coordinator forged blocks.
  bool bridge_relay_include(const chain::Block &shard_block, const std::string &shard_chain_id);

  struct TickTrace {
    std::uint64_t tick = 0;
    std::map<std::string, std::uint64_t> tip_heights;        // node id -> height
    std::map<std::string, std::size_t> delivered_by_chain;   // chain id -> messages
  };
  const std::vector<TickTrace> &trace() const { return trace_; }
  std::vector<std::string> violations() const;

 private:
  struct CrossChainWatch {
    std::string home_chain;
    std::uint64_t home_proposal = 0;
    std::string aux_chain;
    std::uint64_t aux_proposal = 0;
    std::uint64_t home_deadline = 0;
    bool result_sent = false;
    bool resolved = false;
    bool aborted = false;
  };

  chain::LedgerState build_relay_genesis() const;
  chain::LedgerState build_shard_genesis(std::uint32_t shard) const;
  void spawn_node(const std::string &node_id, const std::string &chain_id,
                  const crypto::KeyPair &keys, chain::LedgerState genesis,
                  std::uint32_t shard_id);

  void dispatch_action(const ActionSpec &action);
  tx::Transaction craft_tx(const std::string &chain_id, const std::string &sender,
                           tx::TxPayload payload, std::uint64_t fee);
  void submit_tx(const std::string &chain_id, const tx::Transaction &t);
  std::uint64_t next_nonce(const std::string &chain_id, const Address &sender);

  void deliver_due(TickTrace &trace_entry);
  void produce_round(std::uint64_t round);
  void broadcast_finality_votes(std::uint64_t round);
  void bridge_scan();
  void couple_shard_finality();
  void finalize_and_check();

  void handle_freeze(const Json &params, bool freeze);
  void handle_trace(const Json &params);
  void handle_migrate(const Json &params);
  void spawn_aux_chain(const gov::Proposal &proposal, const std::string &home_chain);

  ScenarioConfig config_;
  SimNetwork network_;
  Journal journal_;
  std::vector<std::unique_ptr<Node>> nodes_;
  std::map<std::string, std::size_t> node_index_;
  std::uint64_t tick_ = 0;
  std::map<std::string, std::size_t> events_seen_;  // chain -> consumed node0 events
  std::vector<CrossChainWatch> watches_;
  std::vector<TickTrace> trace_;
  std::vector<std::string> sim_violations_;
};

}  // namespace govsim::sim
