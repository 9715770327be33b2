/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>

#include "govsim/chain.hpp"
#include "govsim/network.hpp"
#include "govsim/pipeline.hpp"

namespace govsim::sim {

/// One simulated participant: a key pair, a full chain replica, a local
/// transaction pool, its software rule version, and the finality votes it
/// has heard.
class Node {
 public:
  Node(std::string id, std::size_t index, crypto::KeyPair keys, chain::LedgerState genesis,
       std::uint32_t shard_id);

  const std::string &id() const { return id_; }
  std::size_t index() const { return index_; }
  const Address &address() const { return address_; }
  const crypto::KeyPair &keys() const { return keys_; }
  std::uint32_t shard_id() const { return shard_id_; }
  chain::ChainState &chain() { return chain_; }
  const chain::ChainState &chain() const { return chain_; }
  tx::TxPool &pool() { return pool_; }
  const chain::NodeRules &rules() const { return rules_; }
  const chain::LedgerState &tip_state() const { return chain_.tip_state(); }

  /// Pool admission with a dry-run application on the current tip, so every
  /// rejection carries its kernel reason and is journalled.
  tx::SubmitResult submit_local(const tx::Transaction &t, std::uint64_t tick, Journal &journal);

  void receive(const Message &message, std::uint64_t tick, Journal &journal);

  /// Produces, locally applies, and returns a candidate block when this node
  /// is the selected validator for `round` under its own view.
  std::optional<chain::Block> try_produce(std::uint64_t round, std::uint64_t seed,
                                          std::uint64_t tick, Journal &journal);

  FinalityVote current_vote(std::uint64_t round) const;

  /// Recomputes finality under the chain's policy and advances the bookmark.
  void update_finality(std::uint64_t tick, Journal &journal);

  /// Sanity assertion run every step: the finalized block is still on the
  /// canonical chain. Any violation is permanent and surfaces in the report.
  void check_safety();
  const std::vector<std::string> &violations() const { return violations_; }

  void enact(std::uint64_t proposal_id);

 private:
  void insert_and_settle(const chain::Block &block, std::uint64_t tick, Journal &journal);

  std::string id_;
  std::size_t index_ = 0;
  crypto::KeyPair keys_;
  Address address_;
  std::uint32_t shard_id_ = 0;
  chain::ChainState chain_;
  tx::TxPool pool_;
  chain::NodeRules rules_;
  std::map<Digest, std::vector<chain::Block>> orphans_;
  std::map<Address, std::pair<std::uint64_t, Digest>> votes_;  // validator -> (round, tip)
  std::vector<std::string> violations_;
};

}  // namespace govsim::sim
