/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "govsim/block.hpp"
#include "govsim/gov_types.hpp"

namespace govsim::sim {

using chain::Address;
using chain::Digest;

/// Simulator-side observation log: node-local and network-level happenings
/// that are not part of replicated chain state (rejections, freezes,
/// finality advances, traces, migrations).
struct JournalRecord {
  std::uint64_t tick = 0;
  std::uint64_t seq = 0;
  std::string chain_id;
  std::string node_id;
  std::string topic;
  std::map<std::string, std::string> payload;
};

class Journal {
 public:
  void emit(std::uint64_t tick, std::string chain_id, std::string node_id, std::string topic,
            std::map<std::string, std::string> payload) {
    records_.push_back(JournalRecord{tick, next_seq_++, std::move(chain_id), std::move(node_id),
                                     std::move(topic), std::move(payload)});
  }
  const std::vector<JournalRecord> &records() const { return records_; }

 private:
  std::vector<JournalRecord> records_;
  std::uint64_t next_seq_ = 0;
};

// ---------------------------------------------------------------------------
// Messages
// ---------------------------------------------------------------------------

struct TxGossip {
  tx::Transaction transaction;
};

struct BlockGossip {
  chain::Block block;
};

struct FinalityVote {
  Address validator;
  Digest tip;
  std::uint64_t tip_height = 0;
  std::uint64_t round = 0;
};

struct CrossChainMsg {
  gov::CrossChainResult result;
};

using MsgBody = std::variant<TxGossip, BlockGossip, FinalityVote, CrossChainMsg>;

struct Message {
  std::uint64_t seq = 0;
  std::uint64_t deliver_tick = 0;
  std::string chain_id;
  std::size_t from = 0;
  std::size_t to = 0;
  MsgBody body;
};

struct PartitionWindow {
  std::uint64_t from_tick = 0;
  std::uint64_t to_tick = 0;  // inclusive
  std::vector<std::set<std::string>> groups;
};

// ---------------------------------------------------------------------------
// Sharding
// ---------------------------------------------------------------------------

struct ShardTopology {
  std::uint32_t shard_count = 1;
  std::string relay_chain_id;
  std::vector<std::string> shard_chain_ids;
};

/// Shard assignment rule: sender address bytes as a big-endian integer,
/// modulo the shard count.
std::uint32_t route_shard_tx(const ShardTopology &topology, const tx::Transaction &t);

// ---------------------------------------------------------------------------
// The deterministic message fabric
// ---------------------------------------------------------------------------

/// In-process broadcast fabric. Delivery order is a pure function of
/// (seed, send order, delays). Freezing a chain suspends both broadcast and
/// delivery; queued messages are retained and delivered after unfreezing.
class SimNetwork {
 public:
  std::size_t add_node(const std::string &node_id, const std::string &chain_id);
  std::size_t node_count() const { return nodes_.size(); }
  const std::string &node_id(std::size_t index) const { return nodes_[index].first; }
  const std::string &node_chain(std::size_t index) const { return nodes_[index].second; }
  std::vector<std::size_t> chain_nodes(const std::string &chain_id) const;

  void set_default_delay(std::uint64_t delay) { default_delay_ = delay; }
  void set_link_delay(std::size_t from, std::size_t to, std::uint64_t delay) {
    link_delays_[{from, to}] = delay;
  }
  void add_partition(PartitionWindow window) { partitions_.push_back(std::move(window)); }
  bool partitioned(std::uint64_t tick, std::size_t a, std::size_t b) const;

  void freeze(const std::string &chain_id) { frozen_.insert(chain_id); }
  void unfreeze(const std::string &chain_id) { frozen_.erase(chain_id); }
  bool frozen(const std::string &chain_id) const { return frozen_.count(chain_id) > 0; }

  /// Queues `body` to every other node of the same chain. Returns the number
  /// of queued deliveries; zero with a journal event when the chain is
  /// frozen.
  std::size_t broadcast(std::uint64_t now, std::size_t origin, MsgBody body, Journal &journal);

  /// Point-to-point (cross-chain) delivery on the target node's chain.
  void send(std::uint64_t now, std::size_t from, std::size_t to, MsgBody body);

  /// Removes and returns every message due at `now` whose chain is not
  /// frozen, in deterministic (enqueue) order.
  std::vector<Message> collect_due(std::uint64_t now);

  std::size_t pending() const { return queue_.size(); }

 private:
  std::uint64_t link_delay(std::size_t from, std::size_t to) const;

  std::vector<std::pair<std::string, std::string>> nodes_;  // (node id, chain id)
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> link_delays_;
  std::uint64_t default_delay_ = 0;
  std::vector<PartitionWindow> partitions_;
  std::set<std::string> frozen_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Message> queue_;  // (deliver, seq)
  std::uint64_t next_seq_ = 0;
};

}  // namespace govsim::sim
