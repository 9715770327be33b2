/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/network.hpp"

namespace govsim::sim {

std::uint32_t route_shard_tx(const ShardTopology &topology, const tx::Transaction &t) {
  if (topology.shard_count == 0) {
    throw Error("shard.count", "shard count must be positive");
  }
  return static_cast<std::uint32_t>(t.sender.mod(topology.shard_count));
}

std::size_t SimNetwork::add_node(const std::string &node_id, const std::string &chain_id) {
  nodes_.emplace_back(node_id, chain_id);
  return nodes_.size() - 1;
}

std::vector<std::size_t> SimNetwork::chain_nodes(const std::string &chain_id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].second == chain_id) out.push_back(i);
  }
  return out;
}

bool SimNetwork::partitioned(std::uint64_t tick, std::size_t a, std::size_t b) const {
  for (const PartitionWindow &window : partitions_) {
    if (tick < window.from_tick || tick > window.to_tick) continue;
    int group_a = -1, group_b = -1;
    for (std::size_t g = 0; g < window.groups.size(); ++g) {
      if (window.groups[g].count(nodes_[a].first) > 0) group_a = static_cast<int>(g);
      if (window.groups[g].count(nodes_[b].first) > 0) group_b = static_cast<int>(g);
    }
    // Nodes in different declared groups cannot talk; nodes missing from
    // every group are unrestricted.
    if (group_a >= 0 && group_b >= 0 && group_a != group_b) return true;
  }
  return false;
}

std::uint64_t SimNetwork::link_delay(std::size_t from, std::size_t to) const {
  auto it = link_delays_.find({from, to});
  return it == link_delays_.end() ? default_delay_ : it->second;
}

std::size_t SimNetwork::broadcast(std::uint64_t now, std::size_t origin, MsgBody body,
                                  Journal &journal) {
  const std::string &chain_id = nodes_[origin].second;
  if (frozen(chain_id)) {
    journal.emit(now, chain_id, nodes_[origin].first, "message.dropped-frozen",
                 {{"reason", "network frozen"}});
    return 0;
  }
  std::size_t queued = 0;
  for (std::size_t to = 0; to < nodes_.size(); ++to) {
    if (to == origin || nodes_[to].second != chain_id) continue;
    if (partitioned(now, origin, to)) continue;
    Message m;
    m.seq = next_seq_++;
    m.deliver_tick = now + 1 + link_delay(origin, to);
    m.chain_id = chain_id;
    m.from = origin;
    m.to = to;
    m.body = body;
    queue_.emplace(std::make_pair(m.deliver_tick, m.seq), std::move(m));
    ++queued;
  }
  return queued;
}

void SimNetwork::send(std::uint64_t now, std::size_t from, std::size_t to, MsgBody body) {
  Message m;
  m.seq = next_seq_++;
  m.deliver_tick = now + 1 + link_delay(from, to);
  m.chain_id = nodes_[to].second;
  m.from = from;
  m.to = to;
  m.body = std::move(body);
  queue_.emplace(std::make_pair(m.deliver_tick, m.seq), std::move(m));
}

std::vector<Message> SimNetwork::collect_due(std::uint64_t now) {
  std::vector<Message> due;
  for (auto it = queue_.begin(); it != queue_.end();) {
    if (it->first.first > now) break;
    if (frozen(it->second.chain_id)) {
      ++it;  // retained until the chain thaws
      continue;
    }
    due.push_back(std::move(it->second));
    it = queue_.erase(it);
  }
  return due;
}

}  // namespace govsim::sim
