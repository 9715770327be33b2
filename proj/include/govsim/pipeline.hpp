/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "govsim/ledger.hpp"

namespace govsim::tx {

struct SubmitResult {
  bool accepted = false;
  std::string reason;  // stable code, e.g. "filter.scam-list-check"
};

/// Per-node pending-transaction pool, keyed by (sender, nonce). Only
/// filter-accepted transactions enter; rule changes re-validate the pool.
class TxPool {
 public:
  SubmitResult submit(const chain::LedgerState &state, const Transaction &t);

  /// Re-runs validity over the whole pool (after a rule change or a new
  /// block) and drops violators. Returns the dropped transactions.
  std::vector<Transaction> sweep(const chain::LedgerState &state);

  bool contains(const Address &sender, std::uint64_t nonce) const {
    return pending_.count({sender, nonce}) > 0;
  }
  void erase(const Address &sender, std::uint64_t nonce) { pending_.erase({sender, nonce}); }
  std::size_t size() const { return pending_.size(); }
  const std::map<std::pair<Address, std::uint64_t>, Transaction> &pending() const {
    return pending_;
  }

 private:
  std::map<std::pair<Address, std::uint64_t>, Transaction> pending_;
};

/// Deterministic candidate selection: fee descending, then sender address
/// ascending, then nonce ascending; a transaction is included only if it
/// still applies on top of the previously selected ones.
std::vector<Transaction> select_candidates(const chain::LedgerState &tip_state,
                                           const TxPool &pool, std::uint64_t max_txs);

/// Builds and signs a candidate block on the given tip. An empty pool
/// yields a valid empty block.
chain::Block build_candidate_block(const chain::LedgerState &tip_state,
                                   const Digest &parent_hash, const TxPool &pool,
                                   const crypto::KeyPair &validator,
                                   const chain::NodeRules &rules, std::uint64_t max_txs,
                                   std::uint32_t shard_id);

}  // namespace govsim::tx
