/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/pipeline.hpp"

#include <algorithm>

#include "govsim/block.hpp"
#include "govsim/governance.hpp"

namespace govsim::tx {

SubmitResult TxPool::submit(const chain::LedgerState &state, const Transaction &t) {
  std::string reason =
      chain::detail::check_transaction(state, t, chain::detail::NonceRule::AllowFuture);
  if (!reason.empty()) {
    return {false, reason};
  }
  auto key = std::make_pair(t.sender, t.nonce);
  if (pending_.count(key) > 0) {
    return {false, "tx.duplicate"};
  }
  pending_[key] = t;
  return {true, {}};
}

std::vector<Transaction> TxPool::sweep(const chain::LedgerState &state) {
  std::vector<Transaction> dropped;
  for (auto it = pending_.begin(); it != pending_.end();) {
    // A nonce below the account's next is already included or stale.
    const chain::Account *sender = state.find_account(it->first.first);
    bool stale = sender && it->first.second < sender->next_nonce;
    if (stale || !chain::detail::check_transaction(state, it->second,
                                                  chain::detail::NonceRule::AllowFuture)
                     .empty()) {
      dropped.push_back(it->second);
      it = pending_.erase(it);
    } else {
      ++it;
    }
  }
  return dropped;
}

std::vector<Transaction> select_candidates(const chain::LedgerState &tip_state,
                                           const TxPool &pool, std::uint64_t max_txs) {
  std::vector<Transaction> ordered;
  ordered.reserve(pool.size());
  for (const auto &[key, t] : pool.pending()) ordered.push_back(t);
  std::stable_sort(ordered.begin(), ordered.end(), [](const Transaction &a, const Transaction &b) {
    if (a.fee != b.fee) return a.fee > b.fee;
    if (a.sender != b.sender) return a.sender < b.sender;
    return a.nonce < b.nonce;
  });

  std::vector<Transaction> selected;
  chain::LedgerState scratch = tip_state;
  scratch.height = tip_state.height + 1;  // candidates apply at the next height
  std::vector<bool> taken(ordered.size(), false);
  // Repeated passes so a sender's nonce chain can follow even when a later
  // nonce carries the higher fee.
  bool progressed = true;
  while (progressed && selected.size() < max_txs) {
    progressed = false;
    for (std::size_t i = 0; i < ordered.size() && selected.size() < max_txs; ++i) {
      if (taken[i]) continue;
      chain::LedgerState attempt = scratch;
      try {
        chain::detail::apply_transaction(attempt, ordered[i]);
      } catch (const Error &) {
        continue;  // not applicable on top of the current selection
      }
      scratch = std::move(attempt);
      selected.push_back(ordered[i]);
      taken[i] = true;
      progressed = true;
    }
  }
  return selected;
}

chain::Block build_candidate_block(const chain::LedgerState &tip_state,
                                   const Digest &parent_hash, const TxPool &pool,
                                   const crypto::KeyPair &validator,
                                   const chain::NodeRules &rules, std::uint64_t max_txs,
                                   std::uint32_t shard_id) {
  chain::Block block;
  block.transactions = select_candidates(tip_state, pool, max_txs);
  block.header.parent = parent_hash;
  block.header.height = tip_state.height + 1;
  block.header.merkle_root = chain::transactions_merkle_root(block.transactions);
  block.header.validator = Address::from_public_key(validator.public_key);
  block.header.protocol_version =
      gov::producer_version(tip_state.registries, rules, block.header.height);
  block.header.shard_id = shard_id;
  chain::sign_block(block, validator);
  return block;
}

}  // namespace govsim::tx
