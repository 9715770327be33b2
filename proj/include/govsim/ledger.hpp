/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "govsim/block.hpp"
#include "govsim/gov_types.hpp"

namespace govsim::chain {

/// Per-node view of which upgrades the node's software has adopted.
struct NodeRules {
  std::uint32_t rule_version = 1;
  std::set<std::uint32_t> enacted_versions;

  bool enacted(std::uint32_t version) const {
    return version <= rule_version || enacted_versions.count(version) > 0;
  }
};

/// The ledger of one chain at one block: accounts, governance registries,
/// supply accounting, and the block-derived event log. A pure value;
/// transitions return new states.
struct LedgerState {
  std::string chain_id;
  std::uint64_t height = 0;
  std::map<Address, Account> accounts;
  gov::Registries registries;
  std::vector<EventRecord> events;
  std::uint64_t next_lock_id = 1;
  SupplyLedger supply;

  const Account *find_account(const Address &a) const;
  Account &account(const Address &a);  // creates on first touch

  std::uint64_t spendable(const Address &a) const;
  std::uint64_t total_balance() const;

  /// Hash of the canonical sorted serialization of accounts + registries.
  /// Chain id, height, supply counters, and the event log are excluded so
  /// snapshot import and migration preserve the hash.
  Digest state_hash() const;

  void emit(std::string topic, std::map<std::string, std::string> payload,
            Digest tx_hash = Digest{});
};

// ---------------------------------------------------------------------------
// Chain-state transitions (pure: by-value in, new state out)
// ---------------------------------------------------------------------------

/// Validates and applies a block on top of `state`. Whole-block atomicity:
/// any invalid transaction rejects the block and the original state stands.
/// Throws Error with a stable code on rejection.
LedgerState apply_block(const LedgerState &state, const Block &block, const NodeRules &rules);

/// Creates a token lock; returns the new state and the lock id.
/// Throws Error("lock.insufficient") naming the shortfall.
std::pair<LedgerState, std::uint64_t> lock_tokens(LedgerState state, const Address &address,
                                                  std::uint64_t amount,
                                                  std::uint64_t duration_blocks,
                                                  LockPurpose purpose);

/// Destroys an active lock's tokens, shrinking total supply.
LedgerState slash_lock(LedgerState state, const Address &address, std::uint64_t lock_id);

/// Events matching all given filters in chain order. Throws on an inverted
/// height range.
std::vector<EventRecord> extract_logs(const LedgerState &state,
                                      const std::optional<std::string> &topic,
                                      const std::optional<std::pair<std::uint64_t, std::uint64_t>>
                                          &height_range);

/// Consensus-side reward/fee distribution for an accepted block; exposed for
/// direct testing, also runs inside apply_block.
LedgerState distribute_incentives(LedgerState state, const Address &validator,
                                  std::uint64_t total_fees);

bool conservation_holds(const LedgerState &state);

namespace detail {
/// Exact: the nonce must be the account's next (block application).
/// AllowFuture: later nonces may wait in the pool; only stale ones fail.
enum class NonceRule { Exact, AllowFuture };

/// In-place transaction application used by apply_block after stateless
/// checks passed. Throws on any invalid transaction.
void apply_transaction(LedgerState &state, const tx::Transaction &t);
/// Full validity check of one transaction against a state (signature, nonce,
/// funds, filter rules, freezes). Returns a stable reason code or empty.
std::string check_transaction(const LedgerState &state, const tx::Transaction &t,
                              NonceRule nonce_rule = NonceRule::Exact);
}  // namespace detail

}  // namespace govsim::chain
