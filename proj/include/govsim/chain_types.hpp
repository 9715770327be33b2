/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "govsim/crypto.hpp"

namespace govsim::chain {

using crypto::Address;
using crypto::Digest;
using crypto::PublicKey;
using crypto::Signature;

enum class LockPurpose {
  ValidatorCandidacy,
  ProposalDeposit,
  VoteWeight,
};

std::string to_string(LockPurpose p);
LockPurpose lock_purpose_from_string(const std::string &s);

/// Time-locked tokens. A lock is active while current height < unlock_height.
struct TokenLock {
  std::uint64_t id = 0;
  std::uint64_t amount = 0;
  std::uint64_t unlock_height = 0;
  LockPurpose purpose = LockPurpose::VoteWeight;

  bool active_at(std::uint64_t height) const { return height < unlock_height; }

  friend bool operator==(const TokenLock &, const TokenLock &) = default;
};

struct Account {
  Address address;
  std::uint64_t balance = 0;
  std::vector<TokenLock> locks;
  std::uint64_t next_nonce = 0;
  std::optional<PublicKey> public_key;
  /// Real-world identity label; only populated on permissioned chains.
  std::optional<std::string> identity;

  std::uint64_t locked_at(std::uint64_t height) const;
  std::uint64_t spendable_at(std::uint64_t height) const;
};

struct BlockHeader {
  Digest parent;
  std::uint64_t height = 0;
  Digest merkle_root;
  Address validator;
  std::uint32_t protocol_version = 1;
  std::uint32_t shard_id = 0;
};

struct EventRecord {
  std::uint64_t height = 0;
  Digest tx_hash;
  std::string topic;
  std::map<std::string, std::string> payload;
};

/// Token supply accounting; reconciles conservation:
///   sum(balances) == initial + minted - slashed - destroyed_fees
struct SupplyLedger {
  std::uint64_t initial = 0;
  std::uint64_t minted = 0;
  std::uint64_t slashed = 0;
  std::uint64_t destroyed_fees = 0;

  std::uint64_t expected_total() const { return initial + minted - slashed - destroyed_fees; }
};

}  // namespace govsim::chain
