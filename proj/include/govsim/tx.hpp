/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "govsim/gov_types.hpp"

namespace govsim::tx {

using chain::Address;
using chain::BlockHeader;
using chain::Digest;
using chain::LockPurpose;
using chain::PublicKey;
using chain::Signature;

// ---------------------------------------------------------------------------
// Payloads
// ---------------------------------------------------------------------------

struct Transfer {
  Address to;
  std::uint64_t amount = 0;
};

struct LockTokens {
  std::uint64_t amount = 0;
  std::uint64_t duration_blocks = 0;
  LockPurpose purpose = LockPurpose::VoteWeight;
};

struct Join {
  std::optional<std::string> invite_code;
  std::optional<std::string> identity;
};

struct SubmitProposal {
  std::string description;
  gov::ProposalAction action;
  gov::VotingScheme scheme;
  std::uint64_t voting_deadline = 0;
  gov::ThresholdPolicy threshold;
};

struct CastVote {
  std::uint64_t proposal_id = 0;
  gov::VoteChoice choice = gov::VoteChoice::Yes;
  std::uint64_t votes_cast = 1;
};

struct Delegate {
  std::uint64_t proposal_id = 0;
  Address target;
};

struct RevokeDelegation {
  std::uint64_t proposal_id = 0;
};

enum class DictatorAction { Cancel, FastTrack };

struct DictatorOverride {
  std::uint64_t proposal_id = 0;
  DictatorAction action = DictatorAction::Cancel;
};

struct SlashLock {
  Address target;
  std::uint64_t lock_id = 0;
};

struct ScamListAdd {
  Address target;
  std::string note;
};

struct SocialContractSet {
  std::string maintainer_spec;
};

struct ContractFreeze {
  std::string target;
  bool freeze = true;
};

/// Relay-chain inclusion of a shard block header.
struct RelayInclude {
  BlockHeader shard_header;
};

/// Import of a signed cross-chain ballot result.
struct CrossChainImport {
  gov::CrossChainResult result;
};

using TxPayload = std::variant<Transfer, LockTokens, Join, SubmitProposal, CastVote, Delegate,
                               RevokeDelegation, DictatorOverride, SlashLock, ScamListAdd,
                               SocialContractSet, ContractFreeze, RelayInclude, CrossChainImport>;

gov::PayloadKind payload_kind(const TxPayload &payload);
std::string payload_name(const TxPayload &payload);

// ---------------------------------------------------------------------------
// Transaction
// ---------------------------------------------------------------------------

struct Transaction {
  std::string chain_id;
  Address sender;
  PublicKey sender_public_key;
  TxPayload payload;
  std::uint64_t nonce = 0;
  std::uint64_t fee = 0;
  Signature signature;

  /// Canonical bytes covered by the signature (everything but the signature).
  Bytes signing_bytes() const;
  Digest hash() const { return crypto::hash(signing_bytes()); }
};

Transaction make_transaction(const std::string &chain_id, const crypto::KeyPair &sender,
                             TxPayload payload, std::uint64_t nonce, std::uint64_t fee);

/// Signature + sender/public-key consistency. Malformed inputs verify false.
bool verify_transaction(const Transaction &t);

}  // namespace govsim::tx
