/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "govsim/consensus.hpp"
#include "govsim/ledger.hpp"

namespace govsim::chain {

enum class InsertStatus { Added, Duplicate, Orphan, Rejected };

struct InsertResult {
  InsertStatus status = InsertStatus::Rejected;
  std::string reason;       // stable code when rejected
  bool reorged = false;     // canonical tip moved to another branch
};

struct TraceResult {
  Address address;
  std::optional<std::string> identity;
};

/// One node's replica: the block tree, the post-state of every block, and
/// the finality bookmark. Fork choice is longest-chain over branches that
/// contain the finalized block, ties broken by smaller tip hash, so a
/// finalized block is never abandoned by construction.
class ChainState {
 public:
  ChainState() = default;
  /// Builds the genesis block embedding `genesis_state`.
  explicit ChainState(LedgerState genesis_state);

  const std::string &chain_id() const { return chain_id_; }
  Digest genesis_hash() const { return genesis_hash_; }

  InsertResult insert(const Block &block, const NodeRules &rules);

  bool contains(const Digest &h) const { return blocks_.count(h) > 0; }
  const Block &block(const Digest &h) const;
  const LedgerState &state_at(const Digest &h) const;

  Digest tip() const { return tip_; }
  std::uint64_t tip_height() const;
  const LedgerState &tip_state() const { return state_at(tip_); }

  /// Canonical chain digests, genesis first.
  std::vector<Digest> canonical_chain() const;
  /// Block digest at `height` on the canonical chain, if reached.
  std::optional<Digest> canonical_at(std::uint64_t height) const;
  bool descends_from(const Digest &descendant, const Digest &ancestor) const;
  /// All current leaves of the tree (blocks without children).
  std::vector<Digest> leaf_tips() const;

  std::uint64_t finalized_height() const { return finalized_height_; }
  Digest finalized_digest() const { return finalized_digest_; }
  /// Advances the finality bookmark. Returns false (and changes nothing) if
  /// `digest` is not on the canonical chain at `height` or would move
  /// finality backwards — the caller records that as a safety violation.
  bool advance_finality(std::uint64_t height, const Digest &digest);

  /// Sender lookup for a transaction in a finalized block. Identity is only
  /// reported on permissioned chains.
  TraceResult trace_sender(const Digest &tx_hash) const;

 private:
  void recompute_tip();

  std::string chain_id_;
  Digest genesis_hash_;
  std::map<Digest, Block> blocks_;
  std::map<Digest, LedgerState> states_;
  std::map<Digest, std::vector<Digest>> children_;
  Digest tip_;
  std::uint64_t finalized_height_ = 0;
  Digest finalized_digest_;
};

}  // namespace govsim::chain

namespace govsim::consensus {

using chain::Block;
using chain::ChainState;

/// Longest-chain fork choice over arbitrary block sets; standalone flavour
/// of the rule ChainState applies internally. Ties break toward the smaller
/// tip hash.
Digest choose_canonical_tip(const std::map<Digest, Block> &blocks);

/// Finalized height under k-deep / immediate policies.
std::uint64_t finalized_height_simple(const gov::FinalityPolicy &policy,
                                      std::uint64_t tip_height);

/// GRANDPA-style supermajority: greatest height on `chain`'s canonical
/// chain where validators controlling strictly more than `quorum` of the
/// total weight affirm that block (a vote for a tip affirms all its
/// ancestors). `votes` maps validator -> affirmed tip.
std::uint64_t supermajority_finalized_height(const ChainState &chain,
                                             const std::map<Address, Digest> &votes,
                                             const std::map<Address, std::uint64_t> &weights,
                                             const Rational &quorum);

}  // namespace govsim::consensus
