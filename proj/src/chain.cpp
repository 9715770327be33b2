/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/chain.hpp"

#include <algorithm>

namespace govsim::chain {

ChainState::ChainState(LedgerState genesis_state) {
  chain_id_ = genesis_state.chain_id;
  Block genesis;
  genesis.header.parent = Digest{};
  genesis.header.height = 0;
  genesis.header.merkle_root = transactions_merkle_root({});
  genesis.header.protocol_version = genesis_state.registries.policy.base_version;
  genesis_hash_ = genesis.hash();
  genesis_state.height = 0;
  blocks_[genesis_hash_] = std::move(genesis);
  states_[genesis_hash_] = std::move(genesis_state);
  tip_ = genesis_hash_;
  finalized_digest_ = genesis_hash_;
  finalized_height_ = 0;
}

const Block &ChainState::block(const Digest &h) const {
  auto it = blocks_.find(h);
  if (it == blocks_.end()) throw Error("chain.unknown-block", "no block " + h.hex());
  return it->second;
}

const LedgerState &ChainState::state_at(const Digest &h) const {
  auto it = states_.find(h);
  if (it == states_.end()) throw Error("chain.unknown-block", "no state for block " + h.hex());
  return it->second;
}

std::uint64_t ChainState::tip_height() const { return block(tip_).header.height; }

InsertResult ChainState::insert(const Block &blk, const NodeRules &rules) {
  Digest h = blk.hash();
  if (blocks_.count(h) > 0) {
    return {InsertStatus::Duplicate, "", false};
  }
  auto parent_it = states_.find(blk.header.parent);
  if (parent_it == states_.end()) {
    return {InsertStatus::Orphan, "block.orphan", false};
  }
  LedgerState next;
  try {
    next = apply_block(parent_it->second, blk, rules);
  } catch (const Error &e) {
    return {InsertStatus::Rejected, e.code(), false};
  }
  blocks_[h] = blk;
  states_[h] = std::move(next);
  children_[blk.header.parent].push_back(h);
  Digest before = tip_;
  recompute_tip();
  bool reorged = tip_ != before && !descends_from(tip_, before);
  return {InsertStatus::Added, "", reorged};
}

bool ChainState::descends_from(const Digest &descendant, const Digest &ancestor) const {
  Digest cur = descendant;
  for (;;) {
    if (cur == ancestor) return true;
    auto it = blocks_.find(cur);
    if (it == blocks_.end() || it->second.header.height == 0) return false;
    cur = it->second.header.parent;
  }
}

std::vector<Digest> ChainState::leaf_tips() const {
  std::vector<Digest> tips;
  for (const auto &[h, blk] : blocks_) {
    if (children_.find(h) == children_.end()) tips.push_back(h);
  }
  return tips;
}

void ChainState::recompute_tip() {
  // Longest chain among branches that keep the finalized block; ties break
  // toward the smaller tip hash. blocks_ iterates in digest order, so the
  // first tip at the maximum height wins the tie automatically.
  Digest best = finalized_digest_;
  std::uint64_t best_height = finalized_height_;
  for (const Digest &candidate : leaf_tips()) {
    if (!descends_from(candidate, finalized_digest_)) continue;
    std::uint64_t h = block(candidate).header.height;
    if (h > best_height) {
      best = candidate;
      best_height = h;
    } else if (h == best_height && candidate < best) {
      best = candidate;
    }
  }
  tip_ = best;
}

std::vector<Digest> ChainState::canonical_chain() const {
  std::vector<Digest> chain;
  Digest cur = tip_;
  for (;;) {
    chain.push_back(cur);
    const Block &blk = block(cur);
    if (blk.header.height == 0) break;
    cur = blk.header.parent;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::optional<Digest> ChainState::canonical_at(std::uint64_t height) const {
  if (height > tip_height()) return std::nullopt;
  Digest cur = tip_;
  for (;;) {
    const Block &blk = block(cur);
    if (blk.header.height == height) return cur;
    if (blk.header.height == 0) return std::nullopt;
    cur = blk.header.parent;
  }
}

bool ChainState::advance_finality(std::uint64_t height, const Digest &digest) {
  if (height < finalized_height_) return false;
  if (height == finalized_height_) return digest == finalized_digest_;
  auto on_chain = canonical_at(height);
  if (!on_chain || *on_chain != digest) return false;
  if (!descends_from(digest, finalized_digest_)) return false;
  finalized_height_ = height;
  finalized_digest_ = digest;
  return true;
}

TraceResult ChainState::trace_sender(const Digest &tx_hash) const {
  for (const Digest &h : canonical_chain()) {
    const Block &blk = block(h);
    if (blk.header.height > finalized_height_) break;
    for (const tx::Transaction &t : blk.transactions) {
      if (t.hash() != tx_hash) continue;
      TraceResult result;
      result.address = t.sender;
      const LedgerState &tip = tip_state();
      if (tip.registries.participation.mode == gov::Mode::Permissioned) {
        const Account *account = tip.find_account(t.sender);
        if (account && account->identity) result.identity = account->identity;
      }
      return result;
    }
  }
  throw Error("trace.unknown-tx",
              "transaction " + tx_hash.hex() + " is not in any finalized block");
}

}  // namespace govsim::chain

namespace govsim::consensus {

Digest choose_canonical_tip(const std::map<Digest, Block> &blocks) {
  if (blocks.empty()) throw Error("forkchoice.empty", "empty block tree");
  std::map<Digest, bool> has_child;
  for (const auto &[h, blk] : blocks) {
    if (blk.header.height > 0) has_child[blk.header.parent] = true;
  }
  Digest best;
  std::uint64_t best_height = 0;
  bool found = false;
  for (const auto &[h, blk] : blocks) {
    if (has_child.count(h) > 0) continue;
    if (!found || blk.header.height > best_height ||
        (blk.header.height == best_height && h < best)) {
      best = h;
      best_height = blk.header.height;
      found = true;
    }
  }
  return best;
}

std::uint64_t finalized_height_simple(const gov::FinalityPolicy &policy,
                                      std::uint64_t tip_height) {
  switch (policy.mode) {
    case gov::FinalityMode::Immediate:
      return tip_height;
    case gov::FinalityMode::KDeep:
      return tip_height > policy.k ? tip_height - policy.k : 0;
    case gov::FinalityMode::SupermajorityVote:
      break;
  }
  throw Error("finality.mode", "supermajority finality needs validator votes");
}

std::uint64_t supermajority_finalized_height(const ChainState &chain,
                                             const std::map<Address, Digest> &votes,
                                             const std::map<Address, std::uint64_t> &weights,
                                             const Rational &quorum) {
  unsigned __int128 total = 0;
  for (const auto &[addr, w] : weights) total += w;
  if (total == 0) return 0;
  std::vector<Digest> canonical = chain.canonical_chain();
  for (auto it = canonical.rbegin(); it != canonical.rend(); ++it) {
    const Block &blk = chain.block(*it);
    if (blk.header.height == 0) break;
    unsigned __int128 support = 0;
    for (const auto &[validator, affirmed_tip] : votes) {
      auto weight_it = weights.find(validator);
      if (weight_it == weights.end()) continue;
      if (chain.contains(affirmed_tip) && chain.descends_from(affirmed_tip, *it)) {
        support += weight_it->second;
      }
    }
    // Strictly more than `quorum` of the total weight affirms this block.
    if (support * quorum.den > total * quorum.num) {
      return blk.header.height;
    }
  }
  return 0;
}

}  // namespace govsim::consensus
