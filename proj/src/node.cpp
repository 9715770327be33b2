/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/node.hpp"

#include "govsim/governance.hpp"

namespace govsim::sim {

Node::Node(std::string id, std::size_t index, crypto::KeyPair keys, chain::LedgerState genesis,
           std::uint32_t shard_id)
    : id_(std::move(id)),
      index_(index),
      keys_(keys),
      address_(Address::from_public_key(keys.public_key)),
      shard_id_(shard_id),
      chain_(std::move(genesis)) {
  rules_.rule_version = chain_.tip_state().registries.policy.base_version;
}

tx::SubmitResult Node::submit_local(const tx::Transaction &t, std::uint64_t tick,
                                    Journal &journal) {
  tx::SubmitResult result = pool_.submit(chain_.tip_state(), t);
  if (result.accepted) {
    // Dry-run against the next height so kernel-level preconditions
    // (membership, deposits, deadlines) reject here, with their reason.
    // Earlier pooled nonces of the same sender are replayed first.
    chain::LedgerState scratch = chain_.tip_state();
    scratch.height += 1;
    try {
      const chain::Account *sender = scratch.find_account(t.sender);
      std::uint64_t next = sender ? sender->next_nonce : 0;
      bool chain_complete = true;
      for (; next < t.nonce && chain_complete; ++next) {
        auto it = pool_.pending().find({t.sender, next});
        if (it == pool_.pending().end()) {
          chain_complete = false;  // gap: defer validation to selection time
        } else {
          chain::detail::apply_transaction(scratch, it->second);
        }
      }
      if (chain_complete) chain::detail::apply_transaction(scratch, t);
    } catch (const Error &e) {
      pool_.erase(t.sender, t.nonce);
      result = {false, e.code()};
    }
  }
  if (!result.accepted) {
    journal.emit(tick, chain_.chain_id(), id_, "tx.rejected",
                 {{"reason", result.reason}, {"tx", t.hash().hex()}});
  }
  return result;
}

void Node::insert_and_settle(const chain::Block &block, std::uint64_t tick, Journal &journal) {
  chain::InsertResult result = chain_.insert(block, rules_);
  switch (result.status) {
    case chain::InsertStatus::Added:
      break;
    case chain::InsertStatus::Orphan:
      orphans_[block.header.parent].push_back(block);
      return;
    case chain::InsertStatus::Duplicate:
      return;
    case chain::InsertStatus::Rejected:
      journal.emit(tick, chain_.chain_id(), id_, "block.rejected",
                   {{"reason", result.reason}, {"block", block.hash().hex()}});
      return;
  }
  // New canonical knowledge: re-validate the pool and adopt any orphans
  // that were waiting for this parent.
  pool_.sweep(chain_.tip_state());
  auto it = orphans_.find(block.hash());
  if (it != orphans_.end()) {
    std::vector<chain::Block> waiting = std::move(it->second);
    orphans_.erase(it);
    for (const chain::Block &child : waiting) {
      insert_and_settle(child, tick, journal);
    }
  }
}

void Node::receive(const Message &message, std::uint64_t tick, Journal &journal) {
  if (const auto *gossip = std::get_if<TxGossip>(&message.body)) {
    tx::SubmitResult result = pool_.submit(chain_.tip_state(), gossip->transaction);
    if (!result.accepted && result.reason != "tx.duplicate") {
      journal.emit(tick, chain_.chain_id(), id_, "tx.rejected",
                   {{"reason", result.reason}, {"tx", gossip->transaction.hash().hex()}});
    }
  } else if (const auto *gossip = std::get_if<BlockGossip>(&message.body)) {
    insert_and_settle(gossip->block, tick, journal);
  } else if (const auto *vote = std::get_if<FinalityVote>(&message.body)) {
    auto it = votes_.find(vote->validator);
    if (it == votes_.end() || it->second.first <= vote->round) {
      votes_[vote->validator] = {vote->round, vote->tip};
    }
  }
  // CrossChainMsg is handled by the simulation bridge, not the node.
}

std::optional<chain::Block> Node::try_produce(std::uint64_t round, std::uint64_t seed,
                                              std::uint64_t tick, Journal &journal) {
  const chain::LedgerState &tip = chain_.tip_state();
  Address selected;
  try {
    selected = consensus::select_validator(tip, round, seed);
  } catch (const Error &e) {
    journal.emit(tick, chain_.chain_id(), id_, "round.skipped", {{"reason", e.code()}});
    return std::nullopt;
  }
  if (selected != address_) return std::nullopt;

  chain::Block block = tx::build_candidate_block(
      tip, chain_.tip(), pool_, keys_, rules_, tip.registries.policy.max_candidate_txs, shard_id_);
  insert_and_settle(block, tick, journal);
  return block;
}

FinalityVote Node::current_vote(std::uint64_t round) const {
  return FinalityVote{address_, chain_.tip(), chain_.tip_height(), round};
}

void Node::update_finality(std::uint64_t tick, Journal &journal) {
  const gov::FinalityPolicy &policy = chain_.tip_state().registries.policy.finality;
  std::uint64_t target = chain_.finalized_height();
  if (policy.mode == gov::FinalityMode::SupermajorityVote) {
    std::map<Address, Digest> tips;
    for (const auto &[validator, vote] : votes_) tips[validator] = vote.second;
    tips[address_] = chain_.tip();  // honest self-affirmation
    target = consensus::supermajority_finalized_height(
        chain_, tips, consensus::finality_weights(chain_.tip_state()), policy.quorum);
  } else {
    target = consensus::finalized_height_simple(policy, chain_.tip_height());
  }
  if (target <= chain_.finalized_height()) return;
  auto digest = chain_.canonical_at(target);
  if (!digest || !chain_.advance_finality(target, *digest)) {
    violations_.push_back("finality advance refused at height " + std::to_string(target));
    return;
  }
  journal.emit(tick, chain_.chain_id(), id_, "finality.advanced",
               {{"height", std::to_string(target)},
                {"mode", gov::to_string(policy.mode)},
                {"block", digest->hex()}});
}

void Node::check_safety() {
  auto at = chain_.canonical_at(chain_.finalized_height());
  if (!at || *at != chain_.finalized_digest()) {
    violations_.push_back("finalized block replaced at height " +
                          std::to_string(chain_.finalized_height()));
  }
  if (!chain::conservation_holds(chain_.tip_state())) {
    violations_.push_back("token conservation broken at height " +
                          std::to_string(chain_.tip_height()));
  }
}

void Node::enact(std::uint64_t proposal_id) {
  rules_ = gov::enact_upgrade(chain_.tip_state(), rules_, proposal_id);
}

}  // namespace govsim::sim
