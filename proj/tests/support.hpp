/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <vector>

#include "govsim/chain.hpp"
#include "govsim/governance.hpp"
#include "govsim/pipeline.hpp"

namespace govsim::test {

struct Actor {
  crypto::KeyPair keys;
  chain::Address address;
};

inline Actor actor(const std::string &label, std::uint64_t seed = 7) {
  Actor a;
  a.keys = crypto::KeyPair::derive(seed, label);
  a.address = chain::Address::from_public_key(a.keys.public_key);
  return a;
}

/// Minimal single-chain genesis for kernel-level tests.
class GenesisBuilder {
 public:
  explicit GenesisBuilder(std::string chain_id = "test") {
    state_.chain_id = std::move(chain_id);
    auto &policy = state_.registries.policy;
    policy.mode = gov::Mode::Permissionless;
    policy.patterns = {gov::Pattern::ProtocolUpgrade, gov::Pattern::AccountabilityTracer,
                       gov::Pattern::BenevolentDictator, gov::Pattern::ValidatorSelection};
    policy.selection.mode = gov::SelectionMode::RoundRobin;
    policy.finality.mode = gov::FinalityMode::KDeep;
    policy.finality.k = 6;
    state_.registries.participation.mode = gov::Mode::Permissionless;
  }

  GenesisBuilder &mode(gov::Mode m) {
    state_.registries.policy.mode = m;
    state_.registries.participation.mode = m;
    return *this;
  }

  GenesisBuilder &pattern(gov::Pattern p) {
    state_.registries.policy.patterns.insert(p);
    return *this;
  }

  GenesisBuilder &account(const Actor &a, std::uint64_t balance,
                          const std::string &identity = "") {
    chain::Account &account = state_.account(a.address);
    account.balance = balance;
    account.public_key = a.keys.public_key;
    if (!identity.empty()) account.identity = identity;
    state_.registries.participation.members[a.address] = identity;
    return *this;
  }

  GenesisBuilder &role(const Actor &a, gov::Role r) {
    state_.registries.roles[a.address] = r;
    return *this;
  }

  GenesisBuilder &authority(const Actor &a) {
    state_.registries.policy.selection.authorities.push_back(a.address);
    return *this;
  }

  GenesisBuilder &invite(const std::string &code) {
    state_.registries.participation.invites.insert(code);
    return *this;
  }

  GenesisBuilder &filter(gov::FilterRule rule) {
    state_.registries.policy.filters.push_back(std::move(rule));
    state_.registries.policy.patterns.insert(gov::Pattern::TransactionFilter);
    return *this;
  }

  gov::GovernancePolicy &policy() { return state_.registries.policy; }

  chain::LedgerState build() {
    chain::LedgerState out = state_;
    out.supply.initial = out.total_balance();
    return out;
  }

 private:
  chain::LedgerState state_;
};

/// Signs and applies a block containing `txs` on top of `chain`'s tip,
/// produced by `validator`. Fails the test on rejection.
inline chain::Block make_block(const chain::ChainState &chain, const Actor &validator,
                               std::vector<tx::Transaction> txs,
                               const chain::NodeRules &rules = {}) {
  chain::Block block;
  block.transactions = std::move(txs);
  block.header.parent = chain.tip();
  block.header.height = chain.tip_height() + 1;
  block.header.merkle_root = chain::transactions_merkle_root(block.transactions);
  block.header.validator = validator.address;
  block.header.protocol_version =
      gov::producer_version(chain.tip_state().registries, rules, block.header.height);
  block.header.shard_id = 0;
  chain::sign_block(block, validator.keys);
  return block;
}

}  // namespace govsim::test
