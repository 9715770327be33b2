/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/consensus.hpp"

#include <algorithm>

namespace govsim::consensus {

namespace {

/// Uniform 64-bit draw keyed by (chain_id, round, seed); the first eight
/// bytes of the hash, big-endian.
std::uint64_t lottery_draw(const std::string &chain_id, std::uint64_t round, std::uint64_t seed) {
  std::string material = chain_id + ":" + std::to_string(round) + ":" + std::to_string(seed);
  crypto::Digest digest = crypto::hash(material);
  std::uint64_t value = 0;
  for (int i = 0; i < 8; ++i) value = (value << 8) | digest.bytes[i];
  return value;
}

}  // namespace

std::map<Address, std::uint64_t> selection_stakes(const LedgerState &state) {
  std::map<Address, std::uint64_t> stakes;
  for (const auto &[addr, account] : state.accounts) {
    bool candidate = false;
    std::uint64_t stake = 0;
    for (const chain::TokenLock &lock : account.locks) {
      if (!lock.active_at(state.height)) continue;
      if (lock.purpose == chain::LockPurpose::ValidatorCandidacy) {
        candidate = true;
        stake += lock.amount;
      } else if (lock.purpose == chain::LockPurpose::VoteWeight) {
        stake += lock.amount;
      }
    }
    if (candidate && stake > 0) stakes[addr] = stake;
  }
  return stakes;
}

Address select_validator(const LedgerState &state, std::uint64_t round, std::uint64_t seed) {
  const gov::ValidatorSelectionPolicy &policy = state.registries.policy.selection;
  if (policy.mode == gov::SelectionMode::ProofOfStake) {
    std::map<Address, std::uint64_t> stakes = selection_stakes(state);
    std::uint64_t total = 0;
    for (const auto &[addr, stake] : stakes) total += stake;
    if (total == 0) {
      throw Error("consensus.no-validator", "no account holds an active candidacy lock");
    }
    // Cumulative-interval sampling over addresses in their natural order.
    std::uint64_t draw = lottery_draw(state.chain_id, round, seed) % total;
    std::uint64_t cumulative = 0;
    for (const auto &[addr, stake] : stakes) {
      cumulative += stake;
      if (draw < cumulative) return addr;
    }
    return stakes.rbegin()->first;  // unreachable
  }
  if (policy.authorities.empty()) {
    throw Error("consensus.no-validator", "authority list is empty");
  }
  return policy.authorities[round % policy.authorities.size()];
}

bool is_eligible_validator(const LedgerState &state, const Address &validator) {
  const gov::ValidatorSelectionPolicy &policy = state.registries.policy.selection;
  if (policy.mode == gov::SelectionMode::ProofOfStake) {
    return selection_stakes(state).count(validator) > 0;
  }
  return std::find(policy.authorities.begin(), policy.authorities.end(), validator) !=
         policy.authorities.end();
}

std::map<Address, std::uint64_t> finality_weights(const LedgerState &state) {
  const gov::ValidatorSelectionPolicy &policy = state.registries.policy.selection;
  std::map<Address, std::uint64_t> weights;
  if (policy.mode == gov::SelectionMode::ProofOfStake) {
    return selection_stakes(state);
  }
  for (const Address &authority : policy.authorities) weights[authority] = 1;
  return weights;
}

}  // namespace govsim::consensus
