/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "govsim/ledger.hpp"

namespace govsim::gov {

using chain::LedgerState;
using chain::NodeRules;

// Membership -----------------------------------------------------------------

/// Registers `sender` as a member. Permissioned chains require a fresh
/// invite plus an identity label; invites are single-use.
LedgerState join(LedgerState state, const Address &sender, const PublicKey &key,
                 const std::optional<std::string> &invite_code,
                 const std::optional<std::string> &identity);

// Proposal lifecycle ----------------------------------------------------------

LedgerState submit_proposal(LedgerState state, const Address &proposer,
                            const tx::SubmitProposal &payload);

LedgerState cast_vote(LedgerState state, const Ballot &ballot);

LedgerState delegate(LedgerState state, const Address &voter, std::uint64_t proposal_id,
                     const Address &target);

LedgerState revoke_delegation(LedgerState state, const Address &voter,
                              std::uint64_t proposal_id);

/// Weights per the proposal's scheme; throws Error("tally.before-deadline")
/// when the state has not reached the voting deadline.
TallyResult tally(const LedgerState &state, const Proposal &proposal);

/// Pure threshold evaluation: is `yes/(yes+no)` strictly above the policy's
/// bar given the turnout fraction? Exact integer arithmetic.
bool outcome_approved(const ThresholdPolicy &policy, std::uint64_t yes, std::uint64_t no,
                      const Rational &turnout);

LedgerState dictator_override(LedgerState state, const Address &actor,
                              std::uint64_t proposal_id, tx::DictatorAction action);

/// Resolves every open proposal whose deadline has passed; called by block
/// application at each height. Cross-chain proposals wait for their result
/// import instead.
LedgerState resolve_due_proposals(LedgerState state);

// Protocol upgrades -----------------------------------------------------------

/// Does `header` satisfy the fork rules as seen by a node running `rules`?
/// Soft forks accept everything; hard forks split acceptance by whether the
/// node enacted the upgrade.
bool block_version_ok(const Registries &registries, const NodeRules &rules,
                      const chain::BlockHeader &header);

/// Protocol version a producer stamps on a block at `height`.
std::uint32_t producer_version(const Registries &registries, const NodeRules &rules,
                               std::uint64_t height);

/// Marks the node as having adopted an approved upgrade. Throws
/// Error("upgrade.not-approved") for unknown or unapproved upgrades.
NodeRules enact_upgrade(const LedgerState &state, const NodeRules &rules,
                        std::uint64_t proposal_id);

// Cross-chain token voting ----------------------------------------------------

CrossChainResult make_cross_chain_result(const std::string &home_chain_id,
                                         const std::string &aux_chain_id,
                                         std::uint64_t proposal_id, const TallyResult &tally,
                                         const crypto::KeyPair &tally_keys);

bool verify_cross_chain_result(const CrossChainResult &result);

LedgerState import_cross_chain_result(LedgerState state, const CrossChainResult &result);

// Weight helpers ---------------------------------------------------------------

/// Carbonvote weight of one account at `height`: balance, optionally
/// increased by the staked-period bonus
///   floor(factor * sum(lock amount * min(remaining, max_period)) / max_period)
/// over active vote-weight locks.
std::uint64_t carbonvote_weight(const chain::Account &account, std::uint64_t height,
                                const Rational &lock_weight_factor,
                                std::uint64_t max_lock_period);

}  // namespace govsim::gov
