/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <map>

#include "govsim/ledger.hpp"

namespace govsim::consensus {

using chain::Address;
using chain::Digest;
using chain::LedgerState;

/// Validator for one round: proof-of-stake draws with probability
/// proportional to active candidacy stake using a lottery seeded by
/// (chain_id, round, seed); authority modes rotate round-robin. Throws
/// Error("consensus.no-validator") when nobody is eligible.
Address select_validator(const LedgerState &state, std::uint64_t round, std::uint64_t seed);

/// Active stake counted for selection: validator-candidacy plus vote-weight
/// locks of accounts holding at least one active candidacy lock.
std::map<Address, std::uint64_t> selection_stakes(const LedgerState &state);

/// May `validator` produce blocks under the chain's policy at all?
bool is_eligible_validator(const LedgerState &state, const Address &validator);

/// Weight of a validator's finality affirmation (1 under authority modes,
/// candidacy stake under proof-of-stake).
std::map<Address, std::uint64_t> finality_weights(const LedgerState &state);

}  // namespace govsim::consensus
