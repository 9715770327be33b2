/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "govsim/ledger.hpp"

namespace govsim::gov {

using chain::LedgerState;

// Built-in governance contracts: scam list, social contract, contract
// freezer. Mutations check the actor's role and the target's freeze flag;
// reads always answer.

inline constexpr const char *kScamListTarget = "scam-list";
inline constexpr const char *kSocialContractTarget = "social-contract";

LedgerState scam_list_add(LedgerState state, const Address &actor, const Address &target,
                          const std::string &note);
bool scam_list_check(const LedgerState &state, const Address &address);

LedgerState social_contract_set(LedgerState state, const Address &actor,
                                const std::string &maintainer_spec);
std::optional<std::string> social_contract_get(const LedgerState &state);

LedgerState freeze_contract(LedgerState state, const Address &actor, const std::string &target);
LedgerState unfreeze_contract(LedgerState state, const Address &actor, const std::string &target);

}  // namespace govsim::gov
