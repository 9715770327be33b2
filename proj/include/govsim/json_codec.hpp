/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <nlohmann/json.hpp>

#include "govsim/block.hpp"
#include "govsim/ledger.hpp"

namespace govsim {

using Json = nlohmann::json;

/// Compact dump with sorted object keys; the single canonical text form
/// used for state hashes, signing bytes, and reproducible reports.
std::string canonical_dump(const Json &j);

void to_json(Json &j, const Rational &r);
void from_json(const Json &j, Rational &r);

}  // namespace govsim

namespace govsim::crypto {

void to_json(Json &j, const Digest &v);
void from_json(const Json &j, Digest &v);
void to_json(Json &j, const PublicKey &v);
void from_json(const Json &j, PublicKey &v);
void to_json(Json &j, const Signature &v);
void from_json(const Json &j, Signature &v);
void to_json(Json &j, const Address &v);
void from_json(const Json &j, Address &v);

}  // namespace govsim::crypto

namespace govsim::chain {

void to_json(Json &j, const TokenLock &v);
void from_json(const Json &j, TokenLock &v);
void to_json(Json &j, const Account &v);
void from_json(const Json &j, Account &v);
void to_json(Json &j, const BlockHeader &v);
void from_json(const Json &j, BlockHeader &v);
void to_json(Json &j, const EventRecord &v);
void from_json(const Json &j, EventRecord &v);
void to_json(Json &j, const SupplyLedger &v);
void from_json(const Json &j, SupplyLedger &v);
void to_json(Json &j, const Block &v);
void from_json(const Json &j, Block &v);

}  // namespace govsim::chain

namespace govsim::gov {

void to_json(Json &j, const VotingScheme &v);
void from_json(const Json &j, VotingScheme &v);
void to_json(Json &j, const ThresholdPolicy &v);
void from_json(const Json &j, ThresholdPolicy &v);
void to_json(Json &j, const ProposalAction &v);
void from_json(const Json &j, ProposalAction &v);
void to_json(Json &j, const Ballot &v);
void from_json(const Json &j, Ballot &v);
void to_json(Json &j, const TallyResult &v);
void from_json(const Json &j, TallyResult &v);
void to_json(Json &j, const Proposal &v);
void from_json(const Json &j, Proposal &v);
void to_json(Json &j, const ApprovedUpgrade &v);
void from_json(const Json &j, ApprovedUpgrade &v);
void to_json(Json &j, const CrossChainResult &v);
void from_json(const Json &j, CrossChainResult &v);
void to_json(Json &j, const ValidatorSelectionPolicy &v);
void from_json(const Json &j, ValidatorSelectionPolicy &v);
void to_json(Json &j, const FinalityPolicy &v);
void from_json(const Json &j, FinalityPolicy &v);
void to_json(Json &j, const IncentivePolicy &v);
void from_json(const Json &j, IncentivePolicy &v);
void to_json(Json &j, const FilterRule &v);
void from_json(const Json &j, FilterRule &v);
void to_json(Json &j, const GovernancePolicy &v);
void from_json(const Json &j, GovernancePolicy &v);
void to_json(Json &j, const FreezeFlag &v);
void from_json(const Json &j, FreezeFlag &v);
void to_json(Json &j, const ParticipationRegistry &v);
void from_json(const Json &j, ParticipationRegistry &v);
void to_json(Json &j, const Registries &v);
void from_json(const Json &j, Registries &v);

}  // namespace govsim::gov

namespace govsim::tx {

void to_json(Json &j, const TxPayload &v);
void from_json(const Json &j, TxPayload &v);
void to_json(Json &j, const Transaction &v);
void from_json(const Json &j, Transaction &v);

}  // namespace govsim::tx
