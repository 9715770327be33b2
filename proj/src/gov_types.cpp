/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/gov_types.hpp"

#include <algorithm>

namespace govsim::chain {

std::string to_string(LockPurpose p) {
  switch (p) {
    case LockPurpose::ValidatorCandidacy: return "validator-candidacy";
    case LockPurpose::ProposalDeposit: return "proposal-deposit";
    case LockPurpose::VoteWeight: return "vote-weight";
  }
  return "vote-weight";
}

LockPurpose lock_purpose_from_string(const std::string &s) {
  if (s == "validator-candidacy") return LockPurpose::ValidatorCandidacy;
  if (s == "proposal-deposit") return LockPurpose::ProposalDeposit;
  if (s == "vote-weight") return LockPurpose::VoteWeight;
  throw Error("parse.lock-purpose", "unknown lock purpose \"" + s + "\"");
}

std::uint64_t Account::locked_at(std::uint64_t height) const {
  std::uint64_t total = 0;
  for (const TokenLock &lock : locks) {
    if (lock.active_at(height)) total += lock.amount;
  }
  return total;
}

std::uint64_t Account::spendable_at(std::uint64_t height) const {
  std::uint64_t locked = locked_at(height);
  return locked >= balance ? 0 : balance - locked;
}

}  // namespace govsim::chain

namespace govsim::gov {

std::string to_string(Mode m) {
  return m == Mode::Permissionless ? "permissionless" : "permissioned";
}

Mode mode_from_string(const std::string &s) {
  if (s == "permissionless") return Mode::Permissionless;
  if (s == "permissioned") return Mode::Permissioned;
  throw Error("parse.mode", "unknown decentralisation mode \"" + s + "\"");
}

const std::vector<PatternInfo> &pattern_catalogue() {
  static const std::vector<PatternInfo> table = {
      {Pattern::NetworkFreezer, "network-freezer", PatternLevel::Both, false, 1},
      {Pattern::ShardedChain, "sharded-chain", PatternLevel::Both, false, 2},
      {Pattern::IncentiveDistributor, "incentive-distributor", PatternLevel::Both, false, 3},
      {Pattern::ProtocolUpgrade, "protocol-upgrade", PatternLevel::Both, true, 4},
      {Pattern::DataMigrator, "data-migrator", PatternLevel::Both, false, 5},
      {Pattern::ParticipationPermission, "participation-permission",
       PatternLevel::PermissionedOnly, false, 6},
      {Pattern::AccountabilityTracer, "accountability-tracer", PatternLevel::Both, true, 7},
      {Pattern::BenevolentDictator, "benevolent-dictator", PatternLevel::Both, true, 8},
      {Pattern::TransactionFilter, "transaction-filter", PatternLevel::Both, false, 9},
      {Pattern::ValidatorSelection, "validator-selection", PatternLevel::Both, true, 10},
      {Pattern::BlockFinalityDecider, "block-finality-decider", PatternLevel::Both, false, 11},
      {Pattern::LogExtractor, "log-extractor", PatternLevel::Both, false, 12},
      {Pattern::TokenLocker, "token-locker", PatternLevel::PermissionlessOnly, false, 13},
      {Pattern::Carbonvote, "carbonvote", PatternLevel::PermissionlessOnly, false, 14},
      {Pattern::ContractFreezer, "contract-freezer", PatternLevel::Both, false, 0},
      {Pattern::SocialContract, "social-contract", PatternLevel::Both, false, 0},
      {Pattern::ScamList, "scam-list", PatternLevel::PermissionlessOnly, false, 0},
      {Pattern::QuadraticVoting, "quadratic-voting", PatternLevel::PermissionlessOnly, false, 0},
      {Pattern::CrossChainTokenVoting, "cross-chain-token-voting",
       PatternLevel::PermissionlessOnly, false, 0},
      {Pattern::LiquidDemocracy, "liquid-democracy", PatternLevel::PermissionlessOnly, false, 0},
  };
  return table;
}

const PatternInfo &pattern_info(Pattern p) {
  for (const PatternInfo &info : pattern_catalogue()) {
    if (info.id == p) return info;
  }
  throw Error("pattern.unknown", "pattern not in catalogue");
}

std::optional<Pattern> pattern_from_name(const std::string &name) {
  for (const PatternInfo &info : pattern_catalogue()) {
    if (name == info.name) return info.id;
  }
  return std::nullopt;
}

std::string to_string(Role r) {
  switch (r) {
    case Role::Ordinary: return "ordinary";
    case Role::Deployer: return "deployer";
    case Role::Administrator: return "administrator";
    case Role::BenevolentDictator: return "benevolent-dictator";
    case Role::CouncilMember: return "council-member";
  }
  return "ordinary";
}

Role role_from_string(const std::string &s) {
  if (s == "ordinary") return Role::Ordinary;
  if (s == "deployer") return Role::Deployer;
  if (s == "administrator") return Role::Administrator;
  if (s == "benevolent-dictator") return Role::BenevolentDictator;
  if (s == "council-member") return Role::CouncilMember;
  throw Error("parse.role", "unknown role \"" + s + "\"");
}

std::string to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::OneAddressOneVote: return "one-address-one-vote";
    case SchemeKind::Carbonvote: return "carbonvote";
    case SchemeKind::Quadratic: return "quadratic";
    case SchemeKind::LiquidDemocracy: return "liquid-democracy";
    case SchemeKind::CrossChainToken: return "cross-chain-token";
  }
  return "one-address-one-vote";
}

SchemeKind scheme_from_string(const std::string &s) {
  if (s == "one-address-one-vote") return SchemeKind::OneAddressOneVote;
  if (s == "carbonvote") return SchemeKind::Carbonvote;
  if (s == "quadratic") return SchemeKind::Quadratic;
  if (s == "liquid-democracy") return SchemeKind::LiquidDemocracy;
  if (s == "cross-chain-token") return SchemeKind::CrossChainToken;
  throw Error("parse.scheme", "unknown voting scheme \"" + s + "\"");
}

std::string to_string(ProposalStatus s) {
  switch (s) {
    case ProposalStatus::Open: return "open";
    case ProposalStatus::Approved: return "approved";
    case ProposalStatus::Rejected: return "rejected";
    case ProposalStatus::Cancelled: return "cancelled";
    case ProposalStatus::Enacted: return "enacted";
  }
  return "open";
}

ProposalStatus proposal_status_from_string(const std::string &s) {
  if (s == "open") return ProposalStatus::Open;
  if (s == "approved") return ProposalStatus::Approved;
  if (s == "rejected") return ProposalStatus::Rejected;
  if (s == "cancelled") return ProposalStatus::Cancelled;
  if (s == "enacted") return ProposalStatus::Enacted;
  throw Error("parse.status", "unknown proposal status \"" + s + "\"");
}

std::string to_string(ForkKind f) { return f == ForkKind::SoftFork ? "soft-fork" : "hard-fork"; }

ForkKind fork_kind_from_string(const std::string &s) {
  if (s == "soft-fork") return ForkKind::SoftFork;
  if (s == "hard-fork") return ForkKind::HardFork;
  throw Error("parse.fork", "unknown fork kind \"" + s + "\"");
}

std::string to_string(SelectionMode m) {
  switch (m) {
    case SelectionMode::ProofOfStake: return "proof-of-stake";
    case SelectionMode::ProofOfAuthority: return "proof-of-authority";
    case SelectionMode::RoundRobin: return "round-robin";
  }
  return "round-robin";
}

SelectionMode selection_mode_from_string(const std::string &s) {
  if (s == "proof-of-stake") return SelectionMode::ProofOfStake;
  if (s == "proof-of-authority") return SelectionMode::ProofOfAuthority;
  if (s == "round-robin") return SelectionMode::RoundRobin;
  throw Error("parse.selection", "unknown validator selection mode \"" + s + "\"");
}

std::string to_string(FinalityMode m) {
  switch (m) {
    case FinalityMode::KDeep: return "k-deep";
    case FinalityMode::Immediate: return "immediate";
    case FinalityMode::SupermajorityVote: return "supermajority-vote";
  }
  return "k-deep";
}

FinalityMode finality_mode_from_string(const std::string &s) {
  if (s == "k-deep") return FinalityMode::KDeep;
  if (s == "immediate") return FinalityMode::Immediate;
  if (s == "supermajority-vote") return FinalityMode::SupermajorityVote;
  throw Error("parse.finality", "unknown finality mode \"" + s + "\"");
}

std::string to_string(PayloadKind k) {
  switch (k) {
    case PayloadKind::Transfer: return "transfer";
    case PayloadKind::Lock: return "lock";
    case PayloadKind::Governance: return "governance";
    case PayloadKind::Contract: return "contract";
  }
  return "transfer";
}

PayloadKind payload_kind_from_string(const std::string &s) {
  if (s == "transfer") return PayloadKind::Transfer;
  if (s == "lock") return PayloadKind::Lock;
  if (s == "governance") return PayloadKind::Governance;
  if (s == "contract") return PayloadKind::Contract;
  throw Error("parse.payload-kind", "unknown payload kind \"" + s + "\"");
}

std::string to_string(FilterRuleKind k) {
  switch (k) {
    case FilterRuleKind::MaxPayloadSize: return "max-payload-size";
    case FilterRuleKind::AllowedPayloadTypes: return "allowed-payload-types";
    case FilterRuleKind::ScamListCheck: return "scam-list-check";
    case FilterRuleKind::PermissionedSenderCheck: return "permissioned-sender-check";
  }
  return "max-payload-size";
}

FilterRuleKind filter_rule_from_string(const std::string &s) {
  if (s == "max-payload-size") return FilterRuleKind::MaxPayloadSize;
  if (s == "allowed-payload-types") return FilterRuleKind::AllowedPayloadTypes;
  if (s == "scam-list-check") return FilterRuleKind::ScamListCheck;
  if (s == "permissioned-sender-check") return FilterRuleKind::PermissionedSenderCheck;
  throw Error("parse.filter-rule", "unknown filter rule \"" + s + "\"");
}

}  // namespace govsim::gov
