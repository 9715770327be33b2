/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "govsim/chain_types.hpp"

namespace govsim::gov {

using chain::Address;
using chain::Digest;
using chain::PublicKey;
using chain::Signature;

enum class Mode { Permissionless, Permissioned };

std::string to_string(Mode m);
Mode mode_from_string(const std::string &s);

// ---------------------------------------------------------------------------
// Pattern catalogue
// ---------------------------------------------------------------------------

enum class Pattern {
  NetworkFreezer,
  ShardedChain,
  IncentiveDistributor,
  ProtocolUpgrade,
  DataMigrator,
  ParticipationPermission,
  AccountabilityTracer,
  BenevolentDictator,
  TransactionFilter,
  ValidatorSelection,
  BlockFinalityDecider,
  LogExtractor,
  ContractFreezer,
  SocialContract,
  ScamList,
  TokenLocker,
  Carbonvote,
  QuadraticVoting,
  CrossChainTokenVoting,
  LiquidDemocracy,
};

enum class PatternLevel { Both, PermissionlessOnly, PermissionedOnly };

struct PatternInfo {
  Pattern id;
  const char *name;        // stable kebab-case identifier
  PatternLevel level;
  bool mandatory;
  int comparison_row;      // 1-based row in the two-profile comparison; 0 = extended section
};

const std::vector<PatternInfo> &pattern_catalogue();
const PatternInfo &pattern_info(Pattern p);
std::optional<Pattern> pattern_from_name(const std::string &name);

// ---------------------------------------------------------------------------
// Roles & membership
// ---------------------------------------------------------------------------

enum class Role { Ordinary, Deployer, Administrator, BenevolentDictator, CouncilMember };

std::string to_string(Role r);
Role role_from_string(const std::string &s);

struct ParticipationRegistry {
  Mode mode = Mode::Permissionless;
  /// Unconsumed one-time invitation codes (permissioned mode).
  std::set<std::string> invites;
  /// Member address -> identity label ("" when anonymous).
  std::map<Address, std::string> members;

  bool is_member(const Address &a) const { return members.count(a) > 0; }
};

// ---------------------------------------------------------------------------
// Proposals & voting
// ---------------------------------------------------------------------------

enum class VoteChoice { Yes, No };

enum class SchemeKind {
  OneAddressOneVote,
  Carbonvote,
  Quadratic,
  LiquidDemocracy,
  CrossChainToken,
};

std::string to_string(SchemeKind k);
SchemeKind scheme_from_string(const std::string &s);

struct VotingScheme {
  SchemeKind kind = SchemeKind::OneAddressOneVote;
  /// Carbonvote / liquid democracy: lock-period weighting factor. A zero
  /// numerator disables the weighting.
  Rational lock_weight_factor{0, 1};
  std::uint64_t max_lock_period = 100;
  /// Quadratic voting: account collecting vote payments.
  Address cost_account;
  /// Cross-chain token voting: chain hosting the ballot, and the tally key
  /// whose signature authenticates the returned result record.
  std::string aux_chain_id;
  PublicKey aux_tally_key;
};

enum class ThresholdKind { FixedFraction, AdaptiveTurnout };

/// Approval rule for yes/(yes+no). AdaptiveTurnout uses
/// threshold(t) = 1 - t/2 where t is the turnout fraction.
struct ThresholdPolicy {
  ThresholdKind kind = ThresholdKind::FixedFraction;
  Rational fixed{1, 2};
};

enum class ProposalStatus { Open, Approved, Rejected, Cancelled, Enacted };

std::string to_string(ProposalStatus s);
ProposalStatus proposal_status_from_string(const std::string &s);

enum class ForkKind { SoftFork, HardFork };

std::string to_string(ForkKind f);
ForkKind fork_kind_from_string(const std::string &s);

struct UpgradeAction {
  std::uint32_t new_version = 2;
  ForkKind compatibility = ForkKind::SoftFork;
  std::uint64_t activation_height = 0;

  friend bool operator==(const UpgradeAction &, const UpgradeAction &) = default;
};

struct ParamChangeAction {
  std::string key;
  std::uint64_t value = 0;

  friend bool operator==(const ParamChangeAction &, const ParamChangeAction &) = default;
};

struct FreezeAction {
  std::string target;
  bool freeze = true;

  friend bool operator==(const FreezeAction &, const FreezeAction &) = default;
};

using ProposalAction = std::variant<UpgradeAction, ParamChangeAction, FreezeAction>;

struct Ballot {
  Address voter;
  std::uint64_t proposal_id = 0;
  VoteChoice choice = VoteChoice::Yes;
  /// Quadratic voting only; must be >= 1 there, ignored elsewhere.
  std::uint64_t votes_cast = 1;
};

struct TallyResult {
  std::uint64_t yes_weight = 0;
  std::uint64_t no_weight = 0;
  Rational turnout{0, 1};
  bool approved = false;
};

struct Proposal {
  std::uint64_t id = 0;
  Address proposer;
  std::string description;
  ProposalAction action;
  VotingScheme scheme;
  ThresholdPolicy threshold;
  std::uint64_t created_at = 0;
  std::uint64_t voting_deadline = 0;
  std::optional<std::uint64_t> deposit_lock_id;
  ProposalStatus status = ProposalStatus::Open;

  std::map<Address, Ballot> ballots;
  std::map<Address, Address> delegations;
  /// Voting weight per eligible address, captured when the proposal was
  /// submitted (token-weighted schemes).
  std::map<Address, std::uint64_t> weight_snapshot;
  std::uint64_t total_snapshot_weight = 0;

  std::optional<TallyResult> result;
};

/// Approved protocol upgrade as recorded on chain.
struct ApprovedUpgrade {
  std::uint64_t proposal_id = 0;
  UpgradeAction action;
  std::uint64_t approved_at = 0;
};

/// Result of a ballot held on an auxiliary chain, signed by that chain's
/// designated tally key.
struct CrossChainResult {
  std::string home_chain_id;
  std::string aux_chain_id;
  std::uint64_t proposal_id = 0;
  std::uint64_t yes_weight = 0;
  std::uint64_t no_weight = 0;
  Rational turnout{0, 1};
  PublicKey tally_key;
  Signature signature;

  Bytes signing_bytes() const;
};

// ---------------------------------------------------------------------------
// Consensus policies (configured per chain, live in chain state)
// ---------------------------------------------------------------------------

enum class SelectionMode { ProofOfStake, ProofOfAuthority, RoundRobin };

std::string to_string(SelectionMode m);
SelectionMode selection_mode_from_string(const std::string &s);

struct ValidatorSelectionPolicy {
  SelectionMode mode = SelectionMode::RoundRobin;
  /// Proof-of-authority / round-robin rotation list.
  std::vector<Address> authorities;
};

enum class FinalityMode { KDeep, Immediate, SupermajorityVote };

std::string to_string(FinalityMode m);
FinalityMode finality_mode_from_string(const std::string &s);

struct FinalityPolicy {
  FinalityMode mode = FinalityMode::KDeep;
  std::uint64_t k = 6;
  Rational quorum{2, 3};
};

struct IncentivePolicy {
  bool enabled = false;
  std::uint64_t block_reward = 0;
  /// Fraction of transaction fees paid to the validator; the remainder is
  /// reserved to the treasury.
  Rational validator_fee_fraction{1, 2};
  Address treasury;
};

// ---------------------------------------------------------------------------
// Transaction filtering
// ---------------------------------------------------------------------------

enum class PayloadKind { Transfer, Lock, Governance, Contract };

std::string to_string(PayloadKind k);
PayloadKind payload_kind_from_string(const std::string &s);

enum class FilterRuleKind {
  MaxPayloadSize,
  AllowedPayloadTypes,
  ScamListCheck,
  PermissionedSenderCheck,
};

std::string to_string(FilterRuleKind k);
FilterRuleKind filter_rule_from_string(const std::string &s);

struct FilterRule {
  FilterRuleKind kind = FilterRuleKind::MaxPayloadSize;
  std::uint64_t max_bytes = 1024;                 // MaxPayloadSize
  std::set<PayloadKind> allowed_types;            // AllowedPayloadTypes

  /// Stable identifier used in rejection reasons, e.g. "filter.scam-list-check".
  std::string rule_id() const { return "filter." + to_string(kind); }
};

// ---------------------------------------------------------------------------
// Governance policy: the pluggable pattern configuration of a chain
// ---------------------------------------------------------------------------

struct GovernancePolicy {
  Mode mode = Mode::Permissionless;
  std::set<Pattern> patterns;

  ValidatorSelectionPolicy selection;
  FinalityPolicy finality;
  IncentivePolicy incentive;
  std::vector<FilterRule> filters;

  std::uint64_t proposal_deposit = 10;
  std::uint64_t fast_track_window = 10;
  std::uint64_t max_candidate_txs = 16;
  std::uint32_t base_version = 1;
  std::uint32_t shard_count = 1;

  /// Addresses eligible to trigger the contract freezer.
  std::vector<Address> freezer_eligible;
  /// Network freezer activation: quorum for validator-voted freezes.
  Rational freeze_quorum{2, 3};

  bool has(Pattern p) const { return patterns.count(p) > 0; }
};

struct FreezeFlag {
  std::string target;
  bool frozen = false;
  Address frozen_by;
  std::uint64_t height = 0;
};

/// All governance registries; part of the canonical chain state.
struct Registries {
  GovernancePolicy policy;
  ParticipationRegistry participation;
  std::map<Address, Role> roles;

  std::map<std::uint64_t, Proposal> proposals;
  std::uint64_t next_proposal_id = 1;
  std::vector<ApprovedUpgrade> upgrades;

  std::map<Address, std::string> scam_list;
  std::vector<std::string> social_contract_history;
  std::map<std::string, FreezeFlag> freezes;

  Role role_of(const Address &a) const {
    auto it = roles.find(a);
    return it == roles.end() ? Role::Ordinary : it->second;
  }
  bool is_frozen(const std::string &target) const {
    auto it = freezes.find(target);
    return it != freezes.end() && it->second.frozen;
  }
};

}  // namespace govsim::gov
