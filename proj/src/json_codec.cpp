/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/json_codec.hpp"

namespace govsim {

std::string canonical_dump(const Json &j) { return j.dump(); }

void to_json(Json &j, const Rational &r) { j = Json{{"num", r.num}, {"den", r.den}}; }

void from_json(const Json &j, Rational &r) {
  r.num = j.at("num").get<std::uint64_t>();
  r.den = j.at("den").get<std::uint64_t>();
  if (r.den == 0) throw Error("parse.rational", "zero denominator");
}

}  // namespace govsim

namespace govsim::crypto {

void to_json(Json &j, const Digest &v) { j = v.hex(); }
void from_json(const Json &j, Digest &v) { v = Digest::from_hex(j.get<std::string>()); }
void to_json(Json &j, const PublicKey &v) { j = v.hex(); }
void from_json(const Json &j, PublicKey &v) { v = PublicKey::from_hex(j.get<std::string>()); }
void to_json(Json &j, const Signature &v) { j = v.hex(); }
void from_json(const Json &j, Signature &v) { v = Signature::from_hex(j.get<std::string>()); }
void to_json(Json &j, const Address &v) { j = v.hex(); }
void from_json(const Json &j, Address &v) { v = Address::from_hex(j.get<std::string>()); }

}  // namespace govsim::crypto

namespace govsim::chain {

void to_json(Json &j, const TokenLock &v) {
  j = Json{{"id", v.id},
           {"amount", v.amount},
           {"unlock_height", v.unlock_height},
           {"purpose", to_string(v.purpose)}};
}

void from_json(const Json &j, TokenLock &v) {
  v.id = j.at("id").get<std::uint64_t>();
  v.amount = j.at("amount").get<std::uint64_t>();
  v.unlock_height = j.at("unlock_height").get<std::uint64_t>();
  v.purpose = lock_purpose_from_string(j.at("purpose").get<std::string>());
}

void to_json(Json &j, const Account &v) {
  j = Json{{"address", v.address}, {"balance", v.balance}, {"next_nonce", v.next_nonce}};
  j["locks"] = v.locks;
  if (v.public_key) j["public_key"] = *v.public_key;
  if (v.identity) j["identity"] = *v.identity;
}

void from_json(const Json &j, Account &v) {
  v.address = j.at("address").get<Address>();
  v.balance = j.at("balance").get<std::uint64_t>();
  v.next_nonce = j.at("next_nonce").get<std::uint64_t>();
  v.locks = j.at("locks").get<std::vector<TokenLock>>();
  if (j.contains("public_key")) v.public_key = j.at("public_key").get<PublicKey>();
  if (j.contains("identity")) v.identity = j.at("identity").get<std::string>();
}

void to_json(Json &j, const BlockHeader &v) {
  j = Json{{"parent", v.parent},
           {"height", v.height},
           {"merkle_root", v.merkle_root},
           {"validator", v.validator},
           {"protocol_version", v.protocol_version},
           {"shard_id", v.shard_id}};
}

void from_json(const Json &j, BlockHeader &v) {
  v.parent = j.at("parent").get<Digest>();
  v.height = j.at("height").get<std::uint64_t>();
  v.merkle_root = j.at("merkle_root").get<Digest>();
  v.validator = j.at("validator").get<Address>();
  v.protocol_version = j.at("protocol_version").get<std::uint32_t>();
  v.shard_id = j.at("shard_id").get<std::uint32_t>();
}

void to_json(Json &j, const EventRecord &v) {
  j = Json{{"height", v.height}, {"tx_hash", v.tx_hash}, {"topic", v.topic},
           {"payload", v.payload}};
}

void from_json(const Json &j, EventRecord &v) {
  v.height = j.at("height").get<std::uint64_t>();
  v.tx_hash = j.at("tx_hash").get<Digest>();
  v.topic = j.at("topic").get<std::string>();
  v.payload = j.at("payload").get<std::map<std::string, std::string>>();
}

void to_json(Json &j, const SupplyLedger &v) {
  j = Json{{"initial", v.initial},
           {"minted", v.minted},
           {"slashed", v.slashed},
           {"destroyed_fees", v.destroyed_fees}};
}

void from_json(const Json &j, SupplyLedger &v) {
  v.initial = j.at("initial").get<std::uint64_t>();
  v.minted = j.at("minted").get<std::uint64_t>();
  v.slashed = j.at("slashed").get<std::uint64_t>();
  v.destroyed_fees = j.at("destroyed_fees").get<std::uint64_t>();
}

void to_json(Json &j, const Block &v) {
  j = Json{{"header", v.header}, {"transactions", v.transactions}, {"signature", v.signature}};
}

void from_json(const Json &j, Block &v) {
  v.header = j.at("header").get<BlockHeader>();
  v.transactions = j.at("transactions").get<std::vector<tx::Transaction>>();
  v.signature = j.at("signature").get<Signature>();
}

}  // namespace govsim::chain

namespace govsim::gov {

void to_json(Json &j, const VotingScheme &v) {
  j = Json{{"kind", to_string(v.kind)}};
  if (v.lock_weight_factor.num != 0) {
    j["lock_weight_factor"] = v.lock_weight_factor;
    j["max_lock_period"] = v.max_lock_period;
  }
  if (v.kind == SchemeKind::Quadratic) j["cost_account"] = v.cost_account;
  if (v.kind == SchemeKind::CrossChainToken) {
    j["aux_chain_id"] = v.aux_chain_id;
    j["aux_tally_key"] = v.aux_tally_key;
  }
}

void from_json(const Json &j, VotingScheme &v) {
  v.kind = scheme_from_string(j.at("kind").get<std::string>());
  if (j.contains("lock_weight_factor")) {
    v.lock_weight_factor = j.at("lock_weight_factor").get<Rational>();
    v.max_lock_period = j.at("max_lock_period").get<std::uint64_t>();
  }
  if (j.contains("cost_account")) v.cost_account = j.at("cost_account").get<Address>();
  if (j.contains("aux_chain_id")) v.aux_chain_id = j.at("aux_chain_id").get<std::string>();
  if (j.contains("aux_tally_key")) v.aux_tally_key = j.at("aux_tally_key").get<PublicKey>();
}

void to_json(Json &j, const ThresholdPolicy &v) {
  if (v.kind == ThresholdKind::FixedFraction) {
    j = Json{{"kind", "fixed"}, {"fraction", v.fixed}};
  } else {
    j = Json{{"kind", "adaptive-turnout"}};
  }
}

void from_json(const Json &j, ThresholdPolicy &v) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "fixed") {
    v.kind = ThresholdKind::FixedFraction;
    v.fixed = j.at("fraction").get<Rational>();
  } else if (kind == "adaptive-turnout") {
    v.kind = ThresholdKind::AdaptiveTurnout;
  } else {
    throw Error("parse.threshold", "unknown threshold policy \"" + kind + "\"");
  }
}

void to_json(Json &j, const ProposalAction &v) {
  if (const auto *up = std::get_if<UpgradeAction>(&v)) {
    j = Json{{"kind", "upgrade"},
             {"new_version", up->new_version},
             {"compatibility", to_string(up->compatibility)},
             {"activation_height", up->activation_height}};
  } else if (const auto *pc = std::get_if<ParamChangeAction>(&v)) {
    j = Json{{"kind", "param-change"}, {"key", pc->key}, {"value", pc->value}};
  } else {
    const auto &fr = std::get<FreezeAction>(v);
    j = Json{{"kind", "freeze-action"}, {"target", fr.target}, {"freeze", fr.freeze}};
  }
}

void from_json(const Json &j, ProposalAction &v) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "upgrade") {
    UpgradeAction up;
    up.new_version = j.at("new_version").get<std::uint32_t>();
    up.compatibility = fork_kind_from_string(j.at("compatibility").get<std::string>());
    up.activation_height = j.at("activation_height").get<std::uint64_t>();
    v = up;
  } else if (kind == "param-change") {
    v = ParamChangeAction{j.at("key").get<std::string>(), j.at("value").get<std::uint64_t>()};
  } else if (kind == "freeze-action") {
    v = FreezeAction{j.at("target").get<std::string>(), j.at("freeze").get<bool>()};
  } else {
    throw Error("parse.proposal-action", "unknown proposal action \"" + kind + "\"");
  }
}

void to_json(Json &j, const Ballot &v) {
  j = Json{{"voter", v.voter},
           {"proposal_id", v.proposal_id},
           {"choice", v.choice == VoteChoice::Yes ? "yes" : "no"},
           {"votes_cast", v.votes_cast}};
}

void from_json(const Json &j, Ballot &v) {
  v.voter = j.at("voter").get<Address>();
  v.proposal_id = j.at("proposal_id").get<std::uint64_t>();
  std::string choice = j.at("choice").get<std::string>();
  if (choice != "yes" && choice != "no") throw Error("parse.ballot", "choice must be yes|no");
  v.choice = choice == "yes" ? VoteChoice::Yes : VoteChoice::No;
  v.votes_cast = j.at("votes_cast").get<std::uint64_t>();
}

void to_json(Json &j, const TallyResult &v) {
  j = Json{{"yes_weight", v.yes_weight},
           {"no_weight", v.no_weight},
           {"turnout", v.turnout},
           {"approved", v.approved}};
}

void from_json(const Json &j, TallyResult &v) {
  v.yes_weight = j.at("yes_weight").get<std::uint64_t>();
  v.no_weight = j.at("no_weight").get<std::uint64_t>();
  v.turnout = j.at("turnout").get<Rational>();
  v.approved = j.at("approved").get<bool>();
}

namespace {

template <typename V>
Json address_map_to_json(const std::map<Address, V> &m) {
  Json obj = Json::object();
  for (const auto &[addr, value] : m) obj[addr.hex()] = value;
  return obj;
}

template <typename V>
void address_map_from_json(const Json &j, std::map<Address, V> &m) {
  m.clear();
  for (auto it = j.begin(); it != j.end(); ++it) {
    m[Address::from_hex(it.key())] = it.value().template get<V>();
  }
}

}  // namespace

void to_json(Json &j, const Proposal &v) {
  j = Json{{"id", v.id},
           {"proposer", v.proposer},
           {"description", v.description},
           {"action", v.action},
           {"scheme", v.scheme},
           {"threshold", v.threshold},
           {"created_at", v.created_at},
           {"voting_deadline", v.voting_deadline},
           {"status", to_string(v.status)},
           {"total_snapshot_weight", v.total_snapshot_weight}};
  if (v.deposit_lock_id) j["deposit_lock_id"] = *v.deposit_lock_id;
  j["ballots"] = address_map_to_json(v.ballots);
  Json delegations = Json::object();
  for (const auto &[from, to] : v.delegations) delegations[from.hex()] = to;
  j["delegations"] = delegations;
  j["weight_snapshot"] = address_map_to_json(v.weight_snapshot);
  if (v.result) j["result"] = *v.result;
}

void from_json(const Json &j, Proposal &v) {
  v.id = j.at("id").get<std::uint64_t>();
  v.proposer = j.at("proposer").get<Address>();
  v.description = j.at("description").get<std::string>();
  v.action = j.at("action").get<ProposalAction>();
  v.scheme = j.at("scheme").get<VotingScheme>();
  v.threshold = j.at("threshold").get<ThresholdPolicy>();
  v.created_at = j.at("created_at").get<std::uint64_t>();
  v.voting_deadline = j.at("voting_deadline").get<std::uint64_t>();
  v.status = proposal_status_from_string(j.at("status").get<std::string>());
  v.total_snapshot_weight = j.at("total_snapshot_weight").get<std::uint64_t>();
  if (j.contains("deposit_lock_id")) v.deposit_lock_id = j.at("deposit_lock_id").get<std::uint64_t>();
  address_map_from_json(j.at("ballots"), v.ballots);
  v.delegations.clear();
  for (auto it = j.at("delegations").begin(); it != j.at("delegations").end(); ++it) {
    v.delegations[Address::from_hex(it.key())] = it.value().get<Address>();
  }
  address_map_from_json(j.at("weight_snapshot"), v.weight_snapshot);
  if (j.contains("result")) v.result = j.at("result").get<TallyResult>();
}

void to_json(Json &j, const ApprovedUpgrade &v) {
  j = Json{{"proposal_id", v.proposal_id},
           {"new_version", v.action.new_version},
           {"compatibility", to_string(v.action.compatibility)},
           {"activation_height", v.action.activation_height},
           {"approved_at", v.approved_at}};
}

void from_json(const Json &j, ApprovedUpgrade &v) {
  v.proposal_id = j.at("proposal_id").get<std::uint64_t>();
  v.action.new_version = j.at("new_version").get<std::uint32_t>();
  v.action.compatibility = fork_kind_from_string(j.at("compatibility").get<std::string>());
  v.action.activation_height = j.at("activation_height").get<std::uint64_t>();
  v.approved_at = j.at("approved_at").get<std::uint64_t>();
}

void to_json(Json &j, const CrossChainResult &v) {
  j = Json{{"home_chain_id", v.home_chain_id},
           {"aux_chain_id", v.aux_chain_id},
           {"proposal_id", v.proposal_id},
           {"yes_weight", v.yes_weight},
           {"no_weight", v.no_weight},
           {"turnout", v.turnout},
           {"tally_key", v.tally_key},
           {"signature", v.signature}};
}

void from_json(const Json &j, CrossChainResult &v) {
  v.home_chain_id = j.at("home_chain_id").get<std::string>();
  v.aux_chain_id = j.at("aux_chain_id").get<std::string>();
  v.proposal_id = j.at("proposal_id").get<std::uint64_t>();
  v.yes_weight = j.at("yes_weight").get<std::uint64_t>();
  v.no_weight = j.at("no_weight").get<std::uint64_t>();
  v.turnout = j.at("turnout").get<Rational>();
  v.tally_key = j.at("tally_key").get<PublicKey>();
  v.signature = j.at("signature").get<Signature>();
}

void to_json(Json &j, const ValidatorSelectionPolicy &v) {
  j = Json{{"mode", to_string(v.mode)}, {"authorities", v.authorities}};
}

void from_json(const Json &j, ValidatorSelectionPolicy &v) {
  v.mode = selection_mode_from_string(j.at("mode").get<std::string>());
  if (j.contains("authorities")) v.authorities = j.at("authorities").get<std::vector<Address>>();
}

void to_json(Json &j, const FinalityPolicy &v) {
  j = Json{{"mode", to_string(v.mode)}};
  if (v.mode == FinalityMode::KDeep) j["k"] = v.k;
  if (v.mode == FinalityMode::SupermajorityVote) j["quorum"] = v.quorum;
}

void from_json(const Json &j, FinalityPolicy &v) {
  v.mode = finality_mode_from_string(j.at("mode").get<std::string>());
  if (j.contains("k")) v.k = j.at("k").get<std::uint64_t>();
  if (j.contains("quorum")) v.quorum = j.at("quorum").get<Rational>();
}

void to_json(Json &j, const IncentivePolicy &v) {
  j = Json{{"enabled", v.enabled},
           {"block_reward", v.block_reward},
           {"validator_fee_fraction", v.validator_fee_fraction},
           {"treasury", v.treasury}};
}

void from_json(const Json &j, IncentivePolicy &v) {
  v.enabled = j.at("enabled").get<bool>();
  v.block_reward = j.at("block_reward").get<std::uint64_t>();
  v.validator_fee_fraction = j.at("validator_fee_fraction").get<Rational>();
  v.treasury = j.at("treasury").get<Address>();
}

void to_json(Json &j, const FilterRule &v) {
  j = Json{{"rule", to_string(v.kind)}};
  if (v.kind == FilterRuleKind::MaxPayloadSize) j["max_bytes"] = v.max_bytes;
  if (v.kind == FilterRuleKind::AllowedPayloadTypes) {
    std::vector<std::string> types;
    for (PayloadKind k : v.allowed_types) types.push_back(to_string(k));
    j["types"] = types;
  }
}

void from_json(const Json &j, FilterRule &v) {
  v.kind = filter_rule_from_string(j.at("rule").get<std::string>());
  if (j.contains("max_bytes")) v.max_bytes = j.at("max_bytes").get<std::uint64_t>();
  if (j.contains("types")) {
    v.allowed_types.clear();
    for (const auto &t : j.at("types")) {
      v.allowed_types.insert(payload_kind_from_string(t.get<std::string>()));
    }
  }
}

void to_json(Json &j, const GovernancePolicy &v) {
  std::vector<std::string> patterns;
  for (Pattern p : v.patterns) patterns.push_back(pattern_info(p).name);
  std::sort(patterns.begin(), patterns.end());
  j = Json{{"mode", to_string(v.mode)},
           {"patterns", patterns},
           {"selection", v.selection},
           {"finality", v.finality},
           {"incentive", v.incentive},
           {"filters", v.filters},
           {"proposal_deposit", v.proposal_deposit},
           {"fast_track_window", v.fast_track_window},
           {"max_candidate_txs", v.max_candidate_txs},
           {"base_version", v.base_version},
           {"shard_count", v.shard_count},
           {"freezer_eligible", v.freezer_eligible},
           {"freeze_quorum", v.freeze_quorum}};
}

void from_json(const Json &j, GovernancePolicy &v) {
  v.mode = mode_from_string(j.at("mode").get<std::string>());
  v.patterns.clear();
  for (const auto &name : j.at("patterns")) {
    auto p = pattern_from_name(name.get<std::string>());
    if (!p) throw Error("parse.pattern", "unknown pattern \"" + name.get<std::string>() + "\"");
    v.patterns.insert(*p);
  }
  v.selection = j.at("selection").get<ValidatorSelectionPolicy>();
  v.finality = j.at("finality").get<FinalityPolicy>();
  v.incentive = j.at("incentive").get<IncentivePolicy>();
  v.filters = j.at("filters").get<std::vector<FilterRule>>();
  v.proposal_deposit = j.at("proposal_deposit").get<std::uint64_t>();
  v.fast_track_window = j.at("fast_track_window").get<std::uint64_t>();
  v.max_candidate_txs = j.at("max_candidate_txs").get<std::uint64_t>();
  v.base_version = j.at("base_version").get<std::uint32_t>();
  v.shard_count = j.at("shard_count").get<std::uint32_t>();
  v.freezer_eligible = j.at("freezer_eligible").get<std::vector<Address>>();
  v.freeze_quorum = j.at("freeze_quorum").get<Rational>();
}

void to_json(Json &j, const FreezeFlag &v) {
  j = Json{{"target", v.target}, {"frozen", v.frozen}, {"frozen_by", v.frozen_by},
           {"height", v.height}};
}

void from_json(const Json &j, FreezeFlag &v) {
  v.target = j.at("target").get<std::string>();
  v.frozen = j.at("frozen").get<bool>();
  v.frozen_by = j.at("frozen_by").get<Address>();
  v.height = j.at("height").get<std::uint64_t>();
}

void to_json(Json &j, const ParticipationRegistry &v) {
  j = Json{{"mode", to_string(v.mode)},
           {"invites", std::vector<std::string>(v.invites.begin(), v.invites.end())},
           {"members", address_map_to_json(v.members)}};
}

void from_json(const Json &j, ParticipationRegistry &v) {
  v.mode = mode_from_string(j.at("mode").get<std::string>());
  v.invites.clear();
  for (const auto &code : j.at("invites")) v.invites.insert(code.get<std::string>());
  address_map_from_json(j.at("members"), v.members);
}

void to_json(Json &j, const Registries &v) {
  Json roles = Json::object();
  for (const auto &[addr, role] : v.roles) roles[addr.hex()] = to_string(role);
  Json proposals = Json::object();
  for (const auto &[id, proposal] : v.proposals) proposals[std::to_string(id)] = proposal;
  j = Json{{"policy", v.policy},
           {"participation", v.participation},
           {"roles", roles},
           {"proposals", proposals},
           {"next_proposal_id", v.next_proposal_id},
           {"upgrades", v.upgrades},
           {"scam_list", address_map_to_json(v.scam_list)},
           {"social_contract_history", v.social_contract_history},
           {"freezes", v.freezes}};
}

void from_json(const Json &j, Registries &v) {
  v.policy = j.at("policy").get<GovernancePolicy>();
  v.participation = j.at("participation").get<ParticipationRegistry>();
  v.roles.clear();
  for (auto it = j.at("roles").begin(); it != j.at("roles").end(); ++it) {
    v.roles[Address::from_hex(it.key())] = role_from_string(it.value().get<std::string>());
  }
  v.proposals.clear();
  for (auto it = j.at("proposals").begin(); it != j.at("proposals").end(); ++it) {
    v.proposals[std::stoull(it.key())] = it.value().get<Proposal>();
  }
  v.next_proposal_id = j.at("next_proposal_id").get<std::uint64_t>();
  v.upgrades = j.at("upgrades").get<std::vector<ApprovedUpgrade>>();
  address_map_from_json(j.at("scam_list"), v.scam_list);
  v.social_contract_history = j.at("social_contract_history").get<std::vector<std::string>>();
  v.freezes = j.at("freezes").get<std::map<std::string, FreezeFlag>>();
}

}  // namespace govsim::gov

namespace govsim::tx {

void to_json(Json &j, const TxPayload &v) {
  std::visit(
      [&j](const auto &p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Transfer>) {
          j = Json{{"type", "transfer"}, {"to", p.to}, {"amount", p.amount}};
        } else if constexpr (std::is_same_v<T, LockTokens>) {
          j = Json{{"type", "lock"},
                   {"amount", p.amount},
                   {"duration_blocks", p.duration_blocks},
                   {"purpose", chain::to_string(p.purpose)}};
        } else if constexpr (std::is_same_v<T, Join>) {
          j = Json{{"type", "join"}};
          if (p.invite_code) j["invite_code"] = *p.invite_code;
          if (p.identity) j["identity"] = *p.identity;
        } else if constexpr (std::is_same_v<T, SubmitProposal>) {
          j = Json{{"type", "submit-proposal"},
                   {"description", p.description},
                   {"action", p.action},
                   {"scheme", p.scheme},
                   {"voting_deadline", p.voting_deadline},
                   {"threshold", p.threshold}};
        } else if constexpr (std::is_same_v<T, CastVote>) {
          j = Json{{"type", "cast-vote"},
                   {"proposal_id", p.proposal_id},
                   {"choice", p.choice == gov::VoteChoice::Yes ? "yes" : "no"},
                   {"votes_cast", p.votes_cast}};
        } else if constexpr (std::is_same_v<T, Delegate>) {
          j = Json{{"type", "delegate"}, {"proposal_id", p.proposal_id}, {"target", p.target}};
        } else if constexpr (std::is_same_v<T, RevokeDelegation>) {
          j = Json{{"type", "revoke-delegation"}, {"proposal_id", p.proposal_id}};
        } else if constexpr (std::is_same_v<T, DictatorOverride>) {
          j = Json{{"type", "dictator-override"},
                   {"proposal_id", p.proposal_id},
                   {"action", p.action == DictatorAction::Cancel ? "cancel" : "fast-track"}};
        } else if constexpr (std::is_same_v<T, SlashLock>) {
          j = Json{{"type", "slash-lock"}, {"target", p.target}, {"lock_id", p.lock_id}};
        } else if constexpr (std::is_same_v<T, ScamListAdd>) {
          j = Json{{"type", "scam-list-add"}, {"target", p.target}, {"note", p.note}};
        } else if constexpr (std::is_same_v<T, SocialContractSet>) {
          j = Json{{"type", "social-contract-set"}, {"maintainer_spec", p.maintainer_spec}};
        } else if constexpr (std::is_same_v<T, ContractFreeze>) {
          j = Json{{"type", "contract-freeze"}, {"target", p.target}, {"freeze", p.freeze}};
        } else if constexpr (std::is_same_v<T, RelayInclude>) {
          j = Json{{"type", "relay-include"}, {"shard_header", p.shard_header}};
        } else if constexpr (std::is_same_v<T, CrossChainImport>) {
          j = Json{{"type", "cross-chain-import"}, {"result", p.result}};
        }
      },
      v);
}

void from_json(const Json &j, TxPayload &v) {
  std::string type = j.at("type").get<std::string>();
  if (type == "transfer") {
    v = Transfer{j.at("to").get<Address>(), j.at("amount").get<std::uint64_t>()};
  } else if (type == "lock") {
    v = LockTokens{j.at("amount").get<std::uint64_t>(),
                   j.at("duration_blocks").get<std::uint64_t>(),
                   chain::lock_purpose_from_string(j.at("purpose").get<std::string>())};
  } else if (type == "join") {
    Join join;
    if (j.contains("invite_code")) join.invite_code = j.at("invite_code").get<std::string>();
    if (j.contains("identity")) join.identity = j.at("identity").get<std::string>();
    v = join;
  } else if (type == "submit-proposal") {
    SubmitProposal sp;
    sp.description = j.at("description").get<std::string>();
    sp.action = j.at("action").get<gov::ProposalAction>();
    sp.scheme = j.at("scheme").get<gov::VotingScheme>();
    sp.voting_deadline = j.at("voting_deadline").get<std::uint64_t>();
    sp.threshold = j.at("threshold").get<gov::ThresholdPolicy>();
    v = sp;
  } else if (type == "cast-vote") {
    CastVote cv;
    cv.proposal_id = j.at("proposal_id").get<std::uint64_t>();
    cv.choice = j.at("choice").get<std::string>() == "yes" ? gov::VoteChoice::Yes
                                                           : gov::VoteChoice::No;
    cv.votes_cast = j.at("votes_cast").get<std::uint64_t>();
    v = cv;
  } else if (type == "delegate") {
    v = Delegate{j.at("proposal_id").get<std::uint64_t>(), j.at("target").get<Address>()};
  } else if (type == "revoke-delegation") {
    v = RevokeDelegation{j.at("proposal_id").get<std::uint64_t>()};
  } else if (type == "dictator-override") {
    v = DictatorOverride{j.at("proposal_id").get<std::uint64_t>(),
                         j.at("action").get<std::string>() == "cancel" ? DictatorAction::Cancel
                                                                       : DictatorAction::FastTrack};
  } else if (type == "slash-lock") {
    v = SlashLock{j.at("target").get<Address>(), j.at("lock_id").get<std::uint64_t>()};
  } else if (type == "scam-list-add") {
    v = ScamListAdd{j.at("target").get<Address>(), j.at("note").get<std::string>()};
  } else if (type == "social-contract-set") {
    v = SocialContractSet{j.at("maintainer_spec").get<std::string>()};
  } else if (type == "contract-freeze") {
    v = ContractFreeze{j.at("target").get<std::string>(), j.at("freeze").get<bool>()};
  } else if (type == "relay-include") {
    v = RelayInclude{j.at("shard_header").get<chain::BlockHeader>()};
  } else if (type == "cross-chain-import") {
    v = CrossChainImport{j.at("result").get<gov::CrossChainResult>()};
  } else {
    throw Error("parse.payload", "unknown payload type \"" + type + "\"");
  }
}

void to_json(Json &j, const Transaction &v) {
  j = Json{{"chain_id", v.chain_id},
           {"sender", v.sender},
           {"sender_public_key", v.sender_public_key},
           {"payload", v.payload},
           {"nonce", v.nonce},
           {"fee", v.fee},
           {"signature", v.signature}};
}

void from_json(const Json &j, Transaction &v) {
  v.chain_id = j.at("chain_id").get<std::string>();
  v.sender = j.at("sender").get<Address>();
  v.sender_public_key = j.at("sender_public_key").get<PublicKey>();
  v.payload = j.at("payload").get<TxPayload>();
  v.nonce = j.at("nonce").get<std::uint64_t>();
  v.fee = j.at("fee").get<std::uint64_t>();
  v.signature = j.at("signature").get<Signature>();
}

}  // namespace govsim::tx
