/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/governance.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "govsim/json_codec.hpp"
#include "govsim/registry.hpp"

namespace govsim::gov {

namespace {

Proposal &open_proposal(LedgerState &state, std::uint64_t proposal_id) {
  auto it = state.registries.proposals.find(proposal_id);
  if (it == state.registries.proposals.end()) {
    throw Error("proposal.unknown", "no proposal with id " + std::to_string(proposal_id));
  }
  if (it->second.status != ProposalStatus::Open) {
    throw Error("proposal.not-open", "proposal " + std::to_string(proposal_id) + " is " +
                                         to_string(it->second.status));
  }
  return it->second;
}

void require_before_deadline(const LedgerState &state, const Proposal &p) {
  if (state.height >= p.voting_deadline) {
    throw Error("vote.deadline", "voting on proposal " + std::to_string(p.id) + " closed at height " +
                                     std::to_string(p.voting_deadline));
  }
}

std::uint64_t quadratic_cost(std::uint64_t votes) {
  unsigned __int128 cost = static_cast<unsigned __int128>(votes) * votes;
  if (cost > std::numeric_limits<std::uint64_t>::max()) {
    throw Error("vote.cost", "quadratic cost overflows the token range");
  }
  return static_cast<std::uint64_t>(cost);
}

void refund_quadratic(LedgerState &state, Proposal &p, const Address &voter) {
  auto it = p.ballots.find(voter);
  if (it == p.ballots.end()) return;
  std::uint64_t refund = quadratic_cost(it->second.votes_cast);
  chain::Account &pool = state.account(p.scheme.cost_account);
  if (pool.balance < refund) {
    throw Error("vote.refund", "cost account underfunded for refund");
  }
  pool.balance -= refund;
  state.account(voter).balance += refund;
}

Pattern scheme_pattern(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Carbonvote: return Pattern::Carbonvote;
    case SchemeKind::Quadratic: return Pattern::QuadraticVoting;
    case SchemeKind::LiquidDemocracy: return Pattern::LiquidDemocracy;
    case SchemeKind::CrossChainToken: return Pattern::CrossChainTokenVoting;
    case SchemeKind::OneAddressOneVote: break;
  }
  return Pattern::ProtocolUpgrade;  // one-address-one-vote has no gate
}

void resolve_with(LedgerState &state, Proposal &p, const TallyResult &result);

}  // namespace

std::uint64_t carbonvote_weight(const chain::Account &account, std::uint64_t height,
                                const Rational &lock_weight_factor,
                                std::uint64_t max_lock_period) {
  std::uint64_t weight = account.balance;
  if (lock_weight_factor.num == 0 || max_lock_period == 0) return weight;
  unsigned __int128 bonus_sum = 0;
  for (const chain::TokenLock &lock : account.locks) {
    if (!lock.active_at(height) || lock.purpose != chain::LockPurpose::VoteWeight) continue;
    std::uint64_t remaining = lock.unlock_height - height;
    bonus_sum += static_cast<unsigned __int128>(lock.amount) * std::min(remaining, max_lock_period);
  }
  unsigned __int128 bonus =
      bonus_sum * lock_weight_factor.num /
      (static_cast<unsigned __int128>(lock_weight_factor.den) * max_lock_period);
  return weight + static_cast<std::uint64_t>(bonus);
}

LedgerState join(LedgerState state, const Address &sender, const PublicKey &key,
                 const std::optional<std::string> &invite_code,
                 const std::optional<std::string> &identity) {
  ParticipationRegistry &reg = state.registries.participation;
  std::string label;
  if (reg.mode == Mode::Permissioned) {
    if (!invite_code || reg.invites.count(*invite_code) == 0) {
      throw Error("join.invite", "missing, unknown, or already-consumed invite code");
    }
    if (!identity || identity->empty()) {
      throw Error("join.identity", "permissioned membership requires an identity label");
    }
    reg.invites.erase(*invite_code);
    label = *identity;
  }
  reg.members[sender] = label;
  chain::Account &account = state.account(sender);
  account.public_key = key;
  if (!label.empty()) account.identity = label;
  std::map<std::string, std::string> payload{{"address", sender.hex()},
                                             {"mode", to_string(reg.mode)}};
  if (!label.empty()) payload["identity"] = label;
  if (invite_code && reg.mode == Mode::Permissioned) payload["invite"] = *invite_code;
  state.emit("member.joined", std::move(payload));
  return state;
}

LedgerState submit_proposal(LedgerState state, const Address &proposer,
                            const tx::SubmitProposal &payload) {
  const GovernancePolicy &policy = state.registries.policy;
  if (!state.registries.participation.is_member(proposer)) {
    throw Error("proposal.non-member", "proposer " + proposer.hex() + " is not a member");
  }
  if (payload.scheme.kind != SchemeKind::OneAddressOneVote &&
      !policy.has(scheme_pattern(payload.scheme.kind))) {
    throw Error("proposal.scheme-not-enabled",
                "voting scheme " + to_string(payload.scheme.kind) + " is not an active pattern");
  }
  if (payload.voting_deadline <= state.height) {
    throw Error("proposal.deadline", "voting deadline must lie in the future");
  }
  if (const auto *up = std::get_if<UpgradeAction>(&payload.action)) {
    if (up->new_version <= policy.base_version) {
      throw Error("proposal.version", "upgrade version must exceed the current version");
    }
    if (up->activation_height <= payload.voting_deadline) {
      throw Error("proposal.activation", "activation height must follow the voting deadline");
    }
  }

  Proposal p;
  p.id = state.registries.next_proposal_id++;
  p.proposer = proposer;
  p.description = payload.description;
  p.action = payload.action;
  p.scheme = payload.scheme;
  p.threshold = payload.threshold;
  p.created_at = state.height;
  p.voting_deadline = payload.voting_deadline;

  // Security deposit via the token locker, held until the deadline.
  if (policy.has(Pattern::TokenLocker) && policy.proposal_deposit > 0) {
    std::uint64_t spendable = state.spendable(proposer);
    std::uint64_t deposit = policy.proposal_deposit;
    if (spendable < deposit) {
      throw Error("proposal.deposit", "deposit needs " + std::to_string(deposit) +
                                          " tokens, spendable " + std::to_string(spendable));
    }
    std::uint64_t duration = payload.voting_deadline - state.height;
    auto [next, lock_id] = chain::lock_tokens(std::move(state), proposer, deposit, duration,
                                              chain::LockPurpose::ProposalDeposit);
    state = std::move(next);
    p.deposit_lock_id = lock_id;
  }

  // Voting weights are pinned at submission.
  switch (p.scheme.kind) {
    case SchemeKind::Carbonvote:
    case SchemeKind::LiquidDemocracy:
    case SchemeKind::CrossChainToken:
      for (const auto &[addr, account] : state.accounts) {
        std::uint64_t w = carbonvote_weight(account, state.height, p.scheme.lock_weight_factor,
                                            p.scheme.max_lock_period);
        if (w > 0) {
          p.weight_snapshot[addr] = w;
          p.total_snapshot_weight += w;
        }
      }
      break;
    case SchemeKind::OneAddressOneVote:
    case SchemeKind::Quadratic:
      for (const auto &[addr, label] : state.registries.participation.members) {
        p.weight_snapshot[addr] = 1;
        p.total_snapshot_weight += 1;
      }
      break;
  }

  std::uint64_t id = p.id;
  state.registries.proposals[id] = std::move(p);
  state.emit("proposal.open", {{"proposal_id", std::to_string(id)},
                               {"proposer", proposer.hex()},
                               {"scheme", to_string(state.registries.proposals[id].scheme.kind)},
                               {"deadline", std::to_string(payload.voting_deadline)}});
  return state;
}

LedgerState cast_vote(LedgerState state, const Ballot &ballot) {
  Proposal &p = open_proposal(state, ballot.proposal_id);
  require_before_deadline(state, p);

  if (p.scheme.kind == SchemeKind::Quadratic) {
    if (ballot.votes_cast == 0) {
      throw Error("vote.zero-votes", "a quadratic ballot of zero votes carries no weight");
    }
    refund_quadratic(state, p, ballot.voter);
    std::uint64_t cost = quadratic_cost(ballot.votes_cast);
    std::uint64_t spendable = state.spendable(ballot.voter);
    if (spendable < cost) {
      throw Error("vote.cost", "casting " + std::to_string(ballot.votes_cast) + " votes costs " +
                                   std::to_string(cost) + " tokens, spendable " +
                                   std::to_string(spendable));
    }
    state.account(ballot.voter).balance -= cost;
    state.account(p.scheme.cost_account).balance += cost;
  }

  p.delegations.erase(ballot.voter);  // latest action wins
  p.ballots[ballot.voter] = ballot;
  state.emit("vote.cast", {{"proposal_id", std::to_string(p.id)},
                           {"voter", ballot.voter.hex()},
                           {"choice", ballot.choice == VoteChoice::Yes ? "yes" : "no"},
                           {"scheme", to_string(p.scheme.kind)},
                           {"votes_cast", std::to_string(ballot.votes_cast)}});
  return state;
}

LedgerState delegate(LedgerState state, const Address &voter, std::uint64_t proposal_id,
                     const Address &target) {
  Proposal &p = open_proposal(state, proposal_id);
  require_before_deadline(state, p);
  if (p.scheme.kind != SchemeKind::LiquidDemocracy) {
    throw Error("delegate.scheme", "proposal does not use liquid democracy");
  }
  if (voter == target) {
    throw Error("delegate.self", "self-delegation is not allowed");
  }
  if (!state.registries.participation.is_member(target)) {
    throw Error("delegate.target", "delegation target is not a member");
  }
  p.ballots.erase(voter);  // latest action wins
  p.delegations[voter] = target;
  state.emit("delegation.set", {{"proposal_id", std::to_string(p.id)},
                                {"voter", voter.hex()},
                                {"target", target.hex()}});
  return state;
}

LedgerState revoke_delegation(LedgerState state, const Address &voter,
                              std::uint64_t proposal_id) {
  Proposal &p = open_proposal(state, proposal_id);
  require_before_deadline(state, p);
  p.delegations.erase(voter);
  state.emit("delegation.revoked",
             {{"proposal_id", std::to_string(p.id)}, {"voter", voter.hex()}});
  return state;
}

bool outcome_approved(const ThresholdPolicy &policy, std::uint64_t yes, std::uint64_t no,
                      const Rational &turnout) {
  unsigned __int128 votes = static_cast<unsigned __int128>(yes) + no;
  if (votes == 0) return false;
  if (policy.kind == ThresholdKind::FixedFraction) {
    return static_cast<unsigned __int128>(yes) * policy.fixed.den > votes * policy.fixed.num;
  }
  // Adaptive turnout biasing: threshold(t) = 1 - t/2, so approval needs
  //   yes / votes > (2*den - num) / (2*den)   with t = num/den.
  unsigned __int128 lhs = static_cast<unsigned __int128>(yes) * 2 * turnout.den;
  unsigned __int128 rhs = votes * (2 * static_cast<unsigned __int128>(turnout.den) - turnout.num);
  return lhs > rhs;
}

TallyResult tally(const LedgerState &state, const Proposal &proposal) {
  if (state.height < proposal.voting_deadline) {
    throw Error("tally.before-deadline", "voting is open until height " +
                                             std::to_string(proposal.voting_deadline));
  }
  if (proposal.scheme.kind == SchemeKind::CrossChainToken) {
    throw Error("tally.cross-chain",
                "cross-chain proposals resolve via their imported result record");
  }

  TallyResult result;
  auto weight_of = [&proposal](const Address &a) -> std::uint64_t {
    auto it = proposal.weight_snapshot.find(a);
    return it == proposal.weight_snapshot.end() ? 0 : it->second;
  };

  switch (proposal.scheme.kind) {
    case SchemeKind::OneAddressOneVote:
    case SchemeKind::Carbonvote: {
      for (const auto &[addr, ballot] : proposal.ballots) {
        std::uint64_t w = weight_of(addr);
        (ballot.choice == VoteChoice::Yes ? result.yes_weight : result.no_weight) += w;
      }
      break;
    }
    case SchemeKind::Quadratic: {
      for (const auto &[addr, ballot] : proposal.ballots) {
        (ballot.choice == VoteChoice::Yes ? result.yes_weight : result.no_weight) +=
            ballot.votes_cast;
      }
      break;
    }
    case SchemeKind::LiquidDemocracy: {
      for (const auto &[addr, w] : proposal.weight_snapshot) {
        Address cur = addr;
        std::set<Address> visited{cur};
        for (;;) {
          auto ballot_it = proposal.ballots.find(cur);
          if (ballot_it != proposal.ballots.end()) {
            (ballot_it->second.choice == VoteChoice::Yes ? result.yes_weight
                                                         : result.no_weight) += w;
            break;
          }
          auto delegation_it = proposal.delegations.find(cur);
          if (delegation_it == proposal.delegations.end()) break;  // non-voting sink
          cur = delegation_it->second;
          if (!visited.insert(cur).second) break;  // cycle voids the weight
        }
      }
      break;
    }
    case SchemeKind::CrossChainToken:
      break;  // unreachable
  }

  switch (proposal.scheme.kind) {
    case SchemeKind::OneAddressOneVote:
    case SchemeKind::Quadratic: {
      // Turnout counts participating addresses against the member snapshot.
      result.turnout = Rational{proposal.ballots.size(),
                                std::max<std::uint64_t>(1, proposal.total_snapshot_weight)};
      break;
    }
    default:
      result.turnout = Rational{result.yes_weight + result.no_weight,
                                std::max<std::uint64_t>(1, proposal.total_snapshot_weight)};
      break;
  }
  result.approved = outcome_approved(proposal.threshold, result.yes_weight, result.no_weight,
                                     result.turnout);
  return result;
}

namespace {

void apply_param_change(LedgerState &state, const ParamChangeAction &change) {
  GovernancePolicy &policy = state.registries.policy;
  if (change.key == "proposal_deposit") {
    policy.proposal_deposit = change.value;
  } else if (change.key == "fast_track_window") {
    policy.fast_track_window = change.value;
  } else if (change.key == "block_reward") {
    policy.incentive.block_reward = change.value;
  } else if (change.key == "max_candidate_txs") {
    policy.max_candidate_txs = change.value;
  } else {
    throw Error("param.unknown", "unknown governance parameter \"" + change.key + "\"");
  }
  state.emit("param.changed", {{"key", change.key}, {"value", std::to_string(change.value)}});
}

void resolve_with(LedgerState &state, Proposal &p, const TallyResult &result) {
  p.result = result;
  p.status = result.approved ? ProposalStatus::Approved : ProposalStatus::Rejected;
  state.emit(result.approved ? "proposal.approved" : "proposal.rejected",
             {{"proposal_id", std::to_string(p.id)},
              {"yes_weight", std::to_string(result.yes_weight)},
              {"no_weight", std::to_string(result.no_weight)},
              {"turnout", std::to_string(result.turnout.num) + "/" +
                              std::to_string(result.turnout.den)}});
  if (!result.approved) return;

  if (const auto *up = std::get_if<UpgradeAction>(&p.action)) {
    state.registries.upgrades.push_back(ApprovedUpgrade{p.id, *up, state.height});
    state.emit("upgrade.approved", {{"proposal_id", std::to_string(p.id)},
                                    {"new_version", std::to_string(up->new_version)},
                                    {"compatibility", to_string(up->compatibility)},
                                    {"activation_height", std::to_string(up->activation_height)}});
  } else if (const auto *pc = std::get_if<ParamChangeAction>(&p.action)) {
    apply_param_change(state, *pc);
    p.status = ProposalStatus::Enacted;
    state.emit("proposal.enacted", {{"proposal_id", std::to_string(p.id)}});
  } else if (const auto *fr = std::get_if<FreezeAction>(&p.action)) {
    FreezeFlag &flag = state.registries.freezes[fr->target];
    flag.target = fr->target;
    flag.frozen = fr->freeze;
    flag.frozen_by = p.proposer;
    flag.height = state.height;
    state.emit(fr->freeze ? "contract.frozen" : "contract.unfrozen",
               {{"target", fr->target}, {"via", "proposal"}});
    p.status = ProposalStatus::Enacted;
    state.emit("proposal.enacted", {{"proposal_id", std::to_string(p.id)}});
  }
}

}  // namespace

LedgerState resolve_due_proposals(LedgerState state) {
  std::vector<std::uint64_t> due;
  for (const auto &[id, p] : state.registries.proposals) {
    if (p.status == ProposalStatus::Open && state.height >= p.voting_deadline &&
        p.scheme.kind != SchemeKind::CrossChainToken) {
      due.push_back(id);
    }
  }
  for (std::uint64_t id : due) {
    Proposal &p = state.registries.proposals[id];
    TallyResult result = tally(state, p);
    resolve_with(state, p, result);
  }
  // Approved upgrades whose activation height arrived are now in force.
  for (const ApprovedUpgrade &upgrade : state.registries.upgrades) {
    auto it = state.registries.proposals.find(upgrade.proposal_id);
    if (it == state.registries.proposals.end()) continue;
    if (it->second.status == ProposalStatus::Approved &&
        state.height >= upgrade.action.activation_height) {
      it->second.status = ProposalStatus::Enacted;
      state.emit("upgrade.activated",
                 {{"proposal_id", std::to_string(upgrade.proposal_id)},
                  {"new_version", std::to_string(upgrade.action.new_version)},
                  {"compatibility", to_string(upgrade.action.compatibility)}});
    }
  }
  return state;
}

LedgerState dictator_override(LedgerState state, const Address &actor,
                              std::uint64_t proposal_id, tx::DictatorAction action) {
  Role role = state.registries.role_of(actor);
  if (role != Role::BenevolentDictator && role != Role::CouncilMember) {
    throw Error("auth.dictator", "actor " + actor.hex() +
                                     " holds no benevolent-dictator or council role");
  }
  Proposal &p = open_proposal(state, proposal_id);
  if (action == tx::DictatorAction::Cancel) {
    p.status = ProposalStatus::Cancelled;
    state.emit("proposal.cancelled",
               {{"proposal_id", std::to_string(p.id)}, {"cancelled_by", actor.hex()}});
    if (p.deposit_lock_id) {
      // Misbehaving proposer forfeits the security deposit.
      const chain::Account *proposer = state.find_account(p.proposer);
      if (proposer) {
        for (const chain::TokenLock &lock : proposer->locks) {
          if (lock.id == *p.deposit_lock_id && lock.active_at(state.height)) {
            state = chain::slash_lock(std::move(state), p.proposer, lock.id);
            break;
          }
        }
      }
    }
  } else {
    std::uint64_t new_deadline = state.height + state.registries.policy.fast_track_window;
    if (new_deadline < p.voting_deadline) {
      p.voting_deadline = new_deadline;
    }
    state.emit("proposal.fast-tracked", {{"proposal_id", std::to_string(p.id)},
                                         {"deadline", std::to_string(p.voting_deadline)},
                                         {"by", actor.hex()}});
  }
  return state;
}

bool block_version_ok(const Registries &registries, const NodeRules &rules,
                      const chain::BlockHeader &header) {
  for (const ApprovedUpgrade &upgrade : registries.upgrades) {
    const UpgradeAction &action = upgrade.action;
    if (header.height < action.activation_height) continue;
    if (action.compatibility == ForkKind::SoftFork) continue;  // backward compatible
    if (rules.enacted(action.new_version)) {
      if (header.protocol_version < action.new_version) return false;
    } else {
      if (header.protocol_version >= action.new_version) return false;
    }
  }
  return true;
}

std::uint32_t producer_version(const Registries &registries, const NodeRules &rules,
                               std::uint64_t height) {
  std::uint32_t version = registries.policy.base_version;
  for (const ApprovedUpgrade &upgrade : registries.upgrades) {
    const UpgradeAction &action = upgrade.action;
    if (height >= action.activation_height && rules.enacted(action.new_version)) {
      version = std::max(version, action.new_version);
    }
  }
  return version;
}

NodeRules enact_upgrade(const LedgerState &state, const NodeRules &rules,
                        std::uint64_t proposal_id) {
  for (const ApprovedUpgrade &upgrade : state.registries.upgrades) {
    if (upgrade.proposal_id == proposal_id) {
      NodeRules next = rules;
      next.enacted_versions.insert(upgrade.action.new_version);
      next.rule_version = std::max(next.rule_version, upgrade.action.new_version);
      return next;
    }
  }
  throw Error("upgrade.not-approved",
              "proposal " + std::to_string(proposal_id) + " holds no approved upgrade");
}

Bytes CrossChainResult::signing_bytes() const {
  Json j{{"home_chain_id", home_chain_id},
         {"aux_chain_id", aux_chain_id},
         {"proposal_id", proposal_id},
         {"yes_weight", yes_weight},
         {"no_weight", no_weight},
         {"turnout", turnout},
         {"tally_key", tally_key}};
  return str_bytes(canonical_dump(j));
}

CrossChainResult make_cross_chain_result(const std::string &home_chain_id,
                                         const std::string &aux_chain_id,
                                         std::uint64_t proposal_id, const TallyResult &tally,
                                         const crypto::KeyPair &tally_keys) {
  CrossChainResult result;
  result.home_chain_id = home_chain_id;
  result.aux_chain_id = aux_chain_id;
  result.proposal_id = proposal_id;
  result.yes_weight = tally.yes_weight;
  result.no_weight = tally.no_weight;
  result.turnout = tally.turnout;
  result.tally_key = tally_keys.public_key;
  result.signature = crypto::sign(tally_keys, result.signing_bytes());
  return result;
}

bool verify_cross_chain_result(const CrossChainResult &result) {
  return crypto::verify(result.tally_key, result.signing_bytes(), result.signature);
}

LedgerState import_cross_chain_result(LedgerState state, const CrossChainResult &result) {
  if (result.home_chain_id != state.chain_id) {
    throw Error("crosschain.chain", "result record targets chain \"" + result.home_chain_id + "\"");
  }
  Proposal &p = open_proposal(state, result.proposal_id);
  if (p.scheme.kind != SchemeKind::CrossChainToken) {
    throw Error("crosschain.scheme", "proposal does not vote cross-chain");
  }
  if (result.aux_chain_id != p.scheme.aux_chain_id) {
    throw Error("crosschain.aux", "result came from chain \"" + result.aux_chain_id +
                                      "\", expected \"" + p.scheme.aux_chain_id + "\"");
  }
  if (result.tally_key != p.scheme.aux_tally_key || !verify_cross_chain_result(result)) {
    throw Error("crosschain.signature", "result record fails tally-key verification");
  }
  TallyResult tally_result;
  tally_result.yes_weight = result.yes_weight;
  tally_result.no_weight = result.no_weight;
  tally_result.turnout = result.turnout;
  tally_result.approved =
      outcome_approved(p.threshold, result.yes_weight, result.no_weight, result.turnout);
  state.emit("crosschain.result-imported", {{"proposal_id", std::to_string(p.id)},
                                            {"aux_chain", result.aux_chain_id},
                                            {"yes_weight", std::to_string(result.yes_weight)},
                                            {"no_weight", std::to_string(result.no_weight)}});
  resolve_with(state, p, tally_result);
  return state;
}

}  // namespace govsim::gov
