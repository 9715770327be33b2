/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/ledger.hpp"

#include <algorithm>

#include "govsim/consensus.hpp"
#include "govsim/governance.hpp"
#include "govsim/json_codec.hpp"
#include "govsim/registry.hpp"

namespace govsim::chain {

const Account *LedgerState::find_account(const Address &a) const {
  auto it = accounts.find(a);
  return it == accounts.end() ? nullptr : &it->second;
}

Account &LedgerState::account(const Address &a) {
  auto it = accounts.find(a);
  if (it == accounts.end()) {
    it = accounts.emplace(a, Account{}).first;
    it->second.address = a;
  }
  return it->second;
}

std::uint64_t LedgerState::spendable(const Address &a) const {
  const Account *account = find_account(a);
  return account ? account->spendable_at(height) : 0;
}

std::uint64_t LedgerState::total_balance() const {
  std::uint64_t total = 0;
  for (const auto &[addr, account] : accounts) total += account.balance;
  return total;
}

Digest LedgerState::state_hash() const {
  Json j;
  j["accounts"] = Json::object();
  for (const auto &[addr, account] : accounts) {
    Json a;
    to_json(a, account);
    j["accounts"][addr.hex()] = std::move(a);
  }
  Json regs;
  gov::to_json(regs, registries);
  j["registries"] = std::move(regs);
  return crypto::hash(canonical_dump(j));
}

void LedgerState::emit(std::string topic, std::map<std::string, std::string> payload,
                       Digest tx_hash) {
  events.push_back(EventRecord{height, tx_hash, std::move(topic), std::move(payload)});
}

// ---------------------------------------------------------------------------
// Locks
// ---------------------------------------------------------------------------

std::pair<LedgerState, std::uint64_t> lock_tokens(LedgerState state, const Address &address,
                                                  std::uint64_t amount,
                                                  std::uint64_t duration_blocks,
                                                  LockPurpose purpose) {
  if (amount == 0) {
    throw Error("lock.amount", "lock amount must be positive");
  }
  if (duration_blocks == 0) {
    throw Error("lock.duration", "lock duration must be positive");
  }
  std::uint64_t spendable = state.spendable(address);
  if (spendable < amount) {
    throw Error("lock.insufficient", "locking " + std::to_string(amount) +
                                         " exceeds spendable balance by " +
                                         std::to_string(amount - spendable));
  }
  TokenLock lock;
  lock.id = state.next_lock_id++;
  lock.amount = amount;
  lock.unlock_height = state.height + duration_blocks;
  lock.purpose = purpose;
  state.account(address).locks.push_back(lock);
  state.emit("lock.created", {{"address", address.hex()},
                              {"amount", std::to_string(amount)},
                              {"purpose", to_string(purpose)},
                              {"unlock_height", std::to_string(lock.unlock_height)},
                              {"lock_id", std::to_string(lock.id)}});
  return {std::move(state), lock.id};
}

LedgerState slash_lock(LedgerState state, const Address &address, std::uint64_t lock_id) {
  Account *account = nullptr;
  if (auto it = state.accounts.find(address); it != state.accounts.end()) account = &it->second;
  if (!account) {
    throw Error("slash.unknown", "no account " + address.hex());
  }
  auto lock_it = std::find_if(account->locks.begin(), account->locks.end(),
                              [&](const TokenLock &l) { return l.id == lock_id; });
  if (lock_it == account->locks.end()) {
    throw Error("slash.unknown", "no lock " + std::to_string(lock_id) + " on " + address.hex());
  }
  if (!lock_it->active_at(state.height)) {
    throw Error("slash.expired", "lock " + std::to_string(lock_id) + " already expired");
  }
  std::uint64_t amount = lock_it->amount;
  account->balance -= amount;  // locked tokens are destroyed outright
  account->locks.erase(lock_it);
  state.supply.slashed += amount;
  state.emit("slash", {{"address", address.hex()},
                       {"lock_id", std::to_string(lock_id)},
                       {"amount", std::to_string(amount)}});
  return state;
}

// ---------------------------------------------------------------------------
// Event log extraction
// ---------------------------------------------------------------------------

std::vector<EventRecord> extract_logs(
    const LedgerState &state, const std::optional<std::string> &topic,
    const std::optional<std::pair<std::uint64_t, std::uint64_t>> &height_range) {
  if (height_range && height_range->first > height_range->second) {
    throw Error("logs.range", "inverted height range");
  }
  std::vector<EventRecord> out;
  for (const EventRecord &event : state.events) {
    if (topic && event.topic != *topic) continue;
    if (height_range &&
        (event.height < height_range->first || event.height > height_range->second)) {
      continue;
    }
    out.push_back(event);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Incentives
// ---------------------------------------------------------------------------

LedgerState distribute_incentives(LedgerState state, const Address &validator,
                                  std::uint64_t total_fees) {
  const gov::IncentivePolicy &policy = state.registries.policy.incentive;
  if (!policy.enabled) {
    // Consensus neither mints nor moves tokens; collected fees are destroyed.
    if (total_fees > 0) state.supply.destroyed_fees += total_fees;
    return state;
  }
  std::uint64_t validator_fee = 0;
  if (total_fees > 0 && policy.validator_fee_fraction.den > 0) {
    validator_fee = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(total_fees) * policy.validator_fee_fraction.num /
        policy.validator_fee_fraction.den);
  }
  std::uint64_t treasury_fee = total_fees - validator_fee;
  state.account(validator).balance += policy.block_reward + validator_fee;
  if (treasury_fee > 0) state.account(policy.treasury).balance += treasury_fee;
  state.supply.minted += policy.block_reward;
  if (policy.block_reward + total_fees > 0) {
    state.emit("incentive.distributed",
               {{"validator", validator.hex()},
                {"block_reward", std::to_string(policy.block_reward)},
                {"validator_fee", std::to_string(validator_fee)},
                {"treasury_fee", std::to_string(treasury_fee)}});
  }
  return state;
}

bool conservation_holds(const LedgerState &state) {
  return state.total_balance() == state.supply.expected_total();
}

// ---------------------------------------------------------------------------
// Transaction checking & application
// ---------------------------------------------------------------------------

namespace detail {

std::string check_transaction(const LedgerState &state, const tx::Transaction &t,
                              NonceRule nonce_rule) {
  if (t.chain_id != state.chain_id) return "tx.chain-mismatch";
  if (!tx::verify_transaction(t)) return "tx.signature";
  const Account *sender = state.find_account(t.sender);
  std::uint64_t expected_nonce = sender ? sender->next_nonce : 0;
  if (nonce_rule == NonceRule::Exact ? t.nonce != expected_nonce : t.nonce < expected_nonce) {
    return "tx.nonce";
  }
  for (const gov::FilterRule &rule : state.registries.policy.filters) {
    switch (rule.kind) {
      case gov::FilterRuleKind::MaxPayloadSize: {
        Json payload;
        tx::to_json(payload, t.payload);
        if (canonical_dump(payload).size() > rule.max_bytes) return rule.rule_id();
        break;
      }
      case gov::FilterRuleKind::AllowedPayloadTypes: {
        if (rule.allowed_types.count(tx::payload_kind(t.payload)) == 0) return rule.rule_id();
        break;
      }
      case gov::FilterRuleKind::ScamListCheck: {
        if (state.registries.scam_list.count(t.sender) > 0) return rule.rule_id();
        break;
      }
      case gov::FilterRuleKind::PermissionedSenderCheck: {
        // Joining itself must stay possible; the invite is its credential.
        if (!std::holds_alternative<tx::Join>(t.payload) &&
            !state.registries.participation.is_member(t.sender)) {
          return rule.rule_id();
        }
        break;
      }
    }
  }
  if (t.fee > 0 && state.spendable(t.sender) < t.fee) return "tx.insufficient-funds";
  return {};
}

void apply_transaction(LedgerState &state, const tx::Transaction &t) {
  std::string reason = check_transaction(state, t);
  if (!reason.empty()) {
    throw Error(reason, "transaction " + t.hash().hex() + " rejected");
  }
  Digest tx_hash = t.hash();

  // Fee leaves the sender up front; consensus decides where it lands.
  if (t.fee > 0) {
    if (state.spendable(t.sender) < t.fee) {
      throw Error("tx.insufficient-funds", "fee exceeds spendable balance");
    }
    state.account(t.sender).balance -= t.fee;
  }
  Account &sender = state.account(t.sender);
  sender.next_nonce = t.nonce + 1;
  if (!sender.public_key) sender.public_key = t.sender_public_key;

  std::visit(
      [&](const auto &p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, tx::Transfer>) {
          std::uint64_t spendable = state.spendable(t.sender);
          if (spendable < p.amount) {
            throw Error("tx.insufficient-funds",
                        "transfer of " + std::to_string(p.amount) + " exceeds spendable " +
                            std::to_string(spendable));
          }
          state.account(t.sender).balance -= p.amount;
          state.account(p.to).balance += p.amount;
          state.emit("transfer",
                     {{"from", t.sender.hex()},
                      {"to", p.to.hex()},
                      {"amount", std::to_string(p.amount)}},
                     tx_hash);
        } else if constexpr (std::is_same_v<T, tx::LockTokens>) {
          if (!state.registries.policy.has(gov::Pattern::TokenLocker)) {
            throw Error("lock.pattern", "token locker is not active on this chain");
          }
          auto [next, lock_id] =
              lock_tokens(std::move(state), t.sender, p.amount, p.duration_blocks, p.purpose);
          state = std::move(next);
          (void)lock_id;
        } else if constexpr (std::is_same_v<T, tx::Join>) {
          state = gov::join(std::move(state), t.sender, t.sender_public_key, p.invite_code,
                            p.identity);
        } else if constexpr (std::is_same_v<T, tx::SubmitProposal>) {
          state = gov::submit_proposal(std::move(state), t.sender, p);
        } else if constexpr (std::is_same_v<T, tx::CastVote>) {
          gov::Ballot ballot;
          ballot.voter = t.sender;
          ballot.proposal_id = p.proposal_id;
          ballot.choice = p.choice;
          ballot.votes_cast = p.votes_cast;
          state = gov::cast_vote(std::move(state), ballot);
        } else if constexpr (std::is_same_v<T, tx::Delegate>) {
          state = gov::delegate(std::move(state), t.sender, p.proposal_id, p.target);
        } else if constexpr (std::is_same_v<T, tx::RevokeDelegation>) {
          state = gov::revoke_delegation(std::move(state), t.sender, p.proposal_id);
        } else if constexpr (std::is_same_v<T, tx::DictatorOverride>) {
          state = gov::dictator_override(std::move(state), t.sender, p.proposal_id, p.action);
        } else if constexpr (std::is_same_v<T, tx::SlashLock>) {
          gov::Role role = state.registries.role_of(t.sender);
          if (role != gov::Role::Administrator && role != gov::Role::BenevolentDictator &&
              role != gov::Role::CouncilMember) {
            throw Error("auth.role", "actor may not slash locks");
          }
          state = slash_lock(std::move(state), p.target, p.lock_id);
        } else if constexpr (std::is_same_v<T, tx::ScamListAdd>) {
          state = gov::scam_list_add(std::move(state), t.sender, p.target, p.note);
        } else if constexpr (std::is_same_v<T, tx::SocialContractSet>) {
          state = gov::social_contract_set(std::move(state), t.sender, p.maintainer_spec);
        } else if constexpr (std::is_same_v<T, tx::ContractFreeze>) {
          state = p.freeze ? gov::freeze_contract(std::move(state), t.sender, p.target)
                           : gov::unfreeze_contract(std::move(state), t.sender, p.target);
        } else if constexpr (std::is_same_v<T, tx::RelayInclude>) {
          if (!state.registries.policy.has(gov::Pattern::ShardedChain)) {
            throw Error("relay.pattern", "sharded chain is not active on this chain");
          }
          state.emit("relay.header-included",
                     {{"shard_id", std::to_string(p.shard_header.shard_id)},
                      {"shard_height", std::to_string(p.shard_header.height)},
                      {"shard_block", chain::Block{p.shard_header, {}, {}}.hash().hex()}},
                     tx_hash);
        } else if constexpr (std::is_same_v<T, tx::CrossChainImport>) {
          state = gov::import_cross_chain_result(std::move(state), p.result);
        }
      },
      t.payload);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Block application
// ---------------------------------------------------------------------------

LedgerState apply_block(const LedgerState &state, const Block &block, const NodeRules &rules) {
  const BlockHeader &header = block.header;
  if (header.height != state.height + 1) {
    throw Error("block.height", "expected height " + std::to_string(state.height + 1) + ", got " +
                                    std::to_string(header.height));
  }
  if (transactions_merkle_root(block.transactions) != header.merkle_root) {
    throw Error("block.merkle-root", "header Merkle root does not match transactions");
  }
  const Account *validator = state.find_account(header.validator);
  if (!validator || !validator->public_key) {
    throw Error("block.validator-unknown",
                "validator " + header.validator.hex() + " has no registered key");
  }
  if (!verify_block_signature(block, *validator->public_key)) {
    throw Error("block.signature", "validator signature does not verify");
  }
  if (!consensus::is_eligible_validator(state, header.validator)) {
    throw Error("block.validator-not-authorized",
                "validator " + header.validator.hex() + " is not eligible this round");
  }
  if (!gov::block_version_ok(state.registries, rules, header)) {
    throw Error("block.version", "protocol version " + std::to_string(header.protocol_version) +
                                     " violates fork rules at height " +
                                     std::to_string(header.height));
  }

  LedgerState next = state;
  next.height = header.height;

  std::uint64_t total_fees = 0;
  for (const tx::Transaction &t : block.transactions) {
    detail::apply_transaction(next, t);  // throws; whole-block atomicity
    total_fees += t.fee;
  }

  next = gov::resolve_due_proposals(std::move(next));
  next = distribute_incentives(std::move(next), header.validator, total_fees);

  next.emit("block.applied",
            {{"validator", header.validator.hex()},
             {"tx_count", std::to_string(block.transactions.size())},
             {"selection", gov::to_string(next.registries.policy.selection.mode)},
             {"protocol_version", std::to_string(header.protocol_version)}},
            block.hash());
  return next;
}

}  // namespace govsim::chain
