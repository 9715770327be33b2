/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/simulation.hpp"

#include <algorithm>

#include "govsim/governance.hpp"

namespace govsim::sim {

namespace {

constexpr std::uint64_t kForever = 1'000'000'000ULL;  // candidacy locks never expire in-run

std::set<gov::Pattern> mandatory_patterns() {
  return {gov::Pattern::ProtocolUpgrade, gov::Pattern::AccountabilityTracer,
          gov::Pattern::BenevolentDictator, gov::Pattern::ValidatorSelection};
}

}  // namespace

Simulation::Simulation(ScenarioConfig config) : config_(std::move(config)) {
  validate_config(config_);
  network_.set_default_delay(config_.default_delay);
  for (const PartitionWindow &window : config_.partitions) network_.add_partition(window);

  chain::LedgerState relay_genesis = build_relay_genesis();
  std::vector<chain::LedgerState> shard_genesis;
  if (config_.shard_count() > 1) {
    for (std::uint32_t s = 0; s < config_.shard_count(); ++s) {
      shard_genesis.push_back(build_shard_genesis(s));
    }
  }

  for (const NodeSpec &spec : config_.nodes) {
    if (spec.chain == kRelayChain) {
      spawn_node(spec.id, config_.chain_id, wallet(spec.id), relay_genesis, 0);
    } else {
      std::uint32_t shard = static_cast<std::uint32_t>(std::stoul(spec.chain.substr(6)));
      spawn_node(spec.id, config_.shard_chain_id(shard), wallet(spec.id), shard_genesis.at(shard),
                 shard);
    }
  }
}

crypto::KeyPair Simulation::wallet(const std::string &name) const {
  return crypto::KeyPair::derive(config_.seed, name);
}

Address Simulation::address_of(const std::string &name) const {
  return Address::from_public_key(wallet(name).public_key);
}

std::string Simulation::resolve_chain(const std::string &keyword) const {
  if (keyword.empty() || keyword == kRelayChain) return config_.chain_id;
  if (keyword.rfind("shard-", 0) == 0) {
    return config_.shard_chain_id(static_cast<std::uint32_t>(std::stoul(keyword.substr(6))));
  }
  return keyword;
}

Node &Simulation::node_by_id(const std::string &id) {
  auto it = node_index_.find(id);
  if (it == node_index_.end()) throw Error("sim.node", "unknown node \"" + id + "\"");
  return *nodes_[it->second];
}

Node &Simulation::chain_head(const std::string &chain_id) {
  auto indexes = network_.chain_nodes(chain_id);
  if (indexes.empty()) throw Error("sim.chain", "no nodes on chain \"" + chain_id + "\"");
  return *nodes_[indexes.front()];
}

const Node &Simulation::chain_head(const std::string &chain_id) const {
  auto indexes = network_.chain_nodes(chain_id);
  if (indexes.empty()) throw Error("sim.chain", "no nodes on chain \"" + chain_id + "\"");
  return *nodes_[indexes.front()];
}

std::vector<std::string> Simulation::chain_ids() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < network_.node_count(); ++i) {
    const std::string &chain = network_.node_chain(i);
    if (std::find(out.begin(), out.end(), chain) == out.end()) out.push_back(chain);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Simulation::violations() const {
  std::vector<std::string> out = sim_violations_;
  for (const auto &node : nodes_) {
    for (const std::string &v : node->violations()) {
      out.push_back(node->id() + ": " + v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Genesis construction
// ---------------------------------------------------------------------------

chain::LedgerState Simulation::build_relay_genesis() const {
  chain::LedgerState g;
  g.chain_id = config_.chain_id;
  gov::GovernancePolicy &policy = g.registries.policy;
  policy.mode = config_.mode;
  policy.patterns = config_.pattern_set();
  policy.selection.mode = config_.selection;
  policy.finality = config_.finality;
  policy.incentive.enabled = config_.incentive_enabled;
  policy.incentive.block_reward = config_.block_reward;
  policy.incentive.validator_fee_fraction = config_.validator_fee_fraction;
  if (!config_.treasury.empty()) policy.incentive.treasury = address_of(config_.treasury);
  policy.shard_count = config_.shard_count();

  Json locker = config_.pattern_params("token-locker");
  policy.proposal_deposit = locker.value("proposal_deposit", 10u);
  Json dictator = config_.pattern_params("benevolent-dictator");
  policy.fast_track_window = dictator.value("fast_track_window", 10u);
  Json freezer = config_.pattern_params("network-freezer");
  if (freezer.contains("quorum")) from_json(freezer.at("quorum"), policy.freeze_quorum);
  for (const Json &name : config_.pattern_params("contract-freezer").value("eligible", Json::array())) {
    policy.freezer_eligible.push_back(address_of(name.get<std::string>()));
  }
  for (const Json &rule_json : config_.pattern_params("transaction-filter").value("rules", Json::array())) {
    gov::FilterRule rule;
    gov::from_json(rule_json, rule);
    policy.filters.push_back(std::move(rule));
  }

  g.registries.participation.mode = config_.mode;
  for (const Json &code :
       config_.pattern_params("participation-permission").value("invites", Json::array())) {
    g.registries.participation.invites.insert(code.get<std::string>());
  }

  auto add_account = [&](const std::string &name, std::uint64_t balance,
                         const std::string &identity, gov::Role role) {
    Address addr = address_of(name);
    chain::Account &account = g.account(addr);
    account.balance = balance;
    account.public_key = wallet(name).public_key;
    if (config_.mode == gov::Mode::Permissioned && !identity.empty()) {
      account.identity = identity;
    }
    g.registries.participation.members[addr] =
        config_.mode == gov::Mode::Permissioned ? identity : "";
    if (role != gov::Role::Ordinary) g.registries.roles[addr] = role;
    return addr;
  };

  for (const AccountSpec &spec : config_.accounts) {
    if (spec.chain != kRelayChain) continue;
    add_account(spec.name, spec.balance, spec.identity, spec.role);
  }
  for (const NodeSpec &spec : config_.nodes) {
    if (spec.chain != kRelayChain) continue;
    Address addr = add_account(spec.id, spec.stake,
                               config_.mode == gov::Mode::Permissioned ? spec.id : "", spec.role);
    if (spec.stake > 0) {
      chain::TokenLock lock;
      lock.id = g.next_lock_id++;
      lock.amount = spec.stake;
      lock.unlock_height = kForever;
      lock.purpose = chain::LockPurpose::ValidatorCandidacy;
      g.account(addr).locks.push_back(lock);
    }
  }

  if (config_.selection != gov::SelectionMode::ProofOfStake) {
    std::vector<std::string> authority_ids = config_.authorities;
    if (authority_ids.empty()) {
      for (const NodeSpec &spec : config_.nodes) {
        if (spec.chain == kRelayChain) authority_ids.push_back(spec.id);
      }
    }
    for (const std::string &id : authority_ids) {
      policy.selection.authorities.push_back(address_of(id));
    }
  }

  g.supply.initial = g.total_balance();
  return g;
}

chain::LedgerState Simulation::build_shard_genesis(std::uint32_t shard) const {
  chain::LedgerState g;
  g.chain_id = config_.shard_chain_id(shard);
  gov::GovernancePolicy &policy = g.registries.policy;
  policy.mode = config_.mode;
  policy.patterns = mandatory_patterns();
  policy.selection.mode = gov::SelectionMode::RoundRobin;
  policy.finality.mode = gov::FinalityMode::KDeep;
  policy.finality.k = kForever;  // shard finality follows relay inclusion
  g.registries.participation.mode = config_.mode;

  std::string shard_chain = "shard-" + std::to_string(shard);
  for (const AccountSpec &spec : config_.accounts) {
    if (spec.chain != shard_chain) continue;
    Address addr = address_of(spec.name);
    chain::Account &account = g.account(addr);
    account.balance = spec.balance;
    account.public_key = wallet(spec.name).public_key;
    g.registries.participation.members[addr] = "";
  }
  for (const NodeSpec &spec : config_.nodes) {
    if (spec.chain != shard_chain) continue;
    Address addr = address_of(spec.id);
    chain::Account &account = g.account(addr);
    account.public_key = wallet(spec.id).public_key;
    g.registries.participation.members[addr] = "";
    policy.selection.authorities.push_back(addr);
  }
  g.supply.initial = g.total_balance();
  return g;
}

void Simulation::spawn_node(const std::string &node_id, const std::string &chain_id,
                            const crypto::KeyPair &keys, chain::LedgerState genesis,
                            std::uint32_t shard_id) {
  std::size_t index = network_.add_node(node_id, chain_id);
  nodes_.push_back(std::make_unique<Node>(node_id, index, keys, std::move(genesis), shard_id));
  node_index_[node_id] = index;
}

// ---------------------------------------------------------------------------
// Transactions from scripted actions
// ---------------------------------------------------------------------------

std::uint64_t Simulation::next_nonce(const std::string &chain_id, const Address &sender) {
  Node &head = chain_head(chain_id);
  const chain::Account *account = head.tip_state().find_account(sender);
  std::uint64_t next = account ? account->next_nonce : 0;
  while (head.pool().contains(sender, next)) ++next;
  return next;
}

tx::Transaction Simulation::craft_tx(const std::string &chain_id, const std::string &sender,
                                     tx::TxPayload payload, std::uint64_t fee) {
  crypto::KeyPair keys = wallet(sender);
  std::uint64_t nonce = next_nonce(chain_id, Address::from_public_key(keys.public_key));
  return tx::make_transaction(chain_id, keys, std::move(payload), nonce, fee);
}

void Simulation::submit_tx(const std::string &chain_id, const tx::Transaction &t) {
  if (network_.frozen(chain_id)) {
    journal_.emit(tick_, chain_id, "", "tx.dropped-frozen", {{"tx", t.hash().hex()}});
    return;
  }
  Node &head = chain_head(chain_id);
  tx::SubmitResult result = head.submit_local(t, tick_, journal_);
  if (result.accepted) {
    network_.broadcast(tick_, head.index(), TxGossip{t}, journal_);
  }
}

// ---------------------------------------------------------------------------
// Actions
// ---------------------------------------------------------------------------

void Simulation::dispatch_action(const ActionSpec &action) {
  const Json &p = action.params;
  auto chain_of_account = [&](const std::string &name) {
    for (const AccountSpec &spec : config_.accounts) {
      if (spec.name == name) return resolve_chain(spec.chain);
    }
    return config_.chain_id;
  };
  auto target_chain = [&](const std::string &fallback_owner) {
    if (p.contains("chain")) return resolve_chain(p.at("chain").get<std::string>());
    return chain_of_account(fallback_owner);
  };

  if (action.kind == "transfer") {
    std::string from = p.at("from").get<std::string>();
    std::string chain_id = target_chain(from);
    tx::Transfer payload{address_of(p.at("to").get<std::string>()),
                         p.at("amount").get<std::uint64_t>()};
    submit_tx(chain_id, craft_tx(chain_id, from, payload, p.value("fee", 0u)));
  } else if (action.kind == "lock") {
    std::string who = p.at("who").get<std::string>();
    std::string chain_id = target_chain(who);
    tx::LockTokens payload{p.at("amount").get<std::uint64_t>(),
                           p.at("duration").get<std::uint64_t>(),
                           chain::lock_purpose_from_string(p.at("purpose").get<std::string>())};
    submit_tx(chain_id, craft_tx(chain_id, who, payload, p.value("fee", 0u)));
  } else if (action.kind == "join") {
    std::string who = p.at("who").get<std::string>();
    std::string chain_id = target_chain(who);
    tx::Join payload;
    if (p.contains("invite")) payload.invite_code = p.at("invite").get<std::string>();
    if (p.contains("identity")) payload.identity = p.at("identity").get<std::string>();
    submit_tx(chain_id, craft_tx(chain_id, who, payload, 0));
  } else if (action.kind == "submit-proposal") {
    std::string proposer = p.at("proposer").get<std::string>();
    std::string chain_id = target_chain(proposer);
    tx::SubmitProposal payload;
    payload.description = p.at("description").get<std::string>();
    gov::from_json(p.at("proposal_action"), payload.action);
    gov::from_json(p.at("scheme"), payload.scheme);
    if (payload.scheme.kind == gov::SchemeKind::CrossChainToken) {
      payload.scheme.aux_tally_key = wallet(payload.scheme.aux_chain_id + "/tally").public_key;
    }
    payload.voting_deadline = p.at("deadline").get<std::uint64_t>();
    gov::from_json(p.at("threshold"), payload.threshold);
    submit_tx(chain_id, craft_tx(chain_id, proposer, payload, p.value("fee", 0u)));
  } else if (action.kind == "vote") {
    std::string voter = p.at("voter").get<std::string>();
    std::string chain_id = target_chain(voter);
    tx::CastVote payload;
    payload.proposal_id = p.at("proposal").get<std::uint64_t>();
    payload.choice = p.at("choice").get<std::string>() == "yes" ? gov::VoteChoice::Yes
                                                                : gov::VoteChoice::No;
    payload.votes_cast = p.value("votes", 1u);
    submit_tx(chain_id, craft_tx(chain_id, voter, payload, p.value("fee", 0u)));
  } else if (action.kind == "delegate") {
    std::string voter = p.at("voter").get<std::string>();
    std::string chain_id = target_chain(voter);
    tx::Delegate payload{p.at("proposal").get<std::uint64_t>(),
                         address_of(p.at("target").get<std::string>())};
    submit_tx(chain_id, craft_tx(chain_id, voter, payload, 0));
  } else if (action.kind == "revoke") {
    std::string voter = p.at("voter").get<std::string>();
    std::string chain_id = target_chain(voter);
    submit_tx(chain_id,
              craft_tx(chain_id, voter, tx::RevokeDelegation{p.at("proposal").get<std::uint64_t>()}, 0));
  } else if (action.kind == "dictator") {
    std::string actor = p.at("actor").get<std::string>();
    std::string chain_id = target_chain(actor);
    tx::DictatorOverride payload{p.at("proposal").get<std::uint64_t>(),
                                 p.at("do").get<std::string>() == "cancel"
                                     ? tx::DictatorAction::Cancel
                                     : tx::DictatorAction::FastTrack};
    submit_tx(chain_id, craft_tx(chain_id, actor, payload, 0));
  } else if (action.kind == "slash-lock") {
    std::string actor = p.at("actor").get<std::string>();
    std::string chain_id = target_chain(actor);
    Address target = address_of(p.at("target").get<std::string>());
    chain::LockPurpose purpose =
        chain::lock_purpose_from_string(p.at("purpose").get<std::string>());
    const chain::LedgerState &tip = chain_head(chain_id).tip_state();
    const chain::Account *account = tip.find_account(target);
    std::uint64_t lock_id = 0;
    if (account) {
      for (const chain::TokenLock &lock : account->locks) {
        if (lock.purpose == purpose && lock.active_at(tip.height)) {
          lock_id = lock.id;
          break;
        }
      }
    }
    if (lock_id == 0) {
      journal_.emit(tick_, chain_id, "", "slash.failed", {{"reason", "no active lock"}});
      return;
    }
    submit_tx(chain_id, craft_tx(chain_id, actor, tx::SlashLock{target, lock_id}, 0));
  } else if (action.kind == "scam-add") {
    std::string actor = p.at("actor").get<std::string>();
    std::string chain_id = target_chain(actor);
    tx::ScamListAdd payload{address_of(p.at("target").get<std::string>()),
                            p.value("note", std::string{})};
    submit_tx(chain_id, craft_tx(chain_id, actor, payload, 0));
  } else if (action.kind == "social-set") {
    std::string actor = p.at("actor").get<std::string>();
    std::string chain_id = target_chain(actor);
    submit_tx(chain_id,
              craft_tx(chain_id, actor, tx::SocialContractSet{p.at("spec").get<std::string>()}, 0));
  } else if (action.kind == "freeze-contract" || action.kind == "unfreeze-contract") {
    std::string actor = p.at("actor").get<std::string>();
    std::string chain_id = target_chain(actor);
    tx::ContractFreeze payload{p.at("target").get<std::string>(),
                               action.kind == "freeze-contract"};
    submit_tx(chain_id, craft_tx(chain_id, actor, payload, 0));
  } else if (action.kind == "freeze") {
    handle_freeze(p, true);
  } else if (action.kind == "unfreeze") {
    handle_freeze(p, false);
  } else if (action.kind == "enact-upgrade") {
    Node &node = node_by_id(p.at("node").get<std::string>());
    std::uint64_t proposal = p.at("proposal").get<std::uint64_t>();
    try {
      node.enact(proposal);
      journal_.emit(tick_, node.chain().chain_id(), node.id(), "upgrade.enacted",
                    {{"proposal_id", std::to_string(proposal)},
                     {"rule_version", std::to_string(node.rules().rule_version)}});
    } catch (const Error &e) {
      journal_.emit(tick_, node.chain().chain_id(), node.id(), "upgrade.enact-failed",
                    {{"proposal_id", std::to_string(proposal)}, {"reason", e.code()}});
    }
  } else if (action.kind == "trace") {
    handle_trace(p);
  } else if (action.kind == "extract-logs") {
    std::string chain_id = resolve_chain(p.value("chain", std::string(kRelayChain)));
    Node &node = p.contains("node") ? node_by_id(p.at("node").get<std::string>())
                                    : chain_head(chain_id);
    std::optional<std::string> topic;
    if (p.contains("topic")) topic = p.at("topic").get<std::string>();
    std::optional<std::pair<std::uint64_t, std::uint64_t>> range;
    if (p.contains("from_height")) {
      range = {p.at("from_height").get<std::uint64_t>(),
               p.value("to_height", std::numeric_limits<std::uint64_t>::max())};
    }
    auto records = chain::extract_logs(node.tip_state(), topic, range);
    journal_.emit(tick_, node.chain().chain_id(), node.id(), "logs.extracted",
                  {{"count", std::to_string(records.size())},
                   {"topic", topic.value_or("*")}});
  } else if (action.kind == "migrate") {
    handle_migrate(p);
  } else {
    throw Error("sim.action", "unknown action \"" + action.kind + "\"");
  }
}

void Simulation::handle_freeze(const Json &params, bool freeze) {
  std::string chain_id = resolve_chain(params.value("chain", std::string(kRelayChain)));
  Node &head = chain_head(chain_id);
  const chain::LedgerState &tip = head.tip_state();
  const gov::GovernancePolicy &policy = tip.registries.policy;

  if (!policy.has(gov::Pattern::NetworkFreezer)) {
    journal_.emit(tick_, chain_id, "", freeze ? "freeze.rejected" : "unfreeze.rejected",
                  {{"reason", "network-freezer not active"}});
    return;
  }

  std::string mechanism;
  if (params.contains("voters")) {
    auto weights = consensus::finality_weights(tip);
    unsigned __int128 total = 0, support = 0;
    for (const auto &[addr, w] : weights) total += w;
    for (const Json &voter : params.at("voters")) {
      auto it = weights.find(address_of(voter.get<std::string>()));
      if (it != weights.end()) support += it->second;
    }
    if (total == 0 || support * policy.freeze_quorum.den <= total * policy.freeze_quorum.num) {
      journal_.emit(tick_, chain_id, "", freeze ? "freeze.rejected" : "unfreeze.rejected",
                    {{"reason", "validator vote below quorum"}});
      return;
    }
    mechanism = "validator-vote";
  } else {
    Address actor = address_of(params.at("actor").get<std::string>());
    gov::Role role = tip.registries.role_of(actor);
    if (role != gov::Role::Administrator && role != gov::Role::Deployer) {
      journal_.emit(tick_, chain_id, "", freeze ? "freeze.rejected" : "unfreeze.rejected",
                    {{"reason", "actor lacks administrator rights"}});
      return;
    }
    mechanism = "administrator";
  }

  if (freeze) {
    network_.freeze(chain_id);
    journal_.emit(tick_, chain_id, "", "network.frozen", {{"by", mechanism}});
  } else {
    network_.unfreeze(chain_id);
    journal_.emit(tick_, chain_id, "", "network.unfrozen", {{"by", mechanism}});
  }
}

void Simulation::handle_trace(const Json &params) {
  std::string chain_id = resolve_chain(params.value("chain", std::string(kRelayChain)));
  Node &node = params.contains("node") ? node_by_id(params.at("node").get<std::string>())
                                       : chain_head(chain_id);
  Address sender = address_of(params.at("from").get<std::string>());
  std::uint64_t nonce = params.at("nonce").get<std::uint64_t>();

  // Locate the transaction in the finalized prefix, then trace it.
  for (const Digest &digest : node.chain().canonical_chain()) {
    const chain::Block &block = node.chain().block(digest);
    if (block.header.height > node.chain().finalized_height()) break;
    for (const tx::Transaction &t : block.transactions) {
      if (t.sender != sender || t.nonce != nonce) continue;
      chain::TraceResult result = node.chain().trace_sender(t.hash());
      std::map<std::string, std::string> payload{{"tx", t.hash().hex()},
                                                 {"address", result.address.hex()}};
      if (result.identity) payload["identity"] = *result.identity;
      journal_.emit(tick_, node.chain().chain_id(), node.id(), "trace.performed",
                    std::move(payload));
      return;
    }
  }
  journal_.emit(tick_, node.chain().chain_id(), node.id(), "trace.failed",
                {{"reason", "trace.unknown-tx"}});
}

void Simulation::handle_migrate(const Json &params) {
  std::string source = resolve_chain(params.at("source").get<std::string>());
  std::string target = params.at("target").get<std::string>();
  if (network_.frozen(source)) {
    journal_.emit(tick_, source, "", "migrate.refused", {{"reason", "source chain frozen"}});
    return;
  }
  Node &head = chain_head(source);
  chain::Snapshot snapshot = chain::export_snapshot(head.chain());
  chain::LedgerState imported = chain::import_snapshot(snapshot, target);
  crypto::Digest state_hash = imported.state_hash();
  spawn_node(target + "-n0", target, wallet(target + "/operator"), std::move(imported), 0);
  journal_.emit(tick_, source, head.id(), "migrate.completed",
                {{"target", target},
                 {"taken_at_height", std::to_string(snapshot.taken_at_height)},
                 {"state_hash", state_hash.hex()}});
}

// ---------------------------------------------------------------------------
// Bridges
// ---------------------------------------------------------------------------

bool Simulation::bridge_relay_include(const chain::Block &shard_block,
                                      const std::string &shard_chain_id) {
  // The coordinator re-checks the shard block before carrying its header.
  bool valid = chain::transactions_merkle_root(shard_block.transactions) ==
               shard_block.header.merkle_root;
  if (valid) {
    const chain::LedgerState &shard_tip = chain_head(shard_chain_id).tip_state();
    const chain::Account *producer = shard_tip.find_account(shard_block.header.validator);
    valid = producer && producer->public_key &&
            chain::verify_block_signature(shard_block, *producer->public_key);
  }
  if (!valid) {
    journal_.emit(tick_, shard_chain_id, "", "shard.block-excluded",
                  {{"block", shard_block.hash().hex()}});
    return false;
  }
  tx::Transaction include =
      craft_tx(config_.chain_id, "bridge", tx::RelayInclude{shard_block.header}, 0);
  submit_tx(config_.chain_id, include);
  return true;
}

void Simulation::spawn_aux_chain(const gov::Proposal &proposal, const std::string &home_chain) {
  const std::string &aux_id = proposal.scheme.aux_chain_id;
  if (!network_.chain_nodes(aux_id).empty()) return;  // already hosted

  std::string operator_name = aux_id + "/operator";
  Address operator_addr = address_of(operator_name);

  chain::LedgerState g;
  g.chain_id = aux_id;
  gov::GovernancePolicy &policy = g.registries.policy;
  policy.mode = gov::Mode::Permissionless;
  policy.patterns = mandatory_patterns();
  policy.patterns.insert(gov::Pattern::Carbonvote);
  policy.selection.mode = gov::SelectionMode::RoundRobin;
  policy.selection.authorities = {operator_addr};
  policy.finality.mode = gov::FinalityMode::Immediate;
  g.registries.participation.mode = gov::Mode::Permissionless;

  chain::Account &op = g.account(operator_addr);
  op.public_key = wallet(operator_name).public_key;
  g.registries.participation.members[operator_addr] = "";

  // Token issuance mapping: mirror the home chain's snapshot weights.
  for (const auto &[addr, weight] : proposal.weight_snapshot) {
    g.account(addr).balance = weight;
  }
  g.supply.initial = g.total_balance();

  std::uint64_t home_height = chain_head(home_chain).tip_state().height;
  std::uint64_t remaining =
      proposal.voting_deadline > home_height ? proposal.voting_deadline - home_height : 1;

  gov::Proposal mirror;
  mirror.id = g.registries.next_proposal_id++;
  mirror.proposer = operator_addr;
  mirror.description = "ballot for " + home_chain + "#" + std::to_string(proposal.id);
  mirror.action = gov::ParamChangeAction{"proposal_deposit", 0};  // carrier only
  mirror.scheme.kind = gov::SchemeKind::Carbonvote;
  mirror.threshold = proposal.threshold;
  mirror.created_at = 0;
  mirror.voting_deadline = remaining;
  mirror.weight_snapshot = proposal.weight_snapshot;
  mirror.total_snapshot_weight = proposal.total_snapshot_weight;
  std::uint64_t mirror_id = mirror.id;
  g.registries.proposals[mirror_id] = std::move(mirror);

  spawn_node(aux_id + "-n0", aux_id, wallet(aux_id + "/op-node"), std::move(g), 0);
  watches_.push_back(CrossChainWatch{home_chain, proposal.id, aux_id, mirror_id,
                                     proposal.voting_deadline, false, false, false});
  journal_.emit(tick_, home_chain, "", "crosschain.ballot-opened",
                {{"proposal_id", std::to_string(proposal.id)},
                 {"aux_chain", aux_id},
                 {"aux_deadline", std::to_string(remaining)}});
}

void Simulation::bridge_scan() {
  // Watch every chain head's fresh events for cross-chain lifecycle points.
  for (const std::string &chain_id : chain_ids()) {
    const Node &head = chain_head(chain_id);
    const auto &events = head.tip_state().events;
    std::size_t &seen = events_seen_[chain_id];
    for (std::size_t i = seen; i < events.size(); ++i) {
      const chain::EventRecord &event = events[i];
      if (event.topic == "proposal.open" &&
          event.payload.count("scheme") > 0 &&
          event.payload.at("scheme") == "cross-chain-token") {
        std::uint64_t id = std::stoull(event.payload.at("proposal_id"));
        auto it = head.tip_state().registries.proposals.find(id);
        if (it != head.tip_state().registries.proposals.end()) {
          spawn_aux_chain(it->second, chain_id);
        }
      }
    }
    seen = events.size();
  }

  for (CrossChainWatch &watch : watches_) {
    if (watch.resolved) continue;
    Node &home = chain_head(watch.home_chain);
    const auto &proposals = home.tip_state().registries.proposals;
    auto home_it = proposals.find(watch.home_proposal);
    if (home_it != proposals.end() && home_it->second.status != gov::ProposalStatus::Open) {
      watch.resolved = true;
      continue;
    }

    // Ship the signed result once the auxiliary ballot resolves.
    if (!watch.result_sent && !network_.chain_nodes(watch.aux_chain).empty()) {
      Node &aux = chain_head(watch.aux_chain);
      auto aux_it = aux.tip_state().registries.proposals.find(watch.aux_proposal);
      if (aux_it != aux.tip_state().registries.proposals.end() && aux_it->second.result) {
        gov::CrossChainResult result = gov::make_cross_chain_result(
            watch.home_chain, watch.aux_chain, watch.home_proposal, *aux_it->second.result,
            wallet(watch.aux_chain + "/tally"));
        network_.send(tick_, aux.index(), home.index(), CrossChainMsg{result});
        watch.result_sent = true;
        journal_.emit(tick_, watch.aux_chain, aux.id(), "crosschain.result-sent",
                      {{"proposal_id", std::to_string(watch.home_proposal)},
                       {"yes_weight", std::to_string(result.yes_weight)},
                       {"no_weight", std::to_string(result.no_weight)}});
      }
    }

    // A frozen ballot chain aborts the vote; the proposal stays open.
    if (!watch.aborted && !watch.result_sent &&
        home.tip_state().height >= watch.home_deadline && network_.frozen(watch.aux_chain)) {
      watch.aborted = true;
      journal_.emit(tick_, watch.home_chain, "", "crosschain.aborted",
                    {{"proposal_id", std::to_string(watch.home_proposal)},
                     {"reason", "aux chain frozen"}});
    }
  }
}

void Simulation::couple_shard_finality() {
  if (config_.shard_count() <= 1) return;
  const Node &relay = chain_head(config_.chain_id);
  std::uint64_t relay_final = relay.chain().finalized_height();

  // Highest shard header carried by a finalized relay block, per shard.
  std::map<std::uint32_t, std::pair<std::uint64_t, Digest>> best;
  for (const Digest &digest : relay.chain().canonical_chain()) {
    const chain::Block &block = relay.chain().block(digest);
    if (block.header.height > relay_final) break;
    for (const tx::Transaction &t : block.transactions) {
      const auto *include = std::get_if<tx::RelayInclude>(&t.payload);
      if (!include) continue;
      chain::Block carrier{include->shard_header, {}, {}};
      auto &slot = best[include->shard_header.shard_id];
      if (include->shard_header.height >= slot.first) {
        slot = {include->shard_header.height, carrier.hash()};
      }
    }
  }
  for (const auto &[shard, target] : best) {
    std::string shard_chain = config_.shard_chain_id(shard);
    for (std::size_t index : network_.chain_nodes(shard_chain)) {
      Node &node = *nodes_[index];
      if (target.first <= node.chain().finalized_height()) continue;
      auto at = node.chain().canonical_at(target.first);
      if (at && *at == target.second && node.chain().advance_finality(target.first, target.second)) {
        journal_.emit(tick_, shard_chain, node.id(), "finality.advanced",
                      {{"height", std::to_string(target.first)},
                       {"mode", "relay-inclusion"},
                       {"block", target.second.hex()}});
      }
    }
  }
}

// ---------------------------------------------------------------------------
// The tick loop
// ---------------------------------------------------------------------------

void Simulation::deliver_due(TickTrace &trace_entry) {
  for (Message &message : network_.collect_due(tick_)) {
    trace_entry.delivered_by_chain[message.chain_id] += 1;
    if (const auto *cross = std::get_if<CrossChainMsg>(&message.body)) {
      // Result records enter the home chain as an import transaction.
      const std::string &home = network_.node_chain(message.to);
      tx::Transaction import =
          craft_tx(home, "bridge", tx::CrossChainImport{cross->result}, 0);
      submit_tx(home, import);
      continue;
    }
    nodes_[message.to]->receive(message, tick_, journal_);
  }
}

void Simulation::produce_round(std::uint64_t round) {
  for (const std::string &chain_id : chain_ids()) {
    if (network_.frozen(chain_id)) continue;
    bool is_shard = chain_id.rfind(config_.chain_id + "/shard-", 0) == 0;
    for (std::size_t index : network_.chain_nodes(chain_id)) {
      Node &node = *nodes_[index];
      auto block = node.try_produce(round, config_.seed, tick_, journal_);
      if (!block) continue;
      network_.broadcast(tick_, index, BlockGossip{*block}, journal_);
      if (is_shard) {
        bridge_relay_include(*block, chain_id);
      }
    }
  }
}

void Simulation::broadcast_finality_votes(std::uint64_t round) {
  for (const std::string &chain_id : chain_ids()) {
    if (network_.frozen(chain_id)) continue;
    for (std::size_t index : network_.chain_nodes(chain_id)) {
      Node &node = *nodes_[index];
      if (node.tip_state().registries.policy.finality.mode !=
          gov::FinalityMode::SupermajorityVote) {
        continue;
      }
      if (!consensus::is_eligible_validator(node.tip_state(), node.address())) continue;
      network_.broadcast(tick_, index, node.current_vote(round), journal_);
    }
  }
}

void Simulation::finalize_and_check() {
  for (auto &node : nodes_) {
    node->update_finality(tick_, journal_);
    node->check_safety();
  }
  couple_shard_finality();
}

void Simulation::step() { advance(false); }

void Simulation::advance(bool drain) {
  ++tick_;
  TickTrace trace_entry;
  trace_entry.tick = tick_;

  if (!drain) {
    for (const ActionSpec &action : config_.actions) {
      if (action.tick == tick_) dispatch_action(action);
    }
  }
  deliver_due(trace_entry);
  if (tick_ % config_.round_interval == 0) {
    std::uint64_t round = tick_ / config_.round_interval;
    if (!drain) produce_round(round);
    broadcast_finality_votes(round);
  }
  bridge_scan();
  finalize_and_check();

  for (const auto &node : nodes_) {
    trace_entry.tip_heights[node->id()] = node->chain().tip_height();
  }
  trace_.push_back(std::move(trace_entry));
}

void Simulation::run() {
  while (tick_ < config_.ticks) step();
  // Quiescence: in-flight gossip settles without further production so
  // honest replicas converge before the report is cut.
  std::uint64_t drain = config_.default_delay + 3;
  for (std::uint64_t i = 0; i < drain; ++i) advance(true);
}

}  // namespace govsim::sim
