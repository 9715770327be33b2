/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/registry.hpp"

#include <algorithm>

namespace govsim::gov {

namespace {

void require_unfrozen(const LedgerState &state, const std::string &target) {
  if (state.registries.is_frozen(target)) {
    throw Error("registry.frozen", "target \"" + target + "\" is frozen");
  }
}

bool can_manage_scam_list(Role role) {
  return role == Role::Administrator || role == Role::BenevolentDictator ||
         role == Role::CouncilMember;
}

bool can_trigger_freezer(const LedgerState &state, const Address &actor) {
  const auto &eligible = state.registries.policy.freezer_eligible;
  if (std::find(eligible.begin(), eligible.end(), actor) != eligible.end()) return true;
  // Without a declared eligibility list the deployer/administrators hold it.
  if (eligible.empty()) {
    Role role = state.registries.role_of(actor);
    return role == Role::Deployer || role == Role::Administrator;
  }
  return false;
}

}  // namespace

LedgerState scam_list_add(LedgerState state, const Address &actor, const Address &target,
                          const std::string &note) {
  if (!state.registries.policy.has(Pattern::ScamList)) {
    throw Error("registry.pattern", "scam list is not active on this chain");
  }
  if (!can_manage_scam_list(state.registries.role_of(actor))) {
    throw Error("auth.role", "actor " + actor.hex() + " may not manage the scam list");
  }
  require_unfrozen(state, kScamListTarget);
  state.registries.scam_list[target] = note;
  state.emit("scam-list.added",
             {{"target", target.hex()}, {"added_by", actor.hex()}, {"note", note}});
  return state;
}

bool scam_list_check(const LedgerState &state, const Address &address) {
  return state.registries.scam_list.count(address) > 0;
}

LedgerState social_contract_set(LedgerState state, const Address &actor,
                                const std::string &maintainer_spec) {
  if (!state.registries.policy.has(Pattern::SocialContract)) {
    throw Error("registry.pattern", "social contract is not active on this chain");
  }
  Role role = state.registries.role_of(actor);
  if (role != Role::Deployer && role != Role::BenevolentDictator) {
    throw Error("auth.role", "actor " + actor.hex() + " may not set the social contract");
  }
  require_unfrozen(state, kSocialContractTarget);
  state.registries.social_contract_history.push_back(maintainer_spec);
  state.emit("social-contract.set", {{"maintainer_spec", maintainer_spec}, {"set_by", actor.hex()}});
  return state;
}

std::optional<std::string> social_contract_get(const LedgerState &state) {
  if (state.registries.social_contract_history.empty()) return std::nullopt;
  return state.registries.social_contract_history.back();
}

LedgerState freeze_contract(LedgerState state, const Address &actor, const std::string &target) {
  if (!can_trigger_freezer(state, actor)) {
    throw Error("auth.freezer", "actor " + actor.hex() + " may not trigger the contract freezer");
  }
  FreezeFlag &flag = state.registries.freezes[target];
  bool already = flag.frozen;
  flag.target = target;
  flag.frozen = true;
  flag.frozen_by = actor;
  flag.height = state.height;
  state.emit("contract.frozen", {{"target", target},
                                 {"frozen_by", actor.hex()},
                                 {"already_frozen", already ? "true" : "false"}});
  return state;
}

LedgerState unfreeze_contract(LedgerState state, const Address &actor, const std::string &target) {
  if (!can_trigger_freezer(state, actor)) {
    throw Error("auth.freezer", "actor " + actor.hex() + " may not trigger the contract freezer");
  }
  FreezeFlag &flag = state.registries.freezes[target];
  flag.target = target;
  flag.frozen = false;
  flag.frozen_by = actor;
  flag.height = state.height;
  state.emit("contract.unfrozen", {{"target", target}, {"unfrozen_by", actor.hex()}});
  return state;
}

}  // namespace govsim::gov
