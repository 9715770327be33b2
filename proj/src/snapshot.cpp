/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/snapshot.hpp"

#include <fstream>

namespace govsim::chain {

namespace {

Json body_document(const Snapshot &s) {
  Json accounts = Json::array();
  Json locks = Json::array();
  for (const auto &[addr, account] : s.state.accounts) {
    Json a{{"address", account.address},
           {"balance", account.balance},
           {"next_nonce", account.next_nonce}};
    if (account.public_key) a["public_key"] = *account.public_key;
    if (account.identity) a["identity"] = *account.identity;
    accounts.push_back(std::move(a));
    for (const TokenLock &lock : account.locks) {
      Json l;
      to_json(l, lock);
      l["address"] = account.address;
      locks.push_back(std::move(l));
    }
  }
  Json registries;
  gov::to_json(registries, s.state.registries);
  Json supply;
  to_json(supply, s.state.supply);
  return Json{{"chain_id", s.source_chain_id},
              {"taken_at_height", s.taken_at_height},
              {"state_hash", s.state_hash},
              {"accounts", std::move(accounts)},
              {"locks", std::move(locks)},
              {"registries", std::move(registries)},
              {"supply", std::move(supply)},
              {"next_lock_id", s.state.next_lock_id},
              {"blocks", s.blocks}};
}

}  // namespace

Json Snapshot::to_document() const {
  Json doc = body_document(*this);
  doc["snapshot_digest"] = crypto::hash(canonical_dump(doc));
  return doc;
}

Snapshot Snapshot::from_document(const Json &doc) {
  Json body = doc;
  if (!body.contains("snapshot_digest")) {
    throw Error("snapshot.digest", "snapshot document carries no digest");
  }
  Digest declared = body.at("snapshot_digest").get<Digest>();
  body.erase("snapshot_digest");
  if (crypto::hash(canonical_dump(body)) != declared) {
    throw Error("snapshot.digest", "snapshot digest mismatch; document corrupted");
  }

  Snapshot s;
  s.source_chain_id = body.at("chain_id").get<std::string>();
  s.taken_at_height = body.at("taken_at_height").get<std::uint64_t>();
  s.state_hash = body.at("state_hash").get<Digest>();
  s.snapshot_digest = declared;
  s.state.chain_id = s.source_chain_id;
  s.state.height = s.taken_at_height;
  s.state.next_lock_id = body.at("next_lock_id").get<std::uint64_t>();
  from_json(body.at("supply"), s.state.supply);
  gov::from_json(body.at("registries"), s.state.registries);
  for (const Json &a : body.at("accounts")) {
    Account account;
    account.address = a.at("address").get<Address>();
    account.balance = a.at("balance").get<std::uint64_t>();
    account.next_nonce = a.at("next_nonce").get<std::uint64_t>();
    if (a.contains("public_key")) account.public_key = a.at("public_key").get<PublicKey>();
    if (a.contains("identity")) account.identity = a.at("identity").get<std::string>();
    s.state.accounts[account.address] = std::move(account);
  }
  for (const Json &l : body.at("locks")) {
    TokenLock lock;
    from_json(l, lock);
    Address owner = l.at("address").get<Address>();
    auto it = s.state.accounts.find(owner);
    if (it == s.state.accounts.end()) {
      throw Error("snapshot.lock-owner", "lock references unknown account " + owner.hex());
    }
    it->second.locks.push_back(lock);
  }
  s.blocks = body.at("blocks").get<std::vector<Block>>();
  return s;
}

Snapshot export_snapshot(const ChainState &chain) {
  Snapshot s;
  const LedgerState &tip = chain.tip_state();
  s.source_chain_id = chain.chain_id();
  s.taken_at_height = tip.height;
  s.state = tip;
  s.state.events.clear();
  s.state_hash = tip.state_hash();
  for (const Digest &h : chain.canonical_chain()) {
    s.blocks.push_back(chain.block(h));
  }
  Json doc = body_document(s);
  s.snapshot_digest = crypto::hash(canonical_dump(doc));
  return s;
}

LedgerState import_snapshot(const Snapshot &snapshot, const std::string &target_chain_id) {
  LedgerState state = snapshot.state;
  state.events.clear();
  if (state.state_hash() != snapshot.state_hash) {
    throw Error("snapshot.hash-mismatch",
                "recomputed state hash does not match the embedded state hash");
  }
  state.chain_id = target_chain_id;
  state.height = 0;
  // A fresh chain starts its own supply ledger over the imported balances.
  state.supply = SupplyLedger{};
  state.supply.initial = state.total_balance();
  return state;
}

Snapshot read_snapshot(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("snapshot.io", "cannot open " + path);
  Json doc = Json::parse(in);
  return Snapshot::from_document(doc);
}

void write_snapshot(const Snapshot &snapshot, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error("snapshot.io", "cannot write " + path);
  out << snapshot.to_document().dump(2) << "\n";
}

}  // namespace govsim::chain
