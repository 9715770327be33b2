/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <vector>

#include "govsim/chain.hpp"
#include "govsim/json_codec.hpp"

namespace govsim::chain {

/// Portable snapshot of one chain: full ledger plus the canonical block
/// list. `state_hash` pins the canonical state; `snapshot_digest` covers
/// the whole document so any byte flip is rejected at import.
struct Snapshot {
  std::string source_chain_id;
  std::uint64_t taken_at_height = 0;
  Digest state_hash;
  LedgerState state;  // events stripped; they are not part of canonical state
  std::vector<Block> blocks;
  Digest snapshot_digest;

  Json to_document() const;
  static Snapshot from_document(const Json &doc);
};

Snapshot export_snapshot(const ChainState &chain);

/// Rebuilds a genesis-ready ledger from a snapshot after integrity checks.
/// The imported state keeps its canonical hash; the new chain starts at
/// height 0 under `target_chain_id`.
LedgerState import_snapshot(const Snapshot &snapshot, const std::string &target_chain_id);

Snapshot read_snapshot(const std::string &path);
void write_snapshot(const Snapshot &snapshot, const std::string &path);

}  // namespace govsim::chain
