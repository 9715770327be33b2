/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <vector>

#include "govsim/merkle.hpp"
#include "govsim/tx.hpp"

namespace govsim::chain {

struct Block {
  BlockHeader header;
  std::vector<tx::Transaction> transactions;
  /// Validator signature over the header bytes. Zero for genesis.
  Signature signature;

  Bytes header_bytes() const;
  Digest hash() const { return crypto::hash(header_bytes()); }
};

/// Merkle root over transaction hashes. An empty list hashes one sentinel
/// leaf (the empty byte string) so empty blocks stay well defined.
Digest transactions_merkle_root(const std::vector<tx::Transaction> &txs);

void sign_block(Block &block, const crypto::KeyPair &validator);
bool verify_block_signature(const Block &block, const PublicKey &validator_key);

}  // namespace govsim::chain
