/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/block.hpp"

#include "govsim/json_codec.hpp"

namespace govsim::chain {

Bytes Block::header_bytes() const {
  Json j;
  to_json(j, header);
  return str_bytes(canonical_dump(j));
}

Digest transactions_merkle_root(const std::vector<tx::Transaction> &txs) {
  std::vector<Bytes> leaves;
  if (txs.empty()) {
    leaves.push_back(Bytes{});  // sentinel leaf for empty blocks
  } else {
    leaves.reserve(txs.size());
    for (const tx::Transaction &t : txs) {
      Digest h = t.hash();
      leaves.emplace_back(h.bytes.begin(), h.bytes.end());
    }
  }
  return crypto::merkle_root(leaves);
}

void sign_block(Block &block, const crypto::KeyPair &validator) {
  block.signature = crypto::sign(validator, block.header_bytes());
}

bool verify_block_signature(const Block &block, const PublicKey &validator_key) {
  return crypto::verify(validator_key, block.header_bytes(), block.signature);
}

}  // namespace govsim::chain
