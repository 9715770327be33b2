/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <vector>

#include "govsim/crypto.hpp"

namespace govsim::crypto {

/// Binary Merkle tree over an ordered list of byte-string leaves.
///
/// Conventions: leaves are hashed once before pairing, a single-leaf tree
/// has root hash(hash(leaf)), and a level with an odd node count pads by
/// duplicating its last hash (Bitcoin style).
class MerkleTree {
 public:
  /// Throws Error("merkle.empty") for an empty leaf list.
  static MerkleTree build(const std::vector<Bytes> &leaves);

  const Digest &root() const { return levels_.back().front(); }
  std::size_t leaf_count() const { return levels_.front().size(); }
  const std::vector<std::vector<Digest>> &levels() const { return levels_; }

  /// Sibling path from leaf `index` up to (excluding) the root.
  /// Throws Error("merkle.index") when index is out of range.
  std::vector<Digest> prove(std::size_t index) const;

 private:
  std::vector<std::vector<Digest>> levels_;
};

Digest merkle_root(const std::vector<Bytes> &leaves);

/// Recomputes the root from `leaf` at `index` using the sibling path and
/// compares with `root`. Tampered leaves, proofs, or a wrong index all
/// verify false.
bool merkle_verify(const Digest &root, const Bytes &leaf, std::size_t index,
                   const std::vector<Digest> &proof);

}  // namespace govsim::crypto
