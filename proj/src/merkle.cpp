/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/merkle.hpp"

namespace govsim::crypto {

namespace {

Digest hash_pair(const Digest &left, const Digest &right) {
  Bytes buf;
  buf.reserve(2 * kDigestSize);
  buf.insert(buf.end(), left.bytes.begin(), left.bytes.end());
  buf.insert(buf.end(), right.bytes.begin(), right.bytes.end());
  return hash(buf);
}

Digest rehash(const Digest &d) { return hash(Bytes(d.bytes.begin(), d.bytes.end())); }

}  // namespace

MerkleTree MerkleTree::build(const std::vector<Bytes> &leaves) {
  if (leaves.empty()) {
    throw Error("merkle.empty", "cannot build a Merkle tree from zero leaves");
  }
  MerkleTree tree;
  std::vector<Digest> level;
  level.reserve(leaves.size());
  for (const Bytes &leaf : leaves) {
    level.push_back(hash(leaf));
  }
  tree.levels_.push_back(std::move(level));
  if (tree.levels_.front().size() == 1) {
    // Single-leaf tree: root = hash(hash(leaf)).
    tree.levels_.push_back({rehash(tree.levels_.front().front())});
    return tree;
  }
  while (tree.levels_.back().size() > 1) {
    const std::vector<Digest> &prev = tree.levels_.back();
    std::vector<Digest> next;
    next.reserve((prev.size() + 1) / 2);
    for (std::size_t i = 0; i < prev.size(); i += 2) {
      const Digest &left = prev[i];
      const Digest &right = (i + 1 < prev.size()) ? prev[i + 1] : prev[i];
      next.push_back(hash_pair(left, right));
    }
    tree.levels_.push_back(std::move(next));
  }
  return tree;
}

std::vector<Digest> MerkleTree::prove(std::size_t index) const {
  if (index >= leaf_count()) {
    throw Error("merkle.index", "leaf index " + std::to_string(index) + " out of range");
  }
  std::vector<Digest> proof;
  if (leaf_count() == 1) {
    return proof;  // empty proof marks the single-leaf tree
  }
  std::size_t pos = index;
  for (std::size_t lvl = 0; lvl + 1 < levels_.size(); ++lvl) {
    const std::vector<Digest> &level = levels_[lvl];
    std::size_t sibling = (pos % 2 == 0) ? pos + 1 : pos - 1;
    if (sibling >= level.size()) sibling = pos;  // duplicated last hash
    proof.push_back(level[sibling]);
    pos /= 2;
  }
  return proof;
}

Digest merkle_root(const std::vector<Bytes> &leaves) { return MerkleTree::build(leaves).root(); }

bool merkle_verify(const Digest &root, const Bytes &leaf, std::size_t index,
                   const std::vector<Digest> &proof) {
  Digest cur = hash(leaf);
  if (proof.empty()) {
    return index == 0 && rehash(cur) == root;
  }
  std::size_t pos = index;
  for (const Digest &sibling : proof) {
    cur = (pos % 2 == 0) ? hash_pair(cur, sibling) : hash_pair(sibling, cur);
    pos /= 2;
  }
  return cur == root;
}

}  // namespace govsim::crypto
