/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <random>

#include "govsim/merkle.hpp"

using namespace govsim;
using namespace govsim::crypto;

namespace {

Bytes bytes(const std::string &s) { return str_bytes(s); }

}  // namespace

TEST(Hash, DeterministicAndFixedLength) {
  Digest a = hash(bytes("governance"));
  Digest b = hash(bytes("governance"));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.bytes.size(), 32u);
}

TEST(Hash, DistinctSingleByteInputs) {
  EXPECT_NE(hash(Bytes{0x00}), hash(Bytes{0x01}));
}

TEST(Hash, EmptyInputStandardVector) {
  // SHA-256("") from the published test vectors.
  EXPECT_EQ(hash(Bytes{}).hex(),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Hash, HexRoundTrip) {
  Digest d = hash(bytes("x"));
  EXPECT_EQ(Digest::from_hex(d.hex()), d);
  EXPECT_THROW(Digest::from_hex("zz"), Error);
}

TEST(Signatures, SignVerifyRoundTrip) {
  KeyPair kp = KeyPair::derive(1, "signer");
  Bytes msg = bytes("improvement proposal 7");
  Signature sig = sign(kp, msg);
  EXPECT_TRUE(verify(kp.public_key, msg, sig));
}

TEST(Signatures, FlippedBitFails) {
  KeyPair kp = KeyPair::derive(1, "signer");
  Bytes msg = bytes("improvement proposal 7");
  Signature sig = sign(kp, msg);
  Bytes tampered = msg;
  tampered[0] ^= 0x01;
  EXPECT_FALSE(verify(kp.public_key, tampered, sig));
}

TEST(Signatures, WrongKeyFails) {
  KeyPair kp = KeyPair::derive(1, "signer");
  KeyPair other = KeyPair::derive(1, "other");
  Bytes msg = bytes("payload");
  EXPECT_FALSE(verify(other.public_key, msg, sign(kp, msg)));
}

TEST(Signatures, MalformedKeyRejectedNotCrash) {
  PublicKey junk;  // all zeroes is not a valid Ed25519 point in use
  Bytes msg = bytes("m");
  Signature sig;
  EXPECT_FALSE(verify(junk, msg, sig));
}

TEST(Signatures, VerificationIsPure) {
  KeyPair kp = KeyPair::derive(9, "pure");
  Bytes msg = bytes("same inputs, same answer");
  Signature sig = sign(kp, msg);
  for (int i = 0; i < 16; ++i) {
    EXPECT_TRUE(verify(kp.public_key, msg, sig));
  }
}

TEST(Addresses, DeterministicDerivation) {
  KeyPair kp = KeyPair::derive(3, "addr");
  Address a = Address::from_public_key(kp.public_key);
  Address b = Address::from_public_key(kp.public_key);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.bytes.size(), 20u);
  KeyPair other = KeyPair::derive(3, "addr2");
  EXPECT_NE(a, Address::from_public_key(other.public_key));
}

TEST(Addresses, ModBigEndianInteger) {
  Address a;
  a.bytes.fill(0);
  a.bytes[19] = 0x06;
  EXPECT_EQ(a.mod(4), 2u);  // 6 mod 4
  EXPECT_EQ(a.mod(1), 0u);
  a.bytes[0] = 0x01;  // adds 2^152, even modulo 4
  EXPECT_EQ(a.mod(4), 2u);
  EXPECT_EQ(a.mod(7), 3u);  // (2^152 + 6) mod 7, computed independently
}

// --- Merkle -----------------------------------------------------------------

TEST(Merkle, SingleLeafRoot) {
  // hash(hash("a")) computed with an independent sha256 implementation.
  EXPECT_EQ(merkle_root({bytes("a")}).hex(),
            "bf5d3affb73efd2ec6c36ad3112dd933efed63c4e1cbffcfa88e2759c144f2d8");
}

TEST(Merkle, FourLeafRoot) {
  EXPECT_EQ(merkle_root({bytes("a"), bytes("b"), bytes("c"), bytes("d")}).hex(),
            "14ede5e8e97ad9372327728f5099b95604a39593cac3bd38a343ad76205213e7");
}

TEST(Merkle, ThreeLeafDuplicationRule) {
  EXPECT_EQ(merkle_root({bytes("a"), bytes("b"), bytes("c")}).hex(),
            "d31a37ef6ac14a2db1470c4316beb5592e6afd4465022339adafda76a18ffabe");
}

TEST(Merkle, EmptyLeavesRejected) {
  EXPECT_THROW(merkle_root({}), Error);
}

TEST(Merkle, ProofsVerifyForAllFourLeaves) {
  std::vector<Bytes> leaves{bytes("a"), bytes("b"), bytes("c"), bytes("d")};
  MerkleTree tree = MerkleTree::build(leaves);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    EXPECT_TRUE(merkle_verify(tree.root(), leaves[i], i, tree.prove(i)));
  }
}

TEST(Merkle, TamperedProofFails) {
  std::vector<Bytes> leaves{bytes("a"), bytes("b"), bytes("c"), bytes("d")};
  MerkleTree tree = MerkleTree::build(leaves);
  auto proof = tree.prove(1);
  proof[0].bytes[3] ^= 0xff;
  EXPECT_FALSE(merkle_verify(tree.root(), leaves[1], 1, proof));
}

TEST(Merkle, WrongIndexOnlyDiagonalVerifies) {
  std::vector<Bytes> leaves{bytes("a"), bytes("b"), bytes("c"), bytes("d")};
  MerkleTree tree = MerkleTree::build(leaves);
  for (std::size_t leaf = 0; leaf < 4; ++leaf) {
    for (std::size_t index = 0; index < 4; ++index) {
      bool ok = merkle_verify(tree.root(), leaves[leaf], index, tree.prove(index));
      EXPECT_EQ(ok, leaf == index) << "leaf " << leaf << " against index " << index;
    }
  }
}

TEST(Merkle, OutOfRangeProofIndex) {
  MerkleTree tree = MerkleTree::build({bytes("a"), bytes("b")});
  EXPECT_THROW(tree.prove(2), Error);
}

TEST(Merkle, PropertyRandomLeafSets) {
  std::mt19937_64 rng(20260810);
  for (int round = 0; round < 40; ++round) {
    std::size_t n = 1 + rng() % 64;
    std::vector<Bytes> leaves;
    for (std::size_t i = 0; i < n; ++i) {
      Bytes leaf(1 + rng() % 24);
      for (Byte &b : leaf) b = static_cast<Byte>(rng());
      leaves.push_back(leaf);
    }
    MerkleTree tree = MerkleTree::build(leaves);
    // Recomputation is invariant.
    EXPECT_EQ(tree.root(), MerkleTree::build(leaves).root());
    // Every proof verifies.
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_TRUE(merkle_verify(tree.root(), leaves[i], i, tree.prove(i)));
    }
    // Mutating any single leaf changes the root.
    std::size_t victim = rng() % n;
    std::vector<Bytes> mutated = leaves;
    mutated[victim].push_back(0xA5);
    EXPECT_NE(tree.root(), MerkleTree::build(mutated).root());
  }
}
