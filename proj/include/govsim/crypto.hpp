/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "govsim/common.hpp"

namespace govsim::crypto {

inline constexpr std::size_t kDigestSize = 32;
inline constexpr std::size_t kPublicKeySize = 32;
inline constexpr std::size_t kSecretKeySize = 64;
inline constexpr std::size_t kSignatureSize = 64;
inline constexpr std::size_t kAddressSize = 20;
inline constexpr std::size_t kSeedSize = 32;

/// SHA-256 output. Equality and ordering are bytewise.
struct Digest {
  std::array<Byte, kDigestSize> bytes{};

  auto operator<=>(const Digest &) const = default;

  std::string hex() const { return to_hex(bytes.data(), bytes.size()); }
  bool is_zero() const;
  static Digest from_hex(const std::string &hex);
};

struct PublicKey {
  std::array<Byte, kPublicKeySize> bytes{};

  auto operator<=>(const PublicKey &) const = default;

  std::string hex() const { return to_hex(bytes.data(), bytes.size()); }
  static PublicKey from_hex(const std::string &hex);
};

struct Signature {
  std::array<Byte, kSignatureSize> bytes{};

  auto operator<=>(const Signature &) const = default;

  std::string hex() const { return to_hex(bytes.data(), bytes.size()); }
  bool is_zero() const;
  static Signature from_hex(const std::string &hex);
};

/// Ed25519 key pair. The secret half never appears in chain state or any
/// export; only the simulator's node/actor wallets hold it.
struct KeyPair {
  PublicKey public_key;
  std::array<Byte, kSecretKeySize> secret_key{};

  static KeyPair generate();
  static KeyPair from_seed(std::span<const Byte> seed32);
  /// Deterministic wallet derivation for scenario actors: seed is
  /// H(chain_seed || label).
  static KeyPair derive(std::uint64_t scenario_seed, const std::string &label);
};

/// First 20 bytes of hash(public_key).
struct Address {
  std::array<Byte, kAddressSize> bytes{};

  auto operator<=>(const Address &) const = default;

  std::string hex() const { return to_hex(bytes.data(), bytes.size()); }
  bool is_zero() const;
  static Address from_public_key(const PublicKey &pk);
  static Address from_hex(const std::string &hex);

  /// Address bytes interpreted as a big-endian integer mod `m`.
  std::uint64_t mod(std::uint64_t m) const;
};

Digest hash(std::span<const Byte> data);
Digest hash(const Bytes &data);
Digest hash(const std::string &data);

Signature sign(const KeyPair &key, std::span<const Byte> message);
Signature sign(const KeyPair &key, const Bytes &message);

/// Verification never throws: malformed keys or signatures verify false.
bool verify(const PublicKey &pk, std::span<const Byte> message, const Signature &sig);
bool verify(const PublicKey &pk, const Bytes &message, const Signature &sig);

}  // namespace govsim::crypto
