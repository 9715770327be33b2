/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/crypto.hpp"

#include <sodium.h>

#include <algorithm>
#include <cstring>
#include <mutex>

namespace govsim {

namespace {

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

void ensure_sodium() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    if (sodium_init() < 0) {
      throw Error("crypto.init", "libsodium initialisation failed");
    }
  });
}

}  // namespace

std::string to_hex(const Byte *data, std::size_t size) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(size * 2);
  for (std::size_t i = 0; i < size; ++i) {
    out.push_back(digits[data[i] >> 4]);
    out.push_back(digits[data[i] & 0x0f]);
  }
  return out;
}

std::string to_hex(const Bytes &data) { return to_hex(data.data(), data.size()); }

Bytes from_hex(const std::string &hex) {
  if (hex.size() % 2 != 0) {
    throw Error("hex.length", "odd-length hex string");
  }
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = hex_nibble(hex[2 * i]);
    int lo = hex_nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error("hex.digit", "invalid hex digit in \"" + hex + "\"");
    }
    out[i] = static_cast<Byte>((hi << 4) | lo);
  }
  return out;
}

Bytes str_bytes(const std::string &s) { return Bytes(s.begin(), s.end()); }

}  // namespace govsim

namespace govsim::crypto {

namespace {

template <std::size_t N>
std::array<Byte, N> array_from_hex(const std::string &hex, const char *what) {
  Bytes raw = from_hex(hex);
  if (raw.size() != N) {
    throw Error("hex.size", std::string(what) + " expects " + std::to_string(N) + " bytes");
  }
  std::array<Byte, N> out{};
  std::copy(raw.begin(), raw.end(), out.begin());
  return out;
}

}  // namespace

bool Digest::is_zero() const {
  return std::all_of(bytes.begin(), bytes.end(), [](Byte b) { return b == 0; });
}

Digest Digest::from_hex(const std::string &hex) {
  return Digest{array_from_hex<kDigestSize>(hex, "digest")};
}

PublicKey PublicKey::from_hex(const std::string &hex) {
  return PublicKey{array_from_hex<kPublicKeySize>(hex, "public key")};
}

bool Signature::is_zero() const {
  return std::all_of(bytes.begin(), bytes.end(), [](Byte b) { return b == 0; });
}

Signature Signature::from_hex(const std::string &hex) {
  return Signature{array_from_hex<kSignatureSize>(hex, "signature")};
}

Digest hash(std::span<const Byte> data) {
  ensure_sodium();
  Digest out;
  crypto_hash_sha256(out.bytes.data(), data.data(), data.size());
  return out;
}

Digest hash(const Bytes &data) { return hash(std::span<const Byte>(data.data(), data.size())); }

Digest hash(const std::string &data) {
  return hash(std::span<const Byte>(reinterpret_cast<const Byte *>(data.data()), data.size()));
}

KeyPair KeyPair::generate() {
  ensure_sodium();
  KeyPair kp;
  crypto_sign_ed25519_keypair(kp.public_key.bytes.data(), kp.secret_key.data());
  return kp;
}

KeyPair KeyPair::from_seed(std::span<const Byte> seed32) {
  ensure_sodium();
  if (seed32.size() != kSeedSize) {
    throw Error("crypto.seed", "key seed must be 32 bytes");
  }
  KeyPair kp;
  crypto_sign_ed25519_seed_keypair(kp.public_key.bytes.data(), kp.secret_key.data(),
                                   seed32.data());
  return kp;
}

KeyPair KeyPair::derive(std::uint64_t scenario_seed, const std::string &label) {
  Bytes material;
  for (int i = 7; i >= 0; --i) {
    material.push_back(static_cast<Byte>((scenario_seed >> (8 * i)) & 0xff));
  }
  material.insert(material.end(), label.begin(), label.end());
  Digest seed = hash(material);
  return from_seed(std::span<const Byte>(seed.bytes.data(), seed.bytes.size()));
}

bool Address::is_zero() const {
  return std::all_of(bytes.begin(), bytes.end(), [](Byte b) { return b == 0; });
}

Address Address::from_public_key(const PublicKey &pk) {
  Digest d = hash(std::span<const Byte>(pk.bytes.data(), pk.bytes.size()));
  Address a;
  std::copy_n(d.bytes.begin(), kAddressSize, a.bytes.begin());
  return a;
}

Address Address::from_hex(const std::string &hex) {
  return Address{array_from_hex<kAddressSize>(hex, "address")};
}

std::uint64_t Address::mod(std::uint64_t m) const {
  if (m == 0) {
    throw Error("address.mod", "modulus must be positive");
  }
  // Horner over big-endian bytes; 128-bit intermediate avoids overflow.
  unsigned __int128 acc = 0;
  for (Byte b : bytes) {
    acc = (acc * 256 + b) % m;
  }
  return static_cast<std::uint64_t>(acc);
}

Signature sign(const KeyPair &key, std::span<const Byte> message) {
  ensure_sodium();
  Signature sig;
  crypto_sign_ed25519_detached(sig.bytes.data(), nullptr, message.data(), message.size(),
                               key.secret_key.data());
  return sig;
}

Signature sign(const KeyPair &key, const Bytes &message) {
  return sign(key, std::span<const Byte>(message.data(), message.size()));
}

bool verify(const PublicKey &pk, std::span<const Byte> message, const Signature &sig) {
  ensure_sodium();
  return crypto_sign_ed25519_verify_detached(sig.bytes.data(), message.data(), message.size(),
                                             pk.bytes.data()) == 0;
}

bool verify(const PublicKey &pk, const Bytes &message, const Signature &sig) {
  return verify(pk, std::span<const Byte>(message.data(), message.size()), sig);
}

}  // namespace govsim::crypto
