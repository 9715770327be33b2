/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace govsim {

using Byte = std::uint8_t;
using Bytes = std::vector<Byte>;

/// Domain error with a stable machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string &message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string &code() const { return code_; }

 private:
  std::string code_;
};

/// Exact fraction used wherever policy knobs are ratios (fee splits,
/// quorums, vote thresholds). Keeping these integral makes every tally
/// and report byte-reproducible across platforms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  friend bool operator==(const Rational &, const Rational &) = default;
};

std::string to_hex(const Byte *data, std::size_t size);
std::string to_hex(const Bytes &data);
Bytes from_hex(const std::string &hex);

Bytes str_bytes(const std::string &s);

/// splitmix64: tiny deterministic generator for simulator plumbing
/// (delays, test scenario generation). Chain-state decisions never use
/// it directly; those derive draws from hashes.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace govsim
