/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "govsim/tx.hpp"

#include "govsim/json_codec.hpp"

namespace govsim::tx {

gov::PayloadKind payload_kind(const TxPayload &payload) {
  using gov::PayloadKind;
  return std::visit(
      [](const auto &p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Transfer>) {
          return PayloadKind::Transfer;
        } else if constexpr (std::is_same_v<T, LockTokens>) {
          return PayloadKind::Lock;
        } else if constexpr (std::is_same_v<T, ScamListAdd> ||
                             std::is_same_v<T, SocialContractSet> ||
                             std::is_same_v<T, ContractFreeze>) {
          return PayloadKind::Contract;
        } else {
          return PayloadKind::Governance;
        }
      },
      payload);
}

std::string payload_name(const TxPayload &payload) {
  Json j;
  to_json(j, payload);
  return j.at("type").get<std::string>();
}

Bytes Transaction::signing_bytes() const {
  Json j{{"chain_id", chain_id},
         {"sender", sender},
         {"sender_public_key", sender_public_key},
         {"payload", payload},
         {"nonce", nonce},
         {"fee", fee}};
  return str_bytes(canonical_dump(j));
}

Transaction make_transaction(const std::string &chain_id, const crypto::KeyPair &sender,
                             TxPayload payload, std::uint64_t nonce, std::uint64_t fee) {
  Transaction t;
  t.chain_id = chain_id;
  t.sender = Address::from_public_key(sender.public_key);
  t.sender_public_key = sender.public_key;
  t.payload = std::move(payload);
  t.nonce = nonce;
  t.fee = fee;
  t.signature = crypto::sign(sender, t.signing_bytes());
  return t;
}

bool verify_transaction(const Transaction &t) {
  if (Address::from_public_key(t.sender_public_key) != t.sender) return false;
  return crypto::verify(t.sender_public_key, t.signing_bytes(), t.signature);
}

}  // namespace govsim::tx
