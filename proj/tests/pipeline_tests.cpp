/**
 * Copyright 2026 The govsim authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include "govsim/registry.hpp"
#include "support.hpp"

using namespace govsim;
using namespace govsim::chain;
using govsim::test::Actor;
using govsim::test::GenesisBuilder;
using govsim::test::actor;
using govsim::test::make_block;

namespace {

struct Fixture {
  Actor validator = actor("validator");
  Actor alice = actor("alice");
  Actor bob = actor("bob");
  Actor carol = actor("carol");
  Actor mallory = actor("mallory");

  GenesisBuilder builder() {
    GenesisBuilder b("test");
    b.account(validator, 50).account(alice, 100).account(bob, 80).account(carol, 60);
    b.authority(validator);
    return b;
  }
};

}  // namespace

TEST(Submit, WellFormedTransferAccepted) {
  Fixture f;
  LedgerState state = f.builder().build();
  tx::TxPool pool;
  auto t = tx::make_transaction("test", f.alice.keys, tx::Transfer{f.bob.address, 5}, 0, 1);
  auto result = pool.submit(state, t);
  EXPECT_TRUE(result.accepted) << result.reason;
  EXPECT_EQ(pool.size(), 1u);
}

TEST(Submit, BadSignatureRejected) {
  Fixture f;
  LedgerState state = f.builder().build();
  tx::TxPool pool;
  auto t = tx::make_transaction("test", f.alice.keys, tx::Transfer{f.bob.address, 5}, 0, 1);
  t.fee = 2;  // breaks the signature
  auto result = pool.submit(state, t);
  EXPECT_FALSE(result.accepted);
  EXPECT_EQ(result.reason, "tx.signature");
}

TEST(Submit, StaleNonceRejected) {
  Fixture f;
  LedgerState state = f.builder().build();
  state.account(f.alice.address).next_nonce = 3;
  tx::TxPool pool;
  auto t = tx::make_transaction("test", f.alice.keys, tx::Transfer{f.bob.address, 5}, 1, 0);
  EXPECT_EQ(pool.submit(state, t).reason, "tx.nonce");
}

TEST(Submit, ScamListedSenderRejected) {
  Fixture f;
  GenesisBuilder b = f.builder();
  b.pattern(gov::Pattern::ScamList);
  b.filter(gov::FilterRule{.kind = gov::FilterRuleKind::ScamListCheck});
  b.role(f.carol, gov::Role::Administrator);
  LedgerState state = b.build();
  state = gov::scam_list_add(state, f.carol.address, f.mallory.address, "phishing");
  state.account(f.mallory.address).balance = 40;

  tx::TxPool pool;
  auto t = tx::make_transaction("test", f.mallory.keys, tx::Transfer{f.bob.address, 5}, 0, 0);
  auto result = pool.submit(state, t);
  EXPECT_FALSE(result.accepted);
  EXPECT_EQ(result.reason, "filter.scam-list-check");
}

TEST(Submit, DisallowedPayloadTypeRejected) {
  // Mirrors permissioned deployments that restrict the transaction types an
  // account may send: only transfers allowed, contract actions rejected.
  Fixture f;
  GenesisBuilder b = f.builder();
  gov::FilterRule rule;
  rule.kind = gov::FilterRuleKind::AllowedPayloadTypes;
  rule.allowed_types = {gov::PayloadKind::Transfer};
  b.filter(rule);
  LedgerState state = b.build();

  tx::TxPool pool;
  auto t = tx::make_transaction("test", f.alice.keys,
                                tx::ContractFreeze{"scam-list", true}, 0, 0);
  auto result = pool.submit(state, t);
  EXPECT_FALSE(result.accepted);
  EXPECT_EQ(result.reason, "filter.allowed-payload-types");
}

TEST(Submit, FilterVerdictDeterministic) {
  Fixture f;
  GenesisBuilder b = f.builder();
  gov::FilterRule rule;
  rule.kind = gov::FilterRuleKind::MaxPayloadSize;
  rule.max_bytes = 8;  // everything fails this
  b.filter(rule);
  LedgerState state = b.build();
  auto t = tx::make_transaction("test", f.alice.keys, tx::Transfer{f.bob.address, 5}, 0, 0);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(detail::check_transaction(state, t), "filter.max-payload-size");
  }
}

TEST(Pool, SweepDropsNewlyFilteredTransactions) {
  Fixture f;
  GenesisBuilder b = f.builder();
  b.pattern(gov::Pattern::ScamList);
  b.filter(gov::FilterRule{.kind = gov::FilterRuleKind::ScamListCheck});
  b.role(f.carol, gov::Role::Administrator);
  LedgerState state = b.build();

  tx::TxPool pool;
  auto t = tx::make_transaction("test", f.alice.keys, tx::Transfer{f.bob.address, 5}, 0, 0);
  ASSERT_TRUE(pool.submit(state, t).accepted);

  // Rule-set change: alice lands on the scam list; the pool re-validates.
  state = gov::scam_list_add(state, f.carol.address, f.alice.address, "rug pull");
  auto dropped = pool.sweep(state);
  ASSERT_EQ(dropped.size(), 1u);
  EXPECT_EQ(pool.size(), 0u);

  // Invariant: pool never holds a transaction an active filter rejects.
  for (const auto &[key, pending] : pool.pending()) {
    EXPECT_TRUE(detail::check_transaction(state, pending).empty());
  }
}

TEST(Candidates, FeeDescendingAddressTieBreak) {
  Fixture f;
  LedgerState state = f.builder().build();
  tx::TxPool pool;
  auto t1 = tx::make_transaction("test", f.alice.keys, tx::Transfer{f.bob.address, 1}, 0, 5);
  auto t2 = tx::make_transaction("test", f.bob.keys, tx::Transfer{f.alice.address, 1}, 0, 5);
  auto t3 = tx::make_transaction("test", f.carol.keys, tx::Transfer{f.bob.address, 1}, 0, 1);
  ASSERT_TRUE(pool.submit(state, t1).accepted);
  ASSERT_TRUE(pool.submit(state, t2).accepted);
  ASSERT_TRUE(pool.submit(state, t3).accepted);

  auto selected = tx::select_candidates(state, pool, 2);
  ASSERT_EQ(selected.size(), 2u);
  // Both fee-5 txs win; among them the smaller sender address first.
  Address first = std::min(f.alice.address, f.bob.address);
  Address second = std::max(f.alice.address, f.bob.address);
  EXPECT_EQ(selected[0].sender, first);
  EXPECT_EQ(selected[1].sender, second);
  for (const auto &t : selected) EXPECT_EQ(t.fee, 5u);
}

TEST(Candidates, EmptyPoolBuildsValidEmptyBlock) {
  Fixture f;
  ChainState chain(f.builder().build());
  tx::TxPool pool;
  Block block = tx::build_candidate_block(chain.tip_state(), chain.tip(), pool,
                                          f.validator.keys, {}, 16, 0);
  EXPECT_TRUE(block.transactions.empty());
  EXPECT_EQ(block.header.merkle_root, transactions_merkle_root({}));
  EXPECT_EQ(chain.insert(block, {}).status, InsertStatus::Added);
}

TEST(Candidates, RootRecomputesFromTransactionList) {
  Fixture f;
  ChainState chain(f.builder().build());
  tx::TxPool pool;
  auto t = tx::make_transaction("test", f.alice.keys, tx::Transfer{f.bob.address, 2}, 0, 1);
  ASSERT_TRUE(pool.submit(chain.tip_state(), t).accepted);
  Block block = tx::build_candidate_block(chain.tip_state(), chain.tip(), pool,
                                          f.validator.keys, {}, 16, 0);
  EXPECT_EQ(block.header.merkle_root, transactions_merkle_root(block.transactions));
}

TEST(Candidates, NonceChainsStaySequential) {
  Fixture f;
  LedgerState state = f.builder().build();
  tx::TxPool pool;
  // Higher fee on the later nonce must not break sequencing.
  auto n0 = tx::make_transaction("test", f.alice.keys, tx::Transfer{f.bob.address, 1}, 0, 1);
  auto n1 = tx::make_transaction("test", f.alice.keys, tx::Transfer{f.bob.address, 1}, 1, 9);
  ASSERT_TRUE(pool.submit(state, n0).accepted);
  ASSERT_TRUE(pool.submit(state, n1).accepted);
  auto selected = tx::select_candidates(state, pool, 4);
  ASSERT_EQ(selected.size(), 2u);
  EXPECT_EQ(selected[0].nonce, 0u);
  EXPECT_EQ(selected[1].nonce, 1u);
}

// --- Accountability tracing ---------------------------------------------------

TEST(Trace, PermissionlessReturnsAddressOnly) {
  Fixture f;
  ChainState chain(f.builder().build());
  auto t = tx::make_transaction("test", f.alice.keys, tx::Transfer{f.bob.address, 2}, 0, 0);
  Block block = make_block(chain, f.validator, {t});
  ASSERT_EQ(chain.insert(block, {}).status, InsertStatus::Added);
  ASSERT_TRUE(chain.advance_finality(1, chain.tip()));

  TraceResult trace = chain.trace_sender(t.hash());
  EXPECT_EQ(trace.address, f.alice.address);
  EXPECT_FALSE(trace.identity.has_value());
}

TEST(Trace, PermissionedIncludesIdentity) {
  Fixture f;
  GenesisBuilder b("test");
  b.mode(gov::Mode::Permissioned);
  b.account(f.validator, 50, "OrgA-node1").account(f.alice, 100, "OrgA-alice");
  b.authority(f.validator);
  ChainState chain(b.build());

  auto t = tx::make_transaction("test", f.alice.keys, tx::Transfer{f.bob.address, 2}, 0, 0);
  Block block = make_block(chain, f.validator, {t});
  ASSERT_EQ(chain.insert(block, {}).status, InsertStatus::Added);
  ASSERT_TRUE(chain.advance_finality(1, chain.tip()));

  TraceResult trace = chain.trace_sender(t.hash());
  EXPECT_EQ(trace.address, f.alice.address);
  ASSERT_TRUE(trace.identity.has_value());
  EXPECT_EQ(*trace.identity, "OrgA-alice");
}

TEST(Trace, UnknownTxRaises) {
  Fixture f;
  ChainState chain(f.builder().build());
  auto t = tx::make_transaction("test", f.alice.keys, tx::Transfer{f.bob.address, 2}, 0, 0);
  // Tampered in flight: never makes it into a block.
  EXPECT_THROW(chain.trace_sender(t.hash()), Error);
}

TEST(Trace, EveryFinalizedTransactionTraces) {
  Fixture f;
  ChainState chain(f.builder().build());
  std::vector<Digest> hashes;
  std::uint64_t nonce = 0;
  for (int h = 0; h < 5; ++h) {
    auto t = tx::make_transaction("test", f.alice.keys, tx::Transfer{f.bob.address, 1},
                                  nonce++, 0);
    hashes.push_back(t.hash());
    Block block = make_block(chain, f.validator, {t});
    ASSERT_EQ(chain.insert(block, {}).status, InsertStatus::Added);
  }
  ASSERT_TRUE(chain.advance_finality(chain.tip_height(), chain.tip()));
  for (const Digest &h : hashes) {
    EXPECT_EQ(chain.trace_sender(h).address, f.alice.address);
  }
}
