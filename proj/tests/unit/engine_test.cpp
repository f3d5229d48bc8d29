// Copyright 2026 The sigmakit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sigmakit/engine.hpp"

#include <gtest/gtest.h>

#include "sigmakit/errors.hpp"
#include "sigmakit/primitives.hpp"
#include "testing.hpp"

namespace sigmakit {
namespace {

using testing::elem;
using testing::ScriptedRandom;
using testing::toy;

uint64_t value_of(const GroupElement& e) { return e.encode().at(0); }

const ResponseTree::Leaf& leaf_of(const ResponseTree& r) {
  return std::get<ResponseTree::Leaf>(r.node);
}

class EngineTest : public ::testing::Test {
 protected:
  GroupPtr g = toy();
  GroupElement g1 = elem(g, 2);
  GroupElement g2 = elem(g, 16);
  Scalar sc(uint64_t v) const { return g->scalar(v); }
};

TEST_F(EngineTest, SchnorrWorkedExample) {
  Secret x("x", sc(3));
  Statement stmt = dlrep(elem(g, 8), x * g1);
  ScriptedRandom rng({7});
  ProverCommitment pc = prover_commit(stmt, rng);
  EXPECT_EQ(value_of(pc.commitment.leaf()), 13u);
  ResponseTree resp = prover_respond(pc.state, sc(5));
  ASSERT_EQ(leaf_of(resp).responses.size(), 1u);
  EXPECT_EQ(leaf_of(resp).responses[0].to_u64(), 3u);
  EXPECT_TRUE(verify_transcript(stmt, {pc.commitment, sc(5), resp}));

  ResponseTree wrong{ResponseTree::Leaf{{sc(4)}}};
  EXPECT_FALSE(verify_transcript(stmt, {pc.commitment, sc(5), wrong}));
}

TEST_F(EngineTest, EqualDlSharesOneRandomizer) {
  Secret x("x", sc(3));
  Statement stmt = dlrep(g1.pow(sc(3)), x * g1) & dlrep(g2.pow(sc(3)), x * g2);
  ScriptedRandom rng({7});
  ProverCommitment pc = prover_commit(stmt, rng);
  EXPECT_TRUE(rng.exhausted());
  auto leaves = pc.commitment.leaves();
  ASSERT_EQ(leaves.size(), 2u);
  EXPECT_EQ(value_of(leaves[0]), 13u);
  EXPECT_EQ(value_of(leaves[1]), 18u);
  ResponseTree resp = prover_respond(pc.state, sc(5));
  const auto& conj = std::get<ResponseTree::And>(resp.node);
  EXPECT_EQ(leaf_of(conj.children[0]).responses[0],
            leaf_of(conj.children[1]).responses[0]);
  EXPECT_TRUE(verify_transcript(stmt, {pc.commitment, sc(5), resp}));
}

TEST_F(EngineTest, OrWorkedExample) {
  Secret x1("x1", sc(3)), x2("x2");
  Statement stmt = or_({dlrep(elem(g, 8), x1 * g1), dlrep(elem(g, 9), x2 * g2)},
                       {false, true});
  ScriptedRandom rng({7, 4, 6});
  ProverCommitment pc = prover_commit(stmt, rng);
  EXPECT_TRUE(rng.exhausted());
  auto leaves = pc.commitment.leaves();
  EXPECT_EQ(value_of(leaves[0]), 13u);
  EXPECT_EQ(value_of(leaves[1]), 1u);

  ResponseTree resp = prover_respond(pc.state, sc(5));
  const auto& disj = std::get<ResponseTree::Or>(resp.node);
  EXPECT_EQ(disj.challenges[0].to_u64(), 1u);
  EXPECT_EQ(disj.challenges[1].to_u64(), 4u);
  EXPECT_EQ(leaf_of(disj.children[0]).responses[0].to_u64(), 4u);
  EXPECT_EQ(leaf_of(disj.children[1]).responses[0].to_u64(), 6u);
  EXPECT_TRUE(verify_transcript(stmt, {pc.commitment, sc(5), resp}));

  ResponseTree bad = resp;
  std::get<ResponseTree::Or>(bad.node).challenges[1] = sc(5);
  EXPECT_FALSE(verify_transcript(stmt, {pc.commitment, sc(5), bad}));
  EXPECT_THROW(recompute_commitment(stmt, sc(5), bad), TranscriptError);
}

TEST_F(EngineTest, OrWithSeveralHonestBranches) {
  Secret a("a", sc(3)), b("b", sc(5));
  Statement stmt =
      or_({dlrep(g1.pow(sc(3)), a * g1), dlrep(g2.pow(sc(5)), b * g2),
           dlrep(elem(g, 9), Secret() * g1)},
          {false, false, true});
  SeededRandom rng(3);
  for (int i = 0; i < 20; ++i) {
    ProverCommitment pc = prover_commit(stmt, rng);
    Scalar c = verifier_challenge(*g, rng);
    ResponseTree resp = prover_respond(pc.state, c);
    EXPECT_TRUE(verify_transcript(stmt, {pc.commitment, c, resp}));
  }
}

TEST_F(EngineTest, ExtractSecretWorkedExample) {
  Secret x("x", sc(3));
  Statement stmt = dlrep(elem(g, 8), x * g1);
  CommitmentTree R{elem(g, 13)};
  Transcript t1{R, sc(5), ResponseTree{ResponseTree::Leaf{{sc(3)}}}};
  Transcript t2{R, sc(2), ResponseTree{ResponseTree::Leaf{{sc(1)}}}};
  EXPECT_EQ(extract_secret(t1, t2, stmt).to_u64(), 3u);
  EXPECT_THROW(extract_secret(t1, t1, stmt), TranscriptError);
  Transcript t3{CommitmentTree{elem(g, 2)}, sc(2), t2.response};
  EXPECT_THROW(extract_secret(t1, t3, stmt), TranscriptError);
  EXPECT_THROW(extract_secret(t1, t2, stmt & stmt), ShapeError);
}

TEST_F(EngineTest, StateIsSingleUse) {
  Secret x("x", sc(3));
  Statement stmt = dlrep(elem(g, 8), x * g1);
  SeededRandom rng(1);
  ProverCommitment pc = prover_commit(stmt, rng);
  prover_respond(pc.state, sc(1));
  EXPECT_TRUE(pc.state.consumed());
  EXPECT_THROW(prover_respond(pc.state, sc(2)), ProvingError);
}

TEST_F(EngineTest, ProvingErrors) {
  SeededRandom rng(1);
  Secret x("x", sc(3)), nothing("n");
  EXPECT_THROW(prover_commit(dlrep(elem(g, 8), nothing * g1), rng),
               ProvingError);

  Statement all_sim =
      or_({dlrep(elem(g, 8), x * g1), dlrep(elem(g, 9), x * g2)}, {true, true});
  try {
    prover_commit(all_sim, rng);
    FAIL();
  } catch (const ProvingError& e) {
    EXPECT_NE(std::string(e.what()).find("no honest branch"),
              std::string::npos);
  }

  // x = 3 is not the discrete log of 9.
  Statement false_leaf = dlrep(elem(g, 9), x * g1);
  ProverCommitment pc = prover_commit(false_leaf, rng);
  try {
    prover_respond(pc.state, sc(5));
    FAIL();
  } catch (const ProvingError& e) {
    EXPECT_NE(std::string(e.what()).find("relation does not hold"),
              std::string::npos);
  }

  Secret r("r", sc(2));
  Statement dangerous =
      dlrep(g1.pow(sc(2)), r * g1) &
      (dlrep(g2.pow(sc(2)), r * g2) | dlrep(elem(g, 9), r * g2));
  EXPECT_THROW(prover_commit(dangerous, rng), DangerousOrError);

  Statement ext = dl_not_equal({g1.pow(sc(3)), g1}, {g2, g2}, x);
  EXPECT_THROW(prover_commit(ext, rng), ShapeError);
}

TEST_F(EngineTest, ShapeMismatchIsReported) {
  Secret x("x", sc(3));
  Statement leaf = dlrep(elem(g, 8), x * g1);
  Statement conj = leaf & leaf;
  ResponseTree single{ResponseTree::Leaf{{sc(1)}}};
  ResponseTree two{ResponseTree::Leaf{{sc(1), sc(2)}}};
  EXPECT_THROW(recompute_commitment(conj, sc(1), single), ShapeError);
  EXPECT_THROW(recompute_commitment(leaf, sc(1), two), ShapeError);
  EXPECT_THROW(
      verify_transcript(conj, {CommitmentTree{elem(g, 1)}, sc(1), single}),
      ShapeError);
}

TEST_F(EngineTest, InconsistentResponsesForOneSecretAreRejected) {
  Secret x("x", sc(3));
  Statement stmt = dlrep(g1.pow(sc(3)), x * g1) & dlrep(g2.pow(sc(3)), x * g2);
  SeededRandom rng(9);
  ProverCommitment pc = prover_commit(stmt, rng);
  ResponseTree resp = prover_respond(pc.state, sc(5));
  auto& conj = std::get<ResponseTree::And>(resp.node);
  std::get<ResponseTree::Leaf>(conj.children[1].node).responses[0] += sc(1);
  EXPECT_THROW(recompute_commitment(stmt, sc(5), resp), TranscriptError);
  EXPECT_FALSE(verify_transcript(stmt, {pc.commitment, sc(5), resp}));
}

TEST_F(EngineTest, SimulationVerifies) {
  Statement stmt =
      (dlrep(elem(g, 9), Secret() * g1) & dlrep(elem(g, 3), Secret() * g2)) |
      dlrep(elem(g, 6), Secret() * g1 + Secret() * g2);
  SeededRandom rng(5);
  for (uint64_t c = 0; c < 11; ++c) {
    Transcript t = simulate(stmt, sc(c), rng);
    EXPECT_EQ(t.challenge, sc(c));
    EXPECT_TRUE(verify_transcript(stmt, t));
  }
}

TEST_F(EngineTest, CurveBackendRoundtrip) {
  GroupPtr curve = p256_group();
  SeededRandom rng(11);
  GroupElement G = curve->generator();
  GroupElement H = curve->hash_to_element("h");
  Secret x("x", curve->random_scalar(rng)), r("r", curve->random_scalar(rng));
  Statement stmt = dlrep(G.pow(*x.value()) * H.pow(*r.value()), x * G + r * H) &
                   dlrep(G.pow(*x.value()), x * G);
  ProverCommitment pc = prover_commit(stmt, rng);
  Scalar c = verifier_challenge(*curve, rng);
  ResponseTree resp = prover_respond(pc.state, c);
  EXPECT_TRUE(verify_transcript(stmt, {pc.commitment, c, resp}));
  EXPECT_FALSE(
      verify_transcript(stmt, {pc.commitment, c + curve->scalar(1), resp}));
}

}  // namespace
}  // namespace sigmakit
