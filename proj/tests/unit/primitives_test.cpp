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

#include "sigmakit/primitives.hpp"

#include <gtest/gtest.h>

#include "sigmakit/errors.hpp"
#include "sigmakit/nizk.hpp"
#include "testing.hpp"

namespace sigmakit {
namespace {

using testing::elem;
using testing::toy;

uint64_t value_of(const GroupElement& e) { return e.encode().at(0); }

class PrimitivesTest : public ::testing::Test {
 protected:
  GroupPtr grp = toy();
  GroupElement g = elem(grp, 2);
  GroupElement h = elem(grp, 16);
  Scalar sc(uint64_t v) const { return grp->scalar(v); }
};

TEST_F(PrimitivesTest, PedersenWorkedExample) {
  EXPECT_EQ(value_of(pedersen_commit(g, h, sc(3), sc(5))), 2u);
  EXPECT_THROW(
      pedersen_commit(g, toy_group(47, 23, 2)->generator(), sc(1), sc(1)),
      GroupError);
}

TEST_F(PrimitivesTest, DlNotEqualWorkedExample) {
  Secret x("x", sc(3));
  DLNotEqual dlne({elem(grp, 8), g}, {elem(grp, 9), h}, x);
  GroupElement c = dlne.precommit_with_blinder(sc(2));
  EXPECT_EQ(value_of(c), 8u);
  EXPECT_EQ(dlne.alpha().value()->to_u64(), 6u);
  EXPECT_EQ(dlne.beta().value()->to_u64(), 9u);
  EXPECT_NO_THROW(dlne.validate(std::vector<GroupElement>{c}));

  Statement constructed = dlne.construct_stmt(std::vector<GroupElement>{c});
  ASSERT_EQ(constructed.kind(), NodeKind::kAnd);
  EXPECT_TRUE(constructed.children()[0].lhs().is_identity());
  EXPECT_EQ(constructed.children()[1].lhs(), c);
  for (const Statement& leaf : constructed.children()) {
    EXPECT_EQ(leaf.expression().evaluate(), leaf.lhs());
  }
}

TEST_F(PrimitivesTest, DlNotEqualRejectsIdentityPrecommitment) {
  Secret x("x", sc(3));
  // H1 = h^3: both logs equal, so C = 1 for every blinder.
  DLNotEqual dlne({elem(grp, 8), g}, {h.pow(sc(3)), h}, x);
  for (uint64_t b = 0; b < 11; ++b) {
    GroupElement c = dlne.precommit_with_blinder(sc(b));
    EXPECT_TRUE(c.is_identity());
    try {
      dlne.validate(std::vector<GroupElement>{c});
      FAIL();
    } catch (const ValidationError& e) {
      EXPECT_EQ(std::string(e.what()), "Invalid precommitment");
    }
  }
}

TEST_F(PrimitivesTest, DlNotEqualProvingErrors) {
  Secret x("x", sc(4));
  DLNotEqual wrong({elem(grp, 8), g}, {elem(grp, 9), h}, x);
  EXPECT_THROW(wrong.precommit_with_blinder(sc(1)), ProvingError);
  DLNotEqual unset({elem(grp, 8), g}, {elem(grp, 9), h}, Secret("y"));
  EXPECT_THROW(unset.precommit_with_blinder(sc(1)), ProvingError);
}

TEST_F(PrimitivesTest, DlNotEqualProvesAndVerifies) {
  SeededRandom rng(4);
  Secret x("x", sc(3));
  Statement stmt = dl_not_equal({elem(grp, 8), g}, {elem(grp, 9), h}, x);
  NIProof proof = prove(stmt, rng);
  Statement verifier =
      dl_not_equal({elem(grp, 8), g}, {elem(grp, 9), h}, Secret());
  EXPECT_TRUE(verify(verifier, proof));
  EXPECT_EQ(check(verifier, proof), Verdict::kAccepted);
}

TEST_F(PrimitivesTest, BitDecompositionWorkedExample) {
  BitDecomposition bd(g, h, 2);
  std::vector<Scalar> free = {sc(2)};
  std::vector<GroupElement> cs = bd.commit_with(sc(3), sc(5), free);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(value_of(cs[0]), 6u);
  EXPECT_EQ(value_of(cs[1]), 13u);
  EXPECT_EQ(bd.bit_randomness()[1].value()->to_u64(), 7u);
  EXPECT_EQ(value_of(cs[0] * cs[1].pow(sc(2))), 2u);
  EXPECT_TRUE(bd.aggregates_to(cs, elem(grp, 2)));
  EXPECT_FALSE(bd.aggregates_to(cs, elem(grp, 4)));
}

TEST_F(PrimitivesTest, BitDecompositionLimits) {
  EXPECT_THROW(BitDecomposition(g, h, 0), StatementError);
  EXPECT_NO_THROW(BitDecomposition(g, h, 3));
  EXPECT_THROW(BitDecomposition(g, h, 4), StatementError);  // 16 >= 11
  BitDecomposition bd(g, h, 2);
  std::vector<Scalar> free = {sc(0)};
  EXPECT_THROW(bd.commit_with(sc(4), sc(1), free), ProvingError);
}

TEST_F(PrimitivesTest, BitDecompositionSimulationAggregates) {
  BitDecomposition bd(g, h, 3);
  SeededRandom rng(8);
  for (int i = 0; i < 10; ++i) {
    GroupElement target = grp->random_element(rng);
    EXPECT_TRUE(bd.aggregates_to(bd.simulate(target, rng), target));
  }
}

TEST_F(PrimitivesTest, RangeParameters) {
  Secret x("x"), r("r");
  GroupElement com = elem(grp, 2);
  EXPECT_THROW(RangeProof(com, g, h, 3, 3, x, r), StatementError);
  EXPECT_THROW(RangeProof(com, g, h, 0, 9, x, r), StatementError);
  EXPECT_EQ(RangeProof(com, g, h, 0, 8, x, r).bits(), 3);
  EXPECT_EQ(RangeProof(com, g, h, 0, 5, x, r).bits(), 3);
  EXPECT_EQ(RangeProof(com, g, h, 2, 4, x, r).bits(), 1);
  EXPECT_EQ(RangeProof(com, g, h, 6, 7, x, r).bits(), 0);
  EXPECT_EQ(RangeProof(com, g, h, 0, 5, x, r).precommitment_count(), 6u);
}

TEST_F(PrimitivesTest, RangeTargets) {
  Secret x("x"), r("r");
  GroupElement com = pedersen_commit(g, h, sc(3), sc(5));
  RangeProof rp(com, g, h, 1, 6, x, r);
  // x - 1 = 2 and x - 6 + 8 = 5, both committed with randomness 5.
  EXPECT_EQ(rp.lower_target(), pedersen_commit(g, h, sc(2), sc(5)));
  EXPECT_EQ(rp.upper_target(), pedersen_commit(g, h, sc(5), sc(5)));
}

TEST_F(PrimitivesTest, RangeRoundtripAndRefusal) {
  SeededRandom rng(6);
  for (uint64_t v = 0; v < 8; ++v) {
    Secret x("x", sc(v)), r("r", grp->random_scalar(rng));
    GroupElement com = pedersen_commit(g, h, *x.value(), *r.value());
    Statement stmt = range_stmt(com, g, h, 2, 6, x, r);
    Statement verifier = range_stmt(com, g, h, 2, 6, Secret(), Secret());
    if (v >= 2 && v < 6) {
      EXPECT_TRUE(verify(verifier, prove(stmt, rng))) << v;
    } else {
      try {
        prove(stmt, rng);
        FAIL() << v;
      } catch (const ProvingError& e) {
        EXPECT_EQ(std::string(e.what()), "secret value outside declared range");
      }
    }
  }
}

TEST_F(PrimitivesTest, PowerTwoRangeRoundtrip) {
  SeededRandom rng(12);
  Secret x("x", sc(5)), r("r", sc(9));
  GroupElement com = pedersen_commit(g, h, sc(5), sc(9));
  NIProof proof = prove(power_two_range(com, g, h, 3, x, r), rng);
  EXPECT_TRUE(verify(power_two_range(com, g, h, 3, Secret(), Secret()), proof));
  EXPECT_EQ(check(power_two_range(com * g, g, h, 3, Secret(), Secret()), proof),
            Verdict::kInvalidPrecommitment);
}

TEST_F(PrimitivesTest, RangeAggregationIsValidated) {
  SeededRandom rng(13);
  Secret x("x", sc(2)), r("r", sc(4));
  GroupElement com = pedersen_commit(g, h, sc(2), sc(4));
  NIProof proof = prove(range_stmt(com, g, h, 0, 4, x, r), rng);
  Statement verifier = range_stmt(com, g, h, 0, 4, Secret(), Secret());
  proof.precommitments[0][0] = proof.precommitments[0][0] * g;
  EXPECT_EQ(check(verifier, proof), Verdict::kInvalidPrecommitment);
  EXPECT_THROW(verify(verifier, proof), ValidationError);
}

TEST_F(PrimitivesTest, CurveRange) {
  GroupPtr curve = p256_group();
  SeededRandom rng(14);
  GroupElement G = curve->generator(), H = curve->hash_to_element("h");
  Secret x("x", curve->scalar(1000)), r("r", curve->random_scalar(rng));
  GroupElement com = pedersen_commit(G, H, *x.value(), *r.value());
  NIProof proof = prove(range_stmt(com, G, H, 0, 1024, x, r), rng);
  EXPECT_TRUE(
      verify(range_stmt(com, G, H, 0, 1024, Secret(), Secret()), proof));
  EXPECT_NE(check(range_stmt(com, G, H, 0, 1023, Secret(), Secret()), proof),
            Verdict::kAccepted);
}

}  // namespace
}  // namespace sigmakit
