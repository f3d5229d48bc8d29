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

#include "sigmakit/group.hpp"

#include <gtest/gtest.h>

#include "sigmakit/errors.hpp"
#include "testing.hpp"

namespace sigmakit {
namespace {

using testing::elem;
using testing::ScriptedRandom;
using testing::toy;

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  for (b %= m; e; e >>= 1, b = b * b % m) {
    if (e & 1) r = r * b % m;
  }
  return r;
}

uint64_t value_of(const GroupElement& e) { return e.encode().at(0); }

TEST(ToyGroup, ElementsMatchModularArithmetic) {
  GroupPtr g = toy();
  for (uint64_t k = 0; k < 11; ++k) {
    GroupElement e = g->generator().pow(g->scalar(k));
    EXPECT_EQ(value_of(e), powmod(2, k, 23));
    EXPECT_EQ(g->decode(e.encode()), e);
  }
  EXPECT_EQ(value_of(g->identity()), 1u);
}

TEST(ToyGroup, MultiExpMatchesHandValue) {
  GroupPtr g = toy();
  std::vector<GroupElement> bases = {elem(g, 2), elem(g, 16)};
  std::vector<Scalar> exps = {g->scalar(3), g->scalar(5)};
  GroupElement r = multi_exp(bases, exps);
  EXPECT_EQ(value_of(r), powmod(2, 3, 23) * powmod(16, 5, 23) % 23);
  EXPECT_EQ(value_of(r), 2u);
}

TEST(ToyGroup, MultiExpRejectsBadInput) {
  GroupPtr g = toy();
  std::vector<GroupElement> bases = {elem(g, 2)};
  std::vector<Scalar> exps = {g->scalar(1), g->scalar(2)};
  EXPECT_THROW(multi_exp(bases, exps), GroupError);
  EXPECT_THROW(multi_exp({}, {}), GroupError);
}

TEST(ToyGroup, DecodeRejectsNonMembers) {
  GroupPtr g = toy();
  EXPECT_THROW(elem(g, 7), DecodeError);
  EXPECT_THROW(elem(g, 0), DecodeError);
  EXPECT_THROW(elem(g, 23), DecodeError);
  EXPECT_THROW(g->decode(Bytes{}), DecodeError);
  EXPECT_THROW(g->decode(Bytes{1, 2}), DecodeError);
  int members = 0;
  for (uint64_t v = 1; v < 23; ++v) {
    bool quadratic_residue = powmod(v, 11, 23) == 1;
    try {
      elem(g, v);
      EXPECT_TRUE(quadratic_residue) << v;
      ++members;
    } catch (const DecodeError&) {
      EXPECT_FALSE(quadratic_residue) << v;
    }
  }
  EXPECT_EQ(members, 11);
}

TEST(ToyGroup, ParametersAreValidated) {
  EXPECT_THROW(toy_group(23, 11, 7), GroupError);
  EXPECT_THROW(toy_group(23, 12, 2), GroupError);
  EXPECT_THROW(toy_group(22, 11, 2), GroupError);
  EXPECT_THROW(toy_group(23, 11, 1), GroupError);
  EXPECT_THROW(toy_group(23, 11, 24), GroupError);
  EXPECT_THROW(toy_group(23, 5, 2), GroupError);
  EXPECT_NO_THROW(toy_group(47, 23, 2));
}

TEST(ToyGroup, HashToElementIsDeterministicMember) {
  GroupPtr g = toy();
  GroupElement a = g->hash_to_element("a");
  EXPECT_EQ(a, g->hash_to_element("a"));
  EXPECT_FALSE(a.is_identity());
  EXPECT_TRUE(a.pow(g->scalar(11)).is_identity());
}

TEST(Scalar, ArithmeticMatchesModularOracle) {
  GroupPtr g = toy();
  for (uint64_t a = 0; a < 11; ++a) {
    for (uint64_t b = 0; b < 11; ++b) {
      Scalar x = g->scalar(a), y = g->scalar(b);
      EXPECT_EQ((x + y).to_u64(), (a + b) % 11);
      EXPECT_EQ((x - y).to_u64(), (a + 11 - b) % 11);
      EXPECT_EQ((x * y).to_u64(), a * b % 11);
    }
    if (a != 0) {
      EXPECT_EQ((g->scalar(a).inverse() * g->scalar(a)).to_u64(), 1u);
    }
  }
  EXPECT_THROW(g->scalar(0).inverse(), GroupError);
  EXPECT_EQ(g->scalar_from_int(-1).to_u64(), 10u);
  EXPECT_EQ((-g->scalar(3)).to_u64(), 8u);
}

TEST(Scalar, RandomReducesOneWordModQ) {
  GroupPtr g = toy();
  ScriptedRandom rng({25, 11, 0xFFFFFFFFFFFFFFFFULL});
  EXPECT_EQ(g->random_scalar(rng).to_u64(), 3u);
  EXPECT_EQ(g->random_scalar(rng).to_u64(), 0u);
  EXPECT_EQ(g->random_scalar(rng).to_u64(), 0xFFFFFFFFFFFFFFFFULL % 11);
  EXPECT_TRUE(rng.exhausted());
}

TEST(Scalar, RandomNonzeroSkipsZero) {
  GroupPtr g = toy();
  ScriptedRandom rng({22, 5});
  EXPECT_EQ(Scalar::random_nonzero(g->order_ptr(), rng).to_u64(), 5u);
}

TEST(Scalar, DecodeIsFixedWidthAndCanonical) {
  GroupPtr g = toy();
  EXPECT_EQ(Scalar::encoded_size(g->order()), 1u);
  EXPECT_EQ(Scalar::decode(g->order_ptr(), Bytes{10}).to_u64(), 10u);
  EXPECT_THROW(Scalar::decode(g->order_ptr(), Bytes{11}), DecodeError);
  EXPECT_THROW(Scalar::decode(g->order_ptr(), Bytes{0, 1}), DecodeError);
}

TEST(Scalar, MixingOrdersFails) {
  GroupPtr a = toy();
  GroupPtr b = toy_group(47, 23, 2);
  EXPECT_THROW(a->scalar(1) + b->scalar(1), GroupError);
  EXPECT_THROW(a->generator().pow(b->scalar(1)), GroupError);
  EXPECT_THROW(a->generator() * b->generator(), GroupError);
}

TEST(P256, GroupLaws) {
  GroupPtr g = p256_group();
  SeededRandom rng(1);
  Scalar a = g->random_scalar(rng), b = g->random_scalar(rng);
  GroupElement G = g->generator();
  EXPECT_EQ(G.pow(a) * G.pow(b), G.pow(a + b));
  EXPECT_EQ(G.pow(a).pow(b), G.pow(a * b));
  EXPECT_TRUE((G.pow(a) / G.pow(a)).is_identity());
  EXPECT_TRUE(G.pow(g->scalar(0)).is_identity());
  EXPECT_EQ(g->element_size(), 33u);
  EXPECT_EQ(Scalar::encoded_size(g->order()), 32u);
}

TEST(P256, EncodingRoundtrips) {
  GroupPtr g = p256_group();
  SeededRandom rng(2);
  for (int i = 0; i < 20; ++i) {
    GroupElement e = g->random_element(rng);
    Bytes enc = e.encode();
    ASSERT_EQ(enc.size(), 33u);
    EXPECT_TRUE(enc[0] == 0x02 || enc[0] == 0x03);
    EXPECT_EQ(g->decode(enc), e);
  }
  EXPECT_EQ(g->decode(g->identity().encode()), g->identity());
  Bytes bad = g->generator().encode();
  bad[0] = 0x04;
  EXPECT_THROW(g->decode(bad), DecodeError);
  EXPECT_THROW(g->decode(Bytes(32, 2)), DecodeError);
}

TEST(P256, OrderIsPrime) {
  EXPECT_TRUE(p256_group()->order().is_probable_prime());
  EXPECT_EQ(p256_group()->order().num_bits(), 256);
}

TEST(P256, HashToElement) {
  GroupPtr g = p256_group();
  GroupElement h = g->hash_to_element("sigmakit.h");
  EXPECT_EQ(h, g->hash_to_element("sigmakit.h"));
  EXPECT_FALSE(h == g->hash_to_element("other"));
  EXPECT_FALSE(h.is_identity());
  EXPECT_FALSE(h == g->generator());
}

TEST(SeededRandom, IsDeterministic) {
  SeededRandom a(42), b(42), c(43);
  Bytes x(100), y(100), z(100);
  a.fill(x);
  b.fill(y);
  c.fill(z);
  EXPECT_EQ(x, y);
  EXPECT_NE(x, z);
}

}  // namespace
}  // namespace sigmakit
