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

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "sigmakit/extended.hpp"
#include "sigmakit/group.hpp"
#include "sigmakit/statement.hpp"

namespace sigmakit {

/// g^x * h^r. Throws GroupError if g and h live in different groups.
GroupElement pedersen_commit(const GroupElement& g, const GroupElement& h,
                             const Scalar& x, const Scalar& r);

/// (lhs, base) with lhs = base^x.
using DLPair = std::pair<GroupElement, GroupElement>;

/// PK{(x): H0 = h0^x and H1 != h1^x}. The prover publishes
/// C = (h1^x / H1)^blinder and proves PK{(alpha, beta): 1 = h0^alpha H0^beta
/// and C = h1^alpha H1^beta} with alpha = x * blinder, beta = -blinder. The
/// verifier rejects C = 1.
class DLNotEqual final : public ExtendedHooks {
 public:
  /// `valid` = (H0, h0), `invalid` = (H1, h1). Throws StatementError unless all
  /// four elements share one group order.
  DLNotEqual(DLPair valid, DLPair invalid, Secret x);

  std::string name() const override { return "DLNotEqual"; }
  GroupPtr group() const override { return valid_.second.group(); }
  size_t precommitment_count() const override { return 1; }
  Bytes descriptor() const override;

  /// Draws a non-zero blinder.
  std::vector<GroupElement> precommit(RandomSource& rng) const override;
  /// Uniform non-identity element.
  std::vector<GroupElement> simulate_precommit(
      RandomSource& rng) const override;
  Statement construct_stmt(
      std::span<const GroupElement> precommitments) const override;
  void validate(std::span<const GroupElement> precommitments) const override;

  /// Sets alpha and beta for the given blinder and returns C. Throws
  /// ProvingError if x has no value or H0 != h0^x.
  GroupElement precommit_with_blinder(const Scalar& blinder) const;

  const Secret& alpha() const { return alpha_; }
  const Secret& beta() const { return beta_; }

 private:
  DLPair valid_;
  DLPair invalid_;
  Secret x_;
  Secret alpha_{"dlne.alpha"};
  Secret beta_{"dlne.beta"};
};

Statement dl_not_equal(DLPair valid, DLPair invalid, const Secret& x);

/// Bit decomposition of a committed value in [0, 2^bits): commitments
/// C_i = g^{b_i} h^{r_i} with sum r_i 2^i = r, so prod C_i^{2^i} = g^v h^r.
/// Each C_i is proven to open to 0 or 1 with the OR
/// (C_i = h^{r_i}) | (C_i / g = h^{r_i}).
class BitDecomposition {
 public:
  /// Throws StatementError for bits < 1 or 2^bits >= q.
  BitDecomposition(GroupElement g, GroupElement h, int bits);

  int bits() const { return bits_; }

  /// Prover side: assigns the bit-randomness secrets and returns C_0..C_{l-1}.
  /// Throws ProvingError when value >= 2^bits. r_0..r_{l-2} are uniform and
  /// r_{l-1} solves the aggregation equation.
  std::vector<GroupElement> commit(const Scalar& value,
                                   const Scalar& randomness,
                                   RandomSource& rng) const;
  /// Same, with r_0..r_{l-2} supplied by the caller.
  std::vector<GroupElement> commit_with(
      const Scalar& value, const Scalar& randomness,
      std::span<const Scalar> free_randomness) const;
  /// Random commitments that still aggregate to `target`.
  std::vector<GroupElement> simulate(const GroupElement& target,
                                     RandomSource& rng) const;
  /// prod C_i^{2^i} == target.
  bool aggregates_to(std::span<const GroupElement> commitments,
                     const GroupElement& target) const;
  /// AND over the per-bit ORs (a single OR when bits == 1). OR flags follow the
  /// bits of the last commit call.
  Statement statement(std::span<const GroupElement> commitments) const;

  const std::vector<Secret>& bit_randomness() const { return randomness_; }

 private:
  GroupElement g_;
  GroupElement h_;
  int bits_;
  std::vector<Secret> randomness_;
  std::shared_ptr<std::vector<bool>> last_bits_;
};

/// Standalone proof that com = g^x h^r with 0 <= x < 2^bits.
class PowerTwoRange final : public ExtendedHooks {
 public:
  PowerTwoRange(GroupElement com, GroupElement g, GroupElement h, int bits,
                Secret x, Secret r);

  std::string name() const override { return "PowerTwoRange"; }
  GroupPtr group() const override { return com_.group(); }
  size_t precommitment_count() const override {
    return static_cast<size_t>(decomposition_.bits());
  }
  Bytes descriptor() const override;

  std::vector<GroupElement> precommit(RandomSource& rng) const override;
  std::vector<GroupElement> simulate_precommit(
      RandomSource& rng) const override;
  Statement construct_stmt(
      std::span<const GroupElement> precommitments) const override;
  void validate(std::span<const GroupElement> precommitments) const override;

  const BitDecomposition& decomposition() const { return decomposition_; }

 private:
  GroupElement com_;
  GroupElement g_;
  GroupElement h_;
  Secret x_;
  Secret r_;
  BitDecomposition decomposition_;
};

Statement power_two_range(GroupElement com, GroupElement g, GroupElement h,
                          int bits, const Secret& x, const Secret& r);

/// Proof that com = g^x h^r with a <= x < b. With l = ceil(log2(b - a)), the
/// value x - a is decomposed against com * g^{-a} and x - b + 2^l against
/// com * g^{2^l - b}, both in [0, 2^l). When b - a == 1 the statement is a
/// direct opening com * g^{-a} = h^r.
class RangeProof final : public ExtendedHooks {
 public:
  /// Throws StatementError for an empty range or 2^l >= q.
  RangeProof(GroupElement com, GroupElement g, GroupElement h, int64_t a,
             int64_t b, Secret x, Secret r);

  std::string name() const override { return "RangeStmt"; }
  GroupPtr group() const override { return com_.group(); }
  size_t precommitment_count() const override {
    return 2 * static_cast<size_t>(bits_);
  }
  Bytes descriptor() const override;

  /// Throws ProvingError("secret value outside declared range") when x is not
  /// in [a, b).
  std::vector<GroupElement> precommit(RandomSource& rng) const override;
  std::vector<GroupElement> simulate_precommit(
      RandomSource& rng) const override;
  Statement construct_stmt(
      std::span<const GroupElement> precommitments) const override;
  void validate(std::span<const GroupElement> precommitments) const override;

  int bits() const { return bits_; }
  /// com * g^{-a} and com * g^{2^l - b}.
  GroupElement lower_target() const;
  GroupElement upper_target() const;

 private:
  GroupElement com_;
  GroupElement g_;
  GroupElement h_;
  int64_t a_;
  int64_t b_;
  Secret x_;
  Secret r_;
  int bits_;
  std::unique_ptr<BitDecomposition> lower_;
  std::unique_ptr<BitDecomposition> upper_;
};

Statement range_stmt(GroupElement com, GroupElement g, GroupElement h,
                     int64_t a, int64_t b, const Secret& x, const Secret& r);

}  // namespace sigmakit
