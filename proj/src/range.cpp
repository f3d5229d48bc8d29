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

#include "sigmakit/errors.hpp"
#include "sigmakit/primitives.hpp"

namespace sigmakit {

namespace {

BigNum pow2_int(int k) {
  BigNum v;
  if (BN_set_bit(v.get(), k) != 1) throw GroupError("BN_set_bit failed");
  return v;
}

Scalar pow2(const OrderPtr& order, int k) { return Scalar(order, pow2_int(k)); }

void put_i64(ByteWriter& w, int64_t v) {
  auto u = static_cast<uint64_t>(v);
  for (int i = 0; i < 8; ++i) w.put_u8(static_cast<uint8_t>(u >> (56 - 8 * i)));
}

const Scalar& require_value(const Secret& s) {
  if (!s.value()) {
    throw ProvingError("secret " + s.display_name() + " has no value");
  }
  return *s.value();
}

}  // namespace

// ---------------------------------------------------------------------------
// BitDecomposition

BitDecomposition::BitDecomposition(GroupElement g, GroupElement h, int bits)
    : g_(std::move(g)),
      h_(std::move(h)),
      bits_(bits),
      last_bits_(std::make_shared<std::vector<bool>>()) {
  if (!g_.group()->same_as(*h_.group())) {
    throw StatementError("bit decomposition: g and h in different groups");
  }
  if (bits_ < 1) throw StatementError("bit decomposition needs at least 1 bit");
  if (!(pow2_int(bits_) < g_.group()->order())) {
    throw StatementError("range too large for the group order");
  }
  for (int i = 0; i < bits_; ++i) {
    randomness_.emplace_back("range.r" + std::to_string(i));
  }
}

std::vector<GroupElement> BitDecomposition::commit(const Scalar& value,
                                                   const Scalar& randomness,
                                                   RandomSource& rng) const {
  std::vector<Scalar> free;
  for (int i = 0; i + 1 < bits_; ++i) {
    free.push_back(Scalar::random(g_.group()->order_ptr(), rng));
  }
  return commit_with(value, randomness, free);
}

std::vector<GroupElement> BitDecomposition::commit_with(
    const Scalar& value, const Scalar& randomness,
    std::span<const Scalar> free_randomness) const {
  if (value.value().num_bits() > bits_) {
    throw ProvingError("secret value outside declared range");
  }
  if (free_randomness.size() != static_cast<size_t>(bits_ - 1)) {
    throw ProvingError("bit decomposition: wrong amount of free randomness");
  }
  const OrderPtr& order = g_.group()->order_ptr();
  // sum_i r_i 2^i = randomness, solved for the top bit's r.
  Scalar rest = randomness;
  for (int i = 0; i + 1 < bits_; ++i) {
    rest -= free_randomness[i] * pow2(order, i);
  }
  Scalar last = rest * pow2(order, bits_ - 1).inverse();

  std::vector<bool> bits;
  std::vector<GroupElement> commitments;
  for (int i = 0; i < bits_; ++i) {
    const Scalar& ri = i + 1 < bits_ ? free_randomness[i] : last;
    bool bit = BN_is_bit_set(value.value().get(), i) == 1;
    randomness_[i].set_value(ri);
    bits.push_back(bit);
    commitments.push_back(
        pedersen_commit(g_, h_, Scalar::from_u64(order, bit ? 1 : 0), ri));
  }
  *last_bits_ = std::move(bits);
  return commitments;
}

std::vector<GroupElement> BitDecomposition::simulate(const GroupElement& target,
                                                     RandomSource& rng) const {
  const GroupPtr& group = g_.group();
  std::vector<GroupElement> commitments;
  GroupElement rest = target;
  for (int i = 0; i + 1 < bits_; ++i) {
    commitments.push_back(group->random_element(rng));
    rest = rest / commitments.back().pow(pow2(group->order_ptr(), i));
  }
  commitments.push_back(
      rest.pow(pow2(group->order_ptr(), bits_ - 1).inverse()));
  return commitments;
}

bool BitDecomposition::aggregates_to(std::span<const GroupElement> commitments,
                                     const GroupElement& target) const {
  if (commitments.size() != static_cast<size_t>(bits_)) return false;
  std::vector<Scalar> weights;
  for (int i = 0; i < bits_; ++i) {
    weights.push_back(pow2(g_.group()->order_ptr(), i));
  }
  return multi_exp(commitments, weights) == target;
}

Statement BitDecomposition::statement(
    std::span<const GroupElement> commitments) const {
  if (commitments.size() != static_cast<size_t>(bits_)) {
    throw ShapeError("bit decomposition: wrong number of commitments");
  }
  const std::vector<bool>& known = *last_bits_;
  std::vector<Statement> per_bit;
  for (int i = 0; i < bits_; ++i) {
    bool bit = known.size() == static_cast<size_t>(bits_) && known[i];
    const Secret& ri = randomness_[i];
    per_bit.push_back(or_(
        {dlrep(commitments[i], ri * h_), dlrep(commitments[i] / g_, ri * h_)},
        {bit, !bit}));
  }
  if (per_bit.size() == 1) return per_bit.front();
  return and_(std::move(per_bit));
}

// ---------------------------------------------------------------------------
// PowerTwoRange

PowerTwoRange::PowerTwoRange(GroupElement com, GroupElement g, GroupElement h,
                             int bits, Secret x, Secret r)
    : com_(std::move(com)),
      g_(g),
      h_(h),
      x_(std::move(x)),
      r_(std::move(r)),
      decomposition_(std::move(g), std::move(h), bits) {
  if (!com_.group()->same_as(*g_.group())) {
    throw StatementError("range: commitment and bases in different groups");
  }
}

Bytes PowerTwoRange::descriptor() const {
  ByteWriter w;
  w.put_prefixed(com_.encode());
  w.put_prefixed(g_.encode());
  w.put_prefixed(h_.encode());
  w.put_varint(static_cast<uint64_t>(decomposition_.bits()));
  return std::move(w).bytes();
}

std::vector<GroupElement> PowerTwoRange::precommit(RandomSource& rng) const {
  return decomposition_.commit(require_value(x_), require_value(r_), rng);
}

std::vector<GroupElement> PowerTwoRange::simulate_precommit(
    RandomSource& rng) const {
  return decomposition_.simulate(com_, rng);
}

Statement PowerTwoRange::construct_stmt(
    std::span<const GroupElement> precommitments) const {
  return decomposition_.statement(precommitments);
}

void PowerTwoRange::validate(
    std::span<const GroupElement> precommitments) const {
  if (!decomposition_.aggregates_to(precommitments, com_)) {
    throw ValidationError("bit commitments do not aggregate to the commitment");
  }
}

Statement power_two_range(GroupElement com, GroupElement g, GroupElement h,
                          int bits, const Secret& x, const Secret& r) {
  return extended(std::make_shared<PowerTwoRange>(std::move(com), std::move(g),
                                                  std::move(h), bits, x, r));
}

// ---------------------------------------------------------------------------
// RangeProof

RangeProof::RangeProof(GroupElement com, GroupElement g, GroupElement h,
                       int64_t a, int64_t b, Secret x, Secret r)
    : com_(std::move(com)),
      g_(std::move(g)),
      h_(std::move(h)),
      a_(a),
      b_(b),
      x_(std::move(x)),
      r_(std::move(r)),
      bits_(0) {
  if (!com_.group()->same_as(*g_.group()) ||
      !com_.group()->same_as(*h_.group())) {
    throw StatementError("range: commitment and bases in different groups");
  }
  if (a_ >= b_) throw StatementError("empty range");
  const uint64_t width = static_cast<uint64_t>(b_) - static_cast<uint64_t>(a_);
  while (bits_ < 64 && (uint64_t{1} << bits_) < width) ++bits_;
  if (!(pow2_int(bits_) < com_.group()->order())) {
    throw StatementError("range too large for the group order");
  }
  if (bits_ > 0) {
    lower_ = std::make_unique<BitDecomposition>(g_, h_, bits_);
    upper_ = std::make_unique<BitDecomposition>(g_, h_, bits_);
  }
}

Bytes RangeProof::descriptor() const {
  ByteWriter w;
  w.put_prefixed(com_.encode());
  w.put_prefixed(g_.encode());
  w.put_prefixed(h_.encode());
  put_i64(w, a_);
  put_i64(w, b_);
  return std::move(w).bytes();
}

GroupElement RangeProof::lower_target() const {
  return com_ / g_.pow(g_.group()->scalar_from_int(a_));
}

GroupElement RangeProof::upper_target() const {
  const OrderPtr& order = g_.group()->order_ptr();
  return com_ * g_.pow(pow2(order, bits_) - Scalar::from_int(order, b_));
}

std::vector<GroupElement> RangeProof::precommit(RandomSource& rng) const {
  const Scalar& x = require_value(x_);
  const Scalar& r = require_value(r_);
  const OrderPtr& order = g_.group()->order_ptr();
  const uint64_t width = static_cast<uint64_t>(b_) - static_cast<uint64_t>(a_);
  Scalar offset = x - Scalar::from_int(order, a_);
  if (!(offset.value() < BigNum(width))) {
    throw ProvingError("secret value outside declared range");
  }
  if (bits_ == 0) return {};
  std::vector<GroupElement> out = lower_->commit(offset, r, rng);
  Scalar shifted = offset + pow2(order, bits_) - Scalar(order, BigNum(width));
  std::vector<GroupElement> upper = upper_->commit(shifted, r, rng);
  out.insert(out.end(), upper.begin(), upper.end());
  return out;
}

std::vector<GroupElement> RangeProof::simulate_precommit(
    RandomSource& rng) const {
  if (bits_ == 0) return {};
  std::vector<GroupElement> out = lower_->simulate(lower_target(), rng);
  std::vector<GroupElement> upper = upper_->simulate(upper_target(), rng);
  out.insert(out.end(), upper.begin(), upper.end());
  return out;
}

Statement RangeProof::construct_stmt(
    std::span<const GroupElement> precommitments) const {
  if (precommitments.size() != precommitment_count()) {
    throw ShapeError("range: wrong number of precommitments");
  }
  if (bits_ == 0) return dlrep(lower_target(), r_ * h_);
  const auto n = static_cast<size_t>(bits_);
  return lower_->statement(precommitments.first(n)) &
         upper_->statement(precommitments.subspan(n));
}

void RangeProof::validate(std::span<const GroupElement> precommitments) const {
  if (precommitments.size() != precommitment_count()) {
    throw ValidationError("range: wrong number of precommitments");
  }
  if (bits_ == 0) return;
  const auto n = static_cast<size_t>(bits_);
  if (!lower_->aggregates_to(precommitments.first(n), lower_target()) ||
      !upper_->aggregates_to(precommitments.subspan(n), upper_target())) {
    throw ValidationError("bit commitments do not aggregate to the commitment");
  }
}

Statement range_stmt(GroupElement com, GroupElement g, GroupElement h,
                     int64_t a, int64_t b, const Secret& x, const Secret& r) {
  return extended(std::make_shared<RangeProof>(std::move(com), std::move(g),
                                               std::move(h), a, b, x, r));
}

}  // namespace sigmakit
