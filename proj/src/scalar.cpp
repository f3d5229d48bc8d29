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

#include <utility>

#include "sigmakit/errors.hpp"
#include "sigmakit/group.hpp"

namespace sigmakit {

Scalar::Scalar(OrderPtr order, BigNum value)
    : order_(std::move(order)), value_(BigNum::mod(value, *order_)) {}

Scalar Scalar::from_u64(OrderPtr order, uint64_t v) {
  return Scalar(std::move(order), BigNum(v));
}

Scalar Scalar::from_int(OrderPtr order, int64_t v) {
  if (v >= 0) return from_u64(std::move(order), static_cast<uint64_t>(v));
  // -(v + 1) + 1 avoids overflow on INT64_MIN.
  uint64_t magnitude = static_cast<uint64_t>(-(v + 1)) + 1;
  return -from_u64(std::move(order), magnitude);
}

Scalar Scalar::random(OrderPtr order, RandomSource& rng) {
  const size_t words = (static_cast<size_t>(order->num_bits()) + 32 + 63) / 64;
  Bytes raw(words * 8);
  rng.fill(raw);
  return Scalar(std::move(order), BigNum::from_bytes(raw));
}

Scalar Scalar::random_nonzero(OrderPtr order, RandomSource& rng) {
  for (;;) {
    Scalar s = random(order, rng);
    if (!s.is_zero()) return s;
  }
}

size_t Scalar::encoded_size(const BigNum& order) {
  return static_cast<size_t>(order.num_bytes());
}

Scalar Scalar::decode(OrderPtr order, std::span<const uint8_t> bytes) {
  if (bytes.size() != encoded_size(*order)) {
    throw DecodeError("scalar has wrong width");
  }
  BigNum v = BigNum::from_bytes(bytes);
  if (!(v < *order)) throw DecodeError("scalar out of range");
  return Scalar(std::move(order), std::move(v));
}

Bytes Scalar::encode() const { return value_.to_bytes(encoded_size(*order_)); }

bool Scalar::same_order(const Scalar& other) const {
  return order_ == other.order_ || *order_ == *other.order_;
}

void Scalar::require_same_order(const Scalar& o) const {
  if (!same_order(o)) throw GroupError("scalars of different order combined");
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_order(o);
  return Scalar(order_, BigNum::mod_add(value_, o.value_, *order_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_order(o);
  return Scalar(order_, BigNum::mod_sub(value_, o.value_, *order_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_order(o);
  return Scalar(order_, BigNum::mod_mul(value_, o.value_, *order_));
}

Scalar Scalar::operator-() const {
  return Scalar(order_, BigNum::mod_sub(BigNum(0), value_, *order_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw GroupError("zero scalar has no inverse");
  return Scalar(order_, BigNum::mod_inverse(value_, *order_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.same_order(b) && a.value_ == b.value_;
}

}  // namespace sigmakit
