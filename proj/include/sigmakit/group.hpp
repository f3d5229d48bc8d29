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
#include <string>
#include <string_view>
#include <vector>

#include "sigmakit/bignum.hpp"
#include "sigmakit/bytes.hpp"
#include "sigmakit/random.hpp"

namespace sigmakit {

class Group;
class GroupElement;
using GroupPtr = std::shared_ptr<const Group>;
using OrderPtr = std::shared_ptr<const BigNum>;

/// An element of Z_q. The value is always reduced into [0, q); combining two
/// scalars of different orders throws GroupError.
class Scalar {
 public:
  Scalar(OrderPtr order, BigNum value);

  static Scalar from_u64(OrderPtr order, uint64_t v);
  /// Negative values wrap around: from_int(q, -1) == q - 1.
  static Scalar from_int(OrderPtr order, int64_t v);

  /// Uniform in [0, q). Draws 8 * ceil((bits(q) + 32) / 64) bytes of entropy,
  /// interprets them big-endian and reduces mod q. For q < 2^32 that is exactly
  /// one 64-bit word; for 256-bit q the bias is below 2^-64.
  static Scalar random(OrderPtr order, RandomSource& rng);
  /// Uniform in [1, q).
  static Scalar random_nonzero(OrderPtr order, RandomSource& rng);

  /// Fixed-width big-endian decoding; rejects values >= q.
  static Scalar decode(OrderPtr order, std::span<const uint8_t> bytes);
  static size_t encoded_size(const BigNum& order);

  Bytes encode() const;

  const BigNum& value() const { return value_; }
  const BigNum& order() const { return *order_; }
  const OrderPtr& order_ptr() const { return order_; }
  uint64_t to_u64() const { return value_.to_u64(); }
  bool is_zero() const { return value_.is_zero(); }
  bool same_order(const Scalar& other) const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  /// Throws GroupError for zero.
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same_order(const Scalar& o) const;

  OrderPtr order_;
  BigNum value_;
};

namespace detail {
/// Backend-private element representation.
struct ElementRep {
  virtual ~ElementRep() = default;
};
}  // namespace detail

/// Immutable element of a prime-order group. Multiplicative notation:
/// `a * b` is the group operation, `a.pow(s)` exponentiation.
class GroupElement {
 public:
  GroupElement(GroupPtr group, std::shared_ptr<const detail::ElementRep> rep);

  const GroupPtr& group() const { return group_; }
  const detail::ElementRep& rep() const { return *rep_; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement operator/(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement pow(const Scalar& e) const;
  bool is_identity() const;

  /// Canonical fixed-width encoding; injective.
  Bytes encode() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);

 private:
  GroupPtr group_;
  std::shared_ptr<const detail::ElementRep> rep_;
};

/// A cyclic group of prime order q with a fixed generator. Instances are
/// immutable and shared through GroupPtr. Two groups are interchangeable iff
/// their names are equal.
class Group : public std::enable_shared_from_this<Group> {
 public:
  virtual ~Group() = default;

  const std::string& name() const { return name_; }
  const BigNum& order() const { return *order_; }
  const OrderPtr& order_ptr() const { return order_; }

  GroupElement generator() const;
  GroupElement identity() const;

  Scalar scalar(uint64_t v) const { return Scalar::from_u64(order_, v); }
  Scalar scalar_from_int(int64_t v) const {
    return Scalar::from_int(order_, v);
  }
  Scalar random_scalar(RandomSource& rng) const {
    return Scalar::random(order_, rng);
  }
  GroupElement random_element(RandomSource& rng) const;

  /// Byte length of every encoded element.
  virtual size_t element_size() const = 0;
  /// Inverse of GroupElement::encode. Throws DecodeError for malformed bytes or
  /// points outside the prime-order group.
  virtual GroupElement decode(std::span<const uint8_t> bytes) const = 0;
  /// Deterministic element with no known discrete logarithm relative to the
  /// generator (for the curve backend). Used to derive extra bases.
  virtual GroupElement hash_to_element(std::string_view label) const = 0;

  bool same_as(const Group& other) const {
    return this == &other || name_ == other.name_;
  }

 protected:
  Group(std::string name, BigNum order);

  GroupElement wrap(std::shared_ptr<const detail::ElementRep> rep) const {
    return GroupElement(shared_from_this(), std::move(rep));
  }

  virtual std::shared_ptr<const detail::ElementRep> generator_rep() const = 0;
  virtual std::shared_ptr<const detail::ElementRep> identity_rep() const = 0;
  virtual std::shared_ptr<const detail::ElementRep> op(
      const detail::ElementRep& a, const detail::ElementRep& b) const = 0;
  virtual std::shared_ptr<const detail::ElementRep> invert(
      const detail::ElementRep& a) const = 0;
  virtual std::shared_ptr<const detail::ElementRep> exp(
      const detail::ElementRep& a, const BigNum& e) const = 0;
  virtual bool equal(const detail::ElementRep& a,
                     const detail::ElementRep& b) const = 0;
  virtual bool is_identity(const detail::ElementRep& a) const = 0;
  virtual Bytes encode(const detail::ElementRep& a) const = 0;

 private:
  friend class GroupElement;
  friend bool operator==(const GroupElement& a, const GroupElement& b);

  std::string name_;
  OrderPtr order_;
};

/// Multiplicative subgroup of Z_p^* of prime order q generated by g.
/// Elements encode as fixed-width big-endian integers (width = bytes of p).
/// Throws GroupError unless p and q are prime, q | p - 1 and g has order q.
GroupPtr toy_group(const BigNum& p, const BigNum& q, const BigNum& g);
GroupPtr toy_group(uint64_t p, uint64_t q, uint64_t g);

/// NIST P-256 (prime256v1). Elements encode as 33-byte SEC1 compressed points;
/// the identity encodes as 33 zero bytes.
GroupPtr p256_group();

/// Product of bases[i]^exponents[i]. Throws GroupError on empty input, length
/// mismatch, mixed groups or exponent orders differing from the group order.
GroupElement multi_exp(std::span<const GroupElement> bases,
                       std::span<const Scalar> exponents);

}  // namespace sigmakit
