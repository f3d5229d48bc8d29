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

#include <memory>
#include <string>

#include "sigmakit/errors.hpp"
#include "sigmakit/group.hpp"

namespace sigmakit {

namespace {

struct ToyRep final : detail::ElementRep {
  explicit ToyRep(BigNum v) : value(std::move(v)) {}
  BigNum value;
};

const BigNum& value_of(const detail::ElementRep& rep) {
  return static_cast<const ToyRep&>(rep).value;
}

class ToyGroup final : public Group {
 public:
  ToyGroup(BigNum p, BigNum q, BigNum g)
      : Group("toy:" + p.to_decimal() + "," + q.to_decimal() + "," +
                  g.to_decimal(),
              q),
        p_(std::move(p)),
        cofactor_(BigNum::div(BigNum::sub(p_, BigNum(1)), q)),
        generator_(std::make_shared<ToyRep>(std::move(g))),
        identity_(std::make_shared<ToyRep>(BigNum(1))) {}

  size_t element_size() const override {
    return static_cast<size_t>(p_.num_bytes());
  }

  GroupElement decode(std::span<const uint8_t> bytes) const override {
    if (bytes.size() != element_size()) {
      throw DecodeError("toy element has wrong width");
    }
    BigNum v = BigNum::from_bytes(bytes);
    if (v.is_zero() || !(v < p_)) throw DecodeError("toy element out of range");
    if (!BigNum::mod_exp(v, order(), p_).is_one()) {
      throw DecodeError("toy element outside the order-q subgroup");
    }
    return wrap(std::make_shared<ToyRep>(std::move(v)));
  }

  GroupElement hash_to_element(std::string_view label) const override {
    // Hash into Z_p^*, then project onto the subgroup with the cofactor.
    for (uint32_t ctr = 0;; ++ctr) {
      ByteWriter w;
      w.put_string("sigmakit/toy/hash_to_element");
      w.put_string(label);
      w.put_varint(ctr);
      auto digest = sha256(w.bytes());
      BigNum v = BigNum::mod(BigNum::from_bytes(digest), p_);
      if (v.is_zero()) continue;
      BigNum e = BigNum::mod_exp(v, cofactor_, p_);
      if (e.is_one()) continue;
      return wrap(std::make_shared<ToyRep>(std::move(e)));
    }
  }

 protected:
  std::shared_ptr<const detail::ElementRep> generator_rep() const override {
    return generator_;
  }
  std::shared_ptr<const detail::ElementRep> identity_rep() const override {
    return identity_;
  }
  std::shared_ptr<const detail::ElementRep> op(
      const detail::ElementRep& a, const detail::ElementRep& b) const override {
    return std::make_shared<ToyRep>(
        BigNum::mod_mul(value_of(a), value_of(b), p_));
  }
  std::shared_ptr<const detail::ElementRep> invert(
      const detail::ElementRep& a) const override {
    return std::make_shared<ToyRep>(BigNum::mod_inverse(value_of(a), p_));
  }
  std::shared_ptr<const detail::ElementRep> exp(
      const detail::ElementRep& a, const BigNum& e) const override {
    return std::make_shared<ToyRep>(BigNum::mod_exp(value_of(a), e, p_));
  }
  bool equal(const detail::ElementRep& a,
             const detail::ElementRep& b) const override {
    return value_of(a) == value_of(b);
  }
  bool is_identity(const detail::ElementRep& a) const override {
    return value_of(a).is_one();
  }
  Bytes encode(const detail::ElementRep& a) const override {
    return value_of(a).to_bytes(element_size());
  }

 private:
  BigNum p_;
  BigNum cofactor_;
  std::shared_ptr<const ToyRep> generator_;
  std::shared_ptr<const ToyRep> identity_;
};

}  // namespace

GroupPtr toy_group(const BigNum& p, const BigNum& q, const BigNum& g) {
  if (!p.is_probable_prime()) {
    throw GroupError("toy group: p = " + p.to_decimal() + " is not prime");
  }
  if (!q.is_probable_prime()) {
    throw GroupError("toy group: q = " + q.to_decimal() + " is not prime");
  }
  BigNum p_minus_1 = BigNum::sub(p, BigNum(1));
  if (!BigNum::rem(p_minus_1, q).is_zero()) {
    throw GroupError("toy group: q does not divide p - 1");
  }
  if (g.is_zero() || g.is_one() || !(g < p)) {
    throw GroupError("toy group: generator out of range");
  }
  // q prime, so g^q = 1 and g != 1 means g has order exactly q.
  if (!BigNum::mod_exp(g, q, p).is_one()) {
    throw GroupError("toy group: g = " + g.to_decimal() +
                     " is not in the order-q subgroup");
  }
  return std::make_shared<ToyGroup>(p, q, g);
}

GroupPtr toy_group(uint64_t p, uint64_t q, uint64_t g) {
  return toy_group(BigNum(p), BigNum(q), BigNum(g));
}

}  // namespace sigmakit
