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

#include <openssl/ec.h>
#include <openssl/obj_mac.h>

#include <algorithm>
#include <memory>
#include <new>

#include "sigmakit/errors.hpp"
#include "sigmakit/group.hpp"

namespace sigmakit {

namespace {

constexpr size_t kCompressedSize = 33;

struct EcGroupDeleter {
  void operator()(EC_GROUP* g) const { EC_GROUP_free(g); }
};

struct EcRep final : detail::ElementRep {
  explicit EcRep(EC_POINT* p) : point(p) {}
  ~EcRep() override { EC_POINT_free(point); }
  EcRep(const EcRep&) = delete;
  EcRep& operator=(const EcRep&) = delete;
  EC_POINT* point;
};

const EC_POINT* point_of(const detail::ElementRep& rep) {
  return static_cast<const EcRep&>(rep).point;
}

class P256Group final : public Group {
 public:
  explicit P256Group(std::unique_ptr<EC_GROUP, EcGroupDeleter> ec, BigNum order)
      : Group("curve:prime256v1", std::move(order)), ec_(std::move(ec)) {
    EC_POINT* g = EC_POINT_dup(EC_GROUP_get0_generator(ec_.get()), ec_.get());
    if (g == nullptr) throw std::bad_alloc();
    generator_ = std::make_shared<EcRep>(g);
    EC_POINT* inf = new_point();
    EC_POINT_set_to_infinity(ec_.get(), inf);
    identity_ = std::make_shared<EcRep>(inf);
  }

  size_t element_size() const override { return kCompressedSize; }

  GroupElement decode(std::span<const uint8_t> bytes) const override {
    if (bytes.size() != kCompressedSize) {
      throw DecodeError("curve point has wrong width");
    }
    if (std::all_of(bytes.begin(), bytes.end(),
                    [](uint8_t b) { return b == 0; })) {
      return identity();
    }
    if (bytes[0] != 0x02 && bytes[0] != 0x03) {
      throw DecodeError("curve point is not in compressed form");
    }
    auto rep = std::make_shared<EcRep>(new_point());
    if (EC_POINT_oct2point(ec_.get(), rep->point, bytes.data(), bytes.size(),
                           bn_ctx()) != 1) {
      throw DecodeError("bytes do not encode a curve point");
    }
    return wrap(std::move(rep));
  }

  GroupElement hash_to_element(std::string_view label) const override {
    // Try-and-increment: x = H(label, ctr) until x is the abscissa of a point.
    BigNum field_p;
    if (EC_GROUP_get_curve(ec_.get(), field_p.get(), nullptr, nullptr,
                           bn_ctx()) != 1) {
      throw GroupError("cannot read curve parameters");
    }
    for (uint32_t ctr = 0;; ++ctr) {
      ByteWriter w;
      w.put_string("sigmakit/p256/hash_to_element");
      w.put_string(label);
      w.put_varint(ctr);
      auto digest = sha256(w.bytes());
      BigNum x = BigNum::from_bytes(digest);
      if (!(x < field_p)) continue;
      auto rep = std::make_shared<EcRep>(new_point());
      if (EC_POINT_set_compressed_coordinates(ec_.get(), rep->point, x.get(),
                                              digest[31] & 1, bn_ctx()) == 1) {
        return wrap(std::move(rep));
      }
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
    auto out = std::make_shared<EcRep>(new_point());
    check(EC_POINT_add(ec_.get(), out->point, point_of(a), point_of(b),
                       bn_ctx()));
    return out;
  }
  std::shared_ptr<const detail::ElementRep> invert(
      const detail::ElementRep& a) const override {
    EC_POINT* p = EC_POINT_dup(point_of(a), ec_.get());
    if (p == nullptr) throw std::bad_alloc();
    auto out = std::make_shared<EcRep>(p);
    check(EC_POINT_invert(ec_.get(), out->point, bn_ctx()));
    return out;
  }
  std::shared_ptr<const detail::ElementRep> exp(
      const detail::ElementRep& a, const BigNum& e) const override {
    auto out = std::make_shared<EcRep>(new_point());
    check(EC_POINT_mul(ec_.get(), out->point, nullptr, point_of(a), e.get(),
                       bn_ctx()));
    return out;
  }
  bool equal(const detail::ElementRep& a,
             const detail::ElementRep& b) const override {
    int rc = EC_POINT_cmp(ec_.get(), point_of(a), point_of(b), bn_ctx());
    if (rc < 0) throw GroupError("point comparison failed");
    return rc == 0;
  }
  bool is_identity(const detail::ElementRep& a) const override {
    return EC_POINT_is_at_infinity(ec_.get(), point_of(a)) == 1;
  }
  Bytes encode(const detail::ElementRep& a) const override {
    Bytes out(kCompressedSize, 0);
    if (is_identity(a)) return out;
    size_t n =
        EC_POINT_point2oct(ec_.get(), point_of(a), POINT_CONVERSION_COMPRESSED,
                           out.data(), out.size(), bn_ctx());
    if (n != kCompressedSize) throw GroupError("point encoding failed");
    return out;
  }

 private:
  EC_POINT* new_point() const {
    EC_POINT* p = EC_POINT_new(ec_.get());
    if (p == nullptr) throw std::bad_alloc();
    return p;
  }
  static void check(int rc) {
    if (rc != 1) throw GroupError("elliptic-curve operation failed");
  }

  std::unique_ptr<EC_GROUP, EcGroupDeleter> ec_;
  std::shared_ptr<const EcRep> generator_;
  std::shared_ptr<const EcRep> identity_;
};

GroupPtr make_p256() {
  std::unique_ptr<EC_GROUP, EcGroupDeleter> ec(
      EC_GROUP_new_by_curve_name(NID_X9_62_prime256v1));
  if (!ec) throw GroupError("P-256 is not available in this OpenSSL build");
  BigNum order;
  if (BN_copy(order.get(), EC_GROUP_get0_order(ec.get())) == nullptr) {
    throw std::bad_alloc();
  }
  return std::make_shared<P256Group>(std::move(ec), std::move(order));
}

}  // namespace

GroupPtr p256_group() {
  static const GroupPtr group = make_p256();
  return group;
}

}  // namespace sigmakit
