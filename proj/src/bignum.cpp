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

#include "sigmakit/bignum.hpp"

#include <openssl/crypto.h>

#include <memory>
#include <new>

#include "sigmakit/errors.hpp"

namespace sigmakit {

namespace {

struct CtxDeleter {
  void operator()(BN_CTX* ctx) const { BN_CTX_free(ctx); }
};

BIGNUM* checked_new() {
  BIGNUM* bn = BN_new();
  if (bn == nullptr) throw std::bad_alloc();
  return bn;
}

void check(int rc, const char* what) {
  if (rc != 1)
    throw GroupError(std::string("bignum operation failed: ") + what);
}

}  // namespace

BN_CTX* bn_ctx() {
  thread_local std::unique_ptr<BN_CTX, CtxDeleter> ctx(BN_CTX_new());
  if (!ctx) throw std::bad_alloc();
  return ctx.get();
}

BigNum::BigNum() : bn_(checked_new()) {}

BigNum::BigNum(uint64_t v) : bn_(checked_new()) {
  check(BN_set_word(bn_, v), "set_word");
}

BigNum::BigNum(const BigNum& other) : bn_(BN_dup(other.bn_)) {
  if (bn_ == nullptr) throw std::bad_alloc();
}

BigNum::BigNum(BigNum&& other) noexcept : bn_(other.bn_) {
  other.bn_ = nullptr;
}

BigNum& BigNum::operator=(const BigNum& other) {
  if (this != &other) {
    if (bn_ == nullptr) bn_ = checked_new();
    if (BN_copy(bn_, other.bn_) == nullptr) throw std::bad_alloc();
  }
  return *this;
}

BigNum& BigNum::operator=(BigNum&& other) noexcept {
  std::swap(bn_, other.bn_);
  return *this;
}

BigNum::~BigNum() { BN_clear_free(bn_); }

BigNum BigNum::from_bytes(std::span<const uint8_t> big_endian) {
  BigNum out;
  if (BN_bin2bn(big_endian.data(), static_cast<int>(big_endian.size()),
                out.bn_) == nullptr) {
    throw std::bad_alloc();
  }
  return out;
}

BigNum BigNum::from_decimal(const std::string& dec) {
  if (dec.empty() || dec.find_first_not_of("0123456789") != std::string::npos) {
    throw DecodeError("not a non-negative decimal integer: '" + dec + "'");
  }
  BIGNUM* raw = nullptr;
  if (BN_dec2bn(&raw, dec.c_str()) == 0) throw DecodeError("bad decimal");
  BigNum out;
  BN_free(out.bn_);
  out.bn_ = raw;
  return out;
}

Bytes BigNum::to_bytes(size_t width) const {
  Bytes out(width);
  if (BN_bn2binpad(bn_, out.data(), static_cast<int>(width)) < 0) {
    throw GroupError("integer does not fit in " + std::to_string(width) +
                     " bytes");
  }
  return out;
}

std::string BigNum::to_decimal() const {
  char* s = BN_bn2dec(bn_);
  if (s == nullptr) throw std::bad_alloc();
  std::string out(s);
  OPENSSL_free(s);
  return out;
}

uint64_t BigNum::to_u64() const {
  if (BN_num_bits(bn_) > 64) throw GroupError("integer exceeds 64 bits");
  uint64_t v = 0;
  for (uint8_t b : to_bytes(8)) v = v << 8 | b;
  return v;
}

bool BigNum::is_zero() const { return BN_is_zero(bn_); }
bool BigNum::is_one() const { return BN_is_one(bn_); }
int BigNum::num_bits() const { return BN_num_bits(bn_); }
int BigNum::num_bytes() const { return BN_num_bytes(bn_); }

bool BigNum::is_probable_prime() const {
  int rc = BN_check_prime(bn_, bn_ctx(), nullptr);
  if (rc < 0) throw GroupError("primality test failed");
  return rc == 1;
}

bool operator==(const BigNum& a, const BigNum& b) {
  return BN_cmp(a.bn_, b.bn_) == 0;
}

bool operator<(const BigNum& a, const BigNum& b) {
  return BN_cmp(a.bn_, b.bn_) < 0;
}

BigNum BigNum::mod(const BigNum& a, const BigNum& m) {
  BigNum out;
  check(BN_nnmod(out.bn_, a.bn_, m.bn_, bn_ctx()), "nnmod");
  return out;
}

BigNum BigNum::mod_add(const BigNum& a, const BigNum& b, const BigNum& m) {
  BigNum out;
  check(BN_mod_add(out.bn_, a.bn_, b.bn_, m.bn_, bn_ctx()), "mod_add");
  return out;
}

BigNum BigNum::mod_sub(const BigNum& a, const BigNum& b, const BigNum& m) {
  BigNum out;
  check(BN_mod_sub(out.bn_, a.bn_, b.bn_, m.bn_, bn_ctx()), "mod_sub");
  return out;
}

BigNum BigNum::mod_mul(const BigNum& a, const BigNum& b, const BigNum& m) {
  BigNum out;
  check(BN_mod_mul(out.bn_, a.bn_, b.bn_, m.bn_, bn_ctx()), "mod_mul");
  return out;
}

BigNum BigNum::mod_exp(const BigNum& a, const BigNum& e, const BigNum& m) {
  BigNum out;
  check(BN_mod_exp(out.bn_, a.bn_, e.bn_, m.bn_, bn_ctx()), "mod_exp");
  return out;
}

BigNum BigNum::mod_inverse(const BigNum& a, const BigNum& m) {
  BigNum out;
  if (BN_mod_inverse(out.bn_, a.bn_, m.bn_, bn_ctx()) == nullptr) {
    throw GroupError("value is not invertible");
  }
  return out;
}

BigNum BigNum::sub(const BigNum& a, const BigNum& b) {
  BigNum out;
  check(BN_sub(out.bn_, a.bn_, b.bn_), "sub");
  if (BN_is_negative(out.bn_)) throw GroupError("negative result");
  return out;
}

BigNum BigNum::div(const BigNum& a, const BigNum& b) {
  BigNum out;
  check(BN_div(out.bn_, nullptr, a.bn_, b.bn_, bn_ctx()), "div");
  return out;
}

BigNum BigNum::rem(const BigNum& a, const BigNum& b) {
  BigNum out;
  check(BN_div(nullptr, out.bn_, a.bn_, b.bn_, bn_ctx()), "rem");
  return out;
}

}  // namespace sigmakit
