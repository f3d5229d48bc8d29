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

#include <openssl/bn.h>

#include <cstdint>
#include <span>
#include <string>

#include "sigmakit/bytes.hpp"

namespace sigmakit {

/// Owning value wrapper around an OpenSSL BIGNUM. Non-negative values only.
class BigNum {
 public:
  BigNum();
  explicit BigNum(uint64_t v);
  BigNum(const BigNum& other);
  BigNum(BigNum&& other) noexcept;
  BigNum& operator=(const BigNum& other);
  BigNum& operator=(BigNum&& other) noexcept;
  ~BigNum();

  static BigNum from_bytes(std::span<const uint8_t> big_endian);
  static BigNum from_decimal(const std::string& dec);

  /// Fixed-width big-endian encoding; throws if the value does not fit.
  Bytes to_bytes(size_t width) const;
  std::string to_decimal() const;
  /// Throws if the value exceeds 64 bits.
  uint64_t to_u64() const;

  bool is_zero() const;
  bool is_one() const;
  int num_bits() const;
  int num_bytes() const;
  bool is_probable_prime() const;

  friend bool operator==(const BigNum& a, const BigNum& b);
  friend bool operator<(const BigNum& a, const BigNum& b);

  // Modular helpers; all results are in [0, m).
  static BigNum mod(const BigNum& a, const BigNum& m);
  static BigNum mod_add(const BigNum& a, const BigNum& b, const BigNum& m);
  static BigNum mod_sub(const BigNum& a, const BigNum& b, const BigNum& m);
  static BigNum mod_mul(const BigNum& a, const BigNum& b, const BigNum& m);
  static BigNum mod_exp(const BigNum& a, const BigNum& e, const BigNum& m);
  /// Throws GroupError when a is not invertible.
  static BigNum mod_inverse(const BigNum& a, const BigNum& m);
  static BigNum sub(const BigNum& a, const BigNum& b);
  static BigNum div(const BigNum& a, const BigNum& b);
  static BigNum rem(const BigNum& a, const BigNum& b);

  BIGNUM* get() { return bn_; }
  const BIGNUM* get() const { return bn_; }

 private:
  BIGNUM* bn_;
};

/// Per-thread scratch context for OpenSSL big-number routines.
BN_CTX* bn_ctx();

}  // namespace sigmakit
