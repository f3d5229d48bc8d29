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

#include "sigmakit/random.hpp"

#include <openssl/rand.h>

#include <algorithm>
#include <cstring>

#include "sigmakit/bytes.hpp"
#include "sigmakit/errors.hpp"

namespace sigmakit {

void SystemRandom::fill(std::span<uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw Error("system entropy source failed");
  }
}

void SeededRandom::fill(std::span<uint8_t> out) {
  size_t pos = 0;
  while (pos < out.size()) {
    if (used_ == sizeof(block_)) {
      uint8_t input[16];
      for (int i = 0; i < 8; ++i) {
        input[i] = static_cast<uint8_t>(seed_ >> (56 - 8 * i));
        input[8 + i] = static_cast<uint8_t>(counter_ >> (56 - 8 * i));
      }
      auto digest = sha256(input);
      std::memcpy(block_, digest.data(), sizeof(block_));
      ++counter_;
      used_ = 0;
    }
    size_t n = std::min(out.size() - pos, sizeof(block_) - used_);
    std::memcpy(out.data() + pos, block_ + used_, n);
    pos += n;
    used_ += n;
  }
}

}  // namespace sigmakit
